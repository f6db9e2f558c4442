#pragma once

#include <vector>

#include "elltower/abelian.hpp"
#include "elltower/intutil.hpp"

namespace elltower {

/// Multigraph as a quadruple (V, E+, incidence, inversion): directed edges in
/// inverse pairs, inversion is a fixed-point-free involution swapping origin
/// and target. Loops are allowed (both directed representatives share their
/// endpoint); Cayley constructions never produce them.
class Multigraph {
 public:
  struct Edge {
    int origin;
    int target;
  };

  Multigraph(int vertex_count, std::vector<Edge> edges, std::vector<int> inversion);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }  // directed
  int undirected_edge_count() const { return edge_count() / 2; }
  const Edge& edge(int id) const { return edges_[id]; }
  int inverse(int id) const { return inversion_[id]; }
  int degree(int v) const { return degree_[v]; }
  bool is_loop(int id) const { return edges_[id].origin == edges_[id].target; }

  /// Out-edges of v in increasing edge-id order.
  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }

  /// Canonical directed representative (lowest id) of each inversion class.
  std::vector<int> orientation() const;

  bool is_connected() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<int> inversion_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> out_edges_;
};

struct BaseReport {
  bool connected;
  int min_degree;
  long euler_characteristic;  // #V - #E (undirected classes)
  int b0;
  int b1;
  bool assumption_ok;  // connected, min degree >= 2, chi != 0
};

struct Matrices {
  Matrix<Int> adjacency;
  Matrix<Int> degree;
  Matrix<Int> laplacian;
};

struct SpanningStructure {
  int root;
  std::vector<int> tree_edges;                // discovery edges, one per non-root vertex
  std::vector<std::vector<int>> fundamental_cycles;  // closed walks at root (edge ids)
  std::vector<int> cycle_edges;               // the canonical non-tree representative per cycle
};

/// Cayley graph of a finite abelian group: one directed edge v_{g1} -> v_{g2}
/// per ordered pair with g1 - g2 in S; vertices in lexicographic exponent
/// order. S must be symmetric, identity-free, duplicate-free and generating.
Multigraph build_cayley(const FiniteAbelianGroup& group,
                        const std::vector<std::vector<long>>& gens);

BaseReport validate_base(const Multigraph& x);

Matrices matrices(const Multigraph& x);

/// Lowest-id-first BFS tree rooted at vertex 0 plus the induced fundamental
/// cycles (one per non-tree undirected class); deterministic.
SpanningStructure spanning_structure(const Multigraph& x);

}  // namespace elltower
