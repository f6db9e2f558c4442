#include "elltower/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace elltower {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges, std::vector<int> inversion)
    : vertex_count_(vertex_count), edges_(std::move(edges)), inversion_(std::move(inversion)) {
  if (inversion_.size() != edges_.size())
    fail(errc::internal, "inversion pairing size mismatch");
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.origin < 0 || ed.origin >= vertex_count_ || ed.target < 0 ||
        ed.target >= vertex_count_)
      fail(errc::internal, "edge endpoint out of range");
    int ie = inversion_[e];
    if (ie < 0 || ie >= edge_count() || ie == e || inversion_[ie] != e)
      fail(errc::internal, "inversion is not a fixed-point-free involution");
    if (edges_[ie].origin != ed.target || edges_[ie].target != ed.origin)
      fail(errc::internal, "inversion does not swap origin and target");
  }
  degree_.assign(vertex_count_, 0);
  out_edges_.assign(vertex_count_, {});
  for (int e = 0; e < edge_count(); ++e) {
    degree_[edges_[e].origin]++;
    out_edges_[edges_[e].origin].push_back(e);
  }
}

std::vector<int> Multigraph::orientation() const {
  std::vector<int> reps;
  reps.reserve(undirected_edge_count());
  for (int e = 0; e < edge_count(); ++e)
    if (e < inversion_[e]) reps.push_back(e);
  return reps;
}

bool Multigraph::is_connected() const {
  if (vertex_count_ == 0) return true;
  std::vector<bool> seen(vertex_count_, false);
  std::deque<int> q{0};
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : out_edges_[v]) {
      int w = edges_[e].target;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

Multigraph build_cayley(const FiniteAbelianGroup& group,
                        const std::vector<std::vector<long>>& gens) {
  if (gens.empty()) fail(errc::not_generating, "generating set is empty");
  std::vector<std::vector<long>> s;
  s.reserve(gens.size());
  for (const auto& g : gens) s.push_back(group.reduce(g));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) fail(errc::duplicate_generator, "duplicate element in S");
  for (const auto& g : s)
    if (group.is_identity(g)) fail(errc::contains_identity, "identity element in S");
  for (const auto& g : s) {
    auto inv = group.neg(g);
    if (std::find(s.begin(), s.end(), inv) == s.end())
      fail(errc::not_symmetric, "S is not closed under inversion");
  }

  long n = group.order();
  std::vector<bool> in_s(n, false);
  for (const auto& g : s) in_s[group.index_of(g)] = true;

  // subgroup generated by S must be everything
  {
    std::vector<bool> seen(n, false);
    std::deque<long> q{0};
    seen[0] = true;
    long reached = 1;
    while (!q.empty()) {
      long v = q.front();
      q.pop_front();
      auto ev = group.element(v);
      for (const auto& g : s) {
        long w = group.index_of(group.add(ev, g));
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          q.push_back(w);
        }
      }
    }
    if (reached != n) fail(errc::not_generating, "S does not generate the group");
  }

  std::vector<Multigraph::Edge> edges;
  std::map<std::pair<int, int>, int> id_of;
  for (long i = 0; i < n; ++i) {
    auto gi = group.element(i);
    for (long j = 0; j < n; ++j) {
      auto diff = group.add(gi, group.neg(group.element(j)));
      if (in_s[group.index_of(diff)]) {
        id_of[{static_cast<int>(i), static_cast<int>(j)}] = static_cast<int>(edges.size());
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  std::vector<int> inversion(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    inversion[e] = id_of.at({edges[e].target, edges[e].origin});
  return Multigraph(static_cast<int>(n), std::move(edges), std::move(inversion));
}

BaseReport validate_base(const Multigraph& x) {
  BaseReport r{};
  int n = x.vertex_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int v0 = 0; v0 < n; ++v0) {
    if (comp[v0] >= 0) continue;
    comp[v0] = ncomp;
    std::deque<int> q{v0};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int e : x.out_edges(v)) {
        int w = x.edge(e).target;
        if (comp[w] < 0) {
          comp[w] = ncomp;
          q.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  r.connected = (ncomp <= 1);
  r.min_degree = n == 0 ? 0 : x.degree(0);
  for (int v = 1; v < n; ++v) r.min_degree = std::min(r.min_degree, x.degree(v));
  r.euler_characteristic = n - x.undirected_edge_count();
  r.b0 = ncomp;
  r.b1 = x.undirected_edge_count() - n + ncomp;
  r.assumption_ok = r.connected && r.min_degree >= 2 && r.euler_characteristic != 0;
  return r;
}

Matrices matrices(const Multigraph& x) {
  int n = x.vertex_count();
  Matrices m{Matrix<Int>(n, n, 0), Matrix<Int>(n, n, 0), Matrix<Int>(n, n, 0)};
  for (int e = 0; e < x.edge_count(); ++e)
    m.adjacency(x.edge(e).origin, x.edge(e).target) += 1;
  for (int v = 0; v < n; ++v) m.degree(v, v) = x.degree(v);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.laplacian(i, j) = m.degree(i, j) - m.adjacency(i, j);
  return m;
}

SpanningStructure spanning_structure(const Multigraph& x) {
  if (!x.is_connected()) fail(errc::disconnected, "spanning structure needs a connected graph");
  int n = x.vertex_count();
  SpanningStructure s;
  s.root = 0;
  std::vector<int> parent_edge(n, -1);  // discovery edge into each vertex
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<int> q{0};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : x.out_edges(v)) {
      int w = x.edge(e).target;
      if (!seen[w]) {
        seen[w] = true;
        parent_edge[w] = e;
        s.tree_edges.push_back(e);
        q.push_back(w);
      }
    }
  }

  std::vector<bool> in_tree(x.edge_count(), false);
  for (int e : s.tree_edges) {
    in_tree[e] = true;
    in_tree[x.inverse(e)] = true;
  }

  auto path_from_root = [&](int v) {
    std::vector<int> path;  // edges root -> v
    while (v != 0) {
      int e = parent_edge[v];
      path.push_back(e);
      v = x.edge(e).origin;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (int e = 0; e < x.edge_count(); ++e) {
    if (in_tree[e] || e > x.inverse(e)) continue;  // canonical rep = lower id
    std::vector<int> cycle = path_from_root(x.edge(e).origin);
    cycle.push_back(e);
    std::vector<int> back = path_from_root(x.edge(e).target);
    for (auto it = back.rbegin(); it != back.rend(); ++it) cycle.push_back(x.inverse(*it));
    s.fundamental_cycles.push_back(std::move(cycle));
    s.cycle_edges.push_back(e);
  }
  return s;
}

}  // namespace elltower
