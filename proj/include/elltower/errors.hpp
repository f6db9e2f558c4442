#pragma once

#include <stdexcept>
#include <string>

namespace elltower {

enum class errc {
  not_symmetric,
  contains_identity,
  not_generating,
  duplicate_generator,
  disconnected,
  not_prime,
  incompatible_shapes,
  bad_galois_index,
  precision_too_low,
  precision_exhausted,
  negative_valuation,
  antisymmetry_violated,
  condition4_fails,
  tower_disconnected,
  assumption_violated,
  depth_too_small,
  hypothesis_not_met,
  non_rational_product,
  parse_error,
  internal,
};

/// Domain error carrying a machine-checkable code next to the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace elltower
