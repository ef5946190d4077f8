#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hurwitz/nielsen.hpp"

namespace hurwitz {

// Artin generator sigma_{index+1} (0-based index) or its inverse.
struct BraidMove {
  std::size_t index = 0;
  bool inverse = false;
};

/// Hurwitz move on a genus-0 tuple:
///   sigma_i:      (.., c_i, c_{i+1}, ..) -> (.., c_i c_{i+1} c_i^-1, c_i, ..)
///   sigma_i^-1:   (.., c_i, c_{i+1}, ..) -> (.., c_{i+1}, c_{i+1}^-1 c_i c_{i+1}, ..)
HurwitzTuple apply_move(const HurwitzTuple& T, BraidMove move);

struct BraidOrbit {
  HurwitzTuple representative;  // lexicographically least member
  std::vector<HurwitzTuple> members;  // sorted
  std::size_t size() const { return members.size(); }
};

enum class Scope { pointed, unpointed };

/// Orbits of the closure of the input under sigma_1^{+-1}, ..., sigma_{n-1}^{+-1}
/// (and simultaneous conjugation when scope is unpointed). Sorted by
/// representative; the result does not depend on the thread count.
std::vector<BraidOrbit> braid_orbits(std::span<const HurwitzTuple> tuples, Scope scope = Scope::pointed,
                                     unsigned threads = 1);

std::size_t component_count(const GroupPtr& group, std::size_t n, Scope scope,
                            const EnumerationOptions& options = {});

}  // namespace hurwitz
