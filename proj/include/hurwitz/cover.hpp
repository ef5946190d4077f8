#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hurwitz/nielsen.hpp"

namespace hurwitz {

// Permutation of the fiber, indexed by group elements.
using FiberPermutation = std::vector<Elem>;

/// The Galois cover attached to a Hurwitz tuple, modelled on its fiber over
/// the base point. The fiber is G itself (regular representation): a loop w
/// acts by right multiplication x -> x m(w), a deck transformation g by left
/// multiplication x -> g x, so the two actions commute by associativity.
class CoverModel {
 public:
  explicit CoverModel(HurwitzTuple tuple);

  const HurwitzTuple& tuple() const { return tuple_; }
  const FiniteGroup& group() const { return tuple_.group(); }
  std::size_t base_genus() const { return tuple_.genus(); }
  std::size_t fiber_size() const { return tuple_.group().order(); }

 private:
  HurwitzTuple tuple_;
};

struct RamificationPoint {
  std::size_t branch_index = 0;  // 0-based j
  ElementSet coset;              // h <c_j>, the fiber points that merge here
  std::size_t ram_index = 0;     // e
  ElementSet isotropy;           // h <c_j> h^-1
};

FiberPermutation monodromy_perm(const CoverModel& M, const Word& w);
FiberPermutation deck_perm(const CoverModel& M, const GroupElement& g);
FiberPermutation deck_perm(const CoverModel& M, Elem g);

// Points above branch point j: the orbits of x -> x c_j on the fiber.
std::vector<RamificationPoint> ramification_data(const CoverModel& M, std::size_t j);

// |G| (2 - 2 g_Y - n) + sum_j (number of points above b_j), by orbit counting.
std::int64_t euler_characteristic(const CoverModel& M);
// Genus from the Euler characteristic, cross-checked against the closed-form
// Riemann-Hurwitz formula built from element orders. A mismatch or a
// non-integral genus throws InvariantViolation.
std::size_t genus_of_cover(const CoverModel& M);
// 2 g_C - 2 = |G| (2 g_Y - 2) + sum_j (|G| - |G| / e_j), solved for g_C.
std::int64_t riemann_hurwitz_genus(std::size_t group_order, std::size_t base_genus,
                                   const std::vector<std::uint32_t>& ramification_indices);

// Transitivity of the monodromy on the fiber.
bool is_connected(const CoverModel& M);

// Pointed equivalence: the identity deck map when the tuples coincide.
std::optional<GroupElement> equivalent_pointed(const CoverModel& M1, const CoverModel& M2);
// Unpointed equivalence: every h with h T1 h^-1 = T2.
ElementSet equivalent_unpointed(const CoverModel& M1, const CoverModel& M2);

}  // namespace hurwitz
