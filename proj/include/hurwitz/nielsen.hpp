#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/group.hpp"
#include "hurwitz/symprod.hpp"

namespace hurwitz {

// Conjugacy class id -> multiplicity.
using BranchingType = std::map<std::uint32_t, std::size_t>;

inline constexpr std::uint64_t kDefaultWorkCap = 1'000'000'000;
// Reserved label of the base point; never part of a branch divisor.
inline constexpr std::string_view kBasepointLabel = "y0";

/// Images (a_1, b_1, ..., a_g, b_g; c_1, ..., c_n) of the standard generators
/// of the fundamental group of an n-punctured genus-g surface, subject to
///
///   [a_1,b_1] ... [a_g,b_g] c_1 ... c_n = 1,   [a,b] = a b a^-1 b^-1,
///
/// every c_j != 1, and all entries generating the group.
class HurwitzTuple {
 public:
  // Validates all three invariants; throws InvariantViolation otherwise.
  HurwitzTuple(GroupPtr group, std::size_t genus, std::vector<Elem> entries);
  // Skips validation. Only for constructing deliberately invalid data.
  static HurwitzTuple unchecked(GroupPtr group, std::size_t genus, std::vector<Elem> entries);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t genus() const { return genus_; }
  std::size_t branch_count() const { return entries_.size() - 2 * genus_; }

  Elem handle_a(std::size_t i) const { return entries_[2 * i]; }
  Elem handle_b(std::size_t i) const { return entries_[2 * i + 1]; }
  Elem branch(std::size_t j) const { return entries_[2 * genus_ + j]; }
  std::span<const Elem> entries() const { return entries_; }
  std::span<const Elem> branch_images() const {
    return std::span<const Elem>(entries_).subspan(2 * genus_);
  }

  // First violated invariant, if any.
  std::optional<std::string> violation() const;

  // "[a1,b1,...| c1,...,cn]" with elements in cycle notation or as indices.
  std::string to_string() const;

  friend bool operator==(const HurwitzTuple& x, const HurwitzTuple& y) {
    return x.group_ == y.group_ && x.genus_ == y.genus_ && x.entries_ == y.entries_;
  }
  friend std::strong_ordering operator<=>(const HurwitzTuple& x, const HurwitzTuple& y) {
    if (auto c = x.genus_ <=> y.genus_; c != 0) return c;
    return x.entries_ <=> y.entries_;
  }

 private:
  HurwitzTuple() = default;

  GroupPtr group_;
  std::size_t genus_ = 0;
  std::vector<Elem> entries_;
};

struct TupleHash {
  std::size_t operator()(const HurwitzTuple& t) const;
  std::size_t operator()(std::span<const Elem> entries) const;
};

struct EnumerationOptions {
  std::optional<BranchingType> type_filter;
  std::uint64_t work_cap = kDefaultWorkCap;
  unsigned threads = 1;
};

/// Every tuple in the fiber over a fixed divisor, in lexicographic order.
/// c_n is solved from the surface relation. Throws CapExceeded when the
/// number of visited search nodes exceeds the work cap.
std::vector<HurwitzTuple> enumerate_tuples(const GroupPtr& group, std::size_t genus,
                                           std::size_t n, const EnumerationOptions& options = {});
std::size_t delta_degree(const GroupPtr& group, std::size_t genus, std::size_t n,
                         const EnumerationOptions& options = {});

HurwitzTuple conjugate_tuple(const GroupElement& h, const HurwitzTuple& T);
HurwitzTuple conjugate_tuple(Elem h, const HurwitzTuple& T);

struct TupleOrbit {
  HurwitzTuple representative;        // lexicographically least member of the full orbit
  std::size_t size = 0;               // size of the full orbit
  std::vector<std::size_t> members;   // input indices lying in this orbit
};

// Conjugation orbits of the input, sorted by representative.
std::vector<TupleOrbit> conjugation_orbits(std::span<const HurwitzTuple> tuples);
HurwitzTuple conjugation_representative(const HurwitzTuple& T);

ElementSet tuple_stabilizer(const HurwitzTuple& T);
BranchingType branching_type(const HurwitzTuple& T);
std::size_t unpointed_degree(const GroupPtr& group, std::size_t genus, std::size_t n,
                             const EnumerationOptions& options = {});

// Word over the standard generators, e.g. "a1 b1^-1 c2".
struct WordLetter {
  char symbol = 'c';      // 'a', 'b' or 'c'
  std::size_t index = 0;  // 0-based
  bool inverse = false;
  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};
using Word = std::vector<WordLetter>;

Word parse_word(std::string_view text);
Word inverse_word(const Word& w);
Word relator_word(std::size_t genus, std::size_t n);
// Image of the word under the monodromy homomorphism encoded by T.
Elem evaluate_word(const HurwitzTuple& T, const Word& w);
HurwitzTuple change_basepoint(const HurwitzTuple& T, const Word& w);

/// A point of the pointed Hurwitz set: a multiplicity-free branch divisor
/// together with the monodromy tuple.
struct MonodromyInvariant {
  BranchDivisor divisor;
  HurwitzTuple tuple;

  MonodromyInvariant(BranchDivisor d, HurwitzTuple t);
  friend bool operator==(const MonodromyInvariant&, const MonodromyInvariant&) = default;
};

struct UnpointedInvariant {
  BranchDivisor divisor;
  HurwitzTuple representative;
  std::size_t orbit_size = 0;
  friend bool operator==(const UnpointedInvariant&, const UnpointedInvariant&) = default;
};

UnpointedInvariant unpointed_invariant(const MonodromyInvariant& m);

}  // namespace hurwitz
