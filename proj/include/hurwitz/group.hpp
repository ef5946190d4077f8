#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hurwitz {

// Malformed input or violated precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap (closure size, enumeration work) was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed; always a bug or corrupted input data.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Elem = std::uint32_t;
using ElementSet = std::vector<Elem>;  // sorted, duplicate-free

inline constexpr std::size_t kDefaultClosureCap = 10080;

/// Permutation of {0, ..., d-1} stored as its image list.
///
/// Products read left to right: (p * q)(i) = q(p(i)), i.e. p is applied
/// first. With this convention (1 2)(1 3) = (1 2 3).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint16_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Nontrivial cycle lengths, descending.
  std::vector<std::size_t> cycle_type() const;
  // Cycle notation with 1-based letters, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// Parses one permutation in cycle notation, e.g. "(1 2)(3 4)" or "(1,2,3)".
// When degree is 0 the degree is the largest letter seen.
Permutation parse_permutation(std::string_view text, std::size_t degree = 0);

// Parses a generator list "(1 2)(3 4), (1 2 3)"; top-level commas or
// semicolons separate generators. All generators are padded to the largest
// letter that appears.
std::vector<Permutation> parse_generators(std::string_view text);

struct ConjugacyClass {
  std::uint32_t id = 0;
  Elem representative = 0;
  ElementSet members;
  std::uint32_t order = 1;  // common element order
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Handle on one element of a specific group. Arithmetic between handles of
/// different groups throws UsageError.
struct GroupElement {
  const FiniteGroup* group = nullptr;
  Elem index = 0;

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Finite group stored as a dense multiplication table.
///
/// Element 0 is the identity. Tables are immutable after construction, so a
/// group may be shared read-only between worker threads.
class FiniteGroup {
 public:
  // Builds from a full table; validates the group axioms exactly.
  static FiniteGroup from_table(std::string name, std::size_t order,
                                std::vector<Elem> table);

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  Elem identity() const { return 0; }

  Elem mul(Elem a, Elem b) const { return table_[std::size_t{a} * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  // h x h^-1
  Elem conj(Elem h, Elem x) const { return mul(mul(h, x), inverse_[h]); }
  // a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const {
    return mul(mul(a, b), mul(inverse_[a], inverse_[b]));
  }

  GroupElement element(Elem index) const;
  std::uint32_t element_order(Elem x) const { return element_order_[x]; }
  std::uint32_t element_order(const GroupElement& x) const;

  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  std::uint32_t class_of(Elem x) const { return class_of_[x]; }

  // Permutation labels, present when the group came from permutations.
  bool has_permutation_labels() const { return !labels_.empty(); }
  const Permutation& label(Elem x) const { return labels_.at(x); }
  std::size_t degree() const { return labels_.empty() ? 0 : labels_.front().degree(); }
  std::optional<Elem> find(const Permutation& p) const;

  // Cycle notation for permutation groups, the index otherwise.
  std::string element_name(Elem x) const;
  // "order:cycletype" for permutation groups (cycle lengths joined by '.'),
  // "#id" otherwise.
  std::string class_label(std::uint32_t class_id) const;

  bool contains(const GroupElement& x) const { return x.group == this; }
  void require_member(const GroupElement& x) const;

 private:
  FiniteGroup() = default;
  void finish();

  friend FiniteGroup group_from_permutations(const std::vector<Permutation>&,
                                             std::size_t, std::string);

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<Permutation> labels_;
  std::unordered_map<Permutation, Elem, PermutationHash> label_index_;
};

/// Closure of the generators under composition. Elements are numbered in
/// breadth-first discovery order starting from the identity, multiplying on
/// the right by each generator in turn.
FiniteGroup group_from_permutations(const std::vector<Permutation>& generators,
                                    std::size_t cap = kDefaultClosureCap,
                                    std::string name = {});

// C_k, D_k (order 2k), S_k, A_k, Q8.
FiniteGroup catalog_group(std::string_view name, std::size_t cap = kDefaultClosureCap);
std::vector<std::string> catalog_names();

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

ElementSet center(const FiniteGroup& G);
ElementSet centralizer(const FiniteGroup& G, std::span<const Elem> S);
ElementSet generated_subgroup(const FiniteGroup& G, std::span<const Elem> S);
bool is_generating(const FiniteGroup& G, std::span<const Elem> S);

// GroupElement-typed overloads; reject elements of other groups.
ElementSet centralizer(const FiniteGroup& G, std::span<const GroupElement> S);
ElementSet generated_subgroup(const FiniteGroup& G, std::span<const GroupElement> S);
bool is_generating(const FiniteGroup& G, std::span<const GroupElement> S);

/// Interned subgroups with memoized joins, used to track the subgroup
/// generated by a growing prefix during enumeration. Not thread-safe; use
/// one lattice per worker.
class SubgroupLattice {
 public:
  using Id = std::uint32_t;

  explicit SubgroupLattice(const FiniteGroup& G);

  Id trivial() const { return 0; }
  Id join(Id h, Elem x);
  Id join_subgroup(Id h, Id k);
  bool is_whole(Id h) const { return sizes_[h] == group_.order(); }
  bool contains(Id h, Elem x) const;
  std::size_t size(Id h) const { return sizes_[h]; }
  ElementSet members(Id h) const;

 private:
  Id intern(std::vector<std::uint64_t> bits, std::vector<Elem> gens, std::size_t size);

  const FiniteGroup& group_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<std::vector<Elem>> gens_;
  std::vector<std::size_t> sizes_;
  std::unordered_map<std::string, Id> by_bits_;
  std::unordered_map<std::uint64_t, Id> join_elem_;
  std::unordered_map<std::uint64_t, Id> join_sub_;
};

}  // namespace hurwitz
