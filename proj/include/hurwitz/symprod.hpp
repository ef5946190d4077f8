#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hurwitz {

/// Effective divisor on an abstract curve: distinct opaque point labels with
/// positive multiplicities. Entries are kept sorted by label so that equal
/// divisors compare equal.
class BranchDivisor {
 public:
  using Entry = std::pair<std::string, std::size_t>;

  BranchDivisor() = default;
  explicit BranchDivisor(std::vector<Entry> entries);
  // Multiplicity-free divisor on the given labels.
  static BranchDivisor simple(const std::vector<std::string>& labels);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t degree() const { return degree_; }
  std::size_t support_size() const { return entries_.size(); }
  std::vector<std::string> support() const;
  std::size_t multiplicity(std::string_view label) const;
  bool is_multiplicity_free() const;

  // "a:1,b:2,c:3" with ":1" omitted.
  std::string to_string() const;

  friend bool operator==(const BranchDivisor&, const BranchDivisor&) = default;
  friend auto operator<=>(const BranchDivisor&, const BranchDivisor&) = default;

 private:
  std::vector<Entry> entries_;
  std::size_t degree_ = 0;
};

// Accepts "a:1,b:2,c:3"; simple points may omit ":1".
BranchDivisor parse_divisor(std::string_view text);

struct PartitionType {
  std::vector<std::size_t> parts;  // weakly decreasing, positive

  std::size_t n() const;
  std::size_t length() const { return parts.size(); }
  friend bool operator==(const PartitionType&, const PartitionType&) = default;
};

PartitionType partition_of(const BranchDivisor& D);

// Dimension of the stratum of divisors with multiplicity partition nu.
std::size_t stratum_dimension(const PartitionType& nu);

// D = D_1 + 2 D_2 + ... + s D_s with each D_i multiplicity-free and the
// supports pairwise disjoint; s is the largest multiplicity.
std::vector<BranchDivisor> decompose(const BranchDivisor& D);
BranchDivisor compose(const std::vector<BranchDivisor>& layers);

bool in_universal_divisor(std::string_view label, const BranchDivisor& D);

}  // namespace hurwitz
