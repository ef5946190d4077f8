#include "hurwitz/symprod.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hurwitz/group.hpp"

namespace hurwitz {

BranchDivisor::BranchDivisor(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first.empty()) throw UsageError("empty point label in divisor");
    if (entries_[i].second == 0) throw UsageError("divisor multiplicity must be positive");
    if (i > 0 && entries_[i].first == entries_[i - 1].first)
      throw UsageError("repeated point label in divisor: " + entries_[i].first);
    degree_ += entries_[i].second;
  }
}

BranchDivisor BranchDivisor::simple(const std::vector<std::string>& labels) {
  std::vector<Entry> entries;
  for (const auto& l : labels) entries.emplace_back(l, 1);
  return BranchDivisor(std::move(entries));
}

std::vector<std::string> BranchDivisor::support() const {
  std::vector<std::string> out;
  for (const auto& [label, mult] : entries_) out.push_back(label);
  return out;
}

std::size_t BranchDivisor::multiplicity(std::string_view label) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), label,
                             [](const Entry& e, std::string_view l) { return e.first < l; });
  return it != entries_.end() && it->first == label ? it->second : 0;
}

bool BranchDivisor::is_multiplicity_free() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second == 1; });
}

std::string BranchDivisor::to_string() const {
  std::string out;
  for (const auto& [label, mult] : entries_) {
    if (!out.empty()) out += ',';
    out += label;
    if (mult != 1) out += ':' + std::to_string(mult);
  }
  return out;
}

BranchDivisor parse_divisor(std::string_view text) {
  std::vector<BranchDivisor::Entry> entries;
  auto trim = [](std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return std::string_view{};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  };
  if (trim(text).empty()) return BranchDivisor{};
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start));
    if (piece.empty()) throw UsageError("empty entry in divisor: " + std::string(text));
    std::size_t mult = 1;
    auto colon = piece.find(':');
    auto label = trim(piece.substr(0, colon));
    if (colon != std::string_view::npos) {
      auto num = trim(piece.substr(colon + 1));
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), mult);
      if (ec != std::errc() || ptr != num.data() + num.size() || mult == 0)
        throw UsageError("bad multiplicity in divisor: " + std::string(piece));
    }
    entries.emplace_back(std::string(label), mult);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return BranchDivisor(std::move(entries));
}

std::size_t PartitionType::n() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

PartitionType partition_of(const BranchDivisor& D) {
  PartitionType nu;
  for (const auto& [label, mult] : D.entries()) nu.parts.push_back(mult);
  std::sort(nu.parts.rbegin(), nu.parts.rend());
  return nu;
}

std::size_t stratum_dimension(const PartitionType& nu) { return nu.length(); }

std::vector<BranchDivisor> decompose(const BranchDivisor& D) {
  std::size_t s = 0;
  for (const auto& [label, mult] : D.entries()) s = std::max(s, mult);
  std::vector<std::vector<std::string>> layers(s);
  for (const auto& [label, mult] : D.entries()) layers[mult - 1].push_back(label);
  std::vector<BranchDivisor> out;
  for (const auto& labels : layers) out.push_back(BranchDivisor::simple(labels));
  return out;
}

BranchDivisor compose(const std::vector<BranchDivisor>& layers) {
  std::vector<BranchDivisor::Entry> entries;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (!layers[i].is_multiplicity_free())
      throw UsageError("compose expects multiplicity-free layers");
    for (const auto& [label, mult] : layers[i].entries()) entries.emplace_back(label, i + 1);
  }
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first)
      throw UsageError("compose: overlapping support at " + entries[i].first);
  return BranchDivisor(std::move(entries));
}

bool in_universal_divisor(std::string_view label, const BranchDivisor& D) {
  return D.multiplicity(label) > 0;
}

}  // namespace hurwitz
