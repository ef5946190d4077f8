#include "hurwitz/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

namespace hurwitz {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw UsageError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), std::uint16_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw UsageError("permutation degree mismatch");
  std::vector<std::uint16_t> img(degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = rhs.images_[images_[i]];
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> img(degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = p.degree();
  for (auto v : p.images()) h = h * 1000003u ^ v;
  return h;
}

namespace {

std::vector<std::vector<std::size_t>> parse_cycles(std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw UsageError("expected '(' in permutation: " + std::string(text));
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      while (pos < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
      if (pos >= text.size()) throw UsageError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc() || value == 0)
        throw UsageError("bad letter in permutation: " + std::string(text));
      pos = static_cast<std::size_t>(ptr - text.data());
      if (std::find(cycle.begin(), cycle.end(), value) != cycle.end())
        throw UsageError("repeated letter in cycle: " + std::string(text));
      cycle.push_back(value);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

Permutation from_cycles(const std::vector<std::vector<std::size_t>>& cycles, std::size_t degree) {
  auto img = Permutation::identity(degree).images();
  // Cycles compose left to right, matching Permutation::operator*.
  Permutation result = Permutation::identity(degree);
  for (const auto& cycle : cycles) {
    auto c = img;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      c[cycle[k] - 1] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()] - 1);
    result = result * Permutation(std::move(c));
  }
  return result;
}

std::size_t max_letter(const std::vector<std::vector<std::size_t>>& cycles) {
  std::size_t m = 0;
  for (const auto& c : cycles)
    for (auto v : c) m = std::max(m, v);
  return m;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  auto cycles = parse_cycles(text);
  auto needed = std::max<std::size_t>(max_letter(cycles), 1);
  if (degree == 0) degree = needed;
  if (needed > degree) throw UsageError("letter exceeds degree in: " + std::string(text));
  if (degree > 65535) throw UsageError("degree too large");
  return from_cycles(cycles, degree);
}

std::vector<Permutation> parse_generators(std::string_view text) {
  std::vector<std::string_view> pieces;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0 || depth > 1) throw UsageError("unbalanced parentheses: " + std::string(text));
    if (depth == 0 && (c == ',' || c == ';')) {
      auto piece = text.substr(start, i - start);
      auto first = piece.find_first_not_of(" \t\n\r");
      if (first == std::string_view::npos)
        throw UsageError("empty generator in: " + std::string(text));
      pieces.push_back(piece);
      start = i + 1;
    }
  }
  if (depth != 0) throw UsageError("unbalanced parentheses: " + std::string(text));

  std::vector<std::vector<std::vector<std::size_t>>> parsed;
  std::size_t degree = 1;
  for (auto piece : pieces) {
    parsed.push_back(parse_cycles(piece));
    degree = std::max(degree, max_letter(parsed.back()));
  }
  std::vector<Permutation> gens;
  for (const auto& cycles : parsed) gens.push_back(from_cycles(cycles, degree));
  return gens;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  if (group == nullptr || group != rhs.group)
    throw UsageError("product of elements from different groups");
  return {group, group->mul(index, rhs.index)};
}

GroupElement GroupElement::inverse() const {
  if (group == nullptr) throw UsageError("element without a group");
  return {group, group->inv(index)};
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(std::string name, std::size_t order, std::vector<Elem> table) {
  if (order == 0) throw UsageError("group order must be positive");
  if (table.size() != order * order) throw UsageError("multiplication table has wrong size");
  for (auto v : table)
    if (v >= order) throw UsageError("multiplication table entry out of range");

  FiniteGroup G;
  G.name_ = std::move(name);
  G.order_ = order;
  G.table_ = std::move(table);

  for (Elem x = 0; x < order; ++x)
    if (G.mul(0, x) != x || G.mul(x, 0) != x)
      throw UsageError("element 0 is not the identity");
  // Latin square rows and columns.
  std::vector<char> seen(order);
  for (Elem x = 0; x < order; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem y = 0; y < order; ++y) seen[G.mul(x, y)] = 1;
    if (std::count(seen.begin(), seen.end(), 0) != 0) throw UsageError("row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem y = 0; y < order; ++y) seen[G.mul(y, x)] = 1;
    if (std::count(seen.begin(), seen.end(), 0) != 0)
      throw UsageError("column is not a permutation");
  }
  auto associative = [&G](Elem a, Elem b, Elem c) {
    return G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c));
  };
  if (order <= 64) {
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        for (Elem c = 0; c < order; ++c)
          if (!associative(a, b, c)) throw UsageError("multiplication is not associative");
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&] {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return static_cast<Elem>((state >> 33) % order);
    };
    for (int i = 0; i < 20000; ++i) {
      Elem a = next(), b = next(), c = next();
      if (!associative(a, b, c)) throw UsageError("multiplication is not associative");
    }
  }
  G.finish();
  return G;
}

void FiniteGroup::finish() {
  inverse_.assign(order_, 0);
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < order_; ++y)
      if (mul(x, y) == 0) {
        inverse_[x] = y;
        break;
      }

  element_order_.assign(order_, 1);
  for (Elem x = 0; x < order_; ++x) {
    Elem p = x;
    std::uint32_t k = 1;
    while (p != 0) {
      p = mul(p, x);
      ++k;
    }
    element_order_[x] = k;
  }

  class_of_.assign(order_, UINT32_MAX);
  classes_.clear();
  for (Elem x = 0; x < order_; ++x) {
    if (class_of_[x] != UINT32_MAX) continue;
    ConjugacyClass cls;
    cls.id = static_cast<std::uint32_t>(classes_.size());
    cls.representative = x;
    cls.order = element_order_[x];
    for (Elem h = 0; h < order_; ++h) {
      Elem y = conj(h, x);
      if (class_of_[y] == UINT32_MAX) {
        class_of_[y] = cls.id;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

GroupElement FiniteGroup::element(Elem index) const {
  if (index >= order_) throw UsageError("element index out of range");
  return {this, index};
}

std::uint32_t FiniteGroup::element_order(const GroupElement& x) const {
  require_member(x);
  return element_order_[x.index];
}

void FiniteGroup::require_member(const GroupElement& x) const {
  if (x.group != this) throw UsageError("element belongs to a different group");
  if (x.index >= order_) throw UsageError("element index out of range");
}

std::optional<Elem> FiniteGroup::find(const Permutation& p) const {
  auto it = label_index_.find(p);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::string FiniteGroup::element_name(Elem x) const {
  if (has_permutation_labels()) return labels_[x].to_cycle_string();
  return std::to_string(x);
}

std::string FiniteGroup::class_label(std::uint32_t class_id) const {
  const auto& cls = classes_.at(class_id);
  if (!has_permutation_labels()) return "#" + std::to_string(class_id);
  std::string out = std::to_string(cls.order) + ":";
  auto type = labels_[cls.representative].cycle_type();
  if (type.empty()) return out + "1";
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(type[i]);
  }
  return out;
}

FiniteGroup group_from_permutations(const std::vector<Permutation>& generators, std::size_t cap,
                                    std::string name) {
  if (generators.empty()) throw UsageError("empty generator list");
  const auto degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw UsageError("generators act on different letter sets");
  if (cap > 65535) throw UsageError("closure cap above 65535 is not supported");

  FiniteGroup G;
  G.name_ = std::move(name);
  G.labels_.push_back(Permutation::identity(degree));
  G.label_index_.emplace(G.labels_.back(), 0);
  for (std::size_t head = 0; head < G.labels_.size(); ++head) {
    for (const auto& gen : generators) {
      auto next = G.labels_[head] * gen;
      if (G.label_index_.contains(next)) continue;
      if (G.labels_.size() >= cap)
        throw CapExceeded("group closure exceeds cap of " + std::to_string(cap) + " elements");
      G.label_index_.emplace(next, static_cast<Elem>(G.labels_.size()));
      G.labels_.push_back(std::move(next));
    }
  }
  G.order_ = G.labels_.size();
  G.table_.resize(G.order_ * G.order_);
  for (Elem a = 0; a < G.order_; ++a)
    for (Elem b = 0; b < G.order_; ++b)
      G.table_[std::size_t{a} * G.order_ + b] = G.label_index_.at(G.labels_[a] * G.labels_[b]);
  G.finish();
  return G;
}

namespace {

Permutation cycle_on(std::size_t degree, const std::vector<std::size_t>& letters) {
  return from_cycles({letters}, degree);
}

FiniteGroup cyclic(std::size_t k, std::string name) {
  std::vector<Elem> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = static_cast<Elem>((a + b) % k);
  return FiniteGroup::from_table(std::move(name), k, std::move(table));
}

FiniteGroup quaternion(std::string name) {
  // Index 2u + s encodes sign s (0 = +, 1 = -) times unit u in {1, i, j, k}.
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_product[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Elem> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2) ^ (b % 2) ^ sign_product[ua][ub];
      table[a * 8 + b] = static_cast<Elem>(2 * unit_product[ua][ub] + sign);
    }
  return FiniteGroup::from_table(std::move(name), 8, std::move(table));
}

std::size_t factorial_capped(std::size_t k, std::size_t limit) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    f *= i;
    if (f > limit) return limit + 1;
  }
  return f;
}

}  // namespace

FiniteGroup catalog_group(std::string_view name, std::size_t cap) {
  std::string id(name);
  if (id == "Q8" || id == "q8") {
    if (cap < 8) throw CapExceeded("Q8 exceeds closure cap");
    return quaternion("Q8");
  }
  if (id.size() < 2) throw UsageError("unknown catalog group: " + id);
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(id[0])));
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), k);
  if (ec != std::errc() || ptr != id.data() + id.size() || k == 0)
    throw UsageError("unknown catalog group: " + id);
  std::string canonical = std::string(1, family) + std::to_string(k);

  switch (family) {
    case 'C':
      if (k > cap) throw CapExceeded(canonical + " exceeds closure cap");
      return cyclic(k, canonical);
    case 'D': {
      if (2 * k > cap) throw CapExceeded(canonical + " exceeds closure cap");
      if (k == 1) return group_from_permutations({parse_permutation("(1 2)")}, cap, canonical);
      if (k == 2)
        return group_from_permutations(parse_generators("(1 2)(3 4), (1 3)(2 4)"), cap, canonical);
      std::vector<std::size_t> rotation(k);
      std::iota(rotation.begin(), rotation.end(), std::size_t{1});
      std::vector<std::uint16_t> reflection(k);
      for (std::size_t i = 0; i < k; ++i) reflection[i] = static_cast<std::uint16_t>((k - i) % k);
      return group_from_permutations({cycle_on(k, rotation), Permutation(reflection)}, cap,
                                     canonical);
    }
    case 'S': {
      if (factorial_capped(k, cap) > cap) throw CapExceeded(canonical + " exceeds closure cap");
      if (k == 1) return group_from_permutations({Permutation::identity(1)}, cap, canonical);
      std::vector<std::size_t> full(k);
      std::iota(full.begin(), full.end(), std::size_t{1});
      std::vector<Permutation> gens{cycle_on(k, {1, 2})};
      if (k > 2) gens.push_back(cycle_on(k, full));
      return group_from_permutations(gens, cap, canonical);
    }
    case 'A': {
      if (factorial_capped(k, 2 * cap) > 2 * cap) throw CapExceeded(canonical + " exceeds closure cap");
      if (k < 3) return group_from_permutations({Permutation::identity(std::max<std::size_t>(k, 1))}, cap,
                                                canonical);
      std::vector<Permutation> gens;
      for (std::size_t i = 3; i <= k; ++i) gens.push_back(cycle_on(k, {1, 2, i}));
      return group_from_permutations(gens, cap, canonical);
    }
    default:
      throw UsageError("unknown catalog group: " + id);
  }
}

std::vector<std::string> catalog_names() { return {"C<k>", "D<k>", "S<k>", "A<k>", "Q8"}; }

// ---------------------------------------------------------------------------
// Subgroup utilities

ElementSet center(const FiniteGroup& G) {
  ElementSet z;
  for (Elem x = 0; x < G.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < G.order() && central; ++y) central = G.mul(x, y) == G.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

ElementSet centralizer(const FiniteGroup& G, std::span<const Elem> S) {
  ElementSet c;
  for (Elem x = 0; x < G.order(); ++x) {
    bool commutes = true;
    for (auto s : S) {
      if (s >= G.order()) throw UsageError("element index out of range");
      if (G.mul(x, s) != G.mul(s, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) c.push_back(x);
  }
  return c;
}

ElementSet generated_subgroup(const FiniteGroup& G, std::span<const Elem> S) {
  for (auto s : S)
    if (s >= G.order()) throw UsageError("element index out of range");
  std::vector<char> in(G.order(), 0);
  std::vector<Elem> queue{G.identity()};
  in[G.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto s : S) {
      Elem y = G.mul(queue[head], s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_generating(const FiniteGroup& G, std::span<const Elem> S) {
  return generated_subgroup(G, S).size() == G.order();
}

namespace {

std::vector<Elem> indices_of(const FiniteGroup& G, std::span<const GroupElement> S) {
  std::vector<Elem> out;
  out.reserve(S.size());
  for (const auto& s : S) {
    G.require_member(s);
    out.push_back(s.index);
  }
  return out;
}

}  // namespace

ElementSet centralizer(const FiniteGroup& G, std::span<const GroupElement> S) {
  return centralizer(G, std::span<const Elem>(indices_of(G, S)));
}

ElementSet generated_subgroup(const FiniteGroup& G, std::span<const GroupElement> S) {
  return generated_subgroup(G, std::span<const Elem>(indices_of(G, S)));
}

bool is_generating(const FiniteGroup& G, std::span<const GroupElement> S) {
  return is_generating(G, std::span<const Elem>(indices_of(G, S)));
}

// ---------------------------------------------------------------------------
// SubgroupLattice

SubgroupLattice::SubgroupLattice(const FiniteGroup& G)
    : group_(G), words_((G.order() + 63) / 64) {
  std::vector<std::uint64_t> bits(words_, 0);
  bits[0] = 1;
  intern(std::move(bits), {}, 1);
}

SubgroupLattice::Id SubgroupLattice::intern(std::vector<std::uint64_t> bits, std::vector<Elem> gens,
                                            std::size_t size) {
  std::string key(reinterpret_cast<const char*>(bits.data()), bits.size() * sizeof(std::uint64_t));
  auto it = by_bits_.find(key);
  if (it != by_bits_.end()) return it->second;
  Id id = static_cast<Id>(bits_.size());
  bits_.push_back(std::move(bits));
  gens_.push_back(std::move(gens));
  sizes_.push_back(size);
  by_bits_.emplace(std::move(key), id);
  return id;
}

bool SubgroupLattice::contains(Id h, Elem x) const {
  return (bits_[h][x / 64] >> (x % 64)) & 1u;
}

SubgroupLattice::Id SubgroupLattice::join(Id h, Elem x) {
  if (contains(h, x)) return h;
  const std::uint64_t key = std::uint64_t{h} * group_.order() + x;
  if (auto it = join_elem_.find(key); it != join_elem_.end()) return it->second;

  auto gens = gens_[h];
  gens.push_back(x);
  std::vector<std::uint64_t> bits(words_, 0);
  std::vector<Elem> queue{group_.identity()};
  bits[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto s : gens) {
      Elem y = group_.mul(queue[head], s);
      if (!((bits[y / 64] >> (y % 64)) & 1u)) {
        bits[y / 64] |= std::uint64_t{1} << (y % 64);
        queue.push_back(y);
      }
    }
  Id id = intern(std::move(bits), std::move(gens), queue.size());
  join_elem_.emplace(key, id);
  return id;
}

SubgroupLattice::Id SubgroupLattice::join_subgroup(Id h, Id k) {
  const std::uint64_t key = (std::uint64_t{h} << 32) | k;
  if (auto it = join_sub_.find(key); it != join_sub_.end()) return it->second;
  Id result = h;
  const auto gens = gens_[k];
  for (auto g : gens) result = join(result, g);
  join_sub_.emplace(key, result);
  return result;
}

ElementSet SubgroupLattice::members(Id h) const {
  ElementSet out;
  for (Elem x = 0; x < group_.order(); ++x)
    if (contains(h, x)) out.push_back(x);
  return out;
}

}  // namespace hurwitz
