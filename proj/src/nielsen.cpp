#include "hurwitz/nielsen.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

namespace hurwitz {

// ---------------------------------------------------------------------------
// HurwitzTuple

HurwitzTuple::HurwitzTuple(GroupPtr group, std::size_t genus, std::vector<Elem> entries) {
  *this = unchecked(std::move(group), genus, std::move(entries));
  if (auto why = violation()) throw InvariantViolation("invalid Hurwitz tuple: " + *why);
}

HurwitzTuple HurwitzTuple::unchecked(GroupPtr group, std::size_t genus, std::vector<Elem> entries) {
  if (!group) throw UsageError("tuple without a group");
  if (entries.size() < 2 * genus + 1) throw UsageError("tuple needs at least one branch image");
  for (auto e : entries)
    if (e >= group->order()) throw UsageError("tuple entry out of range");
  HurwitzTuple t;
  t.group_ = std::move(group);
  t.genus_ = genus;
  t.entries_ = std::move(entries);
  return t;
}

std::optional<std::string> HurwitzTuple::violation() const {
  const auto& G = *group_;
  for (std::size_t j = 0; j < branch_count(); ++j)
    if (branch(j) == G.identity()) return "c" + std::to_string(j + 1) + " is the identity";
  Elem p = G.identity();
  for (std::size_t i = 0; i < genus_; ++i) p = G.mul(p, G.commutator(handle_a(i), handle_b(i)));
  for (auto c : branch_images()) p = G.mul(p, c);
  if (p != G.identity()) return "surface relation fails";
  if (!is_generating(G, std::span<const Elem>(entries_))) return "entries do not generate the group";
  return std::nullopt;
}

std::string HurwitzTuple::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < 2 * genus_; ++i) {
    if (i) out += ',';
    out += group_->element_name(entries_[i]);
  }
  out += "| ";
  auto br = branch_images();
  for (std::size_t j = 0; j < br.size(); ++j) {
    if (j) out += ',';
    out += group_->element_name(br[j]);
  }
  return out + "]";
}

std::size_t TupleHash::operator()(std::span<const Elem> entries) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : entries) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

std::size_t TupleHash::operator()(const HurwitzTuple& t) const {
  return (*this)(t.entries()) ^ t.genus();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class FiberSearch {
 public:
  FiberSearch(const FiniteGroup& G, std::size_t genus, std::size_t n,
              const std::optional<BranchingType>& filter, std::uint64_t cap,
              std::atomic<std::uint64_t>& visited)
      : G_(G), genus_(genus), n_(n), length_(2 * genus + n), cap_(cap), visited_(visited),
        lattice_(G), entries_(length_) {
    if (filter) {
      remaining_.assign(G.conjugacy_classes().size(), 0);
      for (auto [cls, mult] : *filter) {
        if (cls >= remaining_.size()) throw UsageError("unknown class id " + std::to_string(cls));
        remaining_[cls] = mult;
      }
    }
  }

  // Runs the search with entries_[0] fixed to `first`.
  std::vector<std::vector<Elem>> run_from(Elem first) {
    out_.clear();
    if (length_ == 1) {
      // Only c_1, solved from the relation.
      leaf(G_.identity(), lattice_.trivial());
    } else if (admissible(0, first)) {
      visit(0, first, G_.identity(), lattice_.trivial());
    }
    return std::move(out_);
  }

  void flush() {
    auto total = visited_.fetch_add(local_, std::memory_order_relaxed) + local_;
    local_ = 0;
    if (total > cap_) throw CapExceeded("enumeration work cap of " + std::to_string(cap_) + " nodes exceeded");
  }

  std::size_t first_position_choices() const { return length_ == 1 ? 1 : G_.order(); }

 private:
  bool is_branch(std::size_t pos) const { return pos >= 2 * genus_; }

  bool admissible(std::size_t pos, Elem x) const {
    if (!is_branch(pos)) return true;
    if (x == G_.identity()) return false;
    return remaining_.empty() || remaining_[G_.class_of(x)] > 0;
  }

  void count_node() {
    if (++local_ >= 4096) flush();
  }

  // Places x at pos; `product` and `sub` describe entries before pos.
  void visit(std::size_t pos, Elem x, Elem product, SubgroupLattice::Id sub) {
    count_node();
    entries_[pos] = x;
    sub = lattice_.join(sub, x);
    if (is_branch(pos)) {
      product = G_.mul(product, x);
      if (!remaining_.empty()) --remaining_[G_.class_of(x)];
    } else if (pos % 2 == 1) {
      product = G_.mul(product, G_.commutator(entries_[pos - 1], x));
    }
    const std::size_t next = pos + 1;
    if (next == length_ - 1) {
      leaf(product, sub);
    } else {
      for (Elem y = 0; y < G_.order(); ++y)
        if (admissible(next, y)) visit(next, y, product, sub);
    }
    if (is_branch(pos) && !remaining_.empty()) ++remaining_[G_.class_of(x)];
  }

  void leaf(Elem product, SubgroupLattice::Id sub) {
    count_node();
    const Elem last = G_.inv(product);
    if (last == G_.identity()) return;
    if (!remaining_.empty()) {
      // The last class must be the only one still owed.
      const auto cls = G_.class_of(last);
      for (std::size_t k = 0; k < remaining_.size(); ++k)
        if (remaining_[k] != (k == cls ? 1u : 0u)) return;
    }
    if (!lattice_.is_whole(lattice_.join(sub, last))) return;
    entries_[length_ - 1] = last;
    out_.push_back(entries_);
  }

  const FiniteGroup& G_;
  std::size_t genus_, n_, length_;
  std::uint64_t cap_;
  std::atomic<std::uint64_t>& visited_;
  std::uint64_t local_ = 0;
  SubgroupLattice lattice_;
  std::vector<std::size_t> remaining_;
  std::vector<Elem> entries_;
  std::vector<std::vector<Elem>> out_;
};

std::size_t filter_total(const BranchingType& t) {
  std::size_t s = 0;
  for (auto [cls, mult] : t) s += mult;
  return s;
}

}  // namespace

std::vector<HurwitzTuple> enumerate_tuples(const GroupPtr& group, std::size_t genus, std::size_t n,
                                           const EnumerationOptions& options) {
  if (!group) throw UsageError("no group");
  if (n < 1) throw UsageError("branch count must be at least 1");
  if (options.work_cap == 0) throw UsageError("work cap must be positive");
  const auto& G = *group;
  if (options.type_filter) {
    for (auto [cls, mult] : *options.type_filter)
      if (cls >= G.conjugacy_classes().size()) throw UsageError("unknown class id " + std::to_string(cls));
    if (filter_total(*options.type_filter) != n) return {};
  }

  std::atomic<std::uint64_t> visited{0};
  const std::size_t choices = 2 * genus + n == 1 ? 1 : G.order();
  std::vector<std::vector<std::vector<Elem>>> per_choice(choices);

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(choices)));
  std::atomic<std::size_t> next_choice{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      FiberSearch search(G, genus, n, options.type_filter, options.work_cap, visited);
      for (;;) {
        auto k = next_choice.fetch_add(1);
        if (k >= choices) break;
        per_choice[k] = search.run_from(static_cast<Elem>(k));
      }
      search.flush();
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_choice.store(choices);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<HurwitzTuple> out;
  for (auto& bucket : per_choice)
    for (auto& entries : bucket) out.push_back(HurwitzTuple::unchecked(group, genus, std::move(entries)));
  return out;
}

std::size_t delta_degree(const GroupPtr& group, std::size_t genus, std::size_t n,
                         const EnumerationOptions& options) {
  return enumerate_tuples(group, genus, n, options).size();
}

// ---------------------------------------------------------------------------
// Conjugation action

HurwitzTuple conjugate_tuple(Elem h, const HurwitzTuple& T) {
  const auto& G = T.group();
  if (h >= G.order()) throw UsageError("element index out of range");
  std::vector<Elem> entries(T.entries().begin(), T.entries().end());
  for (auto& e : entries) e = G.conj(h, e);
  return HurwitzTuple::unchecked(T.group_ptr(), T.genus(), std::move(entries));
}

HurwitzTuple conjugate_tuple(const GroupElement& h, const HurwitzTuple& T) {
  T.group().require_member(h);
  return conjugate_tuple(h.index, T);
}

HurwitzTuple conjugation_representative(const HurwitzTuple& T) {
  HurwitzTuple best = T;
  for (Elem h = 1; h < T.group().order(); ++h) {
    auto c = conjugate_tuple(h, T);
    if (c < best) best = std::move(c);
  }
  return best;
}

std::vector<TupleOrbit> conjugation_orbits(std::span<const HurwitzTuple> tuples) {
  if (tuples.empty()) return {};
  const auto& first = tuples.front();
  for (const auto& t : tuples)
    if (t.group_ptr() != first.group_ptr() || t.genus() != first.genus() ||
        t.branch_count() != first.branch_count())
      throw UsageError("conjugation_orbits: tuples with mixed parameters");

  std::unordered_map<HurwitzTuple, std::size_t, TupleHash> index;
  for (std::size_t i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], i);

  std::vector<char> assigned(tuples.size(), 0);
  std::vector<TupleOrbit> orbits;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (assigned[i]) continue;
    std::set<HurwitzTuple> orbit;
    for (Elem h = 0; h < first.group().order(); ++h) orbit.insert(conjugate_tuple(h, tuples[i]));
    TupleOrbit o{*orbit.begin(), orbit.size(), {}};
    for (const auto& t : orbit)
      if (auto it = index.find(t); it != index.end()) {
        assigned[it->second] = 1;
        o.members.push_back(it->second);
      }
    std::sort(o.members.begin(), o.members.end());
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const TupleOrbit& x, const TupleOrbit& y) { return x.representative < y.representative; });
  return orbits;
}

ElementSet tuple_stabilizer(const HurwitzTuple& T) {
  const auto& G = T.group();
  ElementSet out;
  for (Elem h = 0; h < G.order(); ++h) {
    bool fixes = true;
    for (auto e : T.entries())
      if (G.conj(h, e) != e) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(h);
  }
  return out;
}

BranchingType branching_type(const HurwitzTuple& T) {
  BranchingType type;
  for (auto c : T.branch_images()) ++type[T.group().class_of(c)];
  return type;
}

std::size_t unpointed_degree(const GroupPtr& group, std::size_t genus, std::size_t n,
                             const EnumerationOptions& options) {
  auto fiber = enumerate_tuples(group, genus, n, options);
  const auto z = center(*group).size();
  if ((fiber.size() * z) % group->order() != 0)
    throw InvariantViolation("fiber size is not divisible by |G|/|Z(G)|");
  const auto degree = fiber.size() * z / group->order();
  const auto orbits = conjugation_orbits(fiber);
  if (orbits.size() != degree)
    throw InvariantViolation("conjugation orbit count disagrees with the quotient degree");
  return degree;
}

// ---------------------------------------------------------------------------
// Words

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
      ++pos;
      continue;
    }
    if (ch != 'a' && ch != 'b' && ch != 'c')
      throw UsageError("malformed word: unexpected '" + std::string(1, ch) + "'");
    ++pos;
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), idx);
    if (ec != std::errc() || idx == 0) throw UsageError("malformed word: missing generator index");
    pos = static_cast<std::size_t>(ptr - text.data());
    bool inverse = false;
    if (text.substr(pos, 3) == "^-1") {
      inverse = true;
      pos += 3;
    } else if (pos < text.size() && text[pos] == '\'') {
      inverse = true;
      ++pos;
    }
    w.push_back({ch, idx - 1, inverse});
  }
  return w;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

Word relator_word(std::size_t genus, std::size_t n) {
  Word w;
  for (std::size_t i = 0; i < genus; ++i) {
    w.push_back({'a', i, false});
    w.push_back({'b', i, false});
    w.push_back({'a', i, true});
    w.push_back({'b', i, true});
  }
  for (std::size_t j = 0; j < n; ++j) w.push_back({'c', j, false});
  return w;
}

Elem evaluate_word(const HurwitzTuple& T, const Word& w) {
  const auto& G = T.group();
  Elem p = G.identity();
  for (const auto& l : w) {
    Elem x = 0;
    if (l.symbol == 'c') {
      if (l.index >= T.branch_count()) throw UsageError("word uses c" + std::to_string(l.index + 1) + " beyond n");
      x = T.branch(l.index);
    } else {
      if (l.index >= T.genus())
        throw UsageError(std::string("word uses ") + l.symbol + std::to_string(l.index + 1) + " beyond genus");
      x = l.symbol == 'a' ? T.handle_a(l.index) : T.handle_b(l.index);
    }
    p = G.mul(p, l.inverse ? G.inv(x) : x);
  }
  return p;
}

HurwitzTuple change_basepoint(const HurwitzTuple& T, const Word& w) {
  return conjugate_tuple(evaluate_word(T, w), T);
}

// ---------------------------------------------------------------------------
// Invariants with divisors

MonodromyInvariant::MonodromyInvariant(BranchDivisor d, HurwitzTuple t)
    : divisor(std::move(d)), tuple(std::move(t)) {
  if (!divisor.is_multiplicity_free()) throw UsageError("branch divisor must be multiplicity-free");
  if (divisor.degree() != tuple.branch_count())
    throw UsageError("divisor degree " + std::to_string(divisor.degree()) + " differs from branch count " +
                     std::to_string(tuple.branch_count()));
  if (in_universal_divisor(kBasepointLabel, divisor))
    throw UsageError("branch divisor contains the base point");
}

UnpointedInvariant unpointed_invariant(const MonodromyInvariant& m) {
  std::set<HurwitzTuple> orbit;
  for (Elem h = 0; h < m.tuple.group().order(); ++h) orbit.insert(conjugate_tuple(h, m.tuple));
  return {m.divisor, *orbit.begin(), orbit.size()};
}

}  // namespace hurwitz
