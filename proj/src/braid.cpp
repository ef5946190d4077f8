#include "hurwitz/braid.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace hurwitz {

HurwitzTuple apply_move(const HurwitzTuple& T, BraidMove move) {
  if (T.genus() != 0) throw UsageError("braid moves are only supported for genus 0");
  const auto n = T.branch_count();
  if (n < 2 || move.index + 1 >= n) throw UsageError("braid move index out of range");
  const auto& G = T.group();
  std::vector<Elem> c(T.entries().begin(), T.entries().end());
  const Elem x = c[move.index], y = c[move.index + 1];
  if (!move.inverse) {
    c[move.index] = G.conj(x, y);
    c[move.index + 1] = x;
  } else {
    c[move.index] = y;
    c[move.index + 1] = G.conj(G.inv(y), x);
  }
  return HurwitzTuple::unchecked(T.group_ptr(), 0, std::move(c));
}

namespace {

struct EntriesHash {
  std::size_t operator()(const std::vector<Elem>& v) const { return TupleHash{}(std::span<const Elem>(v)); }
};

std::vector<Elem> move_entries(const FiniteGroup& G, const std::vector<Elem>& c, std::size_t i, bool inverse) {
  auto out = c;
  const Elem x = c[i], y = c[i + 1];
  if (!inverse) {
    out[i] = G.conj(x, y);
    out[i + 1] = x;
  } else {
    out[i] = y;
    out[i + 1] = G.conj(G.inv(y), x);
  }
  return out;
}

class DisjointSets {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<BraidOrbit> braid_orbits(std::span<const HurwitzTuple> tuples, Scope scope, unsigned threads) {
  if (tuples.empty()) return {};
  const auto& first = tuples.front();
  for (const auto& t : tuples) {
    if (t.genus() != 0) throw UsageError("braid orbits are only supported for genus 0");
    if (t.group_ptr() != first.group_ptr() || t.branch_count() != first.branch_count())
      throw UsageError("braid_orbits: tuples with mixed parameters");
  }
  const auto& G = first.group();
  const auto n = first.branch_count();
  threads = std::max(1u, threads);

  std::vector<std::vector<Elem>> nodes;
  std::unordered_map<std::vector<Elem>, std::size_t, EntriesHash> index;
  DisjointSets sets;
  auto intern = [&](std::vector<Elem> v) -> std::size_t {
    auto [it, inserted] = index.try_emplace(v, nodes.size());
    if (inserted) {
      nodes.push_back(std::move(v));
      sets.add();
    }
    return it->second;
  };
  for (const auto& t : tuples) intern(std::vector<Elem>(t.entries().begin(), t.entries().end()));

  auto neighbours = [&](const std::vector<Elem>& c) {
    std::vector<std::vector<Elem>> out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      out.push_back(move_entries(G, c, i, false));
      out.push_back(move_entries(G, c, i, true));
    }
    if (scope == Scope::unpointed)
      for (Elem h = 1; h < G.order(); ++h) {
        auto d = c;
        for (auto& e : d) e = G.conj(h, e);
        out.push_back(std::move(d));
      }
    return out;
  };

  // Level-synchronous closure. Neighbour lists are computed in parallel and
  // merged in frontier order, so node numbering is schedule-independent.
  std::size_t begin = 0;
  while (begin < nodes.size()) {
    const std::size_t end = nodes.size();
    std::vector<std::vector<std::vector<Elem>>> adj(end - begin);
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi; ++k) adj[k - begin] = neighbours(nodes[k]);
    };
    const std::size_t span = end - begin;
    if (threads == 1 || span < 64) {
      work(begin, end);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (span + threads - 1) / threads;
      for (std::size_t lo = begin; lo < end; lo += chunk) pool.emplace_back(work, lo, std::min(end, lo + chunk));
    }
    for (std::size_t k = begin; k < end; ++k)
      for (auto& v : adj[k - begin]) sets.unite(k, intern(std::move(v)));
    begin = end;
  }

  std::unordered_map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < nodes.size(); ++k) groups[sets.find(k)].push_back(k);

  std::vector<BraidOrbit> orbits;
  for (auto& [root, members] : groups) {
    std::vector<HurwitzTuple> ts;
    ts.reserve(members.size());
    for (auto k : members) ts.push_back(HurwitzTuple::unchecked(first.group_ptr(), 0, nodes[k]));
    std::sort(ts.begin(), ts.end());
    orbits.push_back(BraidOrbit{ts.front(), std::move(ts)});
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const BraidOrbit& x, const BraidOrbit& y) { return x.representative < y.representative; });
  return orbits;
}

std::size_t component_count(const GroupPtr& group, std::size_t n, Scope scope, const EnumerationOptions& options) {
  auto fiber = enumerate_tuples(group, 0, n, options);
  return braid_orbits(fiber, scope, options.threads).size();
}

}  // namespace hurwitz
