#include "hurwitz/cover.hpp"

#include <algorithm>

namespace hurwitz {

CoverModel::CoverModel(HurwitzTuple tuple) : tuple_(std::move(tuple)) {}

FiberPermutation monodromy_perm(const CoverModel& M, const Word& w) {
  const auto& G = M.group();
  const Elem m = evaluate_word(M.tuple(), w);
  FiberPermutation p(G.order());
  for (Elem x = 0; x < G.order(); ++x) p[x] = G.mul(x, m);
  return p;
}

FiberPermutation deck_perm(const CoverModel& M, Elem g) {
  const auto& G = M.group();
  if (g >= G.order()) throw UsageError("element index out of range");
  FiberPermutation p(G.order());
  for (Elem x = 0; x < G.order(); ++x) p[x] = G.mul(g, x);
  return p;
}

FiberPermutation deck_perm(const CoverModel& M, const GroupElement& g) {
  M.group().require_member(g);
  return deck_perm(M, g.index);
}

std::vector<RamificationPoint> ramification_data(const CoverModel& M, std::size_t j) {
  const auto& T = M.tuple();
  if (j >= T.branch_count()) throw UsageError("branch index out of range");
  const auto& G = M.group();
  const Elem c = T.branch(j);
  const auto cyclic = generated_subgroup(G, std::span<const Elem>(&c, 1));

  std::vector<char> seen(G.order(), 0);
  std::vector<RamificationPoint> points;
  for (Elem h = 0; h < G.order(); ++h) {
    if (seen[h]) continue;
    RamificationPoint pt;
    pt.branch_index = j;
    for (Elem x = h; !seen[x]; x = G.mul(x, c)) {
      seen[x] = 1;
      pt.coset.push_back(x);
    }
    std::sort(pt.coset.begin(), pt.coset.end());
    pt.ram_index = pt.coset.size();
    for (auto y : cyclic) pt.isotropy.push_back(G.conj(h, y));
    std::sort(pt.isotropy.begin(), pt.isotropy.end());
    points.push_back(std::move(pt));
  }
  return points;
}

std::int64_t euler_characteristic(const CoverModel& M) {
  const auto& T = M.tuple();
  const auto order = static_cast<std::int64_t>(M.fiber_size());
  std::int64_t chi = order * (2 - 2 * static_cast<std::int64_t>(T.genus()) - static_cast<std::int64_t>(T.branch_count()));
  const auto& G = M.group();
  std::vector<char> seen(G.order());
  for (auto c : T.branch_images()) {
    // Orbits of x -> x c on the fiber, one per point above the branch point.
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem x = 0; x < G.order(); ++x) {
      if (seen[x]) continue;
      ++chi;
      for (Elem y = x; !seen[y]; y = G.mul(y, c)) seen[y] = 1;
    }
  }
  return chi;
}

std::int64_t riemann_hurwitz_genus(std::size_t group_order, std::size_t base_genus,
                                   const std::vector<std::uint32_t>& ramification_indices) {
  const auto N = static_cast<std::int64_t>(group_order);
  std::int64_t twice = N * (2 * static_cast<std::int64_t>(base_genus) - 2);
  for (auto e : ramification_indices) {
    if (e == 0 || group_order % e != 0) throw InvariantViolation("ramification index does not divide |G|");
    twice += N - N / e;
  }
  if (twice % 2 != 0) throw InvariantViolation("Riemann-Hurwitz gives a non-integral genus");
  return twice / 2 + 1;
}

std::size_t genus_of_cover(const CoverModel& M) {
  const auto chi = euler_characteristic(M);
  if (chi % 2 != 0) throw InvariantViolation("odd Euler characteristic");
  const auto from_orbits = (2 - chi) / 2;

  std::vector<std::uint32_t> indices;
  for (auto c : M.tuple().branch_images()) indices.push_back(M.group().element_order(c));
  const auto closed_form = riemann_hurwitz_genus(M.fiber_size(), M.base_genus(), indices);

  if (from_orbits != closed_form)
    throw InvariantViolation("orbit count and Riemann-Hurwitz disagree on the genus");
  if (from_orbits < 0) throw InvariantViolation("negative genus");
  return static_cast<std::size_t>(from_orbits);
}

bool is_connected(const CoverModel& M) {
  const auto& G = M.group();
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> queue{G.identity()};
  seen[G.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto e : M.tuple().entries()) {
      Elem y = G.mul(queue[head], e);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  return queue.size() == G.order();
}

namespace {

void require_comparable(const CoverModel& M1, const CoverModel& M2) {
  const auto& a = M1.tuple();
  const auto& b = M2.tuple();
  if (a.group_ptr() != b.group_ptr() || a.genus() != b.genus() || a.branch_count() != b.branch_count())
    throw UsageError("cover models with different parameters");
}

}  // namespace

std::optional<GroupElement> equivalent_pointed(const CoverModel& M1, const CoverModel& M2) {
  require_comparable(M1, M2);
  if (M1.tuple() != M2.tuple()) return std::nullopt;
  return M1.group().element(M1.group().identity());
}

ElementSet equivalent_unpointed(const CoverModel& M1, const CoverModel& M2) {
  require_comparable(M1, M2);
  const auto& G = M1.group();
  const auto a = M1.tuple().entries();
  const auto b = M2.tuple().entries();
  ElementSet witnesses;
  for (Elem h = 0; h < G.order(); ++h) {
    bool ok = true;
    for (std::size_t k = 0; k < a.size() && ok; ++k) ok = G.conj(h, a[k]) == b[k];
    if (ok) witnesses.push_back(h);
  }
  return witnesses;
}

}  // namespace hurwitz
