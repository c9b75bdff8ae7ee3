// Seeded random-generator suite: spaces on 5 and 6 points, beyond the reach
// of the exhaustive decoration enumeration. Candidates are built by closing
// random data under the axioms' closure conditions, then everything the
// validator accepts is pushed through both sides of the duality.

#include <optional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tensym/tensym.hpp"

using namespace tensym;

namespace {

Poset random_poset(std::mt19937& rng, int n, double edge_prob) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_prob) pairs.emplace_back(i, j);
  return build_poset(n, pairs);  // i<j pairs cannot cycle
}

std::vector<std::uint8_t> g_candidates_pick(std::mt19937& rng, const Poset& p, int m) {
  std::vector<std::vector<int>> valid;
  for (const auto& perm : tensym::detail::all_permutations(p.n)) {
    bool ok = true;
    for (int x = 0; x < p.n && ok; ++x)
      for (int y = 0; y < p.n && ok; ++y)
        if (p.leq(x, y) && !p.leq(perm[y], perm[x])) ok = false;
    if (!ok) continue;
    std::vector<std::uint8_t> g(perm.begin(), perm.end());
    const auto g2m = tensym::detail::table_pow(g, 2L * m);
    for (int x = 0; x < p.n && ok; ++x)
      if (g2m[x] != x) ok = false;
    if (ok) valid.push_back(perm);
  }
  if (valid.empty()) return {};
  std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
  const auto& perm = valid[pick(rng)];
  return std::vector<std::uint8_t>(perm.begin(), perm.end());
}

// decreasing closure, then closure under the square of the g-twist; the
// companion relation is forced from there
std::optional<TmsSpace> random_space(std::mt19937& rng, const Poset& p, int m) {
  const auto g = g_candidates_pick(rng, p, m);
  if (g.empty()) return std::nullopt;
  const int n = p.n;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (coin(rng) < 0.25) rows[x] |= mask_bit(y);

  auto decreasing_close = [&](const std::vector<Mask>& r) {
    std::vector<Mask> out(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
      for_each_bit(r[x], [&](int y) {
        for_each_bit(p.up[x], [&](int x2) { out[x2] |= p.dn[y]; });
      });
    return out;
  };
  auto twist = [&](const std::vector<Mask>& r) {
    std::vector<Mask> out(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
      for_each_bit(r[x], [&](int y) { out[g[y]] |= mask_bit(g[x]); });
    return out;
  };

  rows = decreasing_close(rows);
  for (int round = 0; round < 2 * n; ++round) {
    auto next = rows;
    const auto t2 = twist(twist(rows));
    for (int x = 0; x < n; ++x) next[x] |= t2[x];
    if (next == rows) break;
    rows = std::move(next);
  }
  Relation rg(n, rows);
  Relation rh(n, twist(rows));
  return make_tms_space(p, g, std::move(rg), std::move(rh), m);
}

}  // namespace

TEST_CASE("random 5- and 6-point spaces survive the full duality pipeline") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> msel(1, 2);
  int generated = 0, verified_t2 = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const int n = 5 + (iter % 2);
    // alternate random orders with pure antichains, which always decorate
    const Poset p = (iter % 3 == 0) ? build_poset(n, {})
                                    : random_poset(rng, n, iter % 2 ? 0.35 : 0.55);
    const int m = msel(rng);
    const auto space = random_space(rng, p, m);
    if (!space) continue;

    // the generator must agree with the validator
    REQUIRE(validate_tms_space(*space).pass());
    ++generated;

    const TmsAlgebra ca = complex_algebra(*space);
    CHECK(validate_tms_algebra(ca).pass());
    CHECK(epsilon_iso(*space).report.pass());
    CHECK(sigma_iso(ca).report.pass());
    CHECK(validate_tms_space(dual_space(ca)).pass());

    if (ca.n() <= 12) {
      const auto rep = verify_anti_isomorphism(ca, 12, 12);
      CHECK(rep.report.pass());
      ++verified_t2;
    }
  }
  // the sweep has to generate real work to mean anything
  CHECK(generated >= 60);
  CHECK(verified_t2 >= 10);
}

TEST_CASE("theta of arbitrary random subsets is always a lattice congruence") {
  std::mt19937 rng(987123);
  for (const auto& e : build_corpus(3, {1}).entries) {
    const DualContext ctx = make_dual_context(e.algebra);
    std::uniform_int_distribution<Mask> pick(0, ctx.space.order.universe());
    for (int i = 0; i < 8; ++i) {
      const Congruence c = theta_partition(ctx, pick(rng));
      CHECK(is_lattice_congruence(e.algebra.lat, c));
    }
  }
}

TEST_CASE("random compatible partitions round-trip through quotients") {
  std::mt19937 rng(55117);
  for (const auto& e : build_corpus(2, {1, 2}).entries) {
    const auto cs = congruences_bruteforce(e.algebra).elems;
    std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
    for (int i = 0; i < 4; ++i) {
      const Congruence& theta = cs[pick(rng)];
      const QuotientResult q = quotient(e.algebra, theta);
      CHECK(validate_tms_algebra(q.algebra).pass());
      CHECK(check_homomorphism(q.q.map, e.algebra, q.algebra).pass());
      // the kernel of q is theta itself
      for (int x = 0; x < e.algebra.n(); ++x)
        for (int y = 0; y < e.algebra.n(); ++y)
          CHECK((q.q.map[x] == q.q.map[y]) == theta.related(x, y));
    }
  }
}
