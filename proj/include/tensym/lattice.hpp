#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensym/poset.hpp"

namespace tensym {

/// Bounded distributive lattice presented by tables over a poset carrier.
struct Lattice {
  Poset order;
  std::vector<std::uint8_t> meet;  // n*n, row-major
  std::vector<std::uint8_t> join;
  int bottom = 0;
  int top = 0;

  int n() const { return order.n; }
  int meet_of(int x, int y) const { return meet[static_cast<std::size_t>(x) * order.n + y]; }
  int join_of(int x, int y) const { return join[static_cast<std::size_t>(x) * order.n + y]; }

  bool operator==(const Lattice& o) const {
    return order == o.order && meet == o.meet && join == o.join &&
           bottom == o.bottom && top == o.top;
  }
};

namespace detail {

// -1: no such bound for the pair
inline int bound_of(const Poset& p, int x, int y, bool lower) {
  const Mask common = lower ? (p.dn[x] & p.dn[y]) : (p.up[x] & p.up[y]);
  int best = -1;
  for_each_bit(common, [&](int z) {
    if (best == -1 && mask_subset(common, lower ? p.dn[z] : p.up[z])) best = z;
  });
  return best;
}

struct LatticeBuild {
  std::optional<Lattice> lattice;
  // failure info
  bool missing_meet = false, missing_join = false, not_distributive = false;
  int wx = -1, wy = -1, wz = -1;
};

inline LatticeBuild build_lattice_tables(const Poset& p) {
  LatticeBuild out;
  const int n = p.n;
  Lattice l;
  l.order = p;
  l.meet.assign(static_cast<std::size_t>(n) * n, 0);
  l.join.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int m = bound_of(p, x, y, true);
      if (m < 0) {
        out.missing_meet = true;
        out.wx = x;
        out.wy = y;
        return out;
      }
      const int j = bound_of(p, x, y, false);
      if (j < 0) {
        out.missing_join = true;
        out.wx = x;
        out.wy = y;
        return out;
      }
      l.meet[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint8_t>(m);
      l.join[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint8_t>(j);
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int lhs = l.meet_of(x, l.join_of(y, z));
        const int rhs = l.join_of(l.meet_of(x, y), l.meet_of(x, z));
        if (lhs != rhs) {
          out.not_distributive = true;
          out.wx = x;
          out.wy = y;
          out.wz = z;
          return out;
        }
      }
  // A finite carrier with total meets and joins is bounded by the folds.
  int bot = 0, top = 0;
  for (int x = 1; x < n; ++x) {
    bot = l.meet_of(bot, x);
    top = l.join_of(top, x);
  }
  l.bottom = bot;
  l.top = top;
  out.lattice = std::move(l);
  return out;
}

}  // namespace detail

/// Views a finite poset as a bounded distributive lattice, or explains why it
/// is not one.
inline Lattice lattice_from_poset(const Poset& p) {
  auto b = detail::build_lattice_tables(p);
  if (b.lattice) return *std::move(b.lattice);
  if (b.not_distributive)
    throw NotDistributive("distributivity fails at (" + std::to_string(b.wx) +
                              "," + std::to_string(b.wy) + "," +
                              std::to_string(b.wz) + ")",
                          b.wx, b.wy, b.wz);
  throw NotALattice(std::string(b.missing_meet ? "meet" : "join") +
                        " missing for pair (" + std::to_string(b.wx) + "," +
                        std::to_string(b.wy) + ")",
                    b.wx, b.wy);
}

inline std::optional<Lattice> try_lattice_from_poset(const Poset& p) {
  auto b = detail::build_lattice_tables(p);
  return b.lattice;
}

/// j is join-irreducible iff it is not the join of the elements strictly
/// below it (so the bottom is excluded).
inline std::vector<int> join_irreducibles(const Lattice& l) {
  std::vector<int> out;
  for (int j = 0; j < l.n(); ++j) {
    int fold = l.bottom;
    for_each_bit(l.order.dn[j] & ~mask_bit(j), [&](int z) { fold = l.join_of(fold, z); });
    if (fold != j) out.push_back(j);
  }
  return out;
}

/// The prime filters of a bounded distributive lattice, as member masks,
/// ordered canonically, together with their inclusion order.
struct PrimeFilters {
  std::vector<Mask> filters;
  Poset order;  // inclusion order on the filters

  int size() const { return static_cast<int>(filters.size()); }
};

inline PrimeFilters prime_filters(const Lattice& l) {
  // In a finite distributive lattice the prime filters are exactly the
  // principal up-sets of join-irreducible elements.
  std::vector<Mask> fs;
  for (int j : join_irreducibles(l)) fs.push_back(l.order.up[j]);
  std::sort(fs.begin(), fs.end(), mask_canonical_less);
  const int k = static_cast<int>(fs.size());
  std::vector<std::pair<int, int>> incl;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && mask_subset(fs[i], fs[j])) incl.emplace_back(i, j);
  PrimeFilters out;
  out.filters = std::move(fs);
  out.order = k == 0 ? Poset{} : build_poset(k, incl);
  return out;
}

/// The lattice of all up-sets of a poset under intersection and union; the
/// carrier order matches upset_family.
inline Lattice upset_lattice(const Poset& p, const std::vector<Mask>& family) {
  const int n = static_cast<int>(family.size());
  if (n > kMaxElements)
    throw SizeGuard("up-set lattice exceeds the 64-element cap", kMaxElements, n);
  auto index_of = [&](Mask m) {
    const auto it = std::lower_bound(family.begin(), family.end(), m, mask_canonical_less);
    return static_cast<int>(it - family.begin());
  };
  std::vector<std::pair<int, int>> incl;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && mask_subset(family[i], family[j])) incl.emplace_back(i, j);
  Lattice l;
  l.order = build_poset(n, incl);
  l.meet.assign(static_cast<std::size_t>(n) * n, 0);
  l.join.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      l.meet[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint8_t>(index_of(family[i] & family[j]));
      l.join[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint8_t>(index_of(family[i] | family[j]));
    }
  l.bottom = index_of(0);
  l.top = index_of(p.universe());
  return l;
}

}  // namespace tensym
