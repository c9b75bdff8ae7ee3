#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tensym/bits.hpp"
#include "tensym/errors.hpp"

namespace tensym {

/// Finite poset on canonical indices 0..n-1. `up[x]` is the mask of elements
/// above x (inclusive), `dn[x]` the mask below. Always reflexive, transitive
/// and antisymmetric; build_poset enforces that.
struct Poset {
  int n = 0;
  std::vector<Mask> up;
  std::vector<Mask> dn;

  bool leq(int x, int y) const { return mask_test(up[x], y); }
  bool covers(int x, int y) const;  // y covers x
  Mask universe() const { return mask_universe(n); }

  bool operator==(const Poset& o) const { return n == o.n && up == o.up; }
};

inline bool Poset::covers(int x, int y) const {
  if (x == y || !leq(x, y)) return false;
  const Mask strictly_between = up[x] & dn[y] & ~mask_bit(x) & ~mask_bit(y);
  return strictly_between == 0;
}

/// Builds the reflexive-transitive closure of the generating pairs. The
/// closure is computed, never trusted; a closure that breaks antisymmetry is
/// a CycleError.
inline Poset build_poset(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1) throw ShapeError("poset needs at least one element");
  if (n > kMaxElements)
    throw SizeGuard("carrier exceeds the 64-element mask cap", kMaxElements, n);
  Poset p;
  p.n = n;
  p.up.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) p.up[i] = mask_bit(i);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw IndexError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range for n=" + std::to_string(n));
    p.up[a] |= mask_bit(b);
  }
  // Warshall closure over the reachability masks.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (mask_test(p.up[i], k)) p.up[i] |= p.up[k];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask_test(p.up[i], j) && mask_test(p.up[j], i))
        throw CycleError("antisymmetry violated between " + std::to_string(i) +
                             " and " + std::to_string(j),
                         i, j);
  p.dn.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for_each_bit(p.up[i], [&](int j) { p.dn[j] |= mask_bit(i); });
  return p;
}

inline bool is_upset(const Poset& p, Mask m) {
  bool ok = true;
  for_each_bit(m, [&](int x) { ok = ok && mask_subset(p.up[x], m); });
  return ok;
}

/// All up-sets, each exactly once, sorted by (cardinality, lex). Always
/// contains the empty set and the full carrier.
inline std::vector<Mask> upset_family(const Poset& p) {
  if (p.n > 22)
    throw SizeGuard("up-set family enumeration capped", 22, p.n);
  std::vector<Mask> out;
  const Mask all = p.universe();
  for (Mask m = 0;; ++m) {
    if (is_upset(p, m)) out.push_back(m);
    if (m == all) break;
  }
  std::sort(out.begin(), out.end(), mask_canonical_less);
  return out;
}

inline std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (p.covers(i, j)) out.emplace_back(i, j);
  return out;
}

/// Positions of a linear extension: pos[x] < pos[y] whenever x < y.
inline std::vector<int> linear_extension(const Poset& p) {
  std::vector<int> order(static_cast<std::size_t>(p.n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return mask_size(p.dn[a]) < mask_size(p.dn[b]);
  });
  std::vector<int> pos(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) pos[order[i]] = i;
  return pos;
}

}  // namespace tensym
