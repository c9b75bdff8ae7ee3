#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tensym/algebra.hpp"
#include "tensym/poset.hpp"
#include "tensym/report.hpp"

namespace tensym {

/// Binary relation on 0..n-1 with both row and column masks precomputed.
/// row[x] = { y : (x,y) in R }, col[y] = R^{-1}(y).
struct Relation {
  int n = 0;
  std::vector<Mask> row;
  std::vector<Mask> col;

  Relation() = default;
  Relation(int n_, std::vector<Mask> rows) : n(n_), row(std::move(rows)) {
    col.assign(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
      for_each_bit(row[x], [&](int y) { col[y] |= mask_bit(x); });
  }

  static Relation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
    for (auto [x, y] : pairs) {
      if (x < 0 || x >= n || y < 0 || y >= n)
        throw IndexError("relation pair out of range");
      rows[x] |= mask_bit(y);
    }
    return Relation(n, std::move(rows));
  }

  static Relation full(int n) {
    return Relation(n, std::vector<Mask>(static_cast<std::size_t>(n), mask_universe(n)));
  }

  bool has(int x, int y) const { return mask_test(row[x], y); }
  Mask preimage(int y) const { return col[y]; }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n; ++x)
      for_each_bit(row[x], [&](int y) { out.emplace_back(x, y); });
    return out;
  }

  bool operator==(const Relation& o) const { return n == o.n && row == o.row; }
};

/// G_R(U) = { y : R^{-1}(y) subseteq U }.
inline Mask box_along(const Relation& r, Mask u) {
  Mask out = 0;
  for (int y = 0; y < r.n; ++y)
    if (mask_subset(r.col[y], u)) out |= mask_bit(y);
  return out;
}

/// Tense m-symmetric space candidate: poset carrier, unary map g,
/// relations R_G and R_H. validate_tms_space decides the axioms.
struct TmsSpace {
  Poset order;
  std::vector<std::uint8_t> g;
  Relation rg, rh;
  int m = 1;

  int n() const { return order.n; }

  Mask g_preimage(Mask u) const {
    Mask out = 0;
    for (int x = 0; x < n(); ++x)
      if (mask_test(u, g[x])) out |= mask_bit(x);
    return out;
  }

  Mask g_image_pow(Mask y, long e) const {
    const auto ge = detail::table_pow(g, e);
    Mask out = 0;
    for_each_bit(y, [&](int x) { out |= mask_bit(ge[x]); });
    return out;
  }

  bool operator==(const TmsSpace& o) const {
    return order == o.order && g == o.g && rg == o.rg && rh == o.rh && m == o.m;
  }
};

inline TmsSpace make_tms_space(Poset order, std::vector<std::uint8_t> g, Relation rg,
                               Relation rh, int m) {
  const int n = order.n;
  detail::check_table(g, n, "g");
  if (rg.n != n || rh.n != n)
    throw ShapeError("relation carrier does not match the poset");
  if (m < 1) throw ShapeError("symmetry degree m must be positive");
  return TmsSpace{std::move(order), std::move(g), std::move(rg), std::move(rh), m};
}

namespace detail {

inline void check_decreasing(Report& r, const char* name, const Poset& p,
                             const Relation& rel) {
  // up-closed in the first argument, down-closed in the second
  auto& c = r.add(name);
  const int n = p.n;
  for (int x = 0; x < n && c.pass; ++x)
    for (int y = 0; y < n && c.pass; ++y) {
      if (!rel.has(x, y)) continue;
      for_each_bit(p.up[x], [&](int x2) {
        if (!c.pass) return;
        if (!mask_subset(p.dn[y], rel.row[x2])) {
          for_each_bit(p.dn[y] & ~rel.row[x2], [&](int y2) {
            if (c.pass) {
              c.pass = false;
              c.witness = {x, y, x2, y2};
            }
          });
        }
      });
    }
}

}  // namespace detail

/// Per-condition check of the space axioms: g order-reversing, g^2m = id,
/// the two relation couplings, the decreasing condition on each relation,
/// and preservation of up-sets by the box operators. Conditions are reported
/// independently so a failure isolates its axiom.
inline Report validate_tms_space(const TmsSpace& s) {
  const int n = s.n();
  Report r;
  r.subject = "tms-space axioms";

  auto& rev = r.add("g-order-reversing");
  for (int x = 0; x < n && rev.pass; ++x)
    for (int y = 0; y < n && rev.pass; ++y)
      if (s.order.leq(x, y) && !s.order.leq(s.g[y], s.g[x])) {
        rev.pass = false;
        rev.witness = {x, y};
      }

  auto& s1 = r.add("S1");
  const auto g2m = detail::table_pow(s.g, 2L * s.m);
  for (int x = 0; x < n && s1.pass; ++x)
    if (g2m[x] != x) {
      s1.pass = false;
      s1.witness = {x};
      s1.note = "g^2m not the identity";
    }

  auto& s2 = r.add("S2");
  for (int x = 0; x < n && s2.pass; ++x)
    for (int y = 0; y < n && s2.pass; ++y)
      if (s.rg.has(x, y) && !s.rh.has(s.g[y], s.g[x])) {
        s2.pass = false;
        s2.witness = {x, y};
      }
  auto& s3 = r.add("S3");
  for (int x = 0; x < n && s3.pass; ++x)
    for (int y = 0; y < n && s3.pass; ++y)
      if (s.rh.has(x, y) && !s.rg.has(s.g[y], s.g[x])) {
        s3.pass = false;
        s3.witness = {x, y};
      }

  detail::check_decreasing(r, "RG-decreasing", s.order, s.rg);
  detail::check_decreasing(r, "RH-decreasing", s.order, s.rh);

  auto& r2g = r.add("R2.G");
  auto& r2h = r.add("R2.H");
  for (Mask u : upset_family(s.order)) {
    if (r2g.pass && !is_upset(s.order, box_along(s.rg, u))) {
      r2g.pass = false;
      r2g.witness = mask_to_indices(u);
      r2g.note = "G-image of this up-set is not an up-set";
    }
    if (r2h.pass && !is_upset(s.order, box_along(s.rh, u))) {
      r2h.pass = false;
      r2h.witness = mask_to_indices(u);
      r2h.note = "H-image of this up-set is not an up-set";
    }
  }
  return r;
}

}  // namespace tensym
