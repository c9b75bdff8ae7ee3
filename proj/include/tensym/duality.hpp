#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tensym/algebra.hpp"
#include "tensym/space.hpp"

namespace tensym {

namespace detail {

inline int index_of_mask(const std::vector<Mask>& sorted, Mask m, const char* what) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), m, mask_canonical_less);
  if (it == sorted.end() || *it != m)
    throw Error(std::string(what) + ": computed set is not in the carrier family");
  return static_cast<int>(it - sorted.begin());
}

}  // namespace detail

/// Dual space of a validated algebra: prime filters ordered by inclusion,
/// g(P) = { a : N(a) not in P }, and (P,F) in R_T iff T^{-1}(F) subseteq P.
inline TmsSpace dual_space(const TmsAlgebra& a) {
  if (!validate_tms_algebra(a).pass())
    throw InvalidAlgebra("dual_space requires a validated algebra");
  const PrimeFilters pf = prime_filters(a.lat);
  const int k = pf.size();
  if (k == 0)
    throw InvalidAlgebra("degenerate one-element algebra has an empty dual carrier");
  const int n = a.n();

  std::vector<std::uint8_t> g(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) {
    Mask img = 0;
    for (int x = 0; x < n; ++x)
      if (!mask_test(pf.filters[p], a.N[x])) img |= mask_bit(x);
    g[p] = static_cast<std::uint8_t>(detail::index_of_mask(pf.filters, img, "g_N"));
  }

  auto canonical_rel = [&](const std::vector<std::uint8_t>& t) {
    // preimage masks T^{-1}(F) per filter, then subset tests
    std::vector<Mask> tinv(static_cast<std::size_t>(k), 0);
    for (int f = 0; f < k; ++f)
      for (int x = 0; x < n; ++x)
        if (mask_test(pf.filters[f], t[x])) tinv[f] |= mask_bit(x);
    std::vector<Mask> rows(static_cast<std::size_t>(k), 0);
    for (int p = 0; p < k; ++p)
      for (int f = 0; f < k; ++f)
        if (mask_subset(tinv[f], pf.filters[p])) rows[p] |= mask_bit(f);
    return Relation(k, std::move(rows));
  };

  return make_tms_space(pf.order, std::move(g), canonical_rel(a.G), canonical_rel(a.H),
                        a.m);
}

/// Complex algebra of a validated space: all up-sets under intersection and
/// union, N(U) = X minus g^{-1}(U), and the box operators along R_G, R_H.
inline TmsAlgebra complex_algebra(const TmsSpace& s) {
  if (!validate_tms_space(s).pass())
    throw InvalidSpace("complex_algebra requires a validated space");
  const std::vector<Mask> family = upset_family(s.order);
  const int k = static_cast<int>(family.size());
  Lattice lat = upset_lattice(s.order, family);
  const Mask all = s.order.universe();

  std::vector<std::uint8_t> N(static_cast<std::size_t>(k)), G(static_cast<std::size_t>(k)),
      H(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    N[i] = static_cast<std::uint8_t>(
        detail::index_of_mask(family, all & ~s.g_preimage(family[i]), "N_g"));
    G[i] = static_cast<std::uint8_t>(
        detail::index_of_mask(family, box_along(s.rg, family[i]), "G_R"));
    H[i] = static_cast<std::uint8_t>(
        detail::index_of_mask(family, box_along(s.rh, family[i]), "H_R"));
  }
  return make_tms_algebra(std::move(lat), std::move(N), std::move(G), std::move(H), s.m);
}

struct IsoCheck {
  StructureMap map;
  Report report;
};

/// sigma(a) = { P : a in P }, from an algebra into the complex algebra of its
/// dual space. The theorem supplies the witness map, so the check verifies it
/// exhaustively instead of searching for an isomorphism.
inline IsoCheck sigma_iso(const TmsAlgebra& a) {
  const TmsSpace s = dual_space(a);
  const TmsAlgebra b = complex_algebra(s);
  const PrimeFilters pf = prime_filters(a.lat);
  const std::vector<Mask> family = upset_family(s.order);
  const int n = a.n();

  IsoCheck out;
  out.map.kind = MapKind::algebra;
  out.map.map.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    Mask m = 0;
    for (int p = 0; p < pf.size(); ++p)
      if (mask_test(pf.filters[p], x)) m |= mask_bit(p);
    out.map.map[x] = detail::index_of_mask(family, m, "sigma");
  }

  Report& r = out.report;
  r.subject = "sigma isomorphism";
  auto& size = r.add("carrier-sizes");
  if (b.n() != n) {
    size.pass = false;
    size.note = "complex algebra of the dual has a different carrier size";
  }
  auto& inj = r.add("injective");
  for (int x = 0; x < n && inj.pass; ++x)
    for (int y = x + 1; y < n && inj.pass; ++y)
      if (out.map.map[x] == out.map.map[y]) {
        inj.pass = false;
        inj.witness = {x, y};
      }
  if (size.pass && inj.pass) {
    const Report hom = check_homomorphism(out.map.map, a, b);
    for (const auto& c : hom.checks) r.checks.push_back(c);
  } else {
    r.fail("homomorphism", {}, "skipped: sigma is not a bijection");
  }
  return out;
}

/// epsilon(x) = { U : x in U }, from a space into the dual space of its
/// complex algebra. Checks bijectivity, order in both directions,
/// g-equivariance, and both relations in both directions.
inline IsoCheck epsilon_iso(const TmsSpace& s) {
  const TmsAlgebra ca = complex_algebra(s);
  const TmsSpace d = dual_space(ca);
  const std::vector<Mask> family = upset_family(s.order);
  const PrimeFilters pf = prime_filters(ca.lat);
  const int n = s.n();

  IsoCheck out;
  out.map.kind = MapKind::space;
  out.map.map.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    Mask m = 0;
    for (std::size_t i = 0; i < family.size(); ++i)
      if (mask_test(family[i], x)) m |= mask_bit(static_cast<int>(i));
    out.map.map[x] = detail::index_of_mask(pf.filters, m, "epsilon");
  }
  const auto& e = out.map.map;

  Report& r = out.report;
  r.subject = "epsilon isomorphism";
  auto& size = r.add("carrier-sizes");
  if (d.n() != n) {
    size.pass = false;
    size.note = "dual of the complex algebra has a different carrier size";
  }
  auto& inj = r.add("injective");
  for (int x = 0; x < n && inj.pass; ++x)
    for (int y = x + 1; y < n && inj.pass; ++y)
      if (e[x] == e[y]) {
        inj.pass = false;
        inj.witness = {x, y};
      }
  if (!size.pass || !inj.pass) {
    r.fail("structure", {}, "skipped: epsilon is not a bijection");
    return out;
  }
  auto& ord = r.add("order-preserved-and-reflected");
  for (int x = 0; x < n && ord.pass; ++x)
    for (int y = 0; y < n && ord.pass; ++y)
      if (s.order.leq(x, y) != d.order.leq(e[x], e[y])) {
        ord.pass = false;
        ord.witness = {x, y};
      }
  auto& geq = r.add("g-equivariant");
  for (int x = 0; x < n && geq.pass; ++x)
    if (e[s.g[x]] != d.g[e[x]]) {
      geq.pass = false;
      geq.witness = {x};
    }
  auto check_rel = [&](const char* name, const Relation& r1, const Relation& r2) {
    auto& c = r.add(name);
    for (int x = 0; x < n && c.pass; ++x)
      for (int y = 0; y < n && c.pass; ++y)
        if (r1.has(x, y) != r2.has(e[x], e[y])) {
          c.pass = false;
          c.witness = {x, y};
        }
  };
  check_rel("RG-preserved-and-reflected", s.rg, d.rg);
  check_rel("RH-preserved-and-reflected", s.rh, d.rh);
  return out;
}

/// Conditions for a map of spaces to dualize a homomorphism: monotone,
/// commutes with g, preserves both relations, and has the two preimage
/// witness properties.
inline Report check_tms_function(const StructureMap& f, const TmsSpace& s1,
                                 const TmsSpace& s2) {
  const int n1 = s1.n(), n2 = s2.n();
  if (f.domain_size() != n1) throw ShapeError("map is not total on the domain carrier");
  for (int v : f.map)
    if (v < 0 || v >= n2) throw ShapeError("map image out of codomain range");

  Report r;
  r.subject = "tms-function";
  auto& mono = r.add("monotone");
  for (int x = 0; x < n1 && mono.pass; ++x)
    for (int y = 0; y < n1 && mono.pass; ++y)
      if (s1.order.leq(x, y) && !s2.order.leq(f(x), f(y))) {
        mono.pass = false;
        mono.witness = {x, y};
      }
  auto& geq = r.add("g-equivariant");
  for (int x = 0; x < n1 && geq.pass; ++x)
    if (f(s1.g[x]) != s2.g[f(x)]) {
      geq.pass = false;
      geq.witness = {x};
    }

  auto forward = [&](const char* name, const Relation& r1, const Relation& r2) {
    auto& c = r.add(name);
    for (int x = 0; x < n1 && c.pass; ++x)
      for (int y = 0; y < n1 && c.pass; ++y)
        if (r1.has(x, y) && !r2.has(f(x), f(y))) {
          c.pass = false;
          c.witness = {x, y};
        }
  };
  auto back = [&](const char* name, const Relation& r1, const Relation& r2) {
    // (y, f(z)) in R2 must be witnessed by some x with (x,z) in R1, f(x) <= y
    auto& c = r.add(name);
    for (int z = 0; z < n1 && c.pass; ++z)
      for (int y = 0; y < n2 && c.pass; ++y) {
        if (!r2.has(y, f(z))) continue;
        bool found = false;
        for_each_bit(r1.col[z], [&](int x) { found = found || s2.order.leq(f(x), y); });
        if (!found) {
          c.pass = false;
          c.witness = {y, z};
        }
      }
  };
  forward("r1", s1.rg, s2.rg);
  back("r2", s1.rg, s2.rg);
  forward("r3", s1.rh, s2.rh);
  back("r4", s1.rh, s2.rh);
  return r;
}

/// Dual of a homomorphism h: A -> B, mapping a prime filter F of B to
/// h^{-1}(F) as a point of the dual of A.
inline StructureMap dual_function(const std::vector<int>& h, const TmsAlgebra& a,
                                  const TmsAlgebra& b) {
  if (!check_homomorphism(h, a, b).pass())
    throw NotAHomomorphism("dual_function requires a homomorphism");
  const PrimeFilters pa = prime_filters(a.lat);
  const PrimeFilters pb = prime_filters(b.lat);
  StructureMap out;
  out.kind = MapKind::space;
  out.map.resize(pb.filters.size());
  for (std::size_t f = 0; f < pb.filters.size(); ++f) {
    Mask pre = 0;
    for (int x = 0; x < a.n(); ++x)
      if (mask_test(pb.filters[f], h[static_cast<std::size_t>(x)])) pre |= mask_bit(x);
    out.map[f] = detail::index_of_mask(pa.filters, pre, "dual_function");
  }
  return out;
}

}  // namespace tensym
