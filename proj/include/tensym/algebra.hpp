#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tensym/lattice.hpp"
#include "tensym/report.hpp"

namespace tensym {

/// Tense m-symmetric algebra candidate: a bounded distributive lattice with
/// unary tables N, G, H and a symmetry degree m. Construction checks shapes
/// only; validate_tms_algebra decides the axioms.
struct TmsAlgebra {
  Lattice lat;
  std::vector<std::uint8_t> N, G, H;
  int m = 1;

  int n() const { return lat.n(); }
  int meet(int x, int y) const { return lat.meet_of(x, y); }
  int join(int x, int y) const { return lat.join_of(x, y); }
  bool leq(int x, int y) const { return lat.order.leq(x, y); }
  int bottom() const { return lat.bottom; }
  int top() const { return lat.top; }

  bool operator==(const TmsAlgebra& o) const {
    return lat == o.lat && N == o.N && G == o.G && H == o.H && m == o.m;
  }
};

namespace detail {

inline void check_table(const std::vector<std::uint8_t>& t, int n, const char* name) {
  if (static_cast<int>(t.size()) != n)
    throw ShapeError(std::string(name) + " table is not total on the carrier");
  for (auto v : t)
    if (v >= n) throw ShapeError(std::string(name) + " table maps out of range");
}

inline std::vector<std::uint8_t> compose(const std::vector<std::uint8_t>& f,
                                         const std::vector<std::uint8_t>& g) {
  std::vector<std::uint8_t> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

inline std::vector<std::uint8_t> table_pow(std::vector<std::uint8_t> base, long e) {
  std::vector<std::uint8_t> out(base.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(i);
  while (e > 0) {
    if (e & 1) out = compose(base, out);
    base = compose(base, base);
    e >>= 1;
  }
  return out;
}

}  // namespace detail

inline TmsAlgebra make_tms_algebra(Lattice lat, std::vector<std::uint8_t> N,
                                   std::vector<std::uint8_t> G,
                                   std::vector<std::uint8_t> H, int m) {
  const int n = lat.n();
  detail::check_table(N, n, "N");
  detail::check_table(G, n, "G");
  detail::check_table(H, n, "H");
  if (m < 1) throw ShapeError("symmetry degree m must be positive");
  return TmsAlgebra{std::move(lat), std::move(N), std::move(G), std::move(H), m};
}

/// Exhaustive axiom check. Every axiom is evaluated independently; failures
/// carry the first witness in canonical element order.
inline Report validate_tms_algebra(const TmsAlgebra& a) {
  const int n = a.n();
  Report r;
  r.subject = "tms-algebra axioms";

  auto& o1 = r.add("O1");
  if (a.N[a.bottom()] != a.top()) {
    o1.pass = false;
    o1.note = "N(0) != 1";
  }
  auto& o2 = r.add("O2");
  if (a.N[a.top()] != a.bottom()) {
    o2.pass = false;
    o2.note = "N(1) != 0";
  }

  auto& o3 = r.add("O3");
  for (int x = 0; x < n && o3.pass; ++x)
    for (int y = 0; y < n && o3.pass; ++y)
      if (a.N[a.meet(x, y)] != a.join(a.N[x], a.N[y])) {
        o3.pass = false;
        o3.witness = {x, y};
      }
  auto& o4 = r.add("O4");
  for (int x = 0; x < n && o4.pass; ++x)
    for (int y = 0; y < n && o4.pass; ++y)
      if (a.N[a.join(x, y)] != a.meet(a.N[x], a.N[y])) {
        o4.pass = false;
        o4.witness = {x, y};
      }

  auto& ms = r.add("m-symmetry");
  const auto n2m = detail::table_pow(a.N, 2L * a.m);
  for (int x = 0; x < n && ms.pass; ++x)
    if (n2m[x] != x) {
      ms.pass = false;
      ms.witness = {x};
      ms.note = "N^2m not the identity";
    }

  auto& t1g = r.add("T1.G");
  if (a.G[a.top()] != a.top()) t1g.pass = false;
  auto& t1h = r.add("T1.H");
  if (a.H[a.top()] != a.top()) t1h.pass = false;

  auto& t2g = r.add("T2.G");
  for (int x = 0; x < n && t2g.pass; ++x)
    for (int y = 0; y < n && t2g.pass; ++y)
      if (a.G[a.meet(x, y)] != a.meet(a.G[x], a.G[y])) {
        t2g.pass = false;
        t2g.witness = {x, y};
      }
  auto& t2h = r.add("T2.H");
  for (int x = 0; x < n && t2h.pass; ++x)
    for (int y = 0; y < n && t2h.pass; ++y)
      if (a.H[a.meet(x, y)] != a.meet(a.H[x], a.H[y])) {
        t2h.pass = false;
        t2h.witness = {x, y};
      }

  const auto nodd = detail::table_pow(a.N, 2L * a.m - 1);
  auto& t3g = r.add("T3.G");
  for (int x = 0; x < n && t3g.pass; ++x)
    if (!a.leq(x, a.G[a.N[a.H[nodd[x]]]])) {
      t3g.pass = false;
      t3g.witness = {x};
      t3g.note = "x <= G(N(H(N^(2m-1)(x)))) fails";
    }
  auto& t3h = r.add("T3.H");
  for (int x = 0; x < n && t3h.pass; ++x)
    if (!a.leq(x, a.H[a.N[a.G[nodd[x]]]])) {
      t3h.pass = false;
      t3h.witness = {x};
      t3h.note = "x <= H(N(G(N^(2m-1)(x)))) fails";
    }
  return r;
}

struct SubvarietyFlags {
  bool de_morgan = false;
  bool kleene = false;
  bool boolean_alg = false;
  bool tense_algebra = false;
};

/// Subvariety membership of a validated algebra. De Morgan means N is an
/// involution; Kleene and Boolean refine it by their defining identities;
/// the tense-algebra flag needs the Boolean identity at stored degree m=1.
inline SubvarietyFlags classify(const TmsAlgebra& a) {
  if (!validate_tms_algebra(a).pass())
    throw InvalidAlgebra("classify requires a validated algebra");
  const int n = a.n();
  SubvarietyFlags f;
  f.de_morgan = true;
  for (int x = 0; x < n; ++x)
    if (a.N[a.N[x]] != x) f.de_morgan = false;
  f.kleene = f.de_morgan;
  for (int x = 0; x < n && f.kleene; ++x)
    for (int y = 0; y < n && f.kleene; ++y) {
      const int lhs = a.join(a.meet(x, a.N[x]), a.join(y, a.N[y]));
      if (lhs != a.join(y, a.N[y])) f.kleene = false;
    }
  f.boolean_alg = f.de_morgan;
  for (int x = 0; x < n && f.boolean_alg; ++x)
    if (a.meet(x, a.N[x]) != a.bottom()) f.boolean_alg = false;
  f.tense_algebra = f.boolean_alg && a.m == 1;
  return f;
}

/// Smallest k with N^2k = id, when N is a bijection: half the permutation
/// order, rounded up through the odd case. Validation always uses the
/// stored m; this is diagnostic only.
inline std::optional<long> minimal_symmetry_degree(const TmsAlgebra& a) {
  const int n = a.n();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (auto v : a.N) {
    if (seen[v]) return std::nullopt;  // not a bijection
    seen[v] = true;
  }
  // order = lcm of the cycle lengths
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  long order = 1;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    long len = 0;
    for (int x = start; !visited[x]; x = a.N[x]) {
      visited[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order % 2 == 0 ? order / 2 : order;
}

enum class MapKind { algebra, space };

/// A total carrier map tagged with the kind of structures it connects.
struct StructureMap {
  MapKind kind = MapKind::algebra;
  std::vector<int> map;

  int operator()(int x) const { return map[static_cast<std::size_t>(x)]; }
  int domain_size() const { return static_cast<int>(map.size()); }

  bool operator==(const StructureMap& o) const { return kind == o.kind && map == o.map; }
};

/// Does h preserve bounds, meet, join and the three unary operations?
inline Report check_homomorphism(const std::vector<int>& h, const TmsAlgebra& a,
                                 const TmsAlgebra& b) {
  const int n = a.n();
  if (static_cast<int>(h.size()) != n)
    throw ShapeError("map is not total on the domain carrier");
  for (int v : h)
    if (v < 0 || v >= b.n()) throw ShapeError("map image out of codomain range");

  Report r;
  r.subject = "homomorphism";
  auto& bot = r.add("bot");
  if (h[a.bottom()] != b.bottom()) bot.pass = false;
  auto& top = r.add("top");
  if (h[a.top()] != b.top()) top.pass = false;
  auto& me = r.add("meet");
  for (int x = 0; x < n && me.pass; ++x)
    for (int y = 0; y < n && me.pass; ++y)
      if (h[a.meet(x, y)] != b.meet(h[x], h[y])) {
        me.pass = false;
        me.witness = {x, y};
      }
  auto& jo = r.add("join");
  for (int x = 0; x < n && jo.pass; ++x)
    for (int y = 0; y < n && jo.pass; ++y)
      if (h[a.join(x, y)] != b.join(h[x], h[y])) {
        jo.pass = false;
        jo.witness = {x, y};
      }
  auto check_unary = [&](const char* name, const std::vector<std::uint8_t>& fa,
                         const std::vector<std::uint8_t>& fb) {
    auto& c = r.add(name);
    for (int x = 0; x < n && c.pass; ++x)
      if (h[fa[x]] != fb[h[x]]) {
        c.pass = false;
        c.witness = {x};
      }
  };
  check_unary("N", a.N, b.N);
  check_unary("G", a.G, b.G);
  check_unary("H", a.H, b.H);
  return r;
}

/// Partition of a carrier in restricted-growth normal form: block ids appear
/// in first-occurrence order, so equal partitions have equal arrays.
struct Congruence {
  std::vector<std::uint8_t> block;
  int blocks = 0;

  int n() const { return static_cast<int>(block.size()); }
  bool related(int x, int y) const { return block[x] == block[y]; }

  bool operator==(const Congruence& o) const { return block == o.block; }
  bool operator!=(const Congruence& o) const { return block != o.block; }
};

inline Congruence normalize_partition(const std::vector<int>& raw) {
  Congruence c;
  c.block.assign(raw.size(), 0);
  std::unordered_map<int, int> relabel;
  int next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) throw ShapeError("negative partition label");
    auto [it, fresh] = relabel.try_emplace(raw[i], next);
    if (fresh) ++next;
    c.block[i] = static_cast<std::uint8_t>(it->second);
  }
  c.blocks = next;
  return c;
}

inline Congruence identity_congruence(int n) {
  std::vector<int> raw(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) raw[i] = i;
  return normalize_partition(raw);
}

inline Congruence total_congruence(int n) {
  return normalize_partition(std::vector<int>(static_cast<std::size_t>(n), 0));
}

/// Coarse-to-fine then lexicographic; a deterministic list order.
inline bool congruence_canonical_less(const Congruence& a, const Congruence& b) {
  if (a.blocks != b.blocks) return a.blocks < b.blocks;
  return a.block < b.block;
}

/// Refinement order: a <= b iff every block of a lies inside a block of b.
inline bool finer_or_equal(const Congruence& a, const Congruence& b) {
  const int n = a.n();
  std::vector<int> image(static_cast<std::size_t>(a.blocks), -1);
  for (int x = 0; x < n; ++x) {
    int& img = image[a.block[x]];
    if (img == -1)
      img = b.block[x];
    else if (img != b.block[x])
      return false;
  }
  return true;
}

struct CompatibilityWitness {
  std::string op;
  int a = -1, b = -1;
};

inline bool is_lattice_congruence(const Lattice& l, const Congruence& c,
                                  CompatibilityWitness* w = nullptr) {
  const int n = l.n();
  if (c.n() != n) throw ShapeError("partition size does not match the carrier");
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!c.related(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!c.related(l.meet_of(x, z), l.meet_of(y, z))) {
          if (w) *w = {"meet", x, y};
          return false;
        }
        if (!c.related(l.join_of(x, z), l.join_of(y, z))) {
          if (w) *w = {"join", x, y};
          return false;
        }
      }
    }
  return true;
}

inline bool is_tms_congruence(const TmsAlgebra& a, const Congruence& c,
                              CompatibilityWitness* w = nullptr) {
  if (!is_lattice_congruence(a.lat, c, w)) return false;
  const int n = a.n();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!c.related(x, y)) continue;
      if (!c.related(a.N[x], a.N[y])) {
        if (w) *w = {"N", x, y};
        return false;
      }
      if (!c.related(a.G[x], a.G[y])) {
        if (w) *w = {"G", x, y};
        return false;
      }
      if (!c.related(a.H[x], a.H[y])) {
        if (w) *w = {"H", x, y};
        return false;
      }
    }
  return true;
}

struct QuotientResult {
  TmsAlgebra algebra;
  StructureMap q;
};

/// Quotient by a compatible partition; q is the block map, a surjective
/// homomorphism onto the result.
inline QuotientResult quotient(const TmsAlgebra& a, const Congruence& theta) {
  CompatibilityWitness w;
  if (!is_tms_congruence(a, theta, &w))
    throw NotACongruence("partition violates " + w.op + "-compatibility at (" +
                             std::to_string(w.a) + "," + std::to_string(w.b) + ")",
                         w.op, w.a, w.b);
  const int n = a.n();
  const int k = theta.blocks;
  std::vector<int> rep(static_cast<std::size_t>(k), -1);
  for (int x = 0; x < n; ++x)
    if (rep[theta.block[x]] == -1) rep[theta.block[x]] = x;

  std::vector<std::pair<int, int>> leq_pairs;
  for (int b1 = 0; b1 < k; ++b1)
    for (int b2 = 0; b2 < k; ++b2)
      if (theta.block[a.meet(rep[b1], rep[b2])] == b1) leq_pairs.emplace_back(b1, b2);

  Lattice lat;
  lat.order = build_poset(k, leq_pairs);
  lat.meet.assign(static_cast<std::size_t>(k) * k, 0);
  lat.join.assign(static_cast<std::size_t>(k) * k, 0);
  for (int b1 = 0; b1 < k; ++b1)
    for (int b2 = 0; b2 < k; ++b2) {
      lat.meet[static_cast<std::size_t>(b1) * k + b2] = theta.block[a.meet(rep[b1], rep[b2])];
      lat.join[static_cast<std::size_t>(b1) * k + b2] = theta.block[a.join(rep[b1], rep[b2])];
    }
  lat.bottom = theta.block[a.bottom()];
  lat.top = theta.block[a.top()];

  std::vector<std::uint8_t> N(static_cast<std::size_t>(k)), G(static_cast<std::size_t>(k)),
      H(static_cast<std::size_t>(k));
  for (int b = 0; b < k; ++b) {
    N[b] = theta.block[a.N[rep[b]]];
    G[b] = theta.block[a.G[rep[b]]];
    H[b] = theta.block[a.H[rep[b]]];
  }
  QuotientResult out{make_tms_algebra(std::move(lat), std::move(N), std::move(G),
                                      std::move(H), a.m),
                     StructureMap{MapKind::algebra, {}}};
  out.q.map.assign(theta.block.begin(), theta.block.end());
  return out;
}

}  // namespace tensym
