#pragma once

#include <array>
#include <functional>
#include <future>
#include <thread>
#include <vector>

#include "tensym/duality.hpp"

namespace tensym {

namespace detail {

/// Restricted-growth-string partition enumeration over a linear extension of
/// the carrier, pruned as soon as a prefix cannot extend to a compatible
/// partition. Meets of assigned elements are always assigned (the order is a
/// linear extension), so meet-compatibility prunes immediately; join and
/// unary images may appear later, and those constraints fire via per-step
/// due lists the moment both images are assigned.
struct PartitionSearch {
  int n = 0;
  std::vector<int> pmeet, pjoin;          // position-indexed tables
  std::vector<std::vector<int>> punary;   // position-indexed unary tables
  // due lists, per completion step
  std::vector<std::vector<std::array<int, 3>>> join_due;  // (x, y, z)
  std::vector<std::vector<std::array<int, 3>>> unary_due;  // (op, x, y)

  std::vector<int> elt;  // position -> original element

  void prepare(const Lattice& lat, const std::vector<const std::vector<std::uint8_t>*>& unary) {
    n = lat.n();
    const std::vector<int> pos = linear_extension(lat.order);
    elt.assign(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) elt[pos[x]] = x;
    pmeet.assign(static_cast<std::size_t>(n) * n, 0);
    pjoin.assign(static_cast<std::size_t>(n) * n, 0);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        pmeet[static_cast<std::size_t>(p) * n + q] = pos[lat.meet_of(elt[p], elt[q])];
        pjoin[static_cast<std::size_t>(p) * n + q] = pos[lat.join_of(elt[p], elt[q])];
      }
    punary.clear();
    for (const auto* t : unary) {
      std::vector<int> pt(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) pt[p] = pos[(*t)[elt[p]]];
      punary.push_back(std::move(pt));
    }
    join_due.assign(static_cast<std::size_t>(n), {});
    unary_due.assign(static_cast<std::size_t>(n), {});
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          const int due = std::max(pjoin[static_cast<std::size_t>(x) * n + z],
                                   pjoin[static_cast<std::size_t>(y) * n + z]);
          if (due > y) join_due[due].push_back({x, y, z});
        }
        for (std::size_t op = 0; op < punary.size(); ++op) {
          const int due = std::max(punary[op][x], punary[op][y]);
          if (due > y) unary_due[due].push_back({static_cast<int>(op), x, y});
        }
      }
  }

  bool pair_ok(const std::vector<int>& block, int i, int j) const {
    // new pair (j, i), j < i; every meet image is already assigned
    for (int z = 0; z < n; ++z) {
      if (block[pmeet[static_cast<std::size_t>(i) * n + z]] !=
          block[pmeet[static_cast<std::size_t>(j) * n + z]])
        return false;
      const int ji = pjoin[static_cast<std::size_t>(i) * n + z];
      const int jj = pjoin[static_cast<std::size_t>(j) * n + z];
      if (ji <= i && jj <= i && block[ji] != block[jj]) return false;
    }
    for (const auto& t : punary) {
      if (t[i] <= i && t[j] <= i && block[t[i]] != block[t[j]]) return false;
    }
    return true;
  }

  bool due_ok(const std::vector<int>& block, int i) const {
    for (const auto& [x, y, z] : join_due[i]) {
      if (y > i || block[x] != block[y]) continue;
      if (block[pjoin[static_cast<std::size_t>(x) * n + z]] !=
          block[pjoin[static_cast<std::size_t>(y) * n + z]])
        return false;
    }
    for (const auto& [op, x, y] : unary_due[i]) {
      if (y > i || block[x] != block[y]) continue;
      if (block[punary[op][x]] != block[punary[op][y]]) return false;
    }
    return true;
  }

  template <typename Sink>
  void recurse(std::vector<int>& block, int i, int used, Sink&& sink) const {
    if (i == n) {
      sink(block);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      bool ok = true;
      if (b < used) {
        for (int j = 0; j < i && ok; ++j)
          if (block[j] == b) ok = pair_ok(block, i, j);
      }
      if (ok && due_ok(block, i)) recurse(block, i + 1, used + (b == used ? 1 : 0), sink);
    }
  }

  Congruence to_original(const std::vector<int>& block) const {
    std::vector<int> raw(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) raw[static_cast<std::size_t>(elt[p])] = block[p];
    return normalize_partition(raw);
  }
};

inline std::vector<Congruence> congruences_core(
    const Lattice& lat, const std::vector<const std::vector<std::uint8_t>*>& unary,
    int cap, bool parallel) {
  if (lat.n() > cap)
    throw SizeGuard("carrier too large for brute-force congruence enumeration", cap,
                    lat.n());
  PartitionSearch ps;
  ps.prepare(lat, unary);
  const int n = ps.n;

  auto full_check = [&](const Congruence& c) {
    if (!is_lattice_congruence(lat, c)) return false;
    for (const auto* t : unary)
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (c.related(x, y) && !c.related((*t)[x], (*t)[y])) return false;
    return true;
  };

  std::vector<Congruence> out;
  if (!parallel || n < 6) {
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    ps.recurse(block, 0, 0, [&](const std::vector<int>& b) {
      Congruence c = ps.to_original(b);
      if (full_check(c)) out.push_back(std::move(c));
    });
  } else {
    // split on the consistent prefixes of the first few positions; every
    // task explores one subtree and the merged result is sorted afterwards,
    // so the parallel mode yields the identical set
    const int depth = 4;
    std::vector<std::vector<int>> prefixes;
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> walk = [&](int i, int used) {
      if (i == depth) {
        prefixes.push_back(block);
        return;
      }
      for (int b = 0; b <= used; ++b) {
        block[i] = b;
        bool ok = true;
        if (b < used)
          for (int j = 0; j < i && ok; ++j)
            if (block[j] == b) ok = ps.pair_ok(block, i, j);
        if (ok && ps.due_ok(block, i)) walk(i + 1, used + (b == used ? 1 : 0));
      }
    };
    walk(0, 0);
    std::vector<std::future<std::vector<Congruence>>> tasks;
    for (const auto& pre : prefixes)
      tasks.push_back(std::async(std::launch::async, [&, pre] {
        std::vector<Congruence> part;
        std::vector<int> blk = pre;
        int used = 0;
        for (int i = 0; i < depth; ++i) used = std::max(used, blk[i] + 1);
        ps.recurse(blk, depth, used, [&](const std::vector<int>& b) {
          Congruence c = ps.to_original(b);
          if (full_check(c)) part.push_back(std::move(c));
        });
        return part;
      }));
    for (auto& t : tasks) {
      auto part = t.get();
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end(), congruence_canonical_less);
  return out;
}

}  // namespace detail

/// Every partition of the carrier compatible with meet, join, N, G and H.
/// The independent algebra-side route to the congruence lattice.
inline std::vector<Congruence> enumerate_tms_congruences(
    const TmsAlgebra& a, int cap = default_guards().algebra, bool parallel = false) {
  return detail::congruences_core(a.lat, {&a.N, &a.G, &a.H}, cap, parallel);
}

/// Same enumeration on the bare lattice reduct.
inline std::vector<Congruence> lattice_congruences_bruteforce(
    const Lattice& l, int cap = default_guards().algebra, bool parallel = false) {
  return detail::congruences_core(l, {}, cap, parallel);
}

/// (tms1): every R_T-predecessor v of a point u in Y is dominated from below
/// by a witness w in Y that is also a predecessor of u. (tms2): Y is fixed by
/// g^(2m-1). Closedness is automatic on a finite discrete carrier.
inline bool is_tms_subset(const TmsSpace& s, Mask y, std::string* why = nullptr) {
  const auto g_odd = detail::table_pow(s.g, 2L * s.m - 1);
  Mask image = 0;
  for_each_bit(y, [&](int x) { image |= mask_bit(g_odd[x]); });
  if (image != y) {
    if (why) *why = "tms2: Y is not fixed by g^(2m-1)";
    return false;
  }
  for (const Relation* rel : {&s.rg, &s.rh}) {
    bool ok = true;
    for_each_bit(y, [&](int u) {
      for_each_bit(rel->col[u], [&](int v) {
        if ((y & rel->col[u] & s.order.dn[v]) == 0) ok = false;
      });
    });
    if (!ok) {
      if (why)
        *why = std::string("tms1 fails for ") + (rel == &s.rg ? "R_G" : "R_H");
      return false;
    }
  }
  return true;
}

/// All tms-subsets of a validated space, canonically ordered.
inline std::vector<Mask> tms_subsets(const TmsSpace& s, int cap = default_guards().space) {
  if (s.n() > cap)
    throw SizeGuard("carrier too large for exhaustive subset scan", cap, s.n());
  std::vector<Mask> out;
  const Mask all = s.order.universe();
  for (Mask y = 0;; ++y) {
    if (is_tms_subset(s, y)) out.push_back(y);
    if (y == all) break;
  }
  std::sort(out.begin(), out.end(), mask_canonical_less);
  return out;
}

inline std::vector<Mask> sigma_masks(const Lattice& l) {
  const PrimeFilters pf = prime_filters(l);
  std::vector<Mask> sigma(static_cast<std::size_t>(l.n()), 0);
  for (int x = 0; x < l.n(); ++x)
    for (int p = 0; p < pf.size(); ++p)
      if (mask_test(pf.filters[p], x)) sigma[x] |= mask_bit(p);
  return sigma;
}

/// Dual space of an algebra together with the sigma masks over its points;
/// the shared substrate for the theta computations.
struct DualContext {
  TmsSpace space;
  std::vector<Mask> sigma;  // sigma[x] = { P : x in P }
};

inline DualContext make_dual_context(const TmsAlgebra& a) {
  return DualContext{dual_space(a), sigma_masks(a.lat)};
}

/// Partition of a lattice carrier by agreement of sigma on Y; a lattice
/// congruence for any subset Y of the prime-filter carrier.
inline Congruence lattice_theta_partition(const std::vector<Mask>& sigma, Mask y) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> raw(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (raw[x] != -1) continue;
    raw[x] = next;
    for (int z = x + 1; z < n; ++z)
      if ((sigma[x] & y) == (sigma[z] & y)) raw[z] = next;
    ++next;
  }
  return normalize_partition(raw);
}

/// Theta(Y): identify a and b iff sigma(a) and sigma(b) agree on Y. No
/// tms-subset requirement; on arbitrary Y this yields a lattice congruence.
inline Congruence theta_partition(const DualContext& ctx, Mask y) {
  return lattice_theta_partition(ctx.sigma, y);
}

inline Congruence theta_of_subset(const DualContext& ctx, Mask y) {
  std::string why;
  if (!is_tms_subset(ctx.space, y, &why)) throw NotATmsSubset(why);
  return theta_partition(ctx, y);
}

inline Congruence theta_of_subset(const TmsAlgebra& a, Mask y) {
  return theta_of_subset(make_dual_context(a), y);
}

/// Congruences under refinement with explicit meet and join tables. Joins are
/// recomputed as transitive closures and re-tested for compatibility, so
/// constructing the lattice re-proves the sublattice claim on the instance.
struct CongruenceLattice {
  std::vector<Congruence> elems;
  std::vector<std::uint8_t> leq;  // k*k refinement matrix
  std::vector<int> meet, join;    // k*k index tables
  int bottom = -1;                // identity partition
  int top = -1;                   // total partition

  int size() const { return static_cast<int>(elems.size()); }
  bool leq_of(int i, int j) const { return leq[static_cast<std::size_t>(i) * elems.size() + j]; }
};

inline Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  std::vector<int> raw(a.block.size());
  for (std::size_t x = 0; x < raw.size(); ++x)
    raw[x] = a.block[x] * (b.blocks + 1) + b.block[x];
  return normalize_partition(raw);
}

inline Congruence congruence_join(const Congruence& a, const Congruence& b) {
  const int n = a.n();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (a.related(x, y) || b.related(x, y)) unite(x, y);
  std::vector<int> raw(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) raw[x] = find(x);
  return normalize_partition(raw);
}

inline CongruenceLattice congruence_lattice(const TmsAlgebra& a, std::vector<Congruence> cs);

/// The full congruence lattice by exhaustive search, ordered by refinement
/// with meet and join tables.
inline CongruenceLattice congruences_bruteforce(const TmsAlgebra& a,
                                                int cap = default_guards().algebra,
                                                bool parallel = false) {
  return congruence_lattice(a, enumerate_tms_congruences(a, cap, parallel));
}

inline CongruenceLattice congruence_lattice(const TmsAlgebra& a,
                                            std::vector<Congruence> cs) {
  for (const auto& c : cs) {
    CompatibilityWitness w;
    if (!is_tms_congruence(a, c, &w))
      throw NotACongruence("member violates " + w.op + "-compatibility", w.op, w.a, w.b);
  }
  std::sort(cs.begin(), cs.end(), congruence_canonical_less);
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  const int k = static_cast<int>(cs.size());

  auto index_of = [&](const Congruence& c) {
    for (int i = 0; i < k; ++i)
      if (cs[i] == c) return i;
    return -1;
  };

  CongruenceLattice out;
  out.elems = cs;
  out.leq.assign(static_cast<std::size_t>(k) * k, 0);
  out.meet.assign(static_cast<std::size_t>(k) * k, -1);
  out.join.assign(static_cast<std::size_t>(k) * k, -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      out.leq[static_cast<std::size_t>(i) * k + j] = finer_or_equal(cs[i], cs[j]) ? 1 : 0;
      const Congruence m = congruence_meet(cs[i], cs[j]);
      const Congruence jn = congruence_join(cs[i], cs[j]);
      CompatibilityWitness w;
      if (!is_tms_congruence(a, jn, &w))
        throw NotACongruence("join of congruences is not tms-compatible", w.op, w.a, w.b);
      out.meet[static_cast<std::size_t>(i) * k + j] = index_of(m);
      out.join[static_cast<std::size_t>(i) * k + j] = index_of(jn);
      if (out.meet[static_cast<std::size_t>(i) * k + j] < 0)
        throw NotACongruence("set is not closed under meet", "meet", i, j);
      if (out.join[static_cast<std::size_t>(i) * k + j] < 0)
        throw NotACongruence("set is not closed under join", "join", i, j);
    }
  out.bottom = index_of(identity_congruence(a.n()));
  out.top = index_of(total_congruence(a.n()));
  if (out.bottom < 0 || out.top < 0)
    throw NotACongruence("set lacks the identity or total partition", "bounds", -1, -1);
  return out;
}

/// Both routes to the congruence lattice plus the anti-isomorphism checks
/// between them: injectivity of theta, set equality with the brute-force
/// route, order reversal in both directions, and the quotient
/// reconstruction of every congruence from prime-filter preimages.
struct AntiIsoReport {
  Report report;
  CongruenceLattice direct;          // brute force on the algebra
  std::vector<Mask> subsets;         // tms-subsets of the dual
  std::vector<Congruence> via_dual;  // theta of each subset, aligned
};

inline AntiIsoReport verify_anti_isomorphism(const TmsAlgebra& a,
                                             int cap = default_guards().algebra,
                                             int space_cap = default_guards().space) {
  AntiIsoReport out;
  out.direct = congruences_bruteforce(a, cap);
  const DualContext ctx = make_dual_context(a);
  out.subsets = tms_subsets(ctx.space, space_cap);
  for (Mask y : out.subsets) out.via_dual.push_back(theta_partition(ctx, y));

  Report& r = out.report;
  r.subject = "congruence anti-isomorphism";
  const int ns = static_cast<int>(out.subsets.size());

  auto& counts = r.add("counts-equal");
  if (static_cast<int>(out.subsets.size()) != out.direct.size()) {
    counts.pass = false;
    counts.note = std::to_string(out.subsets.size()) + " tms-subsets vs " +
                  std::to_string(out.direct.size()) + " congruences";
  }
  auto& inj = r.add("theta-injective");
  for (int i = 0; i < ns && inj.pass; ++i)
    for (int j = i + 1; j < ns && inj.pass; ++j)
      if (out.via_dual[i] == out.via_dual[j]) {
        inj.pass = false;
        inj.witness = {i, j};
      }
  auto& img = r.add("image-equals-bruteforce");
  {
    std::vector<Congruence> sorted = out.via_dual;
    std::sort(sorted.begin(), sorted.end(), congruence_canonical_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted != out.direct.elems) img.pass = false;
  }
  auto& fwd = r.add("order-reversal-forward");
  auto& bwd = r.add("order-reversal-backward");
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      const bool sub = mask_subset(out.subsets[i], out.subsets[j]);
      const bool rev = finer_or_equal(out.via_dual[j], out.via_dual[i]);
      if (sub && !rev && fwd.pass) {
        fwd.pass = false;
        fwd.witness = {i, j};
      }
      if (rev && !sub && bwd.pass) {
        bwd.pass = false;
        bwd.witness = {i, j};
      }
    }

  auto& rec = r.add("quotient-reconstruction");
  const PrimeFilters pa = prime_filters(a.lat);
  for (std::size_t t = 0; t < out.direct.elems.size() && rec.pass; ++t) {
    const QuotientResult q = quotient(a, out.direct.elems[t]);
    const PrimeFilters pq = prime_filters(q.algebra.lat);
    Mask y = 0;
    for (const Mask f : pq.filters) {
      Mask pre = 0;
      for (int x = 0; x < a.n(); ++x)
        if (mask_test(f, q.q.map[static_cast<std::size_t>(x)])) pre |= mask_bit(x);
      y |= mask_bit(detail::index_of_mask(pa.filters, pre, "reconstruction"));
    }
    if (!is_tms_subset(ctx.space, y) || theta_partition(ctx, y) != out.direct.elems[t]) {
      rec.pass = false;
      rec.witness = {static_cast<int>(t)};
      rec.note = "prime-filter preimages of this congruence do not reconstruct it";
    }
  }
  return out;
}

}  // namespace tensym
