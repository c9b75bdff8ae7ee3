#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "tensym/duality.hpp"
#include "tensym/instances.hpp"

namespace tensym {

namespace detail {

// row-major leq bits under a relabeling; n <= 8 fits a single word
inline std::uint64_t poset_encoding(const Poset& p, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (p.leq(perm[i], perm[j])) code |= std::uint64_t{1} << (i * p.n + j);
  return code;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::vector<std::vector<int>> poset_automorphisms(const Poset& p) {
  std::vector<std::vector<int>> out;
  for (const auto& perm : all_permutations(p.n)) {
    bool ok = true;
    for (int i = 0; i < p.n && ok; ++i)
      for (int j = 0; j < p.n && ok; ++j)
        if (p.leq(i, j) != p.leq(perm[i], perm[j])) ok = false;
    if (ok) out.push_back(perm);
  }
  return out;
}

// g entries, then both relation matrices, relabeled by perm
inline std::uint64_t decoration_encoding(const TmsSpace& s, const std::vector<int>& perm) {
  const int n = s.n();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::uint64_t code = 0;
  int shift = 0;
  for (int i = 0; i < n; ++i, shift += 3)
    code |= static_cast<std::uint64_t>(inv[s.g[perm[i]]]) << shift;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j, ++shift)
      if (s.rg.has(perm[i], perm[j])) code |= std::uint64_t{1} << shift;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j, ++shift)
      if (s.rh.has(perm[i], perm[j])) code |= std::uint64_t{1} << shift;
  return code;
}

}  // namespace detail

/// All posets with at most n_max elements, one canonical representative per
/// isomorphism class, smaller carriers first.
inline std::vector<Poset> enumerate_posets(int n_max) {
  if (n_max < 1 || n_max > 6)
    throw SizeGuard("poset enumeration supports 1..6 elements", 6, n_max);
  std::vector<Poset> out;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::pair<int, int>> pair_of_bit;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pair_of_bit.emplace_back(i, j);
    const int nbits = static_cast<int>(pair_of_bit.size());
    const auto perms = detail::all_permutations(n);

    std::vector<std::pair<std::uint64_t, Poset>> found;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint32_t rel = 0; rel < (1u << nbits); ++rel) {
      // strict relation on naturally ordered labels; check transitivity
      bool strict[6][6] = {};
      for (int b = 0; b < nbits; ++b)
        if ((rel >> b) & 1) strict[pair_of_bit[b].first][pair_of_bit[b].second] = true;
      bool transitive = true;
      for (int i = 0; i < n && transitive; ++i)
        for (int j = i + 1; j < n && transitive; ++j)
          for (int k = j + 1; k < n && transitive; ++k)
            if (strict[i][j] && strict[j][k] && !strict[i][k]) transitive = false;
      if (!transitive) continue;

      std::vector<std::pair<int, int>> pairs;
      for (int b = 0; b < nbits; ++b)
        if ((rel >> b) & 1) pairs.push_back(pair_of_bit[b]);
      const Poset p = build_poset(n, pairs);

      std::uint64_t best = ~std::uint64_t{0};
      const std::vector<int>* best_perm = nullptr;
      for (const auto& perm : perms) {
        const std::uint64_t code = detail::poset_encoding(p, perm);
        if (code < best) {
          best = code;
          best_perm = &perm;
        }
      }
      if (!seen.insert(best).second) continue;
      std::vector<std::pair<int, int>> canon_pairs;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && p.leq((*best_perm)[i], (*best_perm)[j])) canon_pairs.emplace_back(i, j);
      found.emplace_back(best, build_poset(n, canon_pairs));
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [code, p] : found) out.push_back(std::move(p));
  }
  return out;
}

/// All decorations (g, R_G, R_H) of a poset that the space validator accepts
/// at degree m, up to decorated isomorphism. Generation walks every g with
/// g^2m = id and every R_G; conditions S2 and S3 force R_H to be the g-twist
/// of R_G, and the validator is the final filter for every candidate.
inline std::vector<TmsSpace> enumerate_spaces(const Poset& p, int m) {
  const int n = p.n;
  if (n > 4) throw SizeGuard("space decoration enumeration supports 1..4 points", 4, n);
  if (m < 1) throw ShapeError("symmetry degree m must be positive");
  const auto autos = detail::poset_automorphisms(p);

  std::vector<std::uint8_t> gtab(static_cast<std::size_t>(n));
  std::vector<TmsSpace> out;
  std::unordered_set<std::uint64_t> seen;

  for (const auto& gperm : detail::all_permutations(n)) {
    for (int i = 0; i < n; ++i) gtab[i] = static_cast<std::uint8_t>(gperm[i]);
    bool reversing = true;
    for (int x = 0; x < n && reversing; ++x)
      for (int y = 0; y < n && reversing; ++y)
        if (p.leq(x, y) && !p.leq(gtab[y], gtab[x])) reversing = false;
    if (!reversing) continue;
    const auto g2m = detail::table_pow(gtab, 2L * m);
    bool involutive = true;
    for (int x = 0; x < n && involutive; ++x)
      if (g2m[x] != x) involutive = false;
    if (!involutive) continue;

    const std::uint64_t rel_count = std::uint64_t{1} << (n * n);
    for (std::uint64_t rel = 0; rel < rel_count; ++rel) {
      std::vector<Mask> rg_rows(static_cast<std::size_t>(n), 0);
      for (int x = 0; x < n; ++x)
        rg_rows[x] = (rel >> (x * n)) & mask_universe(n);
      // R_H = { (g(y), g(x)) : (x,y) in R_G }, the unique S2/S3 companion
      std::vector<Mask> rh_rows(static_cast<std::size_t>(n), 0);
      for (int x = 0; x < n; ++x)
        for_each_bit(rg_rows[x], [&](int y) { rh_rows[gtab[y]] |= mask_bit(gtab[x]); });

      TmsSpace cand = make_tms_space(p, gtab, Relation(n, std::move(rg_rows)),
                                     Relation(n, std::move(rh_rows)), m);
      if (!validate_tms_space(cand).pass()) continue;

      std::uint64_t best = ~std::uint64_t{0};
      for (const auto& perm : autos)
        best = std::min(best, detail::decoration_encoding(cand, perm));
      if (seen.insert(best).second) out.push_back(std::move(cand));
    }
  }
  return out;
}

struct CorpusEntry {
  TmsSpace space;
  TmsAlgebra algebra;  // complex algebra of the space
  int poset_id = 0;
  int decoration_id = 0;
  int m = 1;
};

struct NamedInstance {
  std::string name;
  TmsAlgebra algebra;
  bool expect_valid = true;
};

/// Enumerated (space, complex algebra) pairs plus the hand-listed algebras
/// used for validator coverage, including the deliberate T3 failure.
struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<NamedInstance> named;
};

/// Decorations are enumerated per (poset, degree) slice, in parallel when
/// asked, and merged in slice order, so both modes build the same corpus.
inline Corpus build_corpus(int n_max, std::vector<int> ms, bool parallel = true) {
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  Corpus corpus;
  const auto posets = enumerate_posets(n_max);

  struct Slice {
    int pid, m;
  };
  std::vector<Slice> slices;
  for (std::size_t pid = 0; pid < posets.size(); ++pid)
    for (int m : ms) slices.push_back({static_cast<int>(pid), m});

  auto run_slice = [&posets](const Slice& s) {
    std::vector<CorpusEntry> out;
    auto spaces = enumerate_spaces(posets[s.pid], s.m);
    out.reserve(spaces.size());
    for (std::size_t did = 0; did < spaces.size(); ++did) {
      TmsAlgebra alg = complex_algebra(spaces[did]);
      out.push_back(CorpusEntry{std::move(spaces[did]), std::move(alg), s.pid,
                                static_cast<int>(did), s.m});
    }
    return out;
  };

  if (parallel) {
    std::vector<std::future<std::vector<CorpusEntry>>> tasks;
    tasks.reserve(slices.size());
    for (const Slice& s : slices)
      tasks.push_back(std::async(std::launch::async, run_slice, s));
    for (auto& t : tasks) {
      auto part = t.get();
      corpus.entries.insert(corpus.entries.end(),
                            std::make_move_iterator(part.begin()),
                            std::make_move_iterator(part.end()));
    }
  } else {
    for (const Slice& s : slices) {
      auto part = run_slice(s);
      corpus.entries.insert(corpus.entries.end(),
                            std::make_move_iterator(part.begin()),
                            std::make_move_iterator(part.end()));
    }
  }

  corpus.named.push_back({"B2", instances::b2(), true});
  corpus.named.push_back({"K3", instances::k3(), true});
  corpus.named.push_back({"DM4", instances::dm4(), true});
  corpus.named.push_back({"B2-bad-T3", instances::b2_bad_t3(), false});
  return corpus;
}

}  // namespace tensym
