#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tensym {

/// Subsets of a carrier are fixed-width bit masks; carriers are capped at 64
/// elements, far above what the exhaustive checks can visit anyway.
using Mask = std::uint64_t;

constexpr int kMaxElements = 64;

constexpr Mask mask_bit(int i) { return Mask{1} << i; }

constexpr bool mask_test(Mask m, int i) { return (m >> i) & Mask{1}; }

constexpr int mask_size(Mask m) { return std::popcount(m); }

constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr Mask mask_universe(int n) {
  return n >= kMaxElements ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Canonical order on subsets: by cardinality, then lexicographically on the
/// sorted element lists. For equal sizes the lex comparison reduces to: the
/// smallest element in the symmetric difference decides.
constexpr bool mask_canonical_less(Mask a, Mask b) {
  const int ca = mask_size(a), cb = mask_size(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  const Mask diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    const int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

inline std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(mask_size(m)));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

}  // namespace tensym
