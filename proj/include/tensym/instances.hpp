#pragma once

#include "tensym/duality.hpp"

namespace tensym {
namespace instances {

inline Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return build_poset(n, pairs);
}

inline Poset antichain_poset(int n) { return build_poset(n, {}); }

/// Two-element Boolean algebra with the swap negation and identity tense
/// operators.
inline TmsAlgebra b2() {
  return make_tms_algebra(lattice_from_poset(chain_poset(2)), {1, 0}, {0, 1}, {0, 1}, 1);
}

/// B2 with G constantly 1 and H the identity; fails the second half of T3 at
/// the top element. The standard negative instance.
inline TmsAlgebra b2_bad_t3() {
  return make_tms_algebra(lattice_from_poset(chain_poset(2)), {1, 0}, {1, 1}, {0, 1}, 1);
}

/// Three-element Kleene algebra: 0 < c < 1 with N fixing the centre.
inline TmsAlgebra k3() {
  return make_tms_algebra(lattice_from_poset(chain_poset(3)), {2, 1, 0}, {0, 1, 2},
                          {0, 1, 2}, 1);
}

/// Four-element De Morgan algebra on the 2x2 lattice: carrier 0, a, b, 1 with
/// N swapping the bounds and fixing a and b.
inline TmsAlgebra dm4() {
  const Poset p = build_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  return make_tms_algebra(lattice_from_poset(p), {3, 1, 2, 0}, {0, 1, 2, 3},
                          {0, 1, 2, 3}, 1);
}

/// One-point space; with_loop decides whether the single reflexive pair is in
/// both relations.
inline TmsSpace point_space(bool with_loop) {
  const Poset p = antichain_poset(1);
  const Relation r = with_loop ? Relation::full(1) : Relation(1, {0});
  return make_tms_space(p, {0}, r, r, 1);
}

/// Four-point antichain with a 4-cycle g and full relations at degree m=2.
/// Its complex algebra is the 16-element properly 2-symmetric witness: N has
/// order four, G and H collapse everything below the top.
inline TmsSpace b16_space() {
  return make_tms_space(antichain_poset(4), {1, 2, 3, 0}, Relation::full(4),
                        Relation::full(4), 2);
}

/// Two-chain with the identity map: not order-reversing, so not a tms-space.
inline TmsSpace bad_space_chain2() {
  return make_tms_space(chain_poset(2), {0, 1}, Relation(2, {0, 0}), Relation(2, {0, 0}),
                        1);
}

}  // namespace instances
}  // namespace tensym
