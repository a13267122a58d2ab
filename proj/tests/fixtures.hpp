#pragma once

// Preset and coefficient combinations shared by the test suite and the
// acceptance run.

#include <functional>
#include <string>
#include <vector>

#include "duplicial/duplicial.hpp"

namespace fixtures {

using namespace duplicial;
using Q = Rational;
using Map = LinMap<Q>;

inline Field<Q> fq;

// m ↦ g⊗m for the basis element g of H.
inline Map grouplike_coaction(const HopfData<Q>& H, int g, int d) {
  Map e = Map::zero(Space::basis(1), H.space);
  e(g, 0) = Q(1);
  return kron(e, idn<Q>(d));
}

inline LeftCoefficient<Q> adjoint_yd(const HopfData<Q>& H) {
  const int n = H.dim();
  Map act = compose(mult3(H), kron(H.id(), H.id(), H.S()), block_perm<Q>({n, n, n}, {0, 2, 1}),
                    kron(H.delta(), H.id()));
  return make_left_coeff(H, "ad", act, H.delta());
}

inline CCData<Q> trivial_cc(const HopfData<Q>& H) { return cc_data(H, trivial_right(H), trivial_left(H)); }

// kZ3 with M = H, right regular action and m ↦ g⊗m: not stable.
inline CCData<Q> twisted_cc() {
  auto H = make_preset("group_algebra:Z3", fq);
  return cc_data(H, make_right_coeff(H, "H_g", H.m(), grouplike_coaction(H, 1, 3)), trivial_left(H));
}

struct Combo {
  std::string preset;
  int degree;
  std::function<CCData<Q>(const HopfData<Q>&)> make;
};

// M = H, right regular action, m ↦ m⁻¹xm ⊗ m for the basis element x of a
// group algebra: anti Yetter–Drinfel'd also when G is not abelian.
inline RightCoefficient<Q> conjugation_graded(const HopfData<Q>& H, int x) {
  Map ex = Map::zero(Space::basis(1), H.space);
  ex(x, 0) = Q(1);
  auto delta3 = compose(kron(H.delta(), H.id()), H.delta());
  auto co = compose(kron(compose(mult3(H), kron(H.S(), ex, H.id())), H.id()), delta3);
  return make_right_coeff(H, "H_x", H.m(), co);
}

// presets × coefficient pairs exercised by the oracle comparisons
inline std::vector<Combo> combos() {
  auto regular = [](const HopfData<Q>& H) {
    return cc_data(H, make_right_coeff(H, "H", H.m(), H.delta()), adjoint_yd(H));
  };
  auto twisted = [](const HopfData<Q>& H) {
    return cc_data(H, make_right_coeff(H, "H_g", H.m(), grouplike_coaction(H, 1, H.dim())), adjoint_yd(H));
  };
  auto graded = [](const HopfData<Q>& H) { return cc_data(H, conjugation_graded(H, 1), adjoint_yd(H)); };
  return {{"group_algebra:Z2", 3, trivial_cc},  {"group_algebra:Z3", 3, trivial_cc},
          {"group_algebra:S3", 2, trivial_cc},  {"dual_group_algebra:S3", 2, trivial_cc},
          {"sweedler_h4", 2, trivial_cc},       {"group_algebra:Z2", 3, regular},
          {"group_algebra:Z3", 2, regular},     {"group_algebra:S3", 1, regular},
          {"sweedler_h4", 2, regular},          {"group_algebra:Z3", 2, twisted},
          {"group_algebra:S3", 1, twisted},     {"group_algebra:S3", 1, graded}};
}

}  // namespace fixtures
