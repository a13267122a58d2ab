#pragma once

// Coefficients for the Yetter–Drinfel'd law χ on right H-modules.
//
// A right coefficient is a right H-module M with a left H-comodule structure;
// its χ-coalgebra structure is ρ(m⊗h) = h₋m(-1) ⊗ m(0)h₊. A left coefficient
// is a left H-module and left H-comodule N, used through the functor
// N = −⊗_H N. On the objects that occur in towers, N is computed from a
// presentation: for X = Y⊗H (action on the last factor) X⊗_H N ≅ Y⊗N, and for
// X = H⊗Y with the lifted action X⊗_H N ≅ Y⊗N via
// (h⊗y)⊗n ↦ y·h(2) ⊗ S⁻¹(h(1))n. Other objects use the coequalizer.

#include "duplicial/distlaw.hpp"

namespace duplicial {

template <class K>
struct RightCoefficient {
  std::string name;
  Object<K> M;         // right H-module
  LinMap<K> coaction;  // M -> H⊗M
  LinMap<K> rho;       // TM = M⊗H -> SM = H⊗M
  int dim() const { return M.dim(); }
};

template <class K>
struct LeftCoefficient {
  std::string name;
  int dim = 0;
  LinMap<K> action;    // H⊗N -> N
  LinMap<K> coaction;  // N -> H⊗N
  // An opcoalgebra structure ψ: N -> H⊗N for −⊗_H N; when present λ is
  // ∇ ∘ Nε^S rather than the Yetter–Drinfel'd formula.
  std::optional<LinMap<K>> psi;
};

// ∇: M -> SM (right side) or ψ: N -> H⊗N (left side).
template <class K>
struct EntwinedWitness {
  Side side = Side::right;
  LinMap<K> nabla;
};

// ---------------------------------------------------------------------------
// Module and comodule axioms

template <class K>
void check_right_module(Report& r, const HopfData<K>& H, const LinMap<K>& act, const std::string& who) {
  const int d = act.rows();
  record_equal(r, who + " action associative", compose(act, kron(act, H.id())),
               compose(act, kron(idn<K>(d), H.m())));
  record_equal(r, who + " action unital", compose(act, kron(idn<K>(d), H.u())), idn<K>(d));
}

template <class K>
void check_left_module(Report& r, const HopfData<K>& H, const LinMap<K>& act, const std::string& who) {
  const int d = act.rows();
  record_equal(r, who + " action associative", compose(act, kron(H.id(), act)),
               compose(act, kron(H.m(), idn<K>(d))));
  record_equal(r, who + " action unital", compose(act, kron(H.u(), idn<K>(d))), idn<K>(d));
}

template <class K>
void check_left_comodule(Report& r, const HopfData<K>& H, const LinMap<K>& co, const std::string& who) {
  const int d = co.cols();
  record_equal(r, who + " coaction coassociative", compose(kron(H.delta(), idn<K>(d)), co),
               compose(kron(H.id(), co), co));
  record_equal(r, who + " coaction counital", compose(kron(H.eps(), idn<K>(d)), co), idn<K>(d));
}

// ---------------------------------------------------------------------------
// Right coefficients

template <class K>
Object<K> right_module(const std::string& name, const LinMap<K>& act) {
  Object<K> m;
  m.name = name;
  m.space = Space::basis(act.rows());
  m.action = act;
  m.side = Side::right;
  return m;
}

// ρ = ε_{SM} ∘ F(∇): m⊗h ↦ h₋m(-1) ⊗ m(0)h₊
template <class K>
LinMap<K> right_rho(const HopfData<K>& H, const LinMap<K>& act, const LinMap<K>& coaction) {
  return compose(yd_lifted_action(H, act), kron(coaction, H.id()));
}

// Both coalgebra diagrams for ρ: TM -> SM over a law χ, plus ρ being a map of modules.
template <class K>
void check_coalgdef(Report& r, const Nat<K>& chi, const Comonad<K>& T, const Comonad<K>& S, const Object<K>& M,
                    const LinMap<K>& rho) {
  record_equal(r, "rho counit", compose(S.eps(M), rho), T.eps(M));
  record_equal(r, "rho comultiplication", compose(S.delta(M), rho),
               compose(S.F.map(rho), chi(M), T.F.map(rho), T.delta(M)));
  if (M.action) record_module_map(r, "rho is a module map", rho, T.F.obj(M), S.F.obj(M));
}

template <class K>
Report check_right_coeff(const HopfData<K>& H, const RightCoefficient<K>& c) {
  Report r;
  r.title = "right coefficient " + c.name;
  check_right_module(r, H, c.M.act(), "M");
  check_left_comodule(r, H, c.coaction, "M");
  auto L = yd_lift(H);
  check_coalgdef(r, yd_braiding(H).nat(), induced_comonad(L.adj), L.S, c.M, c.rho);
  return r;
}

template <class K>
RightCoefficient<K> make_right_coeff(const HopfData<K>& H, const std::string& name, const LinMap<K>& act,
                                     const LinMap<K>& coaction, bool force = false) {
  RightCoefficient<K> c{name, right_module(name, act), coaction, {}};
  if (act.cols() != act.rows() * H.dim() || coaction.rows() != H.dim() * act.rows() || coaction.cols() != act.rows())
    throw DimensionError("coefficient " + name + ": action/coaction shapes do not match dim " +
                         std::to_string(act.rows()));
  c.rho = right_rho(H, act, coaction);
  if (!force) {
    Report r = check_right_coeff(H, c);
    if (!r.ok()) throw ValidationError("right coefficient " + name + ": " + r.first_failure());
  }
  return c;
}

// A right coefficient from its χ-coalgebra structure alone; the comodule
// structure is recovered as m ↦ ρ(m⊗1).
template <class K>
RightCoefficient<K> right_coeff_from_rho(const HopfData<K>& H, const std::string& name, const Object<K>& M,
                                         const LinMap<K>& rho) {
  RightCoefficient<K> c{name, M, compose(rho, kron(idn<K>(M.dim()), H.u())), rho};
  c.M.name = name;
  Report r = check_right_coeff(H, c);
  if (!r.ok()) throw ValidationError("right coefficient " + name + ": " + r.first_failure());
  return c;
}

// M = k with action ε and coaction 1 ↦ 1⊗1.
template <class K>
RightCoefficient<K> trivial_right(const HopfData<K>& H) {
  return make_right_coeff(H, "k", H.eps(), H.u());
}

// ---------------------------------------------------------------------------
// Left coefficients and the functor −⊗_H N

template <class K>
LeftCoefficient<K> trivial_left(const HopfData<K>& H) {
  return {"k", 1, H.eps(), H.u(), std::nullopt};
}

// Presentation of X⊗_H N: q: X⊗N -> N(X) surjective, s a section.
template <class K>
struct Presentation {
  LinMap<K> q;
  LinMap<K> s;
  int dim() const { return q.rows(); }
};

template <class K>
LinMap<K> antipode_inverse(const HopfData<K>& H) {
  return linalg::inverse(H.S());
}

template <class K>
Presentation<K> present(const HopfData<K>& H, const LeftCoefficient<K>& N, const Object<K>& X) {
  const int n = H.dim(), dn = N.dim;
  if (X.form == Form::free_t) {
    const int dy = X.dim() / n;
    return {kron(idn<K>(dy), N.action), kron(idn<K>(dy), H.u(), idn<K>(dn))};
  }
  if (X.form == Form::lifted_s) {
    const Object<K>& Y = *X.inner;
    const int dy = Y.dim();
    const auto d = all_columns(H.delta());
    const auto sinv = all_columns(antipode_inverse(H));
    const auto ay = all_columns(Y.act());
    const auto an = all_columns(N.action);
    // (h⊗y)⊗m ↦ y·h(2) ⊗ S⁻¹(h(1))m
    auto q = assemble<K>(n * dy * dn, dy * dn, [&](int col, auto add) {
      const int m = col % dn, y = (col / dn) % dy, h = col / (dn * dy);
      for (const auto& [hh, c] : d[h]) {
        const int h1 = hh / n, h2 = hh % n;
        for (const auto& [yr, c1] : ay[y * n + h2])
          for (const auto& [a, c2] : sinv[h1])
            for (const auto& [t, c3] : an[a * dn + m]) add(yr * dn + t, c * c1 * c2 * c3);
      }
    });
    return {q, kron(H.u(), idn<K>(dy * dn))};
  }
  auto quo = linalg::coequalizer(kron(X.act(), idn<K>(dn)), kron(idn<K>(X.dim()), N.action));
  return {quo.q, quo.section};
}

// The same X⊗_H N computed by the coequalizer, ignoring the form.
template <class K>
Presentation<K> present_generic(const LeftCoefficient<K>& N, const Object<K>& X) {
  auto quo = linalg::coequalizer(kron(X.act(), idn<K>(N.dim)), kron(idn<K>(X.dim()), N.action));
  return {quo.q, quo.section};
}

// N(f) for a module map f: A -> B.
template <class K>
LinMap<K> n_map(const HopfData<K>& H, const LeftCoefficient<K>& N, const Object<K>& A, const Object<K>& B,
                const LinMap<K>& f) {
  auto pa = present(H, N, A);
  auto pb = present(H, N, B);
  return compose(pb.q, kron(f, idn<K>(N.dim)), pa.s);
}

// λ_X: N(SX) -> N(TX), both identified with X⊗N:
// x⊗n ↦ x n(-1)₊ ⊗ n(-1)₋ n(0), or x⊗n ↦ x·a ⊗ n' for ψ(n) = a⊗n'.
template <class K>
LinMap<K> lambda_at(const HopfData<K>& H, const LeftCoefficient<K>& N, const Object<K>& X) {
  const int n = H.dim(), dn = N.dim, dx = X.dim();
  const auto ax = all_columns(X.act());
  if (N.psi) {
    const auto p = all_columns(*N.psi);
    return assemble<K>(dx * dn, dx * dn, [&](int col, auto add) {
      const int m = col % dn, x = col / dn;
      for (const auto& [an, c] : p[m])
        for (const auto& [xr, c1] : ax[x * n + an / dn]) add(xr * dn + an % dn, c * c1);
    });
  }
  const auto co = all_columns(N.coaction);
  const auto tr = all_columns(translation_map(H));
  const auto an = all_columns(N.action);
  return assemble<K>(dx * dn, dx * dn, [&](int col, auto add) {
    const int m = col % dn, x = col / dn;
    for (const auto& [cm, c] : co[m]) {
      const int h = cm / dn, m0 = cm % dn;
      for (const auto& [pm, c1] : tr[h]) {
        const int hp = pm / n, hm = pm % n;
        for (const auto& [xr, c2] : ax[x * n + hp])
          for (const auto& [t, c3] : an[hm * dn + m0]) add(xr * dn + t, c * c1 * c2 * c3);
      }
    }
  });
}

// (hn)(-1)⊗(hn)(0) and h₊(1) n(-1) h₋ ⊗ h₊(2) n(0), both as maps H⊗N -> H⊗N.
template <class K>
std::pair<LinMap<K>, LinMap<K>> yd_sides(const HopfData<K>& H, const LeftCoefficient<K>& N) {
  const int n = H.dim(), dn = N.dim;
  auto lhs = compose(N.coaction, N.action);
  const auto tr = all_columns(translation_map(H));
  const auto d = all_columns(H.delta());
  const auto co = all_columns(N.coaction);
  const auto m = all_columns(H.m());
  const auto an = all_columns(N.action);
  auto rhs = assemble<K>(n * dn, n * dn, [&](int col, auto add) {
    const int v = col % dn, h = col / dn;
    for (const auto& [pm, c] : tr[h]) {
      const int hp = pm / n, hm = pm % n;
      for (const auto& [ab, c1] : d[hp]) {
        const int a1 = ab / n, a2 = ab % n;
        for (const auto& [cv, c2] : co[v]) {
          const int nm1 = cv / dn, n0 = cv % dn;
          for (const auto& [p, c3] : m[a1 * n + nm1])
            for (const auto& [q, c4] : m[p * n + hm])
              for (const auto& [t, c5] : an[a2 * dn + n0]) add(q * dn + t, c * c1 * c2 * c3 * c4 * c5);
        }
      }
    }
  });
  return {lhs, rhs};
}

// Dual coalgebra diagrams for λ at probe objects, and naturality of λ.
template <class K>
void check_left_diagrams(Report& r, const HopfData<K>& H, const LeftCoefficient<K>& N, const Probes<K>& probes) {
  auto L = yd_lift(H);
  auto T = induced_comonad(L.adj);
  const auto& S = L.S;
  auto chi = yd_braiding(H).nat();
  auto lam = [&](const Object<K>& x) { return lambda_at(H, N, x); };
  for (const auto& x : probes.objects) {
    const std::string at = " at " + x.name;
    auto Sx = S.F.obj(x), Tx = T.F.obj(x);
    record_equal(r, "lambda counit" + at, compose(n_map(H, N, Tx, x, T.eps(x)), lam(x)),
                 n_map(H, N, Sx, x, S.eps(x)));
    auto SSx = S.F.obj(Sx), TSx = T.F.obj(Sx), STx = S.F.obj(Tx), TTx = T.F.obj(Tx);
    record_equal(r, "lambda comultiplication" + at, compose(n_map(H, N, Tx, TTx, T.delta(x)), lam(x)),
                 compose(lam(Tx), n_map(H, N, TSx, STx, chi(x)), lam(Sx), n_map(H, N, Sx, SSx, S.delta(x))));
  }
  for (const auto& m : probes.morphisms)
    record_equal(r, "lambda natural at " + m.src.name + "->" + m.dst.name,
                 compose(lam(m.dst), n_map(H, N, S.F.obj(m.src), S.F.obj(m.dst), S.F.map(m.f))),
                 compose(n_map(H, N, T.F.obj(m.src), T.F.obj(m.dst), T.F.map(m.f)), lam(m.src)));
}

template <class K>
Report check_left_coeff(const HopfData<K>& H, const LeftCoefficient<K>& N, bool diagrams = true) {
  Report r;
  r.title = "left coefficient " + N.name;
  check_left_module(r, H, N.action, "N");
  check_left_comodule(r, H, N.coaction, "N");
  if (!N.psi) {
    auto [lhs, rhs] = yd_sides(H, N);
    record_equal(r, "Yetter-Drinfel'd condition", lhs, rhs);
  }
  if (diagrams) check_left_diagrams(r, H, N, module_probes(H, Side::right));
  return r;
}

template <class K>
LeftCoefficient<K> make_left_coeff(const HopfData<K>& H, const std::string& name, const LinMap<K>& act,
                                   const LinMap<K>& coaction, bool force = false) {
  const int d = act.rows();
  if (act.cols() != H.dim() * d || coaction.rows() != H.dim() * d || coaction.cols() != d)
    throw DimensionError("coefficient " + name + ": action/coaction shapes do not match dim " + std::to_string(d));
  LeftCoefficient<K> N{name, d, act, coaction, std::nullopt};
  if (!force) {
    Report r = check_left_coeff(H, N);
    if (!r.ok()) throw ValidationError("left coefficient " + name + ": " + r.first_failure());
  }
  return N;
}

// ---------------------------------------------------------------------------
// Stability

// m(0)(n(-1)m(-1))₊ ⊗ (n(-1)m(-1))₋ n(0) as a map M⊗N -> M⊗N.
template <class K>
LinMap<K> sayd_map(const HopfData<K>& H, const RightCoefficient<K>& M, const LeftCoefficient<K>& N) {
  const int n = H.dim(), dm = M.dim(), dn = N.dim;
  const auto cm = all_columns(M.coaction);
  const auto cn = all_columns(N.coaction);
  const auto m = all_columns(H.m());
  const auto tr = all_columns(translation_map(H));
  const auto am = all_columns(M.M.act());
  const auto an = all_columns(N.action);
  return assemble<K>(dm * dn, dm * dn, [&](int col, auto add) {
    const int v = col % dn, u = col / dn;
    for (const auto& [a, c] : cm[u])
      for (const auto& [b, c1] : cn[v])
        for (const auto& [p, c2] : m[(b / dn) * n + a / dm])
          for (const auto& [pm, c3] : tr[p])
            for (const auto& [x, c4] : am[(a % dm) * n + pm / n])
              for (const auto& [y, c5] : an[(pm % n) * dn + b % dn]) add(x * dn + y, c * c1 * c2 * c3 * c4 * c5);
  });
}

template <class K>
bool check_sayd(const HopfData<K>& H, const RightCoefficient<K>& M, const LeftCoefficient<K>& N) {
  return sayd_map(H, M, N) == idn<K>(M.dim() * N.dim);
}

// (mh)(-1) ⊗ (mh)(0) = S(h(3)) m(-1) h(1) ⊗ m(0) h(2). The explicit R_n
// formula and the closing cyclicity computation use this relation; the
// stability condition alone does not imply it when S² ≠ id.
template <class K>
bool check_anti_yd(const HopfData<K>& H, const RightCoefficient<K>& M) {
  const int n = H.dim(), dm = M.dim();
  auto lhs = compose(M.coaction, M.M.act());
  auto delta3 = compose(kron(H.delta(), H.id()), H.delta());
  // (c, m0, h1, h2, h3) -> (h3, c, h1, m0, h2)
  auto rhs = compose(kron(mult3(H), M.M.act()), kron(H.S(), idn<K>(n * n * dm * n)),
                     block_perm<K>({n, dm, n, n, n}, {1, 3, 2, 4, 0}), kron(M.coaction, delta3));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Entwined coefficients

// Right: ∇: M -> SM an S-coalgebra in right modules; ρ = ∇ ∘ ε^T.
template <class K>
RightCoefficient<K> entwined_right(const HopfData<K>& H, const std::string& name, const LinMap<K>& act,
                                   const LinMap<K>& nabla) {
  Object<K> M = right_module(name, act);
  auto L = yd_lift(H);
  Report r;
  check_right_module(r, H, act, "M");
  record_equal(r, "nabla coassociative", compose(L.S.delta(M), nabla), compose(L.S.F.map(nabla), nabla));
  record_equal(r, "nabla counital", compose(L.S.eps(M), nabla), idn<K>(M.dim()));
  record_module_map(r, "nabla is a module map", nabla, M, L.S.F.obj(M));
  if (!r.ok()) throw ValidationError("entwined witness for " + name + ": " + r.first_failure());
  RightCoefficient<K> c{name, M, nabla, compose(nabla, act)};
  Report v = check_right_coeff(H, c);
  if (!v.ok()) throw ValidationError("entwined coefficient " + name + ": " + v.first_failure());
  return c;
}

// Left: ψ: N -> H⊗N, left linear for multiplication on H, with
// m∘ψ = id and (id⊗ψ)ψ = (id⊗u⊗id)ψ. λ = ∇ ∘ Nε^S.
template <class K>
LeftCoefficient<K> entwined_left(const HopfData<K>& H, const std::string& name, const LinMap<K>& act,
                                 const LinMap<K>& coaction, const LinMap<K>& psi) {
  const int d = act.rows();
  Report r;
  check_left_module(r, H, act, "N");
  record_equal(r, "psi left linear", compose(psi, act), compose(kron(H.m(), idn<K>(d)), kron(H.id(), psi)));
  record_equal(r, "psi counital", compose(act, psi), idn<K>(d));
  record_equal(r, "psi coassociative", compose(kron(H.id(), psi), psi), compose(kron(H.id(), H.u(), idn<K>(d)), psi));
  if (!r.ok()) throw ValidationError("entwined witness for " + name + ": " + r.first_failure());
  LeftCoefficient<K> N{name, d, act, coaction, psi};
  Report v = check_left_coeff(H, N);
  if (!v.ok()) throw ValidationError("entwined coefficient " + name + ": " + v.first_failure());
  return N;
}

// The entwined-algebra square for UM: ∇∘β = Cβ ∘ θM ∘ B∇ with β the action.
template <class K>
bool entwined_algebra_condition(const HopfData<K>& H, const RightCoefficient<K>& M) {
  auto L = yd_lift(H);
  auto theta = arise_from_lift(L).theta;
  const auto& act = M.M.act();
  Object<K> um = forget(M.M);
  return compose(M.coaction, act) ==
         compose(kron(H.id(), act), theta(um), kron(M.coaction, H.id()));
}

// ---------------------------------------------------------------------------

// N ⊗_B X for a right module (N, ω: N⊗H -> N) and a left module (X, α: H⊗X -> X).
template <class K>
linalg::Quotient<K> tensor_over_monad(const LinMap<K>& omega, const LinMap<K>& alpha) {
  const int dn = omega.rows(), dx = alpha.rows();
  return linalg::coequalizer(kron(omega, idn<K>(dx)), kron(idn<K>(dn), alpha));
}

// The antipode-twisted coefficient: a left module M with left coaction gives
// ρ^V(g⊗m) = g(1)m(-1) ⊗ g(2)m(0) over χ^V; twisting yields a right
// coefficient on ΣM.
template <class K>
RightCoefficient<K> twist_coefficient(const HopfData<K>& H, const std::string& name, const LinMap<K>& left_act,
                                      const LinMap<K>& coaction) {
  Object<K> m;
  m.name = name;
  m.space = Space::basis(left_act.rows());
  m.side = Side::left;
  m.action = left_act;
  auto V = codiagonal_lift(H);
  // ρ^V = ε_{VM} ∘ F(∇)
  LinMap<K> rho_v = compose(V.adj.counit(V.S.F.obj(m)), V.adj.F.map(coaction));
  return right_coeff_from_rho(H, "Σ" + name, antipode_sigma(H, m), twist_rho(H, rho_v, m.dim()));
}

}  // namespace duplicial
