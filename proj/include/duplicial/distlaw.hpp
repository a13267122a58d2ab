#pragma once

// Strand functors X ↦ X⊗W or W⊗X on vector spaces and on H-modules, the
// natural transformations between them, distributive laws built from lifts
// through the free/forgetful adjunction, Galois maps, and 1-cells.
//
// Every functor in scope tensors with copies of H, so a component at an
// object is a matrix on a tensor-power space. Laws are checked as matrix
// identities on probe objects (dims 1, dim H, dim H²) and on module maps
// between them.

#include <functional>
#include <memory>
#include <random>

#include "duplicial/algebra.hpp"

namespace duplicial {

using linalg::compose;
using linalg::kron;

enum class Side { left, right };

// How −⊗_H N is computed on an object: T-form objects are Y⊗H with action on
// the last factor, S-form objects are H⊗Y with the lifted action.
enum class Form { plain, free_t, lifted_s };

template <class K>
struct Object {
  std::string name;
  Space space;
  std::optional<LinMap<K>> action;  // right: X⊗H -> X, left: H⊗X -> X
  Side side = Side::right;
  Form form = Form::plain;
  std::shared_ptr<const Object<K>> inner;

  int dim() const { return space.dim; }
  const LinMap<K>& act() const {
    if (!action) throw UsageError(name + " carries no action");
    return *action;
  }
};

template <class K>
Object<K> vect(const std::string& name, int dim) {
  Object<K> x;
  x.name = name;
  x.space = Space::basis(dim);
  return x;
}

template <class K>
Object<K> forget(const Object<K>& y) {
  Object<K> x;
  x.name = "U" + y.name;
  x.space = y.space;
  return x;
}

template <class K>
struct Functor {
  std::string name;
  std::function<Object<K>(const Object<K>&)> obj;
  std::function<LinMap<K>(const LinMap<K>&)> map;
};

template <class K>
using Nat = std::function<LinMap<K>(const Object<K>&)>;

// (F ∘ G)
template <class K>
Functor<K> then(const Functor<K>& f, const Functor<K>& g) {
  return {f.name + g.name, [f, g](const Object<K>& x) { return f.obj(g.obj(x)); },
          [f, g](const LinMap<K>& a) { return f.map(g.map(a)); }};
}

template <class K>
Functor<K> identity_functor() {
  return {"", [](const Object<K>& x) { return x; }, [](const LinMap<K>& a) { return a; }};
}

template <class K>
struct Comonad {
  Functor<K> F;
  Nat<K> delta;  // F -> FF
  Nat<K> eps;    // F -> id
};

template <class K>
struct Monad {
  Functor<K> F;
  Nat<K> mu;   // FF -> F
  Nat<K> eta;  // id -> F
};

template <class K>
struct Adjunction {
  Side side = Side::right;
  Functor<K> F;  // free module functor
  Functor<K> U;  // forgetful functor
  Nat<K> unit;   // X -> UFX, on spaces
  Nat<K> counit; // FUY -> Y, the action
};

// Permutation of tensor blocks of the given dimensions; block j moves to
// slot perm[j].
template <class K>
LinMap<K> block_perm(const std::vector<int>& dims, const std::vector<int>& perm) {
  Space s;
  s.dim = 1;
  for (int d : dims) s.dim *= d;
  s.factors = dims;
  auto p = linalg::permute_factors<K>(s, perm);
  p.domain = Space::basis(s.dim);
  p.codomain = Space::basis(s.dim);
  return p;
}

template <class K>
LinMap<K> idn(int d) {
  return LinMap<K>::identity(Space::basis(d));
}

// Identity on H^{⊗k}.
template <class K>
LinMap<K> id_pow(const HopfData<K>& H, int k) {
  int d = 1;
  for (int i = 0; i < k; ++i) d *= H.dim();
  return idn<K>(d);
}

// Tensor with identities: id_a ⊗ f ⊗ id_b.
template <class K>
LinMap<K> pad(int a, const LinMap<K>& f, int b) {
  LinMap<K> r = f;
  if (a != 1) r = kron(idn<K>(a), r);
  if (b != 1) r = kron(r, idn<K>(b));
  return r;
}

// Multiplication of three factors.
template <class K>
LinMap<K> mult3(const HopfData<K>& H) {
  return compose(H.m(), kron(H.m(), H.id()));
}

// ---------------------------------------------------------------------------
// The free/forgetful adjunction k-Mod ⇄ Mod-H (right) or H-Mod (left).

template <class K>
Adjunction<K> free_adjunction(const HopfData<K>& H, Side side) {
  Adjunction<K> a;
  a.side = side;
  auto Hp = std::make_shared<const HopfData<K>>(H);
  const int n = H.dim();
  if (side == Side::right) {
    a.F = {"F",
           [Hp, n](const Object<K>& x) {
             Object<K> y;
             y.name = "F" + x.name;
             y.space = Space::basis(x.dim() * n);
             y.action = kron(idn<K>(x.dim()), Hp->m());
             y.side = Side::right;
             y.form = Form::free_t;
             y.inner = std::make_shared<const Object<K>>(x);
             return y;
           },
           [n](const LinMap<K>& f) { return kron(f, idn<K>(n)); }};
    a.unit = [Hp](const Object<K>& x) { return kron(idn<K>(x.dim()), Hp->u()); };
  } else {
    a.F = {"F",
           [Hp, n](const Object<K>& x) {
             Object<K> y;
             y.name = "F" + x.name;
             y.space = Space::basis(n * x.dim());
             y.action = kron(Hp->m(), idn<K>(x.dim()));
             y.side = Side::left;
             y.inner = std::make_shared<const Object<K>>(x);
             return y;
           },
           [n](const LinMap<K>& f) { return kron(idn<K>(n), f); }};
    a.unit = [Hp](const Object<K>& x) { return kron(Hp->u(), idn<K>(x.dim())); };
  }
  a.U = {"U", [](const Object<K>& y) { return forget(y); }, [](const LinMap<K>& f) { return f; }};
  a.counit = [](const Object<K>& y) { return y.act(); };
  return a;
}

// T = FU with Δ = FηU and ε the counit.
template <class K>
Comonad<K> induced_comonad(const Adjunction<K>& a) {
  Comonad<K> T;
  T.F = then(a.F, a.U);
  T.F.name = "T";
  T.delta = [a](const Object<K>& y) { return a.F.map(a.unit(a.U.obj(y))); };
  T.eps = a.counit;
  return T;
}

// B = UF with μ = UεF and η the unit.
template <class K>
Monad<K> induced_monad(const Adjunction<K>& a) {
  Monad<K> B;
  B.F = then(a.U, a.F);
  B.F.name = "B";
  B.mu = [a](const Object<K>& x) { return a.counit(a.F.obj(x)); };
  B.eta = a.unit;
  return B;
}

// C = H⊗− on spaces with the comonad structure of the coalgebra H.
template <class K>
Comonad<K> coalgebra_comonad(const HopfData<K>& H) {
  auto Hp = std::make_shared<const HopfData<K>>(H);
  const int n = H.dim();
  Comonad<K> C;
  C.F = {"C",
         [n](const Object<K>& x) {
           Object<K> y;
           y.name = "C" + x.name;
           y.space = Space::basis(n * x.dim());
           return y;
         },
         [n](const LinMap<K>& f) { return kron(idn<K>(n), f); }};
  C.delta = [Hp](const Object<K>& x) { return kron(Hp->delta(), idn<K>(x.dim())); };
  C.eps = [Hp](const Object<K>& x) { return kron(Hp->eps(), idn<K>(x.dim())); };
  return C;
}

// ---------------------------------------------------------------------------
// Lifts of C = H⊗− to modules.

// Dense map assembled column by column; emit(col, add) calls add(row, c).
template <class K, class Emit>
LinMap<K> assemble(int dom, int cod, Emit&& emit) {
  LinMap<K> f = LinMap<K>::zero(Space::basis(dom), Space::basis(cod));
  for (int j = 0; j < dom; ++j) emit(j, [&](int i, const K& c) { f(i, j) += c; });
  return f;
}

template <class K>
std::vector<std::vector<std::pair<int, K>>> all_columns(const LinMap<K>& f) {
  std::vector<std::vector<std::pair<int, K>>> out(f.cols());
  for (int j = 0; j < f.cols(); ++j) out[j] = column_terms(f, j);
  return out;
}

// Right modules: (h⊗y)g = g₋h ⊗ y g₊.
template <class K>
LinMap<K> yd_lifted_action(const HopfData<K>& H, const LinMap<K>& act_y) {
  const int n = H.dim(), dy = act_y.rows();
  const auto tr = all_columns(translation_map(H));
  const auto m = all_columns(H.m());
  const auto a = all_columns(act_y);
  return assemble<K>(n * dy * n, n * dy, [&](int col, auto add) {
    const int g = col % n, y = (col / n) % dy, h = col / (n * dy);
    for (const auto& [pm, c] : tr[g]) {
      const int gp = pm / n, gm = pm % n;
      for (const auto& [r, c1] : m[gm * n + h])
        for (const auto& [q, c2] : a[y * n + gp]) add(r * dy + q, c * c1 * c2);
    }
  });
}

// Left modules: g(h⊗y) = g(1)h ⊗ g(2)y.
template <class K>
LinMap<K> codiagonal_action(const HopfData<K>& H, const LinMap<K>& act_y) {
  const int n = H.dim(), dy = act_y.rows();
  const auto d = all_columns(H.delta());
  const auto m = all_columns(H.m());
  const auto a = all_columns(act_y);
  return assemble<K>(n * n * dy, n * dy, [&](int col, auto add) {
    const int y = col % dy, h = (col / dy) % n, g = col / (dy * n);
    for (const auto& [gg, c] : d[g]) {
      const int g1 = gg / n, g2 = gg % n;
      for (const auto& [r, c1] : m[g1 * n + h])
        for (const auto& [q, c2] : a[g2 * dy + y]) add(r * dy + q, c * c1 * c2);
    }
  });
}

// A comonad H⊗− on modules whose action on H⊗Y is given by `action`.
template <class K>
Comonad<K> lifted_comonad(const HopfData<K>& H, const std::string& name,
                          std::function<LinMap<K>(const HopfData<K>&, const LinMap<K>&)> action, Side side) {
  auto Hp = std::make_shared<const HopfData<K>>(H);
  const int n = H.dim();
  Comonad<K> S;
  S.F = {name,
         [Hp, n, name, action, side](const Object<K>& y) {
           Object<K> z;
           z.name = name + y.name;
           z.space = Space::basis(n * y.dim());
           z.action = action(*Hp, y.act());
           z.side = side;
           z.form = side == Side::right ? Form::lifted_s : Form::plain;
           z.inner = std::make_shared<const Object<K>>(y);
           return z;
         },
         [n](const LinMap<K>& f) { return kron(idn<K>(n), f); }};
  S.delta = [Hp](const Object<K>& y) { return kron(Hp->delta(), idn<K>(y.dim())); };
  S.eps = [Hp](const Object<K>& y) { return kron(Hp->eps(), idn<K>(y.dim())); };
  return S;
}

template <class K>
Nat<K> identity_nat(const Functor<K>& F) {
  return [F](const Object<K>& y) { return LinMap<K>::identity(Space::basis(F.obj(y).dim())); };
}

// a_x ∘ f, skipping an identity transformation
template <class K>
LinMap<K> after(const Nat<K>& a, const Object<K>& x, const LinMap<K>& f) {
  return a ? compose(a(x), f) : f;
}

// f ∘ a_x
template <class K>
LinMap<K> before(const LinMap<K>& f, const Nat<K>& a, const Object<K>& x) {
  return a ? compose(f, a(x)) : f;
}

// Everything needed to run the arise construction for one lift.
template <class K>
struct LiftData {
  Adjunction<K> adj;
  Comonad<K> C;  // on spaces
  Comonad<K> S;  // on modules
  Nat<K> omega;      // CU -> US; empty means the identity
  Nat<K> omega_inv;  // US -> CU
};

// Right H-modules with T = −⊗H and the lift S Y = H⊗Y (Ω = id).
template <class K>
LiftData<K> yd_lift(const HopfData<K>& H) {
  translation_map(H);  // requires an antipode
  LiftData<K> L;
  L.adj = free_adjunction(H, Side::right);
  L.C = coalgebra_comonad(H);
  L.S = lifted_comonad<K>(H, "S", yd_lifted_action<K>, Side::right);
  return L;
}

// Left H-modules, B = C = H⊗−; canonical lift (S = T) and codiagonal lift V.
template <class K>
LiftData<K> canonical_lift(const HopfData<K>& H) {
  LiftData<K> L;
  L.adj = free_adjunction(H, Side::left);
  L.C = coalgebra_comonad(H);
  auto Hp = std::make_shared<const HopfData<K>>(H);
  L.S = lifted_comonad<K>(
      H, "T", [](const HopfData<K>& h, const LinMap<K>& a) { return kron(h.m(), idn<K>(a.rows())); }, Side::left);
  // Δ⊗id is not H-linear for the action on the first factor: this lifts the
  // functor C only
  L.S.delta = {};
  L.S.eps = {};
  return L;
}

template <class K>
LiftData<K> codiagonal_lift(const HopfData<K>& H) {
  LiftData<K> L = canonical_lift(H);
  L.S = lifted_comonad<K>(H, "V", codiagonal_action<K>, Side::left);
  return L;
}

// Output of the arise construction.
template <class K>
struct Arisen {
  Nat<K> Lambda;  // FC -> SF on spaces
  Nat<K> theta;   // BC -> CB on spaces
  Nat<K> chi;     // TS -> ST on modules
};

template <class K>
Arisen<K> arise_from_lift(const LiftData<K>& L) {
  Arisen<K> r;
  const auto adj = L.adj;
  const auto C = L.C;
  const auto S = L.S;
  const auto omega = L.omega, omega_inv = L.omega_inv;
  // Λ_X = ε_{SFX} ∘ F(Ω_{FX} ∘ C η_X), the mate of ΩF ∘ Cη
  r.Lambda = [=](const Object<K>& x) {
    Object<K> fx = adj.F.obj(x);
    return compose(adj.counit(S.F.obj(fx)), adj.F.map(after(omega, fx, C.F.map(adj.unit(x)))));
  };
  auto Lambda = r.Lambda;
  r.theta = [=](const Object<K>& x) { return after(omega_inv, adj.F.obj(x), Lambda(x)); };
  r.chi = [=](const Object<K>& y) {
    return omega_inv ? compose(Lambda(adj.U.obj(y)), adj.F.map(omega_inv(y))) : Lambda(adj.U.obj(y));
  };
  return r;
}

// χ = FηU ∘ εFU and θ = UFη ∘ UεF for the lift T of B itself.
template <class K>
Arisen<K> trivial_law(const Adjunction<K>& adj) {
  Arisen<K> r;
  r.chi = [adj](const Object<K>& y) {
    Object<K> uy = adj.U.obj(y);
    return compose(adj.F.map(adj.unit(uy)), adj.counit(adj.F.obj(uy)));
  };
  r.theta = [adj](const Object<K>& x) {
    return compose(adj.F.map(adj.unit(x)), adj.counit(adj.F.obj(x)));
  };
  return r;
}

// The lift of B through its own adjunction, as LiftData with C = B, S = T.
template <class K>
LiftData<K> banal_lift(const Adjunction<K>& adj) {
  LiftData<K> L;
  L.adj = adj;
  Monad<K> B = induced_monad(adj);
  Comonad<K> T = induced_comonad(adj);
  L.C.F = B.F;
  L.S = T;
  return L;
}

// ---------------------------------------------------------------------------
// Braiding kernels

// A map K: H⊗H -> H⊗H acting on the outer H factors of H⊗Y⊗H.
template <class K>
struct BraidKernel {
  std::string name;
  LinMap<K> kernel;

  int strand() const { return int(std::lround(std::sqrt(double(kernel.rows())))); }

  LinMap<K> at(int dim_y) const {
    const int n = strand();
    const auto k = all_columns(kernel);
    return assemble<K>(n * dim_y * n, n * dim_y * n, [&](int col, auto add) {
      const int b = col % n, y = (col / n) % dim_y, c = col / (n * dim_y);
      for (const auto& [r, v] : k[c * n + b]) add(((r / n) * dim_y + y) * n + r % n, v);
    });
  }
  // χ_Y: TSY -> STY
  Nat<K> nat() const {
    auto self = *this;
    return [self](const Object<K>& y) { return self.at(y.dim()); };
  }
};

// (c, b) ↦ (b₋c, b₊)
template <class K>
BraidKernel<K> yd_braiding(const HopfData<K>& H) {
  const int n = H.dim();
  auto tr = translation_map(H);
  BraidKernel<K> k;
  k.name = "yd";
  k.kernel = compose(kron(H.m(), H.id()), block_perm<K>({n, n, n}, {1, 2, 0}), kron(H.id(), tr));
  return k;
}

// ---------------------------------------------------------------------------
// Probes

template <class K>
struct Morphism {
  Object<K> src, dst;
  LinMap<K> f;
};

template <class K>
struct Probes {
  std::vector<Object<K>> objects;
  std::vector<Morphism<K>> morphisms;
};

// Size of the largest probe: dim H² while that stays small, dim H after.
inline int large_probe(int n) { return n <= 4 ? n * n : n; }

// Trivial module k (action ε), regular module H, a free module of dim large_probe.
template <class K>
Probes<K> module_probes(const HopfData<K>& H, Side side, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  const int n = H.dim();
  Probes<K> p;
  Object<K> triv;
  triv.name = "k";
  triv.space = Space::ground();
  triv.side = side;
  triv.action = H.eps();
  Object<K> reg;
  reg.name = "H";
  reg.space = Space::basis(n);
  reg.side = side;
  reg.action = H.m();
  auto adj = free_adjunction(H, side);
  const Space base = Space::basis(large_probe(n) / n);
  Object<K> fr = adj.F.obj(vect<K>("H", base.dim));
  p.objects = {triv, reg, fr};
  // ε: H -> k, the action F(H) -> H, a random element acting on the other side,
  // and F of a random linear map.
  Vector<K> a = Vector<K>::Constant(n, K(0));
  std::uniform_int_distribution<int> d(-2, 2);
  for (int i = 0; i < n; ++i) a(i) = H.field.make(d(rng));
  LinMap<K> av = LinMap<K>::zero(Space::ground(), H.space);
  for (int i = 0; i < n; ++i) av(i, 0) = a(i);
  LinMap<K> mul = side == Side::right ? compose(H.m(), kron(av, H.id())) : compose(H.m(), kron(H.id(), av));
  p.morphisms.push_back({reg, triv, H.eps()});
  p.morphisms.push_back({adj.F.obj(forget(reg)), reg, adj.counit(reg)});
  p.morphisms.push_back({reg, reg, mul});
  p.morphisms.push_back({fr, fr, adj.F.map(linalg::random_map(base, base, rng, H.field))});
  p.morphisms.push_back({triv, triv, LinMap<K>::identity(Space::ground())});
  return p;
}

// Spaces of dim 1, dim H and large_probe with random maps between them.
template <class K>
Probes<K> vect_probes(const HopfData<K>& H, std::uint64_t seed = 2) {
  std::mt19937_64 rng(seed);
  const int n = H.dim();
  Probes<K> p;
  p.objects = {vect<K>("k", 1), vect<K>("V", n), vect<K>("W", large_probe(n))};
  for (auto& x : p.objects)
    for (auto& y : p.objects)
      if (x.dim() * y.dim() <= n * n * n) p.morphisms.push_back({x, y, linalg::random_map(x.space, y.space, rng, H.field)});
  return p;
}

// α_Y ∘ F(f) = G(f) ∘ α_X for every probe morphism.
template <class K>
void check_natural(Report& r, const std::string& name, const Nat<K>& alpha, const Functor<K>& F,
                   const Functor<K>& G, const Probes<K>& probes) {
  for (const auto& m : probes.morphisms)
    record_equal(r, name + " natural at " + m.src.name + "->" + m.dst.name, compose(alpha(m.dst), F.map(m.f)),
                 compose(G.map(m.f), alpha(m.src)));
}

// f: X -> Y commutes with the actions.
template <class K>
bool record_module_map(Report& r, const std::string& name, const LinMap<K>& f, const Object<K>& x,
                       const Object<K>& y) {
  if (x.dim() == 0) return record_equal(r, name, f, f);
  const int n = x.act().cols() / x.dim();
  auto lifted = x.side == Side::right ? kron(f, idn<K>(n)) : kron(idn<K>(n), f);
  return record_equal(r, name, compose(f, x.act()), compose(y.act(), lifted));
}

template <class K>
Report check_comonad(const Comonad<K>& T, const Probes<K>& probes) {
  Report r;
  const auto& F = T.F;
  for (const auto& y : probes.objects) {
    const std::string at = " at " + y.name;
    auto Fy = F.obj(y);
    auto id = LinMap<K>::identity(Space::basis(Fy.dim()));
    record_equal(r, F.name + " left counit" + at, compose(T.eps(Fy), T.delta(y)), id);
    record_equal(r, F.name + " right counit" + at, compose(F.map(T.eps(y)), T.delta(y)), id);
    record_equal(r, F.name + " coassociativity" + at, compose(T.delta(Fy), T.delta(y)),
                 compose(F.map(T.delta(y)), T.delta(y)));
    if (y.action && Fy.action) {
      record_module_map(r, F.name + " comultiplication is a module map" + at, T.delta(y), Fy, F.obj(Fy));
      record_module_map(r, F.name + " counit is a module map" + at, T.eps(y), Fy, y);
    }
  }
  return r;
}

// The four compatibility squares of a comonad distributive law χ: TS -> ST.
// Without comonad structure on S only the lax half (the T squares) is checked.
template <class K>
Report check_distlaw(const Nat<K>& chi, const Comonad<K>& T, const Comonad<K>& S, const Probes<K>& probes) {
  Report r;
  r.title = "comonad distributive law";
  for (const auto& y : probes.objects) {
    const std::string at = " at " + y.name;
    auto Sy = S.F.obj(y), Ty = T.F.obj(y);
    auto c = chi(y);
    record_equal(r, "T-counit" + at, compose(S.F.map(T.eps(y)), c), T.eps(Sy));
    record_equal(r, "T-comultiplication" + at, compose(chi(Ty), T.F.map(c), T.delta(Sy)),
                 compose(S.F.map(T.delta(y)), c));
    if (S.delta) {
      record_equal(r, "S-counit" + at, compose(S.eps(Ty), c), T.F.map(S.eps(y)));
      record_equal(r, "S-comultiplication" + at, compose(S.delta(Ty), c),
                   compose(S.F.map(c), chi(Sy), T.F.map(S.delta(y))));
    }
    if (y.action) record_module_map(r, "chi is a module map" + at, c, T.F.obj(Sy), S.F.obj(Ty));
  }
  check_natural(r, "chi", chi, then(T.F, S.F), then(S.F, T.F), probes);
  return r;
}

// The four squares of a mixed distributive law θ: BC -> CB, or the monad
// half when C carries no comonad structure.
template <class K>
Report check_mixed(const Nat<K>& theta, const Monad<K>& B, const Comonad<K>& C, const Probes<K>& probes) {
  Report r;
  r.title = "mixed distributive law";
  for (const auto& x : probes.objects) {
    const std::string at = " at " + x.name;
    auto Cx = C.F.obj(x), Bx = B.F.obj(x);
    auto t = theta(x);
    record_equal(r, "unit" + at, compose(t, B.eta(Cx)), C.F.map(B.eta(x)));
    record_equal(r, "multiplication" + at, compose(t, B.mu(Cx)),
                 compose(C.F.map(B.mu(x)), theta(Bx), B.F.map(t)));
    if (C.delta) {
      record_equal(r, "counit" + at, compose(C.eps(Bx), t), B.F.map(C.eps(x)));
      record_equal(r, "comultiplication" + at, compose(C.delta(Bx), t),
                   compose(C.F.map(t), theta(Cx), B.F.map(C.delta(x))));
    }
  }
  check_natural(r, "theta", theta, then(B.F, C.F), then(C.F, B.F), probes);
  return r;
}

// Uniqueness diagrams for θ and χ.
template <class K>
Report check_arise_diagrams(const LiftData<K>& L, const Arisen<K>& a, const Probes<K>& module_probe) {
  Report r;
  r.title = "arise uniqueness";
  const auto& adj = L.adj;
  for (const auto& y : module_probe.objects) {
    const std::string at = " at " + y.name;
    Object<K> uy = adj.U.obj(y);
    Object<K> sy = L.S.F.obj(y);
    // C(ε_Y) ∘ θ_{UY} = Ω⁻¹_Y ∘ U ε_{SY} ∘ UF Ω_Y
    record_equal(r, "theta diagram" + at, compose(L.C.F.map(adj.counit(y)), a.theta(uy)),
                 after(L.omega_inv, y, L.omega ? compose(adj.counit(sy), adj.F.map(L.omega(y))) : adj.counit(sy)));
    // U χ_Y ∘ η_{USY} = Ω_{FUY} ∘ C η_{UY} ∘ Ω⁻¹_Y
    Object<K> fuy = adj.F.obj(uy);
    record_equal(r, "chi diagram" + at, compose(a.chi(y), adj.unit(adj.U.obj(sy))),
                 after(L.omega, fuy, before(L.C.F.map(adj.unit(uy)), L.omega_inv, y)));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Galois maps between two lifts S, V of the same C.

// Γ^{S,V}(f) = ε_{VY} ∘ F(Φ_Y Ω_Y⁻¹) ∘ F(f) ∘ F(η_X) for f: FX -> SY.
template <class K>
LinMap<K> galois_gamma(const LiftData<K>& S, const LiftData<K>& V, const Object<K>& x, const Object<K>& y,
                       const LinMap<K>& f) {
  const auto& adj = S.adj;
  if (adj.side != V.adj.side) throw UsageError("Galois map between lifts through different adjunctions");
  Object<K> vy = V.S.F.obj(y);
  LinMap<K> g = after(V.omega, y, after(S.omega_inv, y, f));
  return compose(adj.counit(vy), adj.F.map(compose(g, adj.unit(x))));
}

// Γ^{T,V}: T -> V, the Galois map evaluated on identities.
template <class K>
Nat<K> galois_TV(const LiftData<K>& V) {
  return [V](const Object<K>& y) {
    Object<K> uy = V.adj.U.obj(y);
    return compose(V.adj.counit(V.S.F.obj(y)), V.adj.F.map(after(V.omega, y, V.adj.unit(uy))));
  };
}

template <class K>
struct VGalois {
  bool galois = false;     // Γ^{T,V} invertible on the regular module
  bool matches_beta = false;  // the composite Bμ ∘ θB ∘ BηB equals β
  LinMap<K> gamma;            // Γ^{T,V} at F(k)
  LinMap<K> composite;        // Bμ ∘ θB ∘ BηB at k
};

template <class K>
VGalois<K> v_galois_check(const HopfData<K>& H) {
  VGalois<K> out;
  LiftData<K> V = codiagonal_lift(H);
  Arisen<K> a = arise_from_lift(V);
  Monad<K> B = induced_monad(V.adj);
  Object<K> k = vect<K>("k", 1);
  Object<K> fk = V.adj.F.obj(k);
  out.gamma = galois_TV(V)(fk);
  out.galois = linalg::rank(out.gamma) == out.gamma.rows();
  Object<K> bk = B.F.obj(k);
  out.composite = compose(B.F.map(B.mu(k)), a.theta(bk), B.F.map(B.eta(bk)));
  out.matches_beta = out.composite == galois_beta(H).beta;
  return out;
}

// ---------------------------------------------------------------------------
// 1-cells (Σ, σ, γ) between mixed laws θ1: B1C1 -> C1B1 and θ2: B2C2 -> C2B2
// on spaces, with σ: B2Σ -> ΣB1 and γ: ΣC1 -> C2Σ.

template <class K>
struct OneCell {
  std::string name;
  Functor<K> Sigma;
  Nat<K> sigma;
  Nat<K> gamma;
};

// σ_X(x⊗h) = S(h)⊗x with Σ = id and γ = id. `antipode` defaults to H's.
template <class K>
OneCell<K> antipode_one_cell(const HopfData<K>& H, std::type_identity_t<std::optional<LinMap<K>>> antipode = std::nullopt) {
  const int n = H.dim();
  LinMap<K> S = antipode ? *antipode : H.S();
  OneCell<K> c;
  c.name = "antipode";
  c.Sigma = identity_functor<K>();
  c.sigma = [S, n](const Object<K>& x) {
    return compose(kron(S, idn<K>(x.dim())), block_perm<K>({x.dim(), n}, {1, 0}));
  };
  c.gamma = [n](const Object<K>& x) { return idn<K>(n * x.dim()); };
  return c;
}

// σ lax for the monads, γ colax for the comonads, and the Yang–Baxter hexagon
// C2σ ∘ θ2Σ ∘ B2γ = γB1 ∘ Σθ1 ∘ σC1.
template <class K>
Report check_one_cell(const OneCell<K>& c, const Monad<K>& B1, const Comonad<K>& C1, const Nat<K>& theta1,
                      const Monad<K>& B2, const Comonad<K>& C2, const Nat<K>& theta2, const Probes<K>& probes) {
  Report r;
  r.title = c.name + " 1-cell";
  const auto& Sg = c.Sigma;
  for (const auto& x : probes.objects) {
    const std::string at = " at " + x.name;
    Object<K> sx = Sg.obj(x);
    record_equal(r, "sigma unit" + at, compose(c.sigma(x), B2.eta(sx)), Sg.map(B1.eta(x)));
    record_equal(r, "sigma multiplication" + at, compose(c.sigma(x), B2.mu(sx)),
                 compose(Sg.map(B1.mu(x)), c.sigma(B1.F.obj(x)), B2.F.map(c.sigma(x))));
    record_equal(r, "gamma counit" + at, compose(C2.eps(sx), c.gamma(x)), Sg.map(C1.eps(x)));
    record_equal(r, "gamma comultiplication" + at, compose(C2.delta(sx), c.gamma(x)),
                 compose(C2.F.map(c.gamma(x)), c.gamma(C1.F.obj(x)), Sg.map(C1.delta(x))));
    Object<K> c1x = C1.F.obj(x);
    record_equal(r, "Yang-Baxter" + at,
                 compose(C2.F.map(c.sigma(x)), theta2(sx), B2.F.map(c.gamma(x))),
                 compose(c.gamma(B1.F.obj(x)), Sg.map(theta1(x)), c.sigma(c1x)));
  }
  return r;
}

// The 1-cell of mixed laws carried by the antipode: from θ^V on H-Mod's
// monad H⊗− to the Yetter–Drinfel'd θ on −⊗H.
template <class K>
Report check_antipode_one_cell(const HopfData<K>& H, const OneCell<K>& c) {
  LiftData<K> V = codiagonal_lift(H);
  LiftData<K> Y = yd_lift(H);
  auto aV = arise_from_lift(V);
  auto aY = arise_from_lift(Y);
  return check_one_cell(c, induced_monad(V.adj), V.C, aV.theta, induced_monad(Y.adj), Y.C, aY.theta,
                        vect_probes(H));
}

// ---------------------------------------------------------------------------
// The lifted 1-cell from (H-Mod, χ^V) to (Mod-H, χ): Σ̃ turns a left module
// into a right one by x ↼ h = S(h)x; σ̃ is σ, γ̃ the identity.

template <class K>
Object<K> antipode_sigma(const HopfData<K>& H, const Object<K>& x) {
  Object<K> y;
  y.name = "Σ" + x.name;
  y.space = x.space;
  y.side = Side::right;
  // x⊗h ↦ S(h)x
  y.action = compose(x.act(), kron(H.S(), idn<K>(x.dim())), block_perm<K>({x.dim(), H.dim()}, {1, 0}));
  return y;
}

// ρ' = γ̃ ∘ Σ̃ρ ∘ σ̃ for a right χ^V-coalgebra ρ: H⊗M -> H⊗M.
template <class K>
LinMap<K> twist_rho(const HopfData<K>& H, const LinMap<K>& rho_v, int dim_m,
                    std::type_identity_t<std::optional<LinMap<K>>> antipode = std::nullopt) {
  auto c = antipode_one_cell(H, antipode);
  return compose(c.gamma(vect<K>("M", dim_m)), rho_v, c.sigma(vect<K>("M", dim_m)));
}

}  // namespace duplicial
