#pragma once

// Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras given
// by structure constants over the ground field k.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "duplicial/elimination.hpp"
#include "duplicial/report.hpp"

namespace duplicial {

using linalg::LinMap;
using linalg::Space;
using linalg::Vector;

enum class Strength { algebra, coalgebra, bialgebra, hopf };

inline std::string to_string(Strength s) {
  switch (s) {
    case Strength::algebra: return "algebra";
    case Strength::coalgebra: return "coalgebra";
    case Strength::bialgebra: return "bialgebra";
    case Strength::hopf: return "hopf";
  }
  return "?";
}

inline Strength parse_strength(const std::string& s) {
  if (s == "algebra") return Strength::algebra;
  if (s == "coalgebra") return Strength::coalgebra;
  if (s == "bialgebra") return Strength::bialgebra;
  if (s == "hopf") return Strength::hopf;
  throw UsageError("unknown strength '" + s + "'");
}

template <class K>
struct AlgebraData {
  Space space;
  LinMap<K> mult;  // H⊗H -> H
  LinMap<K> unit;  // k -> H
};

template <class K>
struct CoalgebraData {
  Space space;
  LinMap<K> comult;  // C -> C⊗C
  LinMap<K> counit;  // C -> k
};

template <class K>
struct HopfData {
  std::string name;
  Field<K> field;
  Space space;
  std::optional<AlgebraData<K>> algebra;
  std::optional<CoalgebraData<K>> coalgebra;
  std::optional<LinMap<K>> antipode;
  Strength declared = Strength::hopf;

  int dim() const { return space.dim; }
  const LinMap<K>& m() const { return need(algebra, "multiplication").mult; }
  const LinMap<K>& u() const { return need(algebra, "unit").unit; }
  const LinMap<K>& delta() const { return need(coalgebra, "comultiplication").comult; }
  const LinMap<K>& eps() const { return need(coalgebra, "counit").counit; }
  const LinMap<K>& S() const {
    if (!antipode) throw UsageError(name + " has no antipode");
    return *antipode;
  }
  LinMap<K> id() const { return LinMap<K>::identity(space); }

 private:
  template <class T>
  const T& need(const std::optional<T>& x, const char* what) const {
    if (!x) throw UsageError(name + " has no " + what);
    return *x;
  }
};

// Label of the j-th basis vector of a space, for witnesses.
inline std::string basis_label(const Space& s, int j) {
  if (j >= 0 && j < int(s.labels.size()) && !s.labels[j].empty()) return s.labels[j];
  return "e" + std::to_string(j);
}

// Records lhs == rhs as a check; on failure the witness names the first basis
// element where the two sides differ.
template <class K>
bool record_equal(Report& r, const std::string& name, const LinMap<K>& lhs, const LinMap<K>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.add(name, false,
          "shape " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
              std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
    return false;
  }
  auto j = linalg::first_difference(lhs, rhs);
  if (!j) {
    r.add(name, true);
    return true;
  }
  int i = 0;
  while (lhs(i, *j) == rhs(i, *j)) ++i;
  r.add(name, false,
        "at " + basis_label(lhs.domain, *j) + ": coefficient of " + basis_label(lhs.codomain, i) + " is " +
            to_string(lhs(i, *j)) + " vs " + to_string(rhs(i, *j)));
  return false;
}

// Swap of two tensor factors A⊗B -> B⊗A.
template <class K>
LinMap<K> flip(const Space& a, const Space& b) {
  Space ab = tensor(a, b);
  ab.factors = {a.dim, b.dim};
  return linalg::permute_factors<K>(ab, {1, 0});
}

template <class K>
Report check_structure(const HopfData<K>& H, Strength strength) {
  using linalg::compose;
  using linalg::kron;
  Report r;
  r.title = H.name + " as " + to_string(strength);
  const LinMap<K> i = H.id();
  const LinMap<K> k1 = LinMap<K>::identity(Space::ground());
  const bool alg = strength != Strength::coalgebra;
  const bool coalg = strength != Strength::algebra;
  if (alg) {
    if (!H.algebra) {
      r.add("multiplication present", false, "missing");
    } else {
      const auto& m = H.m();
      const auto& u = H.u();
      record_equal(r, "associativity", compose(m, kron(m, i)), compose(m, kron(i, m)));
      record_equal(r, "left unit", compose(m, kron(u, i)), i);
      record_equal(r, "right unit", compose(m, kron(i, u)), i);
    }
  }
  if (coalg) {
    if (!H.coalgebra) {
      r.add("comultiplication present", false, "missing");
    } else {
      const auto& d = H.delta();
      const auto& e = H.eps();
      record_equal(r, "coassociativity", compose(kron(d, i), d), compose(kron(i, d), d));
      record_equal(r, "left counit", compose(kron(e, i), d), i);
      record_equal(r, "right counit", compose(kron(i, e), d), i);
    }
  }
  if ((strength == Strength::bialgebra || strength == Strength::hopf) && H.algebra && H.coalgebra) {
    const auto& m = H.m();
    const auto& u = H.u();
    const auto& d = H.delta();
    const auto& e = H.eps();
    auto middle = kron(i, flip<K>(H.space, H.space), i);
    record_equal(r, "comultiplication is multiplicative", compose(d, m),
                 compose(kron(m, m), middle, kron(d, d)));
    record_equal(r, "comultiplication is unital", compose(d, u), kron(u, u));
    record_equal(r, "counit is multiplicative", compose(e, m), kron(e, e));
    record_equal(r, "counit is unital", compose(e, u), k1);
  }
  if (strength == Strength::hopf && H.algebra && H.coalgebra) {
    if (!H.antipode) {
      r.add("antipode present", false, "missing");
    } else {
      const auto& S = H.S();
      auto ue = compose(H.u(), H.eps());
      record_equal(r, "left antipode", compose(H.m(), kron(S, i), H.delta()), ue);
      record_equal(r, "right antipode", compose(H.m(), kron(i, S), H.delta()), ue);
      // S(h) = ε(h₊) h₋ with h₊ ⊗ h₋ = h(1) ⊗ S(h(2))
      auto tr = compose(kron(i, S), H.delta());
      record_equal(r, "antipode from translation map", compose(kron(H.eps(), i), tr), S);
    }
  }
  return r;
}

// h ↦ h₊ ⊗ h₋ = h(1) ⊗ S(h(2))
template <class K>
LinMap<K> translation_map(const HopfData<K>& H) {
  if (!H.antipode) throw ValidationError(H.name + ": translation map needs an antipode");
  return linalg::compose(linalg::kron(H.id(), H.S()), H.delta());
}

template <class K>
struct GaloisBeta {
  LinMap<K> beta;  // g⊗h ↦ g(1) ⊗ g(2)h
  bool invertible = false;
  std::optional<LinMap<K>> inverse;
};

template <class K>
GaloisBeta<K> galois_beta(const HopfData<K>& H) {
  using linalg::compose;
  using linalg::kron;
  GaloisBeta<K> g;
  g.beta = compose(kron(H.id(), H.m()), kron(H.delta(), H.id()));
  g.invertible = linalg::rank(g.beta) == H.dim() * H.dim();
  if (g.invertible) g.inverse = linalg::inverse(g.beta);
  return g;
}

// Solves m(S⊗id)Δ = ηε = m(id⊗S)Δ for S. Empty when no antipode exists.
template <class K>
std::optional<LinMap<K>> solve_antipode(const HopfData<K>& H) {
  const int n = H.dim();
  const auto& m = H.m();
  const auto& d = H.delta();
  // unknown S(l, j) at index l * n + j; equations indexed by (side, i, r)
  LinMap<K> sys = LinMap<K>::zero(Space::basis(n * n), Space::basis(2 * n * n));
  linalg::Vector<K> rhs = linalg::Vector<K>::Constant(2 * n * n, K(0));
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) rhs(i * n + r) = rhs(n * n + i * n + r) = H.eps()(0, i) * H.u()(r, 0);
    for (int jk = 0; jk < n * n; ++jk) {
      const K& c = d(jk, i);
      if (is_zero(c)) continue;
      const int j = jk / n, k = jk % n;
      for (int l = 0; l < n; ++l)
        for (int r = 0; r < n; ++r) {
          if (!is_zero(m(r, l * n + k))) sys(i * n + r, l * n + j) += c * m(r, l * n + k);
          if (!is_zero(m(r, j * n + l))) sys(n * n + i * n + r, l * n + k) += c * m(r, j * n + l);
        }
    }
  }
  auto x = linalg::solve(sys, rhs);
  if (!x) return std::nullopt;
  LinMap<K> S = LinMap<K>::zero(H.space, H.space);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) S(l, j) = (*x)(l * n + j);
  return S;
}

// ---------------------------------------------------------------------------
// Structure-constant helpers shared by the element-wise oracles.

template <class K>
struct Constants {
  int n = 0;
  std::vector<std::vector<std::vector<std::pair<int, K>>>> mult;  // e_i e_j
  std::vector<std::vector<std::tuple<int, int, K>>> comult;        // Δ e_i
  std::vector<K> counit;
  std::vector<std::pair<int, K>> unit;
  std::vector<std::vector<std::pair<int, K>>> antipode, antipode_inv;
};

template <class K>
std::vector<std::pair<int, K>> column_terms(const LinMap<K>& f, int j) {
  std::vector<std::pair<int, K>> out;
  for (int i = 0; i < f.rows(); ++i)
    if (!is_zero(f(i, j))) out.emplace_back(i, f(i, j));
  return out;
}

template <class K>
Constants<K> constants(const HopfData<K>& H) {
  Constants<K> c;
  const int n = H.dim();
  c.n = n;
  if (H.algebra) {
    c.mult.assign(n, std::vector<std::vector<std::pair<int, K>>>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c.mult[i][j] = column_terms(H.m(), i * n + j);
    c.unit = column_terms(H.u(), 0);
  }
  if (H.coalgebra) {
    c.comult.resize(n);
    for (int i = 0; i < n; ++i)
      for (auto& [jk, v] : column_terms(H.delta(), i)) c.comult[i].emplace_back(jk / n, jk % n, v);
    c.counit.resize(n);
    for (int i = 0; i < n; ++i) c.counit[i] = H.eps()(0, i);
  }
  if (H.antipode) {
    c.antipode.resize(n);
    for (int i = 0; i < n; ++i) c.antipode[i] = column_terms(H.S(), i);
    if (linalg::rank(H.S()) == n) {
      auto inv = linalg::inverse(H.S());
      c.antipode_inv.resize(n);
      for (int i = 0; i < n; ++i) c.antipode_inv[i] = column_terms(inv, i);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Presets

struct GroupTable {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;  // table[a][b] = ab
  int identity = 0;
  std::vector<int> inverse;
};

// Validates a Cayley table; throws ValidationError naming the failing triple.
GroupTable validate_group(std::string name, std::vector<std::vector<int>> table, std::vector<std::string> labels = {});
// "Zn", "S3", "V4", "trivial" or an inline JSON table such as [[0,1],[1,0]].
GroupTable parse_group(const std::string& spec);

template <class K>
HopfData<K> group_algebra(const GroupTable& G, const Field<K>& f) {
  const int n = int(G.table.size());
  HopfData<K> H;
  H.name = "group_algebra:" + G.name;
  H.field = f;
  H.space = Space::labeled(G.labels);
  AlgebraData<K> a{H.space, LinMap<K>::zero(tensor(H.space, H.space), H.space), LinMap<K>::zero(Space::ground(), H.space)};
  CoalgebraData<K> c{H.space, LinMap<K>::zero(H.space, tensor(H.space, H.space)), LinMap<K>::zero(H.space, Space::ground())};
  LinMap<K> S = LinMap<K>::zero(H.space, H.space);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) a.mult(G.table[x][y], x * n + y) = K(1);
    c.comult(x * n + x, x) = K(1);
    c.counit(0, x) = K(1);
    S(G.inverse[x], x) = K(1);
  }
  a.unit(G.identity, 0) = K(1);
  H.algebra = std::move(a);
  H.coalgebra = std::move(c);
  H.antipode = std::move(S);
  H.declared = Strength::hopf;
  return H;
}

// Functions on G: δ_a δ_b = [a = b] δ_a, Δδ_g = Σ_{ab = g} δ_a ⊗ δ_b.
template <class K>
HopfData<K> dual_group_algebra(const GroupTable& G, const Field<K>& f) {
  const int n = int(G.table.size());
  HopfData<K> H;
  H.name = "dual_group_algebra:" + G.name;
  H.field = f;
  std::vector<std::string> labels;
  for (auto& l : G.labels) labels.push_back("d" + l);
  H.space = Space::labeled(labels);
  AlgebraData<K> a{H.space, LinMap<K>::zero(tensor(H.space, H.space), H.space), LinMap<K>::zero(Space::ground(), H.space)};
  CoalgebraData<K> c{H.space, LinMap<K>::zero(H.space, tensor(H.space, H.space)), LinMap<K>::zero(H.space, Space::ground())};
  LinMap<K> S = LinMap<K>::zero(H.space, H.space);
  for (int x = 0; x < n; ++x) {
    a.mult(x, x * n + x) = K(1);
    a.unit(x, 0) = K(1);
    for (int y = 0; y < n; ++y) c.comult(x * n + y, G.table[x][y]) = K(1);
    S(G.inverse[x], x) = K(1);
  }
  c.counit(0, G.identity) = K(1);
  H.algebra = std::move(a);
  H.coalgebra = std::move(c);
  H.antipode = std::move(S);
  H.declared = Strength::hopf;
  return H;
}

// Basis 1, g, x, gx with g² = 1, x² = 0, xg = -gx, Δx = x⊗1 + g⊗x.
template <class K>
HopfData<K> sweedler_h4(const Field<K>& f) {
  if (f.characteristic() == 2) throw ValidationError("sweedler_h4 needs characteristic different from 2");
  HopfData<K> H;
  H.name = "sweedler_h4";
  H.field = f;
  H.space = Space::labeled({"1", "g", "x", "gx"});
  const Space HH = tensor(H.space, H.space);
  AlgebraData<K> a{H.space, LinMap<K>::zero(HH, H.space), LinMap<K>::zero(Space::ground(), H.space)};
  // index = gpow + 2 * xpow
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      int ga = p % 2, xa = p / 2, gb = q % 2, xb = q / 2;
      if (xa + xb > 1) continue;
      int sign = (xa && gb) ? -1 : 1;  // x g = -g x
      a.mult((ga + gb) % 2 + 2 * (xa + xb), p * 4 + q) = K(sign);
    }
  a.unit(0, 0) = K(1);
  CoalgebraData<K> c{H.space, LinMap<K>::zero(H.space, HH), LinMap<K>::zero(H.space, Space::ground())};
  c.comult(0 * 4 + 0, 0) = K(1);
  c.comult(1 * 4 + 1, 1) = K(1);
  c.comult(2 * 4 + 0, 2) = K(1);  // x⊗1
  c.comult(1 * 4 + 2, 2) = K(1);  // g⊗x
  c.comult(3 * 4 + 1, 3) = K(1);  // gx⊗g
  c.comult(0 * 4 + 3, 3) = K(1);  // 1⊗gx
  c.counit(0, 0) = K(1);
  c.counit(0, 1) = K(1);
  LinMap<K> S = LinMap<K>::zero(H.space, H.space);
  S(0, 0) = K(1);
  S(1, 1) = K(1);
  S(3, 2) = K(-1);
  S(2, 3) = K(1);
  H.algebra = std::move(a);
  H.coalgebra = std::move(c);
  H.antipode = std::move(S);
  H.declared = Strength::hopf;
  return H;
}

// k{1, e} with e² = e, Δe = e⊗e: a bialgebra without antipode.
template <class K>
HopfData<K> idempotent_monoid_algebra(const Field<K>& f) {
  HopfData<K> H;
  H.name = "idempotent_monoid_algebra";
  H.field = f;
  H.space = Space::labeled({"1", "e"});
  const Space HH = tensor(H.space, H.space);
  AlgebraData<K> a{H.space, LinMap<K>::zero(HH, H.space), LinMap<K>::zero(Space::ground(), H.space)};
  a.mult(0, 0) = K(1);
  a.mult(1, 1) = K(1);
  a.mult(1, 2) = K(1);
  a.mult(1, 3) = K(1);
  a.unit(0, 0) = K(1);
  CoalgebraData<K> c{H.space, LinMap<K>::zero(H.space, HH), LinMap<K>::zero(H.space, Space::ground())};
  c.comult(0, 0) = K(1);
  c.comult(3, 1) = K(1);
  c.counit(0, 0) = K(1);
  c.counit(0, 1) = K(1);
  H.algebra = std::move(a);
  H.coalgebra = std::move(c);
  H.declared = Strength::bialgebra;
  return H;
}

// k[x]/(x²), algebra only.
template <class K>
HopfData<K> dual_numbers(const Field<K>& f) {
  HopfData<K> H;
  H.name = "dual_numbers";
  H.field = f;
  H.space = Space::labeled({"1", "x"});
  AlgebraData<K> a{H.space, LinMap<K>::zero(tensor(H.space, H.space), H.space), LinMap<K>::zero(Space::ground(), H.space)};
  a.mult(0, 0) = K(1);
  a.mult(1, 1) = K(1);
  a.mult(1, 2) = K(1);
  a.unit(0, 0) = K(1);
  H.algebra = std::move(a);
  H.declared = Strength::algebra;
  return H;
}

// Preset by name: group_algebra:<G>, dual_group_algebra:<G>, sweedler_h4,
// idempotent_monoid_algebra, dual_numbers. Validates against the declared
// strength and throws ValidationError on failure.
template <class K>
HopfData<K> make_preset(const std::string& id, const Field<K>& f) {
  auto after = [&](const std::string& prefix) -> std::optional<std::string> {
    if (id.rfind(prefix, 0) == 0) return id.substr(prefix.size());
    return std::nullopt;
  };
  HopfData<K> H;
  if (auto g = after("group_algebra:"))
    H = group_algebra(parse_group(*g), f);
  else if (auto g2 = after("dual_group_algebra:"))
    H = dual_group_algebra(parse_group(*g2), f);
  else if (id == "sweedler_h4")
    H = sweedler_h4(f);
  else if (id == "idempotent_monoid_algebra")
    H = idempotent_monoid_algebra(f);
  else if (id == "dual_numbers")
    H = dual_numbers(f);
  else
    throw UsageError("unknown preset '" + id + "'");
  Report r = check_structure(H, H.declared);
  if (!r.ok()) throw ValidationError(H.name + " fails " + r.first_failure());
  return H;
}

}  // namespace duplicial
