#pragma once

// Simplicial towers N T^{n+1} M and N S^{n+1} M from the bar and opbar
// resolutions, the duplicial operators t^T and t^S, the comparison maps R and
// L, and the identity checks on them. Also the classical cyclic object of an
// algebra.
//
// Degree n of CC_T is identified with M⊗H^n⊗N and degree n of CC_S^op with
// H^n⊗M⊗N through the presentations of −⊗_H N. Every structure map is N
// applied to a composite of functor components, so the towers inherit the
// identities from the laws; the explicit formulas below evaluate the same
// operators on basis tensors directly from structure constants.

#include <algorithm>
#include <map>

#include "duplicial/coefficients.hpp"

namespace duplicial {

inline constexpr long default_dim_cap = 100000;

template <class K>
struct SimplicialTower {
  std::string name;
  std::vector<int> dims;                       // C_0..C_top
  std::vector<std::vector<LinMap<K>>> faces;   // faces[n][i]: C_n -> C_{n-1}, n ≥ 1
  std::vector<std::vector<LinMap<K>>> degens;  // degens[n][j]: C_n -> C_{n+1}, n < top
  int top() const { return int(dims.size()) - 1; }
};

template <class K>
struct DuplicialTower : SimplicialTower<K> {
  std::vector<LinMap<K>> t;  // t[n]: C_n -> C_n
};

// Everything a coefficient pair over the Yetter–Drinfel'd law needs.
template <class K>
struct CCData {
  HopfData<K> H;
  Comonad<K> T, S;
  BraidKernel<K> chi;
  RightCoefficient<K> M;
  LeftCoefficient<K> N;
};

template <class K>
CCData<K> cc_data(const HopfData<K>& H, const RightCoefficient<K>& M, const LeftCoefficient<K>& N) {
  if (M.M.action && M.M.act().cols() != M.dim() * H.dim())
    throw UsageError("coefficient " + M.name + " is not over " + H.name);
  if (N.action.cols() != N.dim * H.dim()) throw UsageError("coefficient " + N.name + " is not over " + H.name);
  auto L = yd_lift(H);
  return {H, induced_comonad(L.adj), L.S, yd_braiding(H), M, N};
}

// A word in T and S applied to an object or a map, the last letter innermost.
template <class K>
Object<K> apply_word(const CCData<K>& cc, const std::string& word, Object<K> x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = (*it == 'T' ? cc.T : cc.S).F.obj(x);
  return x;
}

template <class K>
LinMap<K> map_word(const CCData<K>& cc, const std::string& word, LinMap<K> f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = (*it == 'T' ? cc.T : cc.S).F.map(f);
  return f;
}

inline std::string letters(char c, int k) { return std::string(std::max(k, 0), c); }

// χ^n: T^n S X -> S T^n X, χ^n = χ T^{n-1} ∘ T χ^{n-1}.
template <class K>
LinMap<K> chi_T(const CCData<K>& cc, int n, const Object<K>& x) {
  if (n == 0) return idn<K>(cc.S.F.obj(x).dim());
  return compose(cc.chi.at(apply_word(cc, letters('T', n - 1), x).dim()), cc.T.F.map(chi_T(cc, n - 1, x)));
}

// χ^n: T S^n X -> S^n T X, χ^n = S χ^{n-1} ∘ χ S^{n-1}.
template <class K>
LinMap<K> chi_S(const CCData<K>& cc, int n, const Object<K>& x) {
  if (n == 0) return idn<K>(cc.T.F.obj(x).dim());
  return compose(cc.S.F.map(chi_S(cc, n - 1, x)), cc.chi.at(apply_word(cc, letters('S', n - 1), x).dim()));
}

// N applied to a module map between two words evaluated at M.
template <class K>
LinMap<K> n_word(const CCData<K>& cc, const std::string& from, const std::string& to, const LinMap<K>& f,
                 const Object<K>& base) {
  return n_map(cc.H, cc.N, apply_word(cc, from, base), apply_word(cc, to, base), f);
}

template <class K>
void guard_dims(const CCData<K>& cc, int n_max, long cap) {
  long d = long(cc.M.dim()) * cc.N.dim;
  for (int k = 0; k < n_max + 2; ++k) d *= cc.H.dim();
  if (d > cap)
    throw DimensionError("degree " + std::to_string(n_max) + " needs working spaces of dim " + std::to_string(d) +
                         " (cap " + std::to_string(cap) + ")");
}

// t^T_n = λT^nM ∘ Nχ^nM ∘ NT^nρ
template <class K>
LinMap<K> t_T(const CCData<K>& cc, int n) {
  const auto& M = cc.M.M;
  const std::string Tn = letters('T', n);
  return compose(lambda_at(cc.H, cc.N, apply_word(cc, Tn, M)), n_word(cc, Tn + "S", "S" + Tn, chi_T(cc, n, M), M),
                 n_word(cc, Tn + "T", Tn + "S", map_word(cc, Tn, cc.M.rho), M));
}

// t^S_n = NS^nρ ∘ Nχ^nM ∘ λS^nM
template <class K>
LinMap<K> t_S(const CCData<K>& cc, int n) {
  const auto& M = cc.M.M;
  const std::string Sn = letters('S', n);
  return compose(n_word(cc, Sn + "T", Sn + "S", map_word(cc, Sn, cc.M.rho), M),
                 n_word(cc, "T" + Sn, Sn + "T", chi_S(cc, n, M), M), lambda_at(cc.H, cc.N, apply_word(cc, Sn, M)));
}

// N B(T, M) with d_i = NT^iεT^{n-i}M and s_j = NT^jΔT^{n-j}M; t = t^T.
template <class K>
DuplicialTower<K> bar_tower(const CCData<K>& cc, int n_max, long cap = default_dim_cap) {
  if (n_max < 0) throw UsageError("degree bound must be non-negative");
  guard_dims(cc, n_max, cap);
  const auto& M = cc.M.M;
  DuplicialTower<K> tw;
  tw.name = "CC_T(" + cc.N.name + "," + cc.M.name + ")";
  for (int n = 0; n <= n_max; ++n) {
    const std::string word = letters('T', n + 1);
    tw.dims.push_back(present(cc.H, cc.N, apply_word(cc, word, M)).dim());
    std::vector<LinMap<K>> d, s;
    for (int i = 0; n > 0 && i <= n; ++i)
      d.push_back(n_word(cc, word, letters('T', n),
                         map_word(cc, letters('T', i), cc.T.eps(apply_word(cc, letters('T', n - i), M))), M));
    for (int j = 0; n < n_max && j <= n; ++j)
      s.push_back(n_word(cc, word, letters('T', n + 2),
                         map_word(cc, letters('T', j), cc.T.delta(apply_word(cc, letters('T', n - j), M))), M));
    tw.faces.push_back(std::move(d));
    tw.degens.push_back(std::move(s));
    tw.t.push_back(t_T(cc, n));
  }
  return tw;
}

// N B^op(S, M) with d_i = NS^{n-i}εS^iM and s_j = NS^{n-j}ΔS^jM; t = t^S.
template <class K>
DuplicialTower<K> opbar_tower(const CCData<K>& cc, int n_max, long cap = default_dim_cap) {
  if (n_max < 0) throw UsageError("degree bound must be non-negative");
  guard_dims(cc, n_max, cap);
  const auto& M = cc.M.M;
  DuplicialTower<K> tw;
  tw.name = "CC_S^op(" + cc.N.name + "," + cc.M.name + ")";
  for (int n = 0; n <= n_max; ++n) {
    const std::string word = letters('S', n + 1);
    tw.dims.push_back(present(cc.H, cc.N, apply_word(cc, word, M)).dim());
    std::vector<LinMap<K>> d, s;
    for (int i = 0; n > 0 && i <= n; ++i)
      d.push_back(n_word(cc, word, letters('S', n),
                         map_word(cc, letters('S', n - i), cc.S.eps(apply_word(cc, letters('S', i), M))), M));
    for (int j = 0; n < n_max && j <= n; ++j)
      s.push_back(n_word(cc, word, letters('S', n + 2),
                         map_word(cc, letters('S', n - j), cc.S.delta(apply_word(cc, letters('S', j), M))), M));
    tw.faces.push_back(std::move(d));
    tw.degens.push_back(std::move(s));
    tw.t.push_back(t_S(cc, n));
  }
  return tw;
}

template <class K>
struct CCTowers {
  DuplicialTower<K> bar;    // CC_T(N, M)
  DuplicialTower<K> opbar;  // CC_S^op(N, M)
};

template <class K>
CCTowers<K> cc_towers(const CCData<K>& cc, int n_max, long cap = default_dim_cap) {
  return {bar_tower(cc, n_max, cap), opbar_tower(cc, n_max, cap)};
}

// R_n = r_{n,n} ∘ … ∘ r_{0,n}, r_{i,n} = NS^iχ^{n-i}M ∘ NS^iT^{n-i}ρ: N T^{n+1}M -> N S^{n+1}M.
template <class K>
LinMap<K> R_map(const CCData<K>& cc, int n) {
  const auto& M = cc.M.M;
  LinMap<K> r = idn<K>(present(cc.H, cc.N, apply_word(cc, letters('T', n + 1), M)).dim());
  for (int i = 0; i <= n; ++i) {
    const std::string Si = letters('S', i), Tk = letters('T', n - i);
    auto step = compose(n_word(cc, Si + Tk + "S", Si + "S" + Tk, map_word(cc, Si, chi_T(cc, n - i, M)), M),
                        n_word(cc, Si + Tk + "T", Si + Tk + "S", map_word(cc, Si + Tk, cc.M.rho), M));
    r = compose(step, r);
  }
  return r;
}

// L_n = l_{n,n} ∘ … ∘ l_{0,n}, l_{i,n} = Nχ^{n-i}T^iM ∘ λS^{n-i}T^iM: N S^{n+1}M -> N T^{n+1}M.
template <class K>
LinMap<K> L_map(const CCData<K>& cc, int n) {
  const auto& M = cc.M.M;
  LinMap<K> l = idn<K>(present(cc.H, cc.N, apply_word(cc, letters('S', n + 1), M)).dim());
  for (int i = 0; i <= n; ++i) {
    const std::string Sk = letters('S', n - i), Ti = letters('T', i);
    Object<K> TiM = apply_word(cc, Ti, M);
    auto step = compose(n_word(cc, "T" + Sk + Ti, Sk + "T" + Ti, chi_S(cc, n - i, TiM), M),
                        lambda_at(cc.H, cc.N, apply_word(cc, Sk, TiM)));
    l = compose(step, l);
  }
  return l;
}

template <class K>
struct Comparison {
  std::vector<LinMap<K>> R;  // CC_T -> CC_S^op
  std::vector<LinMap<K>> L;  // CC_S^op -> CC_T
};

template <class K>
Comparison<K> build_R_L(const CCData<K>& cc, int n_max) {
  Comparison<K> c;
  for (int n = 0; n <= n_max; ++n) {
    c.R.push_back(R_map(cc, n));
    c.L.push_back(L_map(cc, n));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Explicit formulas on basis tensors

// A linear combination of basis tensors whose slots carry names; maps act on
// named slots. Used to evaluate closed formulas independently of the
// functor machinery.
template <class K>
class Terms {
 public:
  Terms(std::vector<std::string> names, std::vector<int> dims, std::vector<int> index)
      : names_(std::move(names)), dims_(std::move(dims)) {
    terms_[std::move(index)] = K(1);
  }

  // Replace slot `name` by the output of f: dim -> prod(out_dims), in place.
  void split(const std::string& name, const LinMap<K>& f, const std::vector<std::string>& out_names,
             const std::vector<int>& out_dims) {
    const int p = pos(name);
    replace(p, 1, f, out_names, out_dims);
  }

  // f applied to slots a⊗b (in that order); the result sits where `a` was.
  void merge(const std::string& a, const std::string& b, const LinMap<K>& f, const std::string& out_name,
             int out_dim) {
    move_after(b, a);
    replace(pos(a), 2, f, {out_name}, {out_dim});
  }

  // Column vector with the slots flattened in the given order.
  std::vector<std::pair<int, K>> flatten(const std::vector<std::string>& order) const {
    std::vector<int> perm;
    for (const auto& o : order) perm.push_back(pos(o));
    if (perm.size() != names_.size()) throw UsageError("flatten: slot list does not cover the tensor");
    std::map<int, K> acc;
    for (const auto& [idx, c] : terms_) {
      int flat = 0;
      for (int p : perm) flat = flat * dims_[p] + idx[p];
      acc[flat] += c;
    }
    std::vector<std::pair<int, K>> out;
    for (const auto& [i, c] : acc)
      if (!is_zero(c)) out.push_back({i, c});
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> dims_;
  std::map<std::vector<int>, K> terms_;

  int pos(const std::string& name) const {
    for (int i = 0; i < int(names_.size()); ++i)
      if (names_[i] == name) return i;
    throw UsageError("no slot " + name);
  }

  void move_after(const std::string& b, const std::string& a) {
    int pb = pos(b);
    std::vector<int> order;
    for (int i = 0; i < int(names_.size()); ++i)
      if (i != pb) order.push_back(i);
    order.insert(order.begin() + (std::find(order.begin(), order.end(), pos(a)) - order.begin()) + 1, pb);
    std::vector<std::string> nn;
    std::vector<int> nd;
    for (int i : order) {
      nn.push_back(names_[i]);
      nd.push_back(dims_[i]);
    }
    std::map<std::vector<int>, K> nt;
    for (const auto& [idx, c] : terms_) {
      std::vector<int> ni;
      for (int i : order) ni.push_back(idx[i]);
      nt[ni] += c;
    }
    names_ = nn;
    dims_ = nd;
    terms_ = std::move(nt);
  }

  void replace(int p, int count, const LinMap<K>& f, const std::vector<std::string>& out_names,
               const std::vector<int>& out_dims) {
    std::map<std::vector<int>, K> nt;
    for (const auto& [idx, c] : terms_) {
      int col = 0;
      for (int k = 0; k < count; ++k) col = col * dims_[p + k] + idx[p + k];
      for (const auto& [row, v] : column_terms(f, col)) {
        std::vector<int> ni(idx.begin(), idx.begin() + p);
        auto parts = linalg::unflatten(row, out_dims);
        ni.insert(ni.end(), parts.begin(), parts.end());
        ni.insert(ni.end(), idx.begin() + p + count, idx.end());
        nt[ni] += c * v;
      }
    }
    names_.erase(names_.begin() + p, names_.begin() + p + count);
    dims_.erase(dims_.begin() + p, dims_.begin() + p + count);
    names_.insert(names_.begin() + p, out_names.begin(), out_names.end());
    dims_.insert(dims_.begin() + p, out_dims.begin(), out_dims.end());
    for (auto it = nt.begin(); it != nt.end();) it = is_zero(it->second) ? nt.erase(it) : std::next(it);
    terms_ = std::move(nt);
  }
};

template <class K, class Eval>
LinMap<K> from_basis(int dom, int cod, Eval&& eval) {
  LinMap<K> f = LinMap<K>::zero(Space::basis(dom), Space::basis(cod));
  for (int j = 0; j < dom; ++j)
    for (const auto& [i, c] : eval(j)) f(i, j) += c;
  return f;
}

inline std::string slot(const std::string& base, int i) { return base + std::to_string(i); }

// t^T_n(m⊗h¹⊗…⊗hⁿ⊗v) = m(0)h¹₊ ⊗ h²₊ ⊗ … ⊗ hⁿ₊ ⊗ X₊ ⊗ X₋v(0), X = v(-1)hⁿ₋⋯h¹₋m(-1),
// on M⊗H^n⊗N.
template <class K>
LinMap<K> explicit_t_oracle(const HopfData<K>& H, const RightCoefficient<K>& M, const LeftCoefficient<K>& N, int n) {
  const int h = H.dim(), dm = M.dim(), dn = N.dim;
  int dim = dm * dn;
  for (int k = 0; k < n; ++k) dim *= h;
  const auto tr = translation_map(H);
  std::vector<std::string> names{"m"};
  std::vector<int> dims{dm};
  for (int i = 1; i <= n; ++i) {
    names.push_back(slot("h", i));
    dims.push_back(h);
  }
  names.push_back("v");
  dims.push_back(dn);
  return from_basis<K>(dim, dim, [&](int col) {
    Terms<K> x(names, dims, linalg::unflatten(col, dims));
    x.split("m", M.coaction, {"mc", "m0"}, {h, dm});
    x.split("v", N.coaction, {"X", "v0"}, {h, dn});
    for (int i = 1; i <= n; ++i) x.split(slot("h", i), tr, {slot("p", i), slot("q", i)}, {h, h});
    for (int i = n; i >= 1; --i) x.merge("X", slot("q", i), H.m(), "X", h);
    x.merge("X", "mc", H.m(), "X", h);
    x.split("X", tr, {"Xp", "Xm"}, {h, h});
    x.merge("Xm", "v0", N.action, "v0", dn);
    std::vector<std::string> order{"m0"};
    if (n == 0) {
      x.merge("m0", "Xp", M.M.act(), "m0", dm);
    } else {
      x.merge("m0", slot("p", 1), M.M.act(), "m0", dm);
      for (int i = 2; i <= n; ++i) order.push_back(slot("p", i));
      order.push_back("Xp");
    }
    order.push_back("v0");
    return x.flatten(order);
  });
}

// L_n((h¹⊗…⊗h^{n+1}⊗m)⊗v) = m(v(-1)₊h¹₊) ⊗ h¹₋h²₊ ⊗ … ⊗ hⁿ₋h^{n+1}₊ ⊗ (h^{n+1}₋v(-1)₋)v(0),
// from H^{n+1}⊗M⊗N to M⊗H^n⊗N.
template <class K>
LinMap<K> explicit_L_oracle(const HopfData<K>& H, const RightCoefficient<K>& M, const LeftCoefficient<K>& N, int n) {
  const int h = H.dim(), dm = M.dim(), dn = N.dim;
  const auto tr = translation_map(H);
  std::vector<std::string> names;
  std::vector<int> dims;
  for (int i = 1; i <= n + 1; ++i) {
    names.push_back(slot("h", i));
    dims.push_back(h);
  }
  names.insert(names.end(), {"m", "v"});
  dims.insert(dims.end(), {dm, dn});
  int dom = 1;
  for (int d : dims) dom *= d;
  return from_basis<K>(dom, dom / h, [&](int col) {
    Terms<K> x(names, dims, linalg::unflatten(col, dims));
    x.split("v", N.coaction, {"c", "v0"}, {h, dn});
    x.split("c", tr, {"cp", "cm"}, {h, h});
    for (int i = 1; i <= n + 1; ++i) x.split(slot("h", i), tr, {slot("p", i), slot("q", i)}, {h, h});
    x.merge("cp", slot("p", 1), H.m(), "cp", h);
    x.merge("m", "cp", M.M.act(), "m", dm);
    std::vector<std::string> order{"m"};
    for (int i = 1; i <= n; ++i) {
      x.merge(slot("q", i), slot("p", i + 1), H.m(), slot("s", i), h);
      order.push_back(slot("s", i));
    }
    x.merge(slot("q", n + 1), "cm", H.m(), "last", h);
    x.merge("last", "v0", N.action, "v0", dn);
    order.push_back("v0");
    return x.flatten(order);
  });
}

// R_n((m⊗h¹⊗…⊗hⁿ⊗1)⊗v) = m(-n-1) ⊗ m(-n)h¹(1) ⊗ … ⊗ m(-1)h¹(n)⋯hⁿ(1) ⊗ m(0) ⊗ h¹(n+1)⋯hⁿ(2)v,
// from M⊗H^n⊗N to H^{n+1}⊗M⊗N.
template <class K>
LinMap<K> explicit_R_oracle(const HopfData<K>& H, const RightCoefficient<K>& M, const LeftCoefficient<K>& N, int n) {
  const int h = H.dim(), dm = M.dim(), dn = N.dim;
  std::vector<std::string> names{"m"};
  std::vector<int> dims{dm};
  for (int i = 1; i <= n; ++i) {
    names.push_back(slot("h", i));
    dims.push_back(h);
  }
  names.push_back("v");
  dims.push_back(dn);
  int dom = 1;
  for (int d : dims) dom *= d;
  return from_basis<K>(dom, dom * h, [&](int col) {
    Terms<K> x(names, dims, linalg::unflatten(col, dims));
    // m ↦ c0 ⊗ … ⊗ cn ⊗ m0 with ck = m(-n-1+k)
    for (int k = 0; k <= n; ++k) x.split("m", M.coaction, {slot("c", k), "m"}, {h, dm});
    // hⁱ ↦ hⁱ(1) ⊗ … ⊗ hⁱ(n+2-i); piece j feeds slot i+j-1, the last piece acts on v
    for (int i = 1; i <= n; ++i) {
      const std::string rest = slot("h", i);
      for (int j = 1; j <= n + 1 - i; ++j) {
        x.split(rest, H.delta(), {slot("g" + std::to_string(i) + "_", j), rest + "'"}, {h, h});
        x.merge(slot("c", i + j - 1), slot("g" + std::to_string(i) + "_", j), H.m(), slot("c", i + j - 1), h);
        x.split(rest + "'", H.id(), {rest}, {h});
      }
    }
    for (int i = n; i >= 1; --i) x.merge(slot("h", i), "v", N.action, "v", dn);
    std::vector<std::string> order;
    for (int k = 0; k <= n; ++k) order.push_back(slot("c", k));
    order.insert(order.end(), {"m", "v"});
    return x.flatten(order);
  });
}

// ---------------------------------------------------------------------------
// Identity checks

template <class K>
LinMap<K> power(const LinMap<K>& f, int k) {
  LinMap<K> r = idn<K>(f.rows());
  for (int i = 0; i < k; ++i) r = compose(f, r);
  return r;
}

template <class K>
Report check_simplicial(const SimplicialTower<K>& tw) {
  Report r;
  r.title = "simplicial identities of " + tw.name;
  const int top = tw.top();
  auto at = [](int n) { return " in degree " + std::to_string(n); };
  auto& d = tw.faces;
  auto& s = tw.degens;
  for (int n = 2; n <= top; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        record_equal(r, "d" + std::to_string(i) + "d" + std::to_string(j) + at(n), compose(d[n - 1][i], d[n][j]),
                     compose(d[n - 1][j - 1], d[n][i]));
  for (int n = 0; n + 2 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        record_equal(r, "s" + std::to_string(i) + "s" + std::to_string(j) + at(n), compose(s[n + 1][i], s[n][j]),
                     compose(s[n + 1][j + 1], s[n][i]));
  for (int n = 0; n + 1 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const std::string name = "d" + std::to_string(i) + "s" + std::to_string(j) + at(n);
        auto lhs = compose(d[n + 1][i], s[n][j]);
        if (i == j || i == j + 1)
          record_equal(r, name, lhs, idn<K>(tw.dims[n]));
        else if (i < j)
          record_equal(r, name, lhs, compose(s[n - 1][j - 1], d[n][i]));
        else
          record_equal(r, name, lhs, compose(s[n - 1][j], d[n][i - 1]));
      }
  return r;
}

template <class K>
Report check_duplicial(const DuplicialTower<K>& tw) {
  Report r = check_simplicial(tw);
  r.title = "duplicial identities of " + tw.name;
  const int top = tw.top();
  auto at = [](int n) { return " in degree " + std::to_string(n); };
  for (int n = 1; n <= top; ++n) {
    const auto& d = tw.faces[n];
    record_equal(r, "d0 t = dn" + at(n), compose(d[0], tw.t[n]), d[n]);
    for (int i = 1; i <= n; ++i)
      record_equal(r, "d" + std::to_string(i) + " t = t d" + std::to_string(i - 1) + at(n), compose(d[i], tw.t[n]),
                   compose(tw.t[n - 1], d[i - 1]));
  }
  for (int n = 0; n < top; ++n) {
    const auto& s = tw.degens[n];
    record_equal(r, "s0 t = t² sn" + at(n), compose(s[0], tw.t[n]), compose(tw.t[n + 1], tw.t[n + 1], s[n]));
    for (int j = 1; j <= n; ++j)
      record_equal(r, "s" + std::to_string(j) + " t = t s" + std::to_string(j - 1) + at(n), compose(s[j], tw.t[n]),
                   compose(tw.t[n + 1], s[j - 1]));
  }
  return r;
}

// t^{n+1} = id per degree.
template <class K>
Report check_cyclicity(const DuplicialTower<K>& tw) {
  Report r;
  r.title = "cyclicity of " + tw.name;
  for (int n = 0; n <= tw.top(); ++n)
    record_equal(r, "t^" + std::to_string(n + 1) + " = id in degree " + std::to_string(n), power(tw.t[n], n + 1),
                 idn<K>(tw.dims[n]));
  return r;
}

template <class K>
bool is_cyclic(const DuplicialTower<K>& tw) {
  return check_cyclicity(tw).ok();
}

// f: A -> B commutes with faces, degeneracies and t.
template <class K>
Report check_morphism(const std::string& name, const std::vector<LinMap<K>>& f, const DuplicialTower<K>& A,
                      const DuplicialTower<K>& B) {
  Report r;
  r.title = name + " is a duplicial morphism";
  const int top = std::min(A.top(), B.top());
  for (int n = 0; n <= top; ++n) {
    const std::string at = " in degree " + std::to_string(n);
    record_equal(r, name + " t" + at, compose(f[n], A.t[n]), compose(B.t[n], f[n]));
    for (int i = 0; n > 0 && i <= n; ++i)
      record_equal(r, name + " d" + std::to_string(i) + at, compose(f[n - 1], A.faces[n][i]),
                   compose(B.faces[n][i], f[n]));
    for (int j = 0; n < top && j <= n; ++j)
      record_equal(r, name + " s" + std::to_string(j) + at, compose(f[n + 1], A.degens[n][j]),
                   compose(B.degens[n][j], f[n]));
  }
  return r;
}

// (L∘R)_n = (t^T_n)^{n+1} and (R∘L)_n = (t^S_n)^{n+1}, plus R and L being morphisms.
template <class K>
Report check_prop_cyc(const Comparison<K>& c, const CCTowers<K>& tw) {
  Report r;
  r.title = "comparison maps";
  const int top = tw.bar.top();
  for (int n = 0; n <= top; ++n) {
    const std::string at = " in degree " + std::to_string(n);
    record_equal(r, "L∘R = (t^T)^(n+1)" + at, compose(c.L[n], c.R[n]), power(tw.bar.t[n], n + 1));
    record_equal(r, "R∘L = (t^S)^(n+1)" + at, compose(c.R[n], c.L[n]), power(tw.opbar.t[n], n + 1));
  }
  r.merge(check_morphism("R", c.R, tw.bar, tw.opbar));
  r.merge(check_morphism("L", c.L, tw.opbar, tw.bar));
  return r;
}

// L∘R = id in every degree.
template <class K>
bool lr_identity(const Comparison<K>& c) {
  for (int n = 0; n < int(c.R.size()); ++n)
    if (!(compose(c.L[n], c.R[n]) == idn<K>(c.R[n].cols()))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The cyclic object of a unital algebra: C_n = A^{⊗(n+1)}, d_i multiplies
// a_i a_{i+1} (d_n multiplies a_n a_0 into the front), s_j inserts 1 after
// a_j, t(a_0⊗…⊗a_n) = a_n⊗a_0⊗…⊗a_{n-1}.
template <class K>
DuplicialTower<K> classical_cyclic_object(const AlgebraData<K>& A, int n_max) {
  if (n_max < 0) throw UsageError("degree bound must be non-negative");
  const int a = A.mult.rows();
  DuplicialTower<K> tw;
  tw.name = "C(A)";
  auto pw = [a](int k) {
    int d = 1;
    for (int i = 0; i < k; ++i) d *= a;
    return d;
  };
  // the cyclic shift moving the last of k factors to the front
  auto shift = [&](int k) {
    std::vector<int> dims(k, a), perm(k);
    for (int i = 0; i < k; ++i) perm[i] = (i + 1) % k;
    return block_perm<K>(dims, perm);
  };
  for (int n = 0; n <= n_max; ++n) {
    tw.dims.push_back(pw(n + 1));
    std::vector<LinMap<K>> d, s;
    for (int i = 0; n > 0 && i < n; ++i) d.push_back(pad(pw(i), A.mult, pw(n - i - 1)));
    if (n > 0) d.push_back(compose(pad(1, A.mult, pw(n - 1)), shift(n + 1)));
    for (int j = 0; n < n_max && j <= n; ++j) s.push_back(pad(pw(j + 1), A.unit, pw(n - j)));
    tw.faces.push_back(std::move(d));
    tw.degens.push_back(std::move(s));
    tw.t.push_back(shift(n + 1));
  }
  return tw;
}

}  // namespace duplicial
