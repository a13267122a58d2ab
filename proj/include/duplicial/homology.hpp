#pragma once

// The mixed complex (b, B) of a duplicial tower, the normalized complex,
// Hochschild and cyclic homology dimensions, and contracting homotopies for
// entwined coefficients.

#include "duplicial/duplicial.hpp"

namespace duplicial {

// f_n(x) = Σ_{k=0}^n C(n+1, k+1) (−x)^k, the polynomial with
// 1 − x f_n(x) = (1 − x)^{n+1}. Coefficients by increasing power.
inline std::vector<long long> f_coefficients(int n) {
  std::vector<long long> binom(n + 2, 0);
  binom[0] = 1;
  for (int r = 1; r <= n + 1; ++r)
    for (int k = r; k >= 1; --k) binom[k] += binom[k - 1];
  std::vector<long long> f(n + 1);
  for (int k = 0; k <= n; ++k) f[k] = (k % 2 ? -1 : 1) * binom[k + 1];
  return f;
}

// Expands both sides of 1 − x f_n(x) = (1 − x)^{n+1} as integer polynomials.
inline bool check_f_identity(int n) {
  const auto f = f_coefficients(n);
  std::vector<long long> lhs(n + 2, 0), rhs(n + 2, 0);
  lhs[0] = 1;
  for (int k = 0; k <= n; ++k) lhs[k + 1] -= f[k];
  rhs[0] = 1;
  for (int r = 0; r <= n; ++r)
    for (int k = r + 1; k >= 1; --k) rhs[k] -= rhs[k - 1];
  return lhs == rhs;
}

// C_n / (span of the degeneracy images), with the induced b.
template <class K>
struct NormalizedComplex {
  std::vector<int> dims;
  std::vector<LinMap<K>> b;           // b[n]: N_n -> N_{n-1}; b[0] maps to the zero space
  std::vector<LinMap<K>> q;           // C_n -> N_n
  std::vector<LinMap<K>> section;     // N_n -> C_n
  std::vector<LinMap<K>> degenerate;  // span of the degeneracy images in C_n
};

template <class K>
LinMap<K> alternating_faces(const SimplicialTower<K>& tw, int n) {
  LinMap<K> b = LinMap<K>::zero(Space::basis(tw.dims[n]), Space::basis(n ? tw.dims[n - 1] : 0));
  for (int i = 0; n > 0 && i <= n; ++i) b = b + K(i % 2 ? -1 : 1) * tw.faces[n][i];
  return b;
}

template <class K>
NormalizedComplex<K> normalize(const SimplicialTower<K>& tw) {
  NormalizedComplex<K> nc;
  for (int n = 0; n <= tw.top(); ++n) {
    const int dn = tw.dims[n];
    const int dp = n ? tw.dims[n - 1] : 0;
    LinMap<K> span = LinMap<K>::zero(Space::basis(n * dp), Space::basis(dn));
    for (int j = 0; j < n; ++j) span.entries.middleCols(j * dp, dp) = tw.degens[n - 1][j].entries;
    auto quo = linalg::quotient_by_image(span);
    nc.dims.push_back(quo.q.rows());
    nc.q.push_back(std::move(quo.q));
    nc.section.push_back(std::move(quo.section));
    nc.degenerate.push_back(std::move(span));
  }
  for (int n = 0; n <= tw.top(); ++n) {
    auto b = alternating_faces(tw, n);
    nc.b.push_back(n ? compose(nc.q[n - 1], b, nc.section[n]) : compose(b, nc.section[n]));
  }
  return nc;
}

// The mixed complex on the normalized complex: b = Σ(−1)^i d_i,
// s = Σ_{j=−1}^n (−1)^{j+1} s_j with s_{−1} = t s_n, B = s f_n(bs),
// T = t^{n+1}. On the normalized complex bs = 1 − (−1)^n t, so f_n(bs) is
// Connes' norm operator and B = s_{−1}N. On C itself the identities fail
// already for the constant object k; s and T preserve degenerate elements,
// so they descend.
template <class K>
struct MixedComplex {
  NormalizedComplex<K> norm;
  std::vector<int> dims;        // N_0..N_top
  std::vector<LinMap<K>> b;     // b[n]: N_n -> N_{n-1}
  std::vector<LinMap<K>> s;     // s[n]: N_n -> N_{n+1}, n < top
  std::vector<LinMap<K>> B;     // B[n]: N_n -> N_{n+1}, n < top
  std::vector<LinMap<K>> T;     // T[n] on N_n
  std::vector<LinMap<K>> s_c;   // s on C_n
  std::vector<LinMap<K>> T_c;   // T on C_n
  int top() const { return int(dims.size()) - 1; }
};

template <class K>
LinMap<K> poly_at(const std::vector<long long>& coeffs, const LinMap<K>& x) {
  LinMap<K> r = LinMap<K>::zero(x.domain, x.codomain);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = compose(x, r) + K(*it) * idn<K>(x.rows());
  return r;
}

template <class K>
MixedComplex<K> boundaries(const DuplicialTower<K>& tw) {
  MixedComplex<K> mc;
  mc.norm = normalize(tw);
  const auto& nc = mc.norm;
  mc.dims = nc.dims;
  mc.b = nc.b;
  const int top = tw.top();
  for (int n = 0; n <= top; ++n) {
    mc.T_c.push_back(power(tw.t[n], n + 1));
    mc.T.push_back(compose(nc.q[n], mc.T_c[n], nc.section[n]));
  }
  for (int n = 0; n < top; ++n) {
    LinMap<K> s = compose(tw.t[n + 1], tw.degens[n][n]);
    for (int j = 0; j <= n; ++j) s = s + K(j % 2 ? 1 : -1) * tw.degens[n][j];
    mc.s.push_back(compose(nc.q[n + 1], s, nc.section[n]));
    mc.s_c.push_back(std::move(s));
  }
  for (int n = 0; n < top; ++n)
    mc.B.push_back(compose(mc.s[n], poly_at(f_coefficients(n), compose(mc.b[n + 1], mc.s[n]))));
  return mc;
}

// s and T preserve degenerate elements; b² = 0, B² = 0 and bB + Bb = id − T.
template <class K>
Report check_mixed(const MixedComplex<K>& mc) {
  Report r;
  const auto& nc = mc.norm;
  const int top = mc.top();
  for (int n = 0; n <= top; ++n) {
    const std::string deg = " in degree " + std::to_string(n);
    r.add("T preserves degenerate elements" + deg, compose(nc.q[n], mc.T_c[n], nc.degenerate[n]).is_zero());
    if (n < top)
      r.add("s preserves degenerate elements" + deg, compose(nc.q[n + 1], mc.s_c[n], nc.degenerate[n]).is_zero());
    if (n >= 2) r.add("b² = 0" + deg, compose(mc.b[n - 1], mc.b[n]).is_zero());
    if (n + 1 < top) r.add("B² = 0" + deg, compose(mc.B[n + 1], mc.B[n]).is_zero());
    if (n < top) {
      LinMap<K> lhs = compose(mc.b[n + 1], mc.B[n]);
      if (n > 0) lhs = lhs + compose(mc.B[n - 1], mc.b[n]);
      record_equal(r, "bB + Bb = id − T" + deg, lhs, idn<K>(mc.dims[n]) - mc.T[n]);
    }
  }
  return r;
}

template <class K>
bool is_cyclic(const MixedComplex<K>& mc) {
  for (const auto& T : mc.T_c)
    if (!(T == idn<K>(T.rows()))) return false;
  return true;
}

// Homology of the normalized complex in degrees 0..top−1. Degree top would
// need C_{top+1} and is not reported.
template <class K>
std::vector<int> hh_dims(const SimplicialTower<K>& tw) {
  auto nc = normalize(tw);
  if (tw.top() == 0) return {};
  std::vector<LinMap<K>> d(nc.b.begin() + 1, nc.b.end());
  auto h = linalg::chain_homology(d);
  h.pop_back();
  return h;
}

template <class K>
struct CyclicDims {
  std::vector<int> dims;     // degrees 0..top of the truncated total complex
  std::vector<int> flagged;  // degrees whose value may change with a larger bound
};

// Tot_n = ⊕_k N_{n−2k} with differential b + B, for a cyclic tower.
template <class K>
std::vector<LinMap<K>> total_complex(const MixedComplex<K>& mc) {
  const int top = mc.top();
  auto offsets = [&](int n) {
    std::vector<int> off{0};
    for (int k = 0; n - 2 * k >= 0; ++k) off.push_back(off.back() + mc.dims[n - 2 * k]);
    return off;
  };
  std::vector<LinMap<K>> d;
  for (int n = 1; n <= top; ++n) {
    auto src = offsets(n), dst = offsets(n - 1);
    LinMap<K> D = LinMap<K>::zero(Space::basis(src.back()), Space::basis(dst.back()));
    for (int k = 0; n - 2 * k >= 0; ++k) {
      const int deg = n - 2 * k;
      // b: N_deg -> N_{deg−1}, block k of Tot_{n−1}
      if (deg >= 1)
        D.entries.block(dst[k], src[k], mc.dims[deg - 1], mc.dims[deg]) = mc.b[deg].entries;
      // B: N_deg -> N_{deg+1}, block k−1 of Tot_{n−1}
      if (k >= 1) D.entries.block(dst[k - 1], src[k], mc.dims[deg + 1], mc.dims[deg]) = mc.B[deg].entries;
    }
    d.push_back(std::move(D));
  }
  return d;
}

template <class K>
CyclicDims<K> hc_dims(const DuplicialTower<K>& tw) {
  auto mc = boundaries(tw);
  for (int n = 0; n <= mc.top(); ++n)
    if (!(mc.T_c[n] == idn<K>(mc.T_c[n].rows())))
      throw UsageError("cyclic homology needs a cyclic tower; t^" + std::to_string(n + 1) + " ≠ id in degree " +
                       std::to_string(n) + ", so bB + Bb = id − T is not zero");
  CyclicDims<K> out;
  const int top = mc.top();
  if (top == 0) {
    out.dims = {mc.dims[0]};
  } else {
    out.dims = linalg::chain_homology(total_complex(mc));
  }
  for (int n = std::max(0, top - 1); n <= top; ++n) out.flagged.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// Contracting homotopies for entwined coefficients

// ∇_X: NX -> NTX for N with ψ(n) = a⊗n', in the identification NTX ≅ X⊗N:
// x⊗n ↦ x·a ⊗ n'.
template <class K>
LinMap<K> nabla_N(const CCData<K>& cc, const LinMap<K>& psi, const Object<K>& X) {
  LeftCoefficient<K> N = cc.N;
  N.psi = psi;
  return compose(lambda_at(cc.H, N, X), present(cc.H, cc.N, X).s);
}

template <class K>
struct Homotopies {
  std::vector<LinMap<K>> bar;    // h_n: C_n -> C_{n+1} on CC_T
  std::vector<LinMap<K>> opbar;  // h_n: C_n -> C_{n+1} on CC_S^op
};

// Witness on the left: ψ: N -> H⊗N, and
//   bar:   h = ∇T^{n+1}M,
//   opbar: h = NS^{n+1}ρ ∘ Nχ^{n+1}M ∘ ∇S^{n+1}M.
// Witness on the right: ∇: M -> SM, and
//   bar:   h = λT^{n+1}M ∘ Nχ^{n+1}M ∘ NT^{n+1}∇,
//   opbar: h = NS^{n+1}∇.
// Each adds the new strand where d_0 acts, so d_0 h = id and d_i h = h d_{i−1}.
template <class K>
Homotopies<K> contracting_homotopies(const CCData<K>& cc, const EntwinedWitness<K>& w, int n_max) {
  const auto& M = cc.M.M;
  Homotopies<K> hs;
  for (int n = 0; n < n_max; ++n) {
    const std::string Tk = letters('T', n + 1), Sk = letters('S', n + 1);
    if (w.side == Side::left) {
      hs.bar.push_back(nabla_N(cc, w.nabla, apply_word(cc, Tk, M)));
      hs.opbar.push_back(compose(n_word(cc, Sk + "T", Sk + "S", map_word(cc, Sk, cc.M.rho), M),
                                 n_word(cc, "T" + Sk, Sk + "T", chi_S(cc, n + 1, M), M),
                                 nabla_N(cc, w.nabla, apply_word(cc, Sk, M))));
    } else {
      hs.bar.push_back(compose(lambda_at(cc.H, cc.N, apply_word(cc, Tk, M)),
                               n_word(cc, Tk + "S", "S" + Tk, chi_T(cc, n + 1, M), M),
                               n_word(cc, Tk, Tk + "S", map_word(cc, Tk, w.nabla), M)));
      hs.opbar.push_back(n_word(cc, Sk, Sk + "S", map_word(cc, Sk, w.nabla), M));
    }
  }
  return hs;
}

// d_0 h = id in every degree below the top; d_i h = h d_{i−1} and
// hb + bh = id from degree 1 on. In degree 0 the homotopy contracts onto the
// augmentation, so H_0 may survive.
template <class K>
Report check_contractible(const SimplicialTower<K>& tw, const std::vector<LinMap<K>>& h) {
  Report r;
  const int top = std::min(tw.top(), int(h.size()));
  for (int n = 0; n < top; ++n) {
    const std::string deg = " in degree " + std::to_string(n);
    record_equal(r, "d_0 h = id" + deg, compose(tw.faces[n + 1][0], h[n]), idn<K>(tw.dims[n]));
    if (n == 0) continue;
    for (int i = 1; i <= n + 1; ++i)
      record_equal(r, "d_" + std::to_string(i) + " h = h d_" + std::to_string(i - 1) + deg,
                   compose(tw.faces[n + 1][i], h[n]), compose(h[n - 1], tw.faces[n][i - 1]));
    record_equal(r, "hb + bh = id" + deg,
                 compose(alternating_faces(tw, n + 1), h[n]) + compose(h[n - 1], alternating_faces(tw, n)),
                 idn<K>(tw.dims[n]));
  }
  return r;
}

}  // namespace duplicial
