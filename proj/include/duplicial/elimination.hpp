#pragma once

// Row reduction, rank/kernel, quotients and homology of complexes.
// Over Q the forward pass is fraction-free (Bareiss) on integer-scaled rows;
// over F_p it is plain Gaussian elimination. Both finish in reduced row
// echelon form with pivots chosen as the first nonzero entry from the top,
// so kernel bases are deterministic.

#include <type_traits>

#include "duplicial/linalg.hpp"

namespace duplicial::linalg {

template <class K>
struct Echelon {
  Matrix<K> rref;
  std::vector<int> pivots;  // pivot column of row i
  int rank() const { return int(pivots.size()); }
};

namespace detail {

inline void scale_to_integers(Matrix<Rational>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Rational scale(1);
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      Rational y = a(i, j) * scale;
      if (!y.is_integer()) scale *= Rational::parse(y.den_str());
    }
    if (!scale.is_one())
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        if (!a(i, j).is_zero()) a(i, j) *= scale;
  }
}

inline std::vector<int> bareiss_forward(Matrix<Rational>& a) {
  const int m = int(a.rows()), n = int(a.cols());
  std::vector<int> pivots;
  Rational prev(1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Rational piv = a(r, c);
    const bool trivial = piv == prev;
    for (int i = r + 1; i < m; ++i) {
      const Rational lead = a(i, c);
      if (lead.is_zero()) {
        if (trivial) continue;
        for (int j = c + 1; j < n; ++j)
          if (!a(i, j).is_zero()) a(i, j) = (piv * a(i, j)) / prev;
        continue;
      }
      for (int j = c + 1; j < n; ++j) {
        const Rational& arj = a(r, j);
        if (a(i, j).is_zero() && arj.is_zero()) continue;
        a(i, j) = (piv * a(i, j) - lead * arj) / prev;
      }
      a(i, c) = Rational(0);
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::vector<int> gauss_forward(Matrix<K>& a) {
  const int m = int(a.rows()), n = int(a.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (!is_zero(a(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const K inv = a(r, c).inverse();
    for (int j = c; j < n; ++j)
      if (!is_zero(a(r, j))) a(r, j) = a(r, j) * inv;
    for (int i = r + 1; i < m; ++i) {
      const K lead = a(i, c);
      if (is_zero(lead)) continue;
      for (int j = c; j < n; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= lead * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Normalize pivots to 1 and clear above them.
template <class K>
void back_substitute(Matrix<K>& a, const std::vector<int>& pivots) {
  const int n = int(a.cols());
  for (int r = int(pivots.size()) - 1; r >= 0; --r) {
    const int c = pivots[r];
    if (!a(r, c).is_one()) {
      const K inv = a(r, c).inverse();
      for (int j = c; j < n; ++j)
        if (!is_zero(a(r, j))) a(r, j) = a(r, j) * inv;
    }
    for (int i = 0; i < r; ++i) {
      const K lead = a(i, c);
      if (is_zero(lead)) continue;
      for (int j = c; j < n; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= lead * a(r, j);
    }
  }
}

}  // namespace detail

template <class K>
Echelon<K> row_reduce(Matrix<K> a) {
  Echelon<K> e;
  if constexpr (std::is_same_v<K, Rational>) {
    detail::scale_to_integers(a);
    e.pivots = detail::bareiss_forward(a);
  } else {
    e.pivots = detail::gauss_forward(a);
  }
  detail::back_substitute(a, e.pivots);
  a.conservativeResize(e.rank(), Eigen::NoChange);
  e.rref = std::move(a);
  return e;
}

template <class K>
int rank(const LinMap<K>& f) {
  if (f.rows() == 0 || f.cols() == 0) return 0;
  // Reduce the shorter side; rank is transpose invariant.
  Matrix<K> m = f.rows() <= f.cols() ? f.entries : Matrix<K>(f.entries.transpose());
  if constexpr (std::is_same_v<K, Rational>) {
    detail::scale_to_integers(m);
    return int(detail::bareiss_forward(m).size());
  } else {
    return int(detail::gauss_forward(m).size());
  }
}

template <class K>
struct RankKernel {
  int rank = 0;
  std::vector<Vector<K>> kernel;  // one vector per free column, increasing
};

template <class K>
RankKernel<K> rank_kernel(const LinMap<K>& f) {
  RankKernel<K> out;
  const int n = f.cols();
  Echelon<K> e = row_reduce<K>(f.entries);
  out.rank = e.rank();
  std::vector<int> is_pivot(n, -1);
  for (int r = 0; r < e.rank(); ++r) is_pivot[e.pivots[r]] = r;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c] >= 0) continue;
    Vector<K> v = Vector<K>::Constant(n, K(0));
    v(c) = K(1);
    for (int r = 0; r < e.rank(); ++r)
      if (!is_zero(e.rref(r, c))) v(e.pivots[r]) = -e.rref(r, c);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

// Quotient of a space by a subspace spanned by columns of `span`.
// q reads coordinates at the non-pivot positions after reducing by the
// echelon basis of the subspace; `section` includes those positions back.
template <class K>
struct Quotient {
  LinMap<K> q;
  LinMap<K> section;
};

template <class K>
Quotient<K> quotient_by_image(const LinMap<K>& span) {
  const Space& cod = span.codomain;
  const int n = cod.dim;
  Echelon<K> e = row_reduce<K>(span.entries.transpose());
  std::vector<int> pivot_row(n, -1);
  for (int r = 0; r < e.rank(); ++r) pivot_row[e.pivots[r]] = r;
  std::vector<int> free;
  for (int c = 0; c < n; ++c)
    if (pivot_row[c] < 0) free.push_back(c);
  Space qs;
  qs.dim = int(free.size());
  for (int c : free) qs.labels.push_back(c < int(cod.labels.size()) ? "[" + cod.labels[c] + "]" : "[" + std::to_string(c) + "]");
  LinMap<K> q = LinMap<K>::zero(cod, qs);
  LinMap<K> s = LinMap<K>::zero(qs, cod);
  for (int k = 0; k < qs.dim; ++k) {
    q(k, free[k]) = K(1);
    s(free[k], k) = K(1);
  }
  for (int c = 0; c < n; ++c) {
    int r = pivot_row[c];
    if (r < 0) continue;
    for (int k = 0; k < qs.dim; ++k)
      if (!is_zero(e.rref(r, free[k]))) q(k, c) = -e.rref(r, free[k]);
  }
  return {std::move(q), std::move(s)};
}

// Surjection onto cod / Im(f - g) with q ∘ f = q ∘ g.
template <class K>
Quotient<K> coequalizer(const LinMap<K>& f, const LinMap<K>& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw DimensionError("coequalizer of maps " + f.codomain.describe() + " <- " + f.domain.describe() + " and " +
                         g.codomain.describe() + " <- " + g.domain.describe());
  return quotient_by_image(f - g);
}

template <class K>
LinMap<K> inverse(const LinMap<K>& f) {
  if (f.rows() != f.cols()) throw DimensionError("inverting a non-square map");
  const int n = f.rows();
  Matrix<K> aug(n, 2 * n);
  aug.leftCols(n) = f.entries;
  aug.rightCols(n) = Matrix<K>::Constant(n, n, K(0));
  for (int i = 0; i < n; ++i) aug(i, n + i) = K(1);
  Echelon<K> e = row_reduce<K>(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw std::domain_error("map is singular (" + f.codomain.describe() + " <- " + f.domain.describe() + ")");
  return LinMap<K>(f.codomain, f.domain, e.rref.rightCols(n));
}

// Some x with f x = b, if one exists.
template <class K>
std::optional<Vector<K>> solve(const LinMap<K>& f, const Vector<K>& b) {
  const int m = f.rows(), n = f.cols();
  Matrix<K> aug(m, n + 1);
  aug.leftCols(n) = f.entries;
  aug.col(n) = b;
  Echelon<K> e = row_reduce<K>(std::move(aug));
  Vector<K> x = Vector<K>::Constant(n, K(0));
  for (int r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == n) return std::nullopt;
    x(e.pivots[r]) = e.rref(r, n);
  }
  return x;
}

// Homology dimensions of C_k -> ... -> C_0 given d_1..d_k (d_n: C_n -> C_{n-1}).
template <class K>
std::vector<int> chain_homology(const std::vector<LinMap<K>>& d) {
  const int k = int(d.size());
  if (k == 0) return {};
  for (int n = 1; n < k; ++n) {
    if (d[n].codomain.dim != d[n - 1].domain.dim)
      throw DimensionError("differentials " + std::to_string(n) + " and " + std::to_string(n + 1) + " do not chain");
    if (!compose(d[n - 1], d[n]).is_zero())
      throw ComplexError("d∘d ≠ 0 at degree " + std::to_string(n + 1), n + 1);
  }
  std::vector<int> ranks(k + 2, 0), dims(k + 1);
  dims[0] = d[0].codomain.dim;
  for (int n = 1; n <= k; ++n) {
    dims[n] = d[n - 1].domain.dim;
    ranks[n] = rank(d[n - 1]);
  }
  std::vector<int> h(k + 1);
  for (int n = 0; n <= k; ++n) h[n] = dims[n] - ranks[n] - ranks[n + 1];
  return h;
}

}  // namespace duplicial::linalg
