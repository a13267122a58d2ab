#pragma once

// Exact linear algebra on labeled finite-dimensional spaces.
//
// Tensor convention (used everywhere): the basis vector e_{i1} ⊗ ... ⊗ e_{ik}
// of V1 ⊗ ... ⊗ Vk has index ((i1 * d2 + i2) * d3 + ...), i.e. row-major with
// the leftmost factor varying slowest.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "duplicial/scalar.hpp"

namespace duplicial {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ComplexError : std::runtime_error {
  ComplexError(const std::string& what, int degree) : std::runtime_error(what), degree(degree) {}
  int degree;
};

namespace linalg {

template <class K>
using Matrix = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vector = Eigen::Matrix<K, Eigen::Dynamic, 1>;

struct Space {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<int> factors;  // nonempty iff registered as a tensor product

  static Space basis(int dim, const std::string& prefix = "e") {
    Space s;
    s.dim = dim;
    for (int i = 0; i < dim; ++i) s.labels.push_back(prefix + std::to_string(i));
    return s;
  }
  static Space labeled(std::vector<std::string> labels) {
    Space s;
    s.dim = int(labels.size());
    s.labels = std::move(labels);
    return s;
  }
  static Space ground() { return labeled({"1"}); }
  static Space zero() { return Space{}; }

  std::vector<int> shape() const { return factors.empty() ? std::vector<int>{dim} : factors; }
  bool operator==(const Space& o) const { return dim == o.dim && shape() == o.shape(); }

  std::string describe() const {
    std::string s = "space of dim " + std::to_string(dim);
    if (!factors.empty()) {
      s += " [";
      for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + std::to_string(factors[i]);
      s += "]";
    }
    return s;
  }
};

inline Space tensor(const Space& a, const Space& b) {
  Space s;
  s.dim = a.dim * b.dim;
  s.labels.reserve(s.dim);
  for (const auto& x : a.labels)
    for (const auto& y : b.labels) s.labels.push_back(x + "⊗" + y);
  s.factors = a.shape();
  auto fb = b.shape();
  s.factors.insert(s.factors.end(), fb.begin(), fb.end());
  return s;
}

template <class... Rest>
Space tensor(const Space& a, const Space& b, const Rest&... rest) {
  return tensor(tensor(a, b), rest...);
}

// V^{⊗n}; the 0th power is the ground field.
inline Space tensor_power(const Space& v, int n) {
  if (n == 0) return Space::ground();
  Space s = v;
  if (s.factors.empty()) s.factors = {v.dim};
  for (int i = 1; i < n; ++i) s = tensor(s, v);
  return s;
}

template <class K>
struct LinMap {
  Space domain;
  Space codomain;
  Matrix<K> entries;  // codomain.dim x domain.dim

  LinMap() = default;
  LinMap(Space dom, Space cod, Matrix<K> m) : domain(std::move(dom)), codomain(std::move(cod)), entries(std::move(m)) {
    if (entries.rows() != codomain.dim || entries.cols() != domain.dim)
      throw DimensionError("matrix shape " + std::to_string(entries.rows()) + "x" + std::to_string(entries.cols()) +
                           " does not match " + codomain.describe() + " <- " + domain.describe());
  }

  static LinMap zero(const Space& dom, const Space& cod) {
    return LinMap(dom, cod, Matrix<K>::Constant(cod.dim, dom.dim, K(0)));
  }
  static LinMap identity(const Space& s) {
    LinMap f = zero(s, s);
    for (int i = 0; i < s.dim; ++i) f.entries(i, i) = K(1);
    return f;
  }

  int rows() const { return int(entries.rows()); }
  int cols() const { return int(entries.cols()); }
  const K& operator()(int i, int j) const { return entries(i, j); }
  K& operator()(int i, int j) { return entries(i, j); }

  bool is_zero() const {
    for (Eigen::Index j = 0; j < entries.cols(); ++j)
      for (Eigen::Index i = 0; i < entries.rows(); ++i)
        if (!duplicial::is_zero(entries(i, j))) return false;
    return true;
  }
};

template <class K>
bool operator==(const LinMap<K>& f, const LinMap<K>& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) return false;
  for (int j = 0; j < f.cols(); ++j)
    for (int i = 0; i < f.rows(); ++i)
      if (!(f(i, j) == g(i, j))) return false;
  return true;
}

// Index of the first domain basis vector on which f and g disagree.
template <class K>
std::optional<int> first_difference(const LinMap<K>& f, const LinMap<K>& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw DimensionError("comparing maps of different shapes: " + f.codomain.describe() + " <- " +
                         f.domain.describe() + " vs " + g.codomain.describe() + " <- " + g.domain.describe());
  for (int j = 0; j < f.cols(); ++j)
    for (int i = 0; i < f.rows(); ++i)
      if (!(f(i, j) == g(i, j))) return j;
  return std::nullopt;
}

// f ∘ g
template <class K>
LinMap<K> compose(const LinMap<K>& f, const LinMap<K>& g) {
  if (f.domain.dim != g.codomain.dim)
    throw DimensionError("cannot compose: domain " + f.domain.describe() + " vs codomain " + g.codomain.describe());
  Matrix<K> r = Matrix<K>::Constant(f.rows(), g.cols(), K(0));
  const int n = f.rows();
  for (int j = 0; j < g.cols(); ++j) {
    for (int k = 0; k < g.rows(); ++k) {
      const K& gk = g(k, j);
      if (is_zero(gk)) continue;
      const bool unit = gk.is_one();
      for (int i = 0; i < n; ++i) {
        const K& fk = f(i, k);
        if (is_zero(fk)) continue;
        if (unit)
          r(i, j) += fk;
        else
          r(i, j) += fk * gk;
      }
    }
  }
  return LinMap<K>(g.domain, f.codomain, std::move(r));
}

template <class K, class... Rest>
LinMap<K> compose(const LinMap<K>& f, const LinMap<K>& g, const Rest&... rest) {
  return compose(f, compose(g, rest...));
}

template <class K>
LinMap<K> operator*(const LinMap<K>& f, const LinMap<K>& g) {
  return compose(f, g);
}

template <class K>
LinMap<K> operator+(const LinMap<K>& f, const LinMap<K>& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw DimensionError("cannot add maps " + f.codomain.describe() + " <- " + f.domain.describe() + " and " +
                         g.codomain.describe() + " <- " + g.domain.describe());
  LinMap<K> r = f;
  for (int j = 0; j < f.cols(); ++j)
    for (int i = 0; i < f.rows(); ++i)
      if (!is_zero(g(i, j))) r(i, j) += g(i, j);
  return r;
}

template <class K>
LinMap<K> operator*(const K& c, const LinMap<K>& f) {
  LinMap<K> r = f;
  for (int j = 0; j < f.cols(); ++j)
    for (int i = 0; i < f.rows(); ++i)
      if (!is_zero(f(i, j))) r(i, j) = c * f(i, j);
  return r;
}

template <class K>
LinMap<K> operator-(const LinMap<K>& f) {
  return K(-1) * f;
}

template <class K>
LinMap<K> operator-(const LinMap<K>& f, const LinMap<K>& g) {
  return f + (-g);
}

template <class K>
LinMap<K> kron(const LinMap<K>& f, const LinMap<K>& g) {
  const int p = g.rows(), q = g.cols();
  Matrix<K> r = Matrix<K>::Constant(f.rows() * p, f.cols() * q, K(0));
  for (int j = 0; j < f.cols(); ++j)
    for (int i = 0; i < f.rows(); ++i) {
      const K& a = f(i, j);
      if (is_zero(a)) continue;
      for (int l = 0; l < q; ++l)
        for (int k = 0; k < p; ++k) {
          const K& b = g(k, l);
          if (!is_zero(b)) r(i * p + k, j * q + l) = a.is_one() ? b : a * b;
        }
    }
  return LinMap<K>(tensor(f.domain, g.domain), tensor(f.codomain, g.codomain), std::move(r));
}

template <class K, class... Rest>
LinMap<K> kron(const LinMap<K>& f, const LinMap<K>& g, const Rest&... rest) {
  return kron(kron(f, g), rest...);
}

template <class K>
LinMap<K> id(const Space& s) {
  return LinMap<K>::identity(s);
}

// Multi-index helpers for the row-major convention.
inline std::vector<int> unflatten(int index, const std::vector<int>& shape) {
  std::vector<int> out(shape.size());
  for (int k = int(shape.size()) - 1; k >= 0; --k) {
    out[k] = index % shape[k];
    index /= shape[k];
  }
  return out;
}

inline int flatten(const std::vector<int>& idx, const std::vector<int>& shape) {
  int r = 0;
  for (std::size_t k = 0; k < shape.size(); ++k) r = r * shape[k] + idx[k];
  return r;
}

// Sends v_1 ⊗ ... ⊗ v_k to the tensor whose slot perm[j] holds v_j.
template <class K>
LinMap<K> permute_factors(const Space& space, const std::vector<int>& perm) {
  if (space.factors.empty()) throw UsageError("permute_factors needs a registered tensor product, got " + space.describe());
  const auto& shape = space.factors;
  const int k = int(shape.size());
  if (int(perm.size()) != k)
    throw UsageError("permutation of length " + std::to_string(perm.size()) + " on " + std::to_string(k) + " factors");
  std::vector<int> seen(k, 0);
  for (int p : perm) {
    if (p < 0 || p >= k || seen[p]) throw UsageError("not a permutation");
    seen[p] = 1;
  }
  std::vector<int> out_shape(k);
  for (int j = 0; j < k; ++j) out_shape[perm[j]] = shape[j];
  Space out;
  out.dim = space.dim;
  out.factors = out_shape;
  out.labels.resize(space.dim);
  LinMap<K> f = LinMap<K>::zero(space, out);
  std::vector<int> oi(k);
  for (int c = 0; c < space.dim; ++c) {
    auto ii = unflatten(c, shape);
    for (int j = 0; j < k; ++j) oi[perm[j]] = ii[j];
    int r = flatten(oi, out_shape);
    f(r, c) = K(1);
    if (!space.labels.empty()) out.labels[r] = space.labels[c];
  }
  f.codomain = out;
  return f;
}

// Re-register the codomain/domain shape without touching entries.
template <class K>
LinMap<K> reshape(LinMap<K> f, const Space& dom, const Space& cod) {
  if (dom.dim != f.domain.dim || cod.dim != f.codomain.dim) throw DimensionError("reshape changes dimensions");
  f.domain = dom;
  f.codomain = cod;
  return f;
}

template <class K>
LinMap<K> transpose(const LinMap<K>& f) {
  return LinMap<K>(f.codomain, f.domain, f.entries.transpose());
}

template <class K>
Vector<K> apply(const LinMap<K>& f, const Vector<K>& v) {
  Vector<K> r = Vector<K>::Constant(f.rows(), K(0));
  for (int k = 0; k < f.cols(); ++k) {
    if (is_zero(v(k))) continue;
    for (int i = 0; i < f.rows(); ++i)
      if (!is_zero(f(i, k))) r(i) += f(i, k) * v(k);
  }
  return r;
}

template <class K>
Vector<K> unit_vector(int dim, int i) {
  Vector<K> v = Vector<K>::Constant(dim, K(0));
  v(i) = K(1);
  return v;
}

// Random map with small integer entries (about half of them zero).
template <class K>
LinMap<K> random_map(const Space& dom, const Space& cod, std::mt19937_64& rng, const Field<K>& field, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::bernoulli_distribution nz(0.5);
  LinMap<K> f = LinMap<K>::zero(dom, cod);
  for (int j = 0; j < dom.dim; ++j)
    for (int i = 0; i < cod.dim; ++i)
      if (nz(rng)) f(i, j) = field.make(d(rng));
  return f;
}

}  // namespace linalg
}  // namespace duplicial
