#pragma once

// JSON structure-constant input:
//   {"dim": n, "field": "Q" | {"Fp": p}, "labels": [...],
//    "mult": mult[i][j] = coefficient vector of e_i e_j,
//    "unit": coefficient vector (optional, solved for when absent),
//    "comult": comult[i] = list of [j, k, c] meaning c e_j⊗e_k,
//    "counit": [...], "antipode": antipode[i] = coefficient vector of S(e_i)}
// Coefficients are integers or "p/q" strings. Missing "mult" gives a
// coalgebra, missing "comult" an algebra.

#include <json.hpp>

#include "duplicial/algebra.hpp"

namespace duplicial {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K>
K parse_scalar(const nlohmann::ordered_json& v, const Field<K>& f, const std::string& where) {
  try {
    if (v.is_number_integer()) return f.make(v.get<std::int64_t>());
    if (v.is_string()) return f.parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

template <class K>
Vector<K> parse_vector(const nlohmann::ordered_json& v, int n, const Field<K>& f, const std::string& where) {
  if (!v.is_array() || int(v.size()) != n)
    throw InputError(where + ": expected an array of length " + std::to_string(n));
  Vector<K> out(n);
  for (int i = 0; i < n; ++i) out(i) = parse_scalar(v[i], f, where + "[" + std::to_string(i) + "]");
  return out;
}

// The field declared in a document, if any: "Q" or {"Fp": p}.
inline std::optional<std::uint64_t> declared_modulus(const nlohmann::ordered_json& j) {
  if (!j.contains("field")) return std::nullopt;
  const auto& f = j["field"];
  if (f.is_string() && f.get<std::string>() == "Q") return 0;
  if (f.is_object() && f.contains("Fp") && f["Fp"].is_number_unsigned()) return f["Fp"].get<std::uint64_t>();
  throw InputError("field: expected \"Q\" or {\"Fp\": p}");
}

template <class K>
HopfData<K> load_algebra(const nlohmann::ordered_json& j, const Field<K>& f, const std::string& name = "input") {
  if (!j.is_object()) throw InputError("algebra: expected a JSON object");
  if (auto p = declared_modulus(j); p && *p != f.characteristic())
    throw InputError("field: document declares " + (*p ? "Fp:" + std::to_string(*p) : std::string("Q")) +
                     " but run uses " + f.name());
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw InputError("dim: expected a nonnegative integer");
  const int n = j["dim"].get<int>();
  HopfData<K> H;
  H.name = name;
  H.field = f;
  if (j.contains("labels")) {
    auto labels = j["labels"].get<std::vector<std::string>>();
    if (int(labels.size()) != n) throw InputError("labels: expected " + std::to_string(n) + " entries");
    H.space = Space::labeled(labels);
  } else {
    H.space = Space::basis(n);
  }
  const Space HH = tensor(H.space, H.space);
  if (j.contains("mult")) {
    const auto& m = j["mult"];
    if (!m.is_array() || int(m.size()) != n) throw InputError("mult: expected " + std::to_string(n) + " rows");
    AlgebraData<K> a{H.space, LinMap<K>::zero(HH, H.space), LinMap<K>::zero(Space::ground(), H.space)};
    for (int x = 0; x < n; ++x) {
      if (!m[x].is_array() || int(m[x].size()) != n)
        throw InputError("mult[" + std::to_string(x) + "]: expected " + std::to_string(n) + " entries");
      for (int y = 0; y < n; ++y) {
        auto v = parse_vector(m[x][y], n, f, "mult[" + std::to_string(x) + "][" + std::to_string(y) + "]");
        for (int k = 0; k < n; ++k) a.mult(k, x * n + y) = v(k);
      }
    }
    if (j.contains("unit")) {
      auto v = parse_vector(j["unit"], n, f, "unit");
      for (int k = 0; k < n; ++k) a.unit(k, 0) = v(k);
    } else {
      // u with m(u ⊗ e_x) = e_x for every x
      LinMap<K> sys = LinMap<K>::zero(H.space, tensor(H.space, H.space));
      linalg::Vector<K> rhs = linalg::Vector<K>::Constant(n * n, K(0));
      for (int x = 0; x < n; ++x) {
        for (int u = 0; u < n; ++u)
          for (int k = 0; k < n; ++k) sys(x * n + k, u) = a.mult(k, u * n + x);
        rhs(x * n + x) = K(1);
      }
      auto u = linalg::solve(sys, rhs);
      if (!u) throw InputError("unit: not given and the multiplication has no left unit");
      for (int k = 0; k < n; ++k) a.unit(k, 0) = (*u)(k);
    }
    H.algebra = std::move(a);
  }
  if (j.contains("comult")) {
    const auto& c = j["comult"];
    if (!c.is_array() || int(c.size()) != n) throw InputError("comult: expected " + std::to_string(n) + " entries");
    CoalgebraData<K> co{H.space, LinMap<K>::zero(H.space, HH), LinMap<K>::zero(H.space, Space::ground())};
    for (int x = 0; x < n; ++x)
      for (std::size_t t = 0; t < c[x].size(); ++t) {
        const auto& tr = c[x][t];
        std::string where = "comult[" + std::to_string(x) + "][" + std::to_string(t) + "]";
        if (!tr.is_array() || tr.size() != 3 || !tr[0].is_number_integer() || !tr[1].is_number_integer())
          throw InputError(where + ": expected [j, k, c]");
        int a = tr[0].get<int>(), b = tr[1].get<int>();
        if (a < 0 || a >= n || b < 0 || b >= n) throw InputError(where + ": index out of range");
        co.comult(a * n + b, x) += parse_scalar(tr[2], f, where);
      }
    if (!j.contains("counit")) throw InputError("counit: required with comult");
    auto e = parse_vector(j["counit"], n, f, "counit");
    for (int k = 0; k < n; ++k) co.counit(0, k) = e(k);
    H.coalgebra = std::move(co);
  }
  if (j.contains("antipode")) {
    const auto& s = j["antipode"];
    if (!s.is_array() || int(s.size()) != n) throw InputError("antipode: expected " + std::to_string(n) + " rows");
    LinMap<K> S = LinMap<K>::zero(H.space, H.space);
    for (int x = 0; x < n; ++x) {
      auto v = parse_vector(s[x], n, f, "antipode[" + std::to_string(x) + "]");
      for (int k = 0; k < n; ++k) S(k, x) = v(k);
    }
    H.antipode = std::move(S);
  }
  if (!H.algebra && !H.coalgebra) throw InputError("algebra: neither mult nor comult given");
  if (H.algebra && H.coalgebra)
    H.declared = H.antipode ? Strength::hopf : Strength::bialgebra;
  else
    H.declared = H.algebra ? Strength::algebra : Strength::coalgebra;
  if (j.contains("strength")) H.declared = parse_strength(j["strength"].get<std::string>());
  return H;
}

template <class K>
nlohmann::ordered_json scalar_json(const K& x) {
  return to_string(x);
}

template <class K>
nlohmann::ordered_json matrix_json(const LinMap<K>& f) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < f.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < f.cols(); ++j) row.push_back(to_string(f(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.pass && !c.witness.empty()) e["witness"] = c.witness;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace duplicial
