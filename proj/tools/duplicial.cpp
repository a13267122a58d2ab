// duplicial: command-line driver.
//
//   duplicial check    --preset ID | --algebra FILE
//   duplicial complex  --preset ID --coeff SPEC --max-degree N [--emit-matrices]
//   duplicial homology --preset ID --coeff SPEC --max-degree N
//   duplicial setlab   --search-entwined N | --bimonad K [--size-bound S]
//
// Exit status: 0 when every check passes, 1 when one fails, 2 on bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "duplicial/algebra_json.hpp"
#include "duplicial/homology.hpp"
#include "duplicial/setlab.hpp"
#include "duplicial/tuning.hpp"

#ifndef DUPLICIAL_VERSION
#define DUPLICIAL_VERSION "0.0.0"
#endif

using namespace duplicial;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string command;
  std::string field = "Q";
  std::string preset;
  std::string algebra;
  std::string coeff = "trivial";
  int max_degree = 4;
  std::string output;
  std::string format = "json";
  bool emit_matrices = false;
  bool force = false;
  int search_entwined = -1;
  int bimonad = -1;
  int size_bound = 5;
  int semigroup_len = 5;

  json to_json() const {
    json j;
    j["command"] = command;
    if (command == "setlab") {
      if (search_entwined >= 0) j["search_entwined"] = search_entwined;
      if (bimonad >= 0) {
        j["bimonad"] = bimonad;
        j["size_bound"] = size_bound;
      }
      return j;
    }
    j["field"] = field;
    if (!preset.empty()) j["preset"] = preset;
    if (!algebra.empty()) j["algebra"] = algebra;
    if (command != "check") {
      j["coeff"] = coeff;
      j["max_degree"] = max_degree;
      j["force"] = force;
    }
    if (command == "complex") j["emit_matrices"] = emit_matrices;
    return j;
  }
};

// Anything the user got wrong: reported with exit status 2.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput(path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw BadInput(path + ": " + e.what());
  }
}

template <class K>
LinMap<K> parse_matrix(const json& j, int rows, int cols, const Field<K>& f, const std::string& where) {
  if (!j.is_array() || int(j.size()) != rows)
    throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  LinMap<K> m = LinMap<K>::zero(Space::basis(cols), Space::basis(rows));
  for (int i = 0; i < rows; ++i) {
    auto v = parse_vector(j[i], cols, f, where + "[" + std::to_string(i) + "]");
    for (int c = 0; c < cols; ++c) m(i, c) = v(c);
  }
  return m;
}

void add_checks(json& out, const Report& r, const std::string& prefix = {}) {
  for (const auto& c : r.checks) out[prefix + c.name] = c.pass ? "pass" : "fail";
}

bool all_pass(const json& checks) {
  for (const auto& [k, v] : checks.items())
    if (v == "fail") return false;
  return true;
}

// ---------------------------------------------------------------------------

template <class K>
HopfData<K> load_hopf(const RunConfig& cfg, const Field<K>& f) {
  if (!cfg.preset.empty() && !cfg.algebra.empty()) throw BadInput("give either --preset or --algebra");
  if (!cfg.preset.empty()) return make_preset(cfg.preset, f);
  if (cfg.algebra.empty()) throw BadInput("one of --preset or --algebra is required");
  auto H = load_algebra(read_json_file(cfg.algebra), f, cfg.algebra);
  Report r = check_structure(H, H.declared);
  if (!r.ok()) throw ValidationError(H.name + " fails " + r.first_failure());
  return H;
}

template <class K>
struct Coefficients {
  RightCoefficient<K> M;
  LeftCoefficient<K> N;
  std::optional<EntwinedWitness<K>> witness;
};

// trivial | twist:antipode | path to {"right": {...}, "left": {...}}, each
// side {"dim", "action", "coaction"} and optionally "entwined": true on the
// right, declaring the coaction an S-coalgebra structure.
template <class K>
Coefficients<K> load_coefficients(const RunConfig& cfg, const HopfData<K>& H, const Field<K>& f) {
  if (cfg.coeff == "trivial") return {trivial_right(H), trivial_left(H), std::nullopt};
  if (cfg.coeff.rfind("twist:", 0) == 0) {
    if (cfg.coeff != "twist:antipode") throw BadInput("unknown 1-cell '" + cfg.coeff.substr(6) + "'");
    return {twist_coefficient(H, "H", H.m(), H.delta()), trivial_left(H), std::nullopt};
  }
  json j = read_json_file(cfg.coeff);
  if (auto p = declared_modulus(j); p && *p != f.characteristic())
    throw InputError("field: coefficient file does not match " + f.name());
  const int n = H.dim();
  Coefficients<K> c{trivial_right(H), trivial_left(H), std::nullopt};
  auto dim_of = [&](const json& side, const std::string& where) {
    if (!side.contains("dim") || !side["dim"].is_number_unsigned()) throw InputError(where + ".dim: expected an integer");
    return side["dim"].get<int>();
  };
  if (j.contains("right")) {
    const auto& s = j["right"];
    const int d = dim_of(s, "right");
    auto act = parse_matrix(s.at("action"), d, d * n, f, "right.action");
    auto co = parse_matrix(s.at("coaction"), n * d, d, f, "right.coaction");
    if (s.value("entwined", false)) {
      c.M = entwined_right(H, "M", act, co);
      c.witness = EntwinedWitness<K>{Side::right, co};
    } else {
      c.M = make_right_coeff(H, "M", act, co, cfg.force);
    }
  }
  if (j.contains("left")) {
    const auto& s = j["left"];
    const int d = dim_of(s, "left");
    auto act = parse_matrix(s.at("action"), d, n * d, f, "left.action");
    auto co = parse_matrix(s.at("coaction"), n * d, d, f, "left.coaction");
    c.N = make_left_coeff(H, "N", act, co, cfg.force);
  }
  return c;
}

template <class K>
json cmd_check(const RunConfig& cfg, const Field<K>& f) {
  auto H = load_hopf(cfg, f);
  json out, checks;
  out["algebra"] = {{"name", H.name}, {"dim", H.dim()}, {"strength", to_string(H.declared)}};
  add_checks(checks, check_structure(H, H.declared), "structure: ");
  if (H.antipode) {
    auto L = yd_lift(H);
    auto probes = module_probes(H, Side::right);
    add_checks(checks, check_distlaw(yd_braiding(H).nat(), induced_comonad(L.adj), L.S, probes), "braiding: ");
    auto a = arise_from_lift(L);
    add_checks(checks, check_arise_diagrams(L, a, probes), "arise: ");
    add_checks(checks, check_mixed(a.theta, induced_monad(L.adj), L.C, vect_probes(H)), "mixed law: ");
    auto g = v_galois_check(H);
    checks["galois: composite equals beta"] = g.matches_beta ? "pass" : "fail";
    checks["galois: codiagonal lift is Galois"] = g.galois ? "pass" : "fail";
    add_checks(checks, check_antipode_one_cell(H, antipode_one_cell(H)), "antipode 1-cell: ");
  } else if (H.algebra && H.coalgebra) {
    auto g = galois_beta(H);
    out["galois_beta_invertible"] = g.invertible;
  }
  out["checks"] = checks;
  return out;
}

template <class K>
json tower_json(const DuplicialTower<K>& tw, bool matrices) {
  json j;
  j["dims"] = tw.dims;
  json checks;
  add_checks(checks, check_duplicial(tw));
  j["checks"] = checks;
  j["cyclic"] = is_cyclic(tw);
  if (matrices) {
    json m = json::array();
    for (int n = 0; n <= tw.top(); ++n) {
      json d;
      d["degree"] = n;
      d["t"] = matrix_json(tw.t[n]);
      json faces = json::array(), degens = json::array();
      for (const auto& x : tw.faces[n]) faces.push_back(matrix_json(x));
      for (const auto& x : tw.degens[n]) degens.push_back(matrix_json(x));
      d["faces"] = faces;
      d["degeneracies"] = degens;
      m.push_back(d);
    }
    j["matrices"] = m;
  }
  return j;
}

template <class K>
json cmd_complex(const RunConfig& cfg, const Field<K>& f) {
  auto H = load_hopf(cfg, f);
  auto c = load_coefficients(cfg, H, f);
  auto cc = cc_data(H, c.M, c.N);
  auto tw = cc_towers(cc, cfg.max_degree);
  json out;
  out["coefficients"] = {{"right", c.M.name}, {"left", c.N.name}, {"sayd", check_sayd(H, c.M, c.N)},
                         {"anti_yd", check_anti_yd(H, c.M)}};
  out["bar"] = tower_json(tw.bar, cfg.emit_matrices);
  out["opbar"] = tower_json(tw.opbar, cfg.emit_matrices);
  auto cmp = build_R_L(cc, cfg.max_degree);
  json checks;
  add_checks(checks, check_duplicial(tw.bar), "bar: ");
  add_checks(checks, check_duplicial(tw.opbar), "opbar: ");
  add_checks(checks, check_prop_cyc(cmp, tw), "comparison: ");
  out["lr_identity"] = lr_identity(cmp);
  out["checks"] = checks;
  return out;
}

template <class K>
json cmd_homology(const RunConfig& cfg, const Field<K>& f) {
  auto H = load_hopf(cfg, f);
  auto c = load_coefficients(cfg, H, f);
  auto cc = cc_data(H, c.M, c.N);
  auto tw = bar_tower(cc, cfg.max_degree + 1);
  json out, checks;
  out["tower"] = "bar";
  out["hh"] = hh_dims(tw);
  add_checks(checks, check_duplicial(tw), "duplicial: ");
  auto mc = boundaries(tw);
  add_checks(checks, check_mixed(mc), "mixed: ");
  if (is_cyclic(mc)) {
    auto hc = hc_dims(tw);
    out["hc"] = hc.dims;
    out["truncation_flagged"] = hc.flagged;
  } else {
    out["hc"] = nullptr;
    out["truncation_flagged"] = json::array();
  }
  if (c.witness) {
    auto hs = contracting_homotopies(cc, *c.witness, cfg.max_degree + 1);
    add_checks(checks, check_contractible(tw, hs.bar), "contractible: ");
  }
  out["checks"] = checks;
  return out;
}

json cmd_setlab(const RunConfig& cfg) {
  json out, checks;
  if (cfg.search_entwined < 0 && cfg.bimonad < 0) throw BadInput("setlab needs --search-entwined or --bimonad");
  if (cfg.bimonad >= 0) {
    auto r = setlab::check_bimonad(cfg.bimonad, cfg.size_bound);
    add_checks(checks, r, "bimonad: ");
  }
  if (cfg.search_entwined >= 0) {
    const int n = cfg.search_entwined;
    if (n > 3) std::cerr << "warning: carrier size " << n << " is expensive\n";
    auto s = setlab::search_entwined(n, setlab::default_threads(), n <= 3);
    out["n"] = n;
    out["semigroups"] = s.semigroups;
    if (s.semigroups_bruteforce >= 0) {
      out["semigroups_bruteforce"] = s.semigroups_bruteforce;
      checks["semigroup counts agree"] = s.semigroups == s.semigroups_bruteforce ? "pass" : "fail";
    }
    out["forests"] = s.forests;
    out["entwined"] = s.entwined;
    out["entwined_variant"] = s.entwined_variant;
    out["witnesses"] = s.witnesses;
    for (const auto& t : setlab::enumerate_semigroups(std::min(n, 3), 1))
      add_checks(checks, setlab::check_semigroup_structures(t, cfg.semigroup_len));
  }
  out["checks"] = checks;
  return out;
}

// ---------------------------------------------------------------------------

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// The table of a report: degree rows for homology, key/value rows otherwise,
// followed by the checks.
std::string to_csv(const std::string& command, const json& payload) {
  std::ostringstream os;
  if (command == "homology") {
    os << "degree,hh,hc,flagged\n";
    const auto& hh = payload["hh"];
    const auto& hc = payload["hc"];
    const auto& fl = payload["truncation_flagged"];
    const size_t rows = std::max(hh.size(), hc.is_array() ? hc.size() : size_t(0));
    for (size_t n = 0; n < rows; ++n) {
      bool flagged = std::find(fl.begin(), fl.end(), json(n)) != fl.end();
      os << n << "," << (n < hh.size() ? cell(hh[n]) : "") << ","
         << (hc.is_array() && n < hc.size() ? cell(hc[n]) : "") << "," << (flagged ? "yes" : "no") << "\n";
    }
  } else if (command == "complex") {
    os << "tower,degree,dim\n";
    for (const char* t : {"bar", "opbar"}) {
      const auto& d = payload[t]["dims"];
      for (size_t n = 0; n < d.size(); ++n) os << t << "," << n << "," << cell(d[n]) << "\n";
    }
  } else {
    os << "key,value\n";
    for (const auto& [k, v] : payload.items())
      if (k != "checks" && !v.is_structured()) os << csv_quote(k) << "," << csv_quote(cell(v)) << "\n";
  }
  os << "check,status\n";
  for (const auto& [k, v] : payload["checks"].items()) os << csv_quote(k) << "," << cell(v) << "\n";
  return os.str();
}

template <class K>
json dispatch(const RunConfig& cfg, const Field<K>& f) {
  if (cfg.command == "check") return cmd_check(cfg, f);
  if (cfg.command == "complex") return cmd_complex(cfg, f);
  return cmd_homology(cfg, f);
}

json run(const RunConfig& cfg) {
  if (cfg.command == "setlab") return cmd_setlab(cfg);
  if (cfg.field == "Q") return dispatch(cfg, Field<Rational>{});
  if (cfg.field.rfind("Fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(cfg.field.substr(3));
    } catch (const std::exception&) {
      throw BadInput("--field: bad modulus in '" + cfg.field + "'");
    }
    if (!is_prime(p)) throw BadInput("--field: " + std::to_string(p) + " is not prime");
    return dispatch(cfg, Field<ModP>{p});
  }
  throw BadInput("--field: expected Q or Fp:p, got '" + cfg.field + "'");
}

void emit(const RunConfig& cfg, const json& doc, const json& payload) {
  const std::string text = cfg.format == "csv" ? to_csv(cfg.command, payload) : doc.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw BadInput(cfg.output + ": cannot write");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  tune_allocator();
  RunConfig cfg;
  CLI::App app{"Duplicial objects, Hopf-cyclic towers and their homology"};
  app.set_version_flag("--version", DUPLICIAL_VERSION);
  app.require_subcommand(1);

  auto common = [&](CLI::App* s, bool coeff) {
    s->add_option("--field", cfg.field, "Q or Fp:p");
    s->add_option("--preset", cfg.preset, "group_algebra:<G>, dual_group_algebra:<G>, sweedler_h4, ...");
    s->add_option("--algebra", cfg.algebra, "structure-constant JSON file")->check(CLI::ExistingFile);
    s->add_option("--output", cfg.output, "report path (default stdout)");
    s->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    if (coeff) {
      s->add_option("--coeff", cfg.coeff, "trivial, twist:antipode or a coefficient JSON file");
      s->add_option("--max-degree", cfg.max_degree, "top degree")->check(CLI::NonNegativeNumber);
      s->add_flag("--force", cfg.force, "skip coefficient validation");
    }
  };
  auto* check = app.add_subcommand("check", "structure, distributive-law and Galois checks");
  common(check, false);
  auto* complex = app.add_subcommand("complex", "build both towers and check them");
  common(complex, true);
  complex->add_flag("--emit-matrices", cfg.emit_matrices, "include faces, degeneracies and t");
  auto* homology = app.add_subcommand("homology", "Hochschild and cyclic homology dimensions");
  common(homology, true);
  auto* setlab = app.add_subcommand("setlab", "the nonempty list bimonad and entwined semigroups");
  setlab->add_option("--search-entwined", cfg.search_entwined, "carrier size")->check(CLI::NonNegativeNumber);
  setlab->add_option("--bimonad", cfg.bimonad, "carrier size for the bimonad laws")->check(CLI::NonNegativeNumber);
  setlab->add_option("--size-bound", cfg.size_bound, "atoms per input for the bimonad laws")
      ->check(CLI::NonNegativeNumber);
  setlab->add_option("--output", cfg.output, "report path (default stdout)");
  setlab->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (auto* s : {check, complex, homology, setlab})
    if (s->parsed()) cfg.command = s->get_name();

  json doc;
  doc["tool"] = {{"name", "duplicial"}, {"version", DUPLICIAL_VERSION}};
  doc["config"] = cfg.to_json();
  try {
    json payload = run(cfg);
    for (const auto& [k, v] : payload.items()) doc[k] = v;
    const bool ok = all_pass(payload["checks"]);
    doc["status"] = ok ? "pass" : "fail";
    emit(cfg, doc, payload);
    return ok ? 0 : 1;
  } catch (const ValidationError& e) {
    doc["status"] = "fail";
    doc["error"] = e.what();
    json payload{{"checks", {{"validation", "fail"}}}};
    doc["checks"] = payload["checks"];
    emit(cfg, doc, payload);
    std::cerr << "validation failed: " << e.what() << "\n";
    return 1;
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
  }
  return 2;
}
