#include "duplicial/setlab.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "duplicial/linalg.hpp"

namespace duplicial::setlab {

int Nested::depth() const { return is_atom() ? 0 : 1 + items.front().depth(); }

int Nested::size() const {
  if (is_atom()) return 1;
  int s = 0;
  for (const auto& x : items) s += x.size();
  return s;
}

std::string Nested::str() const {
  if (is_atom()) return std::string(1, char('a' + atom));
  std::string s = "[";
  for (size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i].str();
  return s + "]";
}

namespace {

void require_list(const Nested& l, const char* op) {
  if (l.is_atom() || l.items.empty()) throw std::domain_error(std::string(op) + ": expected a nonempty list");
}

std::string show(const FinList& l) {
  std::string s = "[";
  for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + "]";
}

}  // namespace

Nested from_list(const FinList& l) {
  if (l.empty()) throw std::domain_error("from_list: empty list");
  Nested r;
  for (int x : l) r.items.push_back(Nested::of(x));
  return r;
}

FinList to_list(const Nested& l) {
  require_list(l, "to_list");
  FinList r;
  for (const auto& x : l.items) {
    if (!x.is_atom()) throw std::domain_error("to_list: expected a flat list");
    r.push_back(x.atom);
  }
  return r;
}

Nested unit(const Nested& x) { return Nested::list({x}); }

Nested mult(const Nested& ll) {
  require_list(ll, "mult");
  Nested r;
  for (const auto& l : ll.items) {
    require_list(l, "mult");
    r.items.insert(r.items.end(), l.items.begin(), l.items.end());
  }
  return r;
}

Nested comult(const Nested& l) {
  require_list(l, "comult");
  Nested r;
  for (size_t i = 0; i < l.items.size(); ++i)
    r.items.push_back(Nested::list({l.items.begin() + i, l.items.end()}));
  return r;
}

Nested counit(const Nested& l) {
  require_list(l, "counit");
  return l.items.front();
}

// For i = 1..m and j = 1..n_i, in lexicographic order:
// [x_{i,j}, x_{i+1,1}, …, x_{m,1}].
Nested theta(const Nested& ll) {
  require_list(ll, "theta");
  for (const auto& l : ll.items) require_list(l, "theta");
  const size_t m = ll.items.size();
  Nested r;
  for (size_t i = 0; i < m; ++i)
    for (const auto& x : ll.items[i].items) {
      Nested term = Nested::list({x});
      for (size_t k = i + 1; k < m; ++k) term.items.push_back(ll.items[k].items.front());
      r.items.push_back(std::move(term));
    }
  return r;
}

Nested fmap(const std::function<Nested(const Nested&)>& f, const Nested& l) {
  require_list(l, "fmap");
  Nested r;
  for (const auto& x : l.items) r.items.push_back(f(x));
  return r;
}

long theta_length(const Nested& ll) {
  require_list(ll, "theta_length");
  const long m = long(ll.items.size());
  long s = 0;
  for (long i = 0; i < m; ++i) s += long(ll.items[i].items.size()) * (m - i);
  return s;
}

std::vector<Nested> enumerate(int k, int depth, int max_size) {
  // by[d][s]: all values of depth d with exactly s atoms
  std::vector<std::vector<std::vector<Nested>>> by(depth + 1, std::vector<std::vector<Nested>>(max_size + 1));
  if (max_size >= 1)
    for (int x = 0; x < k; ++x) by[0][1].push_back(Nested::of(x));
  for (int d = 1; d <= depth; ++d)
    for (int s = 1; s <= max_size; ++s) {
      // a first item of size a followed by a (possibly empty) tail of size s − a
      for (int a = 1; a <= s; ++a)
        for (const auto& head : by[d - 1][a]) {
          if (a == s) {
            by[d][s].push_back(Nested::list({head}));
            continue;
          }
          for (const auto& tail : by[d][s - a]) {
            Nested l = Nested::list({head});
            l.items.insert(l.items.end(), tail.items.begin(), tail.items.end());
            by[d][s].push_back(std::move(l));
          }
        }
    }
  std::vector<Nested> out;
  for (int s = 1; s <= max_size; ++s) out.insert(out.end(), by[depth][s].begin(), by[depth][s].end());
  return out;
}

Report check_bimonad(int k, int size_bound, const Theta& th) {
  Report r;
  r.title = "L+ bimonad on " + std::to_string(k) + " points, size <= " + std::to_string(size_bound);
  const auto d0 = enumerate(k, 0, size_bound), d1 = enumerate(k, 1, size_bound);
  const auto d2 = enumerate(k, 2, size_bound), d3 = enumerate(k, 3, size_bound);

  auto law = [&](const std::string& name, const std::vector<Nested>& inputs, auto lhs, auto rhs) {
    for (const auto& x : inputs) {
      auto a = lhs(x), b = rhs(x);
      if (!(a == b)) {
        r.add(name, false, "at " + x.str() + ": " + a.str() + " vs " + b.str());
        return;
      }
    }
    r.add(name, true);
  };
  auto id = [](const Nested& x) { return x; };
  auto L = [](auto f) { return [f](const Nested& x) { return fmap(f, x); }; };

  law("monad left unit", d1, [](const Nested& l) { return mult(unit(l)); }, id);
  law("monad right unit", d1, [&](const Nested& l) { return mult(fmap(unit, l)); }, id);
  law("monad associativity", d3, [](const Nested& l) { return mult(mult(l)); },
      [](const Nested& l) { return mult(fmap(mult, l)); });
  law("comonad left counit", d1, [](const Nested& l) { return counit(comult(l)); }, id);
  law("comonad right counit", d1, [](const Nested& l) { return fmap(counit, comult(l)); }, id);
  law("comonad coassociativity", d1, [](const Nested& l) { return comult(comult(l)); },
      [](const Nested& l) { return fmap(comult, comult(l)); });

  law("theta unit", d1, [&](const Nested& l) { return th(unit(l)); }, [](const Nested& l) { return fmap(unit, l); });
  law("theta multiplication", d3, [&](const Nested& l) { return th(mult(l)); },
      [&](const Nested& l) { return fmap(mult, th(fmap(th, l))); });
  law("theta counit", d2, [&](const Nested& l) { return counit(th(l)); },
      [](const Nested& l) { return fmap(counit, l); });
  law("theta comultiplication", d2, [&](const Nested& l) { return comult(th(l)); },
      [&](const Nested& l) { return fmap(th, th(fmap(comult, l))); });

  law("compatibility square", d2, [](const Nested& l) { return comult(mult(l)); },
      [&](const Nested& l) { return L(mult)(th(fmap(comult, l))); });
  law("counit of unit", d0, [](const Nested& x) { return counit(unit(x)); }, id);
  law("comultiplication of unit", d0, [](const Nested& x) { return comult(unit(x)); },
      [](const Nested& x) { return unit(unit(x)); });
  law("counit of multiplication", d2, [](const Nested& l) { return counit(mult(l)); },
      [](const Nested& l) { return counit(counit(l)); });
  return r;
}

// ---------------------------------------------------------------------------

std::optional<std::array<int, 3>> associativity_witness(const SemigroupTable& t) {
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      for (int c = 0; c < t.n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

void require_associative(const SemigroupTable& t) {
  if (int(t.op.size()) != t.n * t.n) throw ValidationError("semigroup table must have n*n entries");
  for (int v : t.op)
    if (v < 0 || v >= t.n) throw ValidationError("semigroup table entry out of range");
  if (auto w = associativity_witness(t))
    throw ValidationError("not associative at (" + std::to_string((*w)[0]) + ", " + std::to_string((*w)[1]) + ", " +
                          std::to_string((*w)[2]) + ")");
}

int fold(const SemigroupTable& t, const FinList& l) {
  if (l.empty()) throw std::domain_error("fold: empty list");
  int acc = l.front();
  for (size_t i = 1; i < l.size(); ++i) acc = t(acc, l[i]);
  return acc;
}

Nested v_product(const std::function<Nested(const Nested&, const Nested&)>& op, const Nested& a, const Nested& b) {
  require_list(a, "v_product");
  require_list(b, "v_product");
  Nested r;
  for (const auto& x : a.items) r.items.push_back(op(x, b.items.front()));
  r.items.insert(r.items.end(), b.items.begin(), b.items.end());
  return r;
}

FinList lift_v(const SemigroupTable& t, const FinList& a, const FinList& b) {
  auto op = [&](const Nested& x, const Nested& y) { return Nested::of(t(x.atom, y.atom)); };
  return to_list(v_product(op, from_list(a), from_list(b)));
}

FinList rho_left_machine(const SemigroupTable& t, const FinList& l) {
  if (l.empty()) throw std::domain_error("rho: empty list");
  FinList r(l.size());
  r.back() = l.back();
  for (size_t i = l.size() - 1; i-- > 0;) r[i] = t(l[i], r[i + 1]);
  return r;
}

Nested chi(const Nested& lists) {
  require_list(lists, "chi");
  auto concat = [](const Nested& x, const Nested& y) { return mult(Nested::list({x, y})); };
  std::optional<Nested> acc;
  for (const auto& l : lists.items) {
    Nested img = fmap(unit, l);
    acc = acc ? v_product(concat, *acc, img) : img;
  }
  return *acc;
}

Report check_semigroup_structures(const SemigroupTable& t, int max_len) {
  require_associative(t);
  Report r;
  r.title = "semigroup structures, lists of length <= " + std::to_string(max_len);
  if (t.n == 0) return r;

  std::vector<std::vector<FinList>> lists(max_len + 1);  // lists[len]
  lists[0].push_back({});
  for (int len = 1; len <= max_len; ++len)
    for (const auto& p : lists[len - 1])
      for (int x = 0; x < t.n; ++x) {
        auto q = p;
        q.push_back(x);
        lists[len].push_back(std::move(q));
      }

  auto alpha = [&](const Nested& l) { return Nested::of(fold(t, to_list(l))); };
  auto first_fail = [&](const std::string& name, auto pred) {
    for (int len = 1; len <= max_len; ++len)
      for (const auto& l : lists[len])
        if (auto w = pred(l)) {
          r.add(name, false, *w);
          return;
        }
    r.add(name, true);
  };
  using W = std::optional<std::string>;

  first_fail("fold unit", [&](const FinList& l) -> W {
    return l.size() == 1 && fold(t, l) != l[0] ? W(show(l)) : std::nullopt;
  });
  // α∘μ = α∘Bα over every split of l into consecutive blocks
  first_fail("fold multiplication", [&](const FinList& l) -> W {
    const int n = int(l.size());
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      FinList outer;
      int acc = l[0];
      for (int i = 1; i < n; ++i) {
        if (mask >> (i - 1) & 1) {
          outer.push_back(acc);
          acc = l[i];
        } else {
          acc = t(acc, l[i]);
        }
      }
      outer.push_back(acc);
      if (fold(t, outer) != fold(t, l)) return show(l) + " split " + std::to_string(mask);
    }
    return std::nullopt;
  });
  // lift_v associative on triples whose total length is within bound
  first_fail("V associativity", [&](const FinList& l) -> W {
    const int n = int(l.size());
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        FinList a(l.begin(), l.begin() + i), b(l.begin() + i, l.begin() + j), c(l.begin() + j, l.end());
        if (lift_v(t, lift_v(t, a, b), c) != lift_v(t, a, lift_v(t, b, c)))
          return show(a) + show(b) + show(c);
      }
    return std::nullopt;
  });
  // the product of VX is the structure map Cα∘θ
  first_fail("V product is Calpha.theta", [&](const FinList& l) -> W {
    for (size_t i = 1; i < l.size(); ++i) {
      FinList a(l.begin(), l.begin() + i), b(l.begin() + i, l.end());
      auto want = to_list(fmap(alpha, theta(Nested::list({from_list(a), from_list(b)}))));
      if (lift_v(t, a, b) != want) return show(a) + show(b);
    }
    return std::nullopt;
  });
  first_fail("rho is a semigroup map", [&](const FinList& l) -> W {
    for (size_t i = 1; i < l.size(); ++i) {
      FinList a(l.begin(), l.begin() + i), b(l.begin() + i, l.end());
      if (rho_left_machine(t, l) != lift_v(t, rho_left_machine(t, a), rho_left_machine(t, b)))
        return show(a) + show(b);
    }
    return std::nullopt;
  });
  first_fail("rho counit diagram", [&](const FinList& l) -> W {
    return rho_left_machine(t, l).front() != fold(t, l) ? W(show(l)) : std::nullopt;
  });
  // δ^S∘ρ = Sρ∘χ∘Tρ∘δ^T, with δ^T = FηU and Tρ applied letterwise
  first_fail("rho comultiplication diagram", [&](const FinList& l) -> W {
    auto rho = [&](const Nested& x) { return from_list(rho_left_machine(t, to_list(x))); };
    Nested lhs = comult(rho(from_list(l)));
    Nested delta_t = fmap(unit, from_list(l));
    Nested rhs = fmap(rho, chi(fmap(rho, delta_t)));
    return lhs == rhs ? std::nullopt : W(show(l) + ": " + lhs.str() + " vs " + rhs.str());
  });
  return r;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<FinList>> beta_of(const Forest& f) {
  const int n = int(f.size());
  std::vector<FinList> beta(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y >= 0; y = f[y]) {
      if (int(beta[x].size()) == n) return std::nullopt;
      beta[x].push_back(y);
    }
  }
  return beta;
}

std::vector<Forest> enumerate_forests(int n) {
  std::vector<Forest> out;
  Forest f(n, -1);
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      if (beta_of(f)) out.push_back(f);
      return;
    }
    for (int p = -1; p < n; ++p) {
      if (p == x) continue;
      f[x] = p;
      rec(x + 1);
    }
    f[x] = -1;
  };
  rec(0);
  return out;
}

bool is_coalgebra(const std::vector<FinList>& beta) {
  const int n = int(beta.size());
  for (int x = 0; x < n; ++x) {
    const auto& b = beta[x];
    if (b.empty() || b.front() != x) return false;
    for (size_t i = 0; i < b.size(); ++i) {
      if (b[i] < 0 || b[i] >= n) return false;
      if (beta[b[i]] != FinList(b.begin() + i, b.end())) return false;
    }
  }
  return true;
}

std::vector<std::vector<FinList>> enumerate_coalgebras(int n) {
  // candidates[x]: lists of length 1..n+1 over n points, starting at x
  std::vector<std::vector<FinList>> cand(n);
  for (int x = 0; x < n; ++x) {
    std::vector<FinList> layer{{x}};
    for (int len = 1; len <= n + 1; ++len) {
      cand[x].insert(cand[x].end(), layer.begin(), layer.end());
      std::vector<FinList> next;
      for (const auto& l : layer)
        for (int y = 0; y < n; ++y) {
          auto m = l;
          m.push_back(y);
          next.push_back(std::move(m));
        }
      layer = std::move(next);
    }
  }
  std::vector<std::vector<FinList>> out;
  std::vector<FinList> beta(n);
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      if (is_coalgebra(beta)) out.push_back(beta);
      return;
    }
    for (const auto& l : cand[x]) {
      beta[x] = l;
      rec(x + 1);
    }
  };
  rec(0);
  return out;
}

bool is_entwined(const SemigroupTable& t, const std::vector<FinList>& beta) {
  auto alpha = [&](const Nested& l) { return Nested::of(fold(t, to_list(l))); };
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      auto rhs = fmap(alpha, theta(Nested::list({from_list(beta[x]), from_list(beta[y])})));
      if (from_list(beta[t(x, y)]) != rhs) return false;
    }
  return true;
}

bool is_entwined_variant(const SemigroupTable& t, const std::vector<FinList>& beta) {
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      FinList want{t(x, y)};
      const auto& by = beta[y];
      for (size_t i = 1; i < by.size(); ++i) want.push_back(t(x, by[i]));
      want.insert(want.end(), by.begin(), by.end());
      if (beta[t(x, y)] != want) return false;
    }
  return true;
}

namespace {

// Every entry of the table that can be checked with the cells filled so far.
bool consistent(const std::vector<int>& op, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = op[a * n + b];
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        const int bc = op[b * n + c];
        if (bc < 0) continue;
        const int l = op[ab * n + c], r = op[a * n + bc];
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

void extend(std::vector<int>& op, int n, int cell, std::vector<SemigroupTable>& out) {
  if (cell == n * n) {
    out.push_back({n, op});
    return;
  }
  for (int v = 0; v < n; ++v) {
    op[cell] = v;
    if (consistent(op, n)) extend(op, n, cell + 1, out);
  }
  op[cell] = -1;
}

}  // namespace

std::vector<SemigroupTable> enumerate_semigroups(int n, int threads) {
  if (n < 0) throw UsageError("carrier size must be non-negative");
  if (n == 0) return {SemigroupTable{}};
  threads = std::max(1, std::min(threads, n));
  std::vector<std::vector<SemigroupTable>> shard(n);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (int v = w; v < n; v += threads) {
        std::vector<int> op(n * n, -1);
        op[0] = v;
        if (consistent(op, n)) extend(op, n, 1, shard[v]);
      }
    });
  for (auto& th : pool) th.join();
  std::vector<SemigroupTable> out;
  for (auto& s : shard) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::int64_t count_semigroups_bruteforce(int n) {
  if (n == 0) return 1;
  const int cells = n * n;
  SemigroupTable t{n, std::vector<int>(cells, 0)};
  std::int64_t count = 0;
  while (true) {
    if (!associativity_witness(t)) ++count;
    int i = 0;
    while (i < cells && ++t.op[i] == n) t.op[i++] = 0;
    if (i == cells) break;
  }
  return count;
}

int default_threads() {
  if (const char* e = std::getenv("DUPLICIAL_THREADS")) {
    const int v = std::atoi(e);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// A root r has β(r) = [r], and entwining forces
// β(r^k) = [r^k, r^{k−1}, …, r]. On a finite carrier some power breaks this.
std::string root_path(const SemigroupTable& t, const Forest& f, const std::vector<FinList>& beta) {
  const int r = int(std::find(f.begin(), f.end(), -1) - f.begin());
  std::ostringstream os;
  os << "table " << show(t.op) << ", pred " << show(f) << ": root " << r << " has beta = [" << r << "]";
  FinList forced{r};
  int power = r;
  for (int k = 2; k <= t.n + 1; ++k) {
    power = t(r, power);
    FinList want{power};
    want.insert(want.end(), forced.begin(), forced.end());
    if (beta[power] != want) {
      os << "; r^" << k << " = " << power << " needs beta " << show(want) << " but has " << show(beta[power]);
      return os.str();
    }
    forced = want;
  }
  return {};
}

}  // namespace

EntwinedSearch search_entwined(int n, int threads, bool bruteforce, int witness_limit) {
  EntwinedSearch s;
  s.n = n;
  const auto tables = enumerate_semigroups(n, threads);
  const auto forests = enumerate_forests(n);
  s.semigroups = std::int64_t(tables.size());
  s.forests = std::int64_t(forests.size());
  if (bruteforce) s.semigroups_bruteforce = count_semigroups_bruteforce(n);

  std::vector<std::vector<FinList>> betas;
  for (const auto& f : forests) betas.push_back(*beta_of(f));

  threads = std::max(1, threads);
  std::vector<std::int64_t> ent(threads, 0), disp(threads, 0);
  std::vector<std::string> paths(tables.size());
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (size_t i = w; i < tables.size(); i += threads)
        for (size_t j = 0; j < forests.size(); ++j) {
          if (is_entwined(tables[i], betas[j])) ++ent[w];
          if (is_entwined_variant(tables[i], betas[j])) ++disp[w];
          if (j == 0 && int(i) < witness_limit && n > 0) paths[i] = root_path(tables[i], forests[j], betas[j]);
        }
    });
  for (auto& th : pool) th.join();
  for (int w = 0; w < threads; ++w) {
    s.entwined += ent[w];
    s.entwined_variant += disp[w];
  }
  for (size_t i = 0; i < tables.size() && int(i) < witness_limit; ++i)
    if (!paths[i].empty()) s.witnesses.push_back(paths[i]);
  return s;
}

}  // namespace duplicial::setlab
