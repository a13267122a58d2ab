#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <random>
#include <set>

#include "duplicial/linalg.hpp"
#include "duplicial/setlab.hpp"

using namespace duplicial::setlab;
using duplicial::ValidationError;

namespace {

Nested at(int x) { return Nested::of(x); }
Nested L(std::vector<Nested> xs) { return Nested::list(std::move(xs)); }
Nested flat(std::initializer_list<int> xs) { return from_list(FinList(xs)); }

const int a = 0, b = 1, c = 2;

Nested reversed_theta(const Nested& ll) {
  auto r = theta(ll);
  std::reverse(r.items.begin(), r.items.end());
  return r;
}

SemigroupTable z2() { return {2, {0, 1, 1, 0}}; }

// A list of lists over k points with `total` atoms; each gap between
// consecutive atoms starts a new inner list with probability 1/2.
Nested random_nested(std::mt19937& g, int k, int total) {
  std::uniform_int_distribution<int> pick(0, k - 1), coin(0, 1);
  Nested out = L({L({at(pick(g))})});
  for (int i = 1; i < total; ++i) {
    if (coin(g)) out.items.push_back(L({at(pick(g))}));
    else out.items.back().items.push_back(at(pick(g)));
  }
  return out;
}

}  // namespace

TEST_CASE("list monad and comonad maps") {
  CHECK(mult(L({flat({a}), flat({b, c})})) == flat({a, b, c}));
  CHECK(comult(flat({a, b})) == L({flat({a, b}), flat({b})}));
  CHECK(counit(flat({b, a})) == at(b));
  CHECK(unit(at(a)) == flat({a}));
  CHECK_THROWS_AS(counit(L({})), std::domain_error);
  CHECK_THROWS_AS(mult(L({flat({a}), L({})})), std::domain_error);
  CHECK_THROWS_AS(from_list({}), std::domain_error);
}

TEST_CASE("theta") {
  CHECK(theta(L({flat({a})})) == L({flat({a})}));
  CHECK(theta(L({flat({a}), flat({b})})) == L({flat({a, b}), flat({b})}));
  auto t = theta(L({flat({a, b}), flat({c})}));
  CHECK(t == L({flat({a, c}), flat({b, c}), flat({c})}));
  CHECK(mult(t).items.size() == 5);
  CHECK_THROWS_AS(theta(L({flat({a}), L({})})), std::domain_error);
  CHECK_THROWS_AS(theta(L({})), std::domain_error);
}

TEST_CASE("theta length on random inputs") {
  std::mt19937 g(20240617);
  std::uniform_int_distribution<int> k(1, 4), total(1, 8);
  for (int i = 0; i < 500; ++i) {
    auto ll = random_nested(g, k(g), total(g));
    CAPTURE(ll.str());
    CHECK(long(mult(theta(ll)).items.size()) == theta_length(ll));
  }
}

TEST_CASE("enumeration sizes") {
  // depth 1: Σ k^s; depth 2: Σ 2^{s−1} k^s
  CHECK(enumerate(2, 1, 3).size() == 2 + 4 + 8);
  CHECK(enumerate(2, 2, 3).size() == 2 + 2 * 4 + 4 * 8);
  CHECK(enumerate(1, 3, 3).size() == 1 + 3 + 9);
  auto e = enumerate(3, 2, 4);
  for (size_t i = 1; i < e.size(); ++i) CHECK(e[i - 1].size() <= e[i].size());
}

TEST_CASE("L+ is a bimonad") {
  auto r1 = check_bimonad(1, 4);
  CHECK_MESSAGE(r1.ok(), r1.first_failure());
  for (int k = 1; k <= 3; ++k) {
    auto r = check_bimonad(k, 5);
    CHECK_MESSAGE(r.ok(), r.first_failure());
    CHECK(r.checks.size() == 14);
  }
  // both sides of the compatibility square on [[a],[b]]
  auto ll = L({flat({a}), flat({b})});
  CHECK(comult(mult(ll)) == L({flat({a, b}), flat({b})}));
  CHECK(fmap(mult, theta(fmap(comult, ll))) == L({flat({a, b}), flat({b})}));
}

TEST_CASE("reversed theta fails with a minimal witness") {
  auto r = check_bimonad(2, 5, reversed_theta);
  CHECK_FALSE(r.ok());
  const auto* u = r.find("theta unit");
  REQUIRE(u);
  CHECK_FALSE(u->pass);
  CHECK(u->witness.rfind("at [a,b]:", 0) == 0);
  const auto* sq = r.find("compatibility square");
  REQUIRE(sq);
  CHECK_FALSE(sq->pass);
  CHECK(sq->witness.rfind("at [[a],[a]]:", 0) == 0);
}

TEST_CASE("semigroups and the lift V") {
  SemigroupTable one{1, {0}};
  CHECK(lift_v(one, {0}, {0}) == FinList{0, 0});
  SemigroupTable left_zero{4, {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3}};
  CHECK(lift_v(left_zero, {0, 1}, {2, 3}) == FinList{0, 1, 2, 3});
  SemigroupTable right_zero{4, {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3}};
  CHECK(lift_v(right_zero, {0, 1}, {2, 3}) == FinList{2, 2, 2, 3});
  // fold is left to right; on a non-commutative semigroup the order shows
  CHECK(fold(left_zero, {2, 0, 1}) == 2);
  CHECK(fold(right_zero, {2, 0, 1}) == 1);
  CHECK(fold(z2(), {1, 1, 1}) == 1);
  SemigroupTable bad{2, {1, 0, 0, 0}};
  CHECK_THROWS_AS(require_associative(bad), ValidationError);
  try {
    require_associative(bad);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("(0, 0, 1)") != std::string::npos);
  }
  CHECK_THROWS_AS(check_semigroup_structures(bad, 3), ValidationError);
}

TEST_CASE("left machine expansion") {
  SemigroupTable left_zero{3, {0, 0, 0, 1, 1, 1, 2, 2, 2}};
  CHECK(rho_left_machine(left_zero, {0, 1}) == FinList{0, 1});
  CHECK(rho_left_machine(z2(), {1}) == FinList{1});
  CHECK(rho_left_machine(z2(), {1, 1}) == FinList{0, 1});
  CHECK(rho_left_machine(z2(), {1, 0, 1}) == FinList{0, 1, 1});
  // χ on lists: the suffix lists of the concatenation
  CHECK(chi(L({flat({a}), flat({b}), flat({c})})) == L({flat({a, b, c}), flat({b, c}), flat({c})}));
  CHECK(chi(L({flat({a, b})})) == L({flat({a}), flat({b})}));
}

TEST_CASE("semigroup structures on every semigroup with at most 3 elements") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_semigroups(n, 2)) {
      auto r = check_semigroup_structures(t, n <= 2 ? 6 : 5);
      CHECK_MESSAGE(r.ok(), r.first_failure());
    }
}

TEST_CASE("forests are exactly the L+ coalgebras") {
  CHECK(enumerate_forests(0).size() == 1);
  CHECK(enumerate_forests(1).size() == 1);
  CHECK(enumerate_forests(2).size() == 3);
  CHECK(enumerate_forests(3).size() == 16);
  for (int n = 0; n <= 3; ++n) {
    std::set<std::vector<FinList>> from_forests, all;
    for (const auto& f : enumerate_forests(n)) {
      auto beta = beta_of(f);
      REQUIRE(beta);
      CHECK(is_coalgebra(*beta));
      from_forests.insert(*beta);
    }
    for (const auto& beta : enumerate_coalgebras(n)) all.insert(beta);
    CHECK(all == from_forests);
  }
  CHECK_FALSE(beta_of(Forest{1, 0}));
  CHECK_FALSE(is_coalgebra({{0, 1}, {1, 1}}));
}

TEST_CASE("semigroup counts") {
  const std::vector<std::int64_t> want{1, 1, 8, 113};
  for (int n = 0; n <= 3; ++n) {
    CHECK(std::int64_t(enumerate_semigroups(n, 1).size()) == want[n]);
    CHECK(std::int64_t(enumerate_semigroups(n, 4).size()) == want[n]);
    CHECK(count_semigroups_bruteforce(n) == want[n]);
  }
  CHECK(enumerate_semigroups(4, 4).size() == 3492);
}

TEST_CASE("only the empty semigroup is entwined") {
  auto s0 = search_entwined(0, 2);
  CHECK(s0.semigroups == 1);
  CHECK(s0.entwined == 1);
  CHECK(s0.entwined_variant == 1);

  auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 3; ++n) {
    auto s = search_entwined(n, 2);
    CHECK(s.semigroups == s.semigroups_bruteforce);
    CHECK(s.entwined == 0);
    CHECK(s.entwined_variant == 0);
    CHECK(!s.witnesses.empty());
  }
  CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(60));

  // n = 1: β(x) = [x], and β(xx) would have to be [xx, x]
  auto s1 = search_entwined(1, 1);
  REQUIRE(s1.witnesses.size() == 1);
  CHECK(s1.witnesses[0].find("r^2 = 0 needs beta [0,0] but has [0]") != std::string::npos);
}

TEST_CASE("the root path finds a contradiction for every table and forest") {
  // a root r has β(r) = [r]; the chain r, r², … on a finite carrier must
  // break the forced shape [r^k, …, r], so is_entwined never holds
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_semigroups(n, 2))
      for (const auto& f : enumerate_forests(n)) {
        auto beta = *beta_of(f);
        CHECK_FALSE(is_entwined(t, beta));
      }
}

TEST_CASE("the entwining condition is β(xy) = β(x)β(y) in V") {
  SemigroupTable t = z2();
  std::vector<FinList> beta{{0}, {1, 0}};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      auto alpha = [&](const Nested& l) { return Nested::of(fold(t, to_list(l))); };
      auto via_theta = to_list(fmap(alpha, theta(L({from_list(beta[x]), from_list(beta[y])}))));
      CHECK(via_theta == lift_v(t, beta[x], beta[y]));
    }
}

TEST_CASE("DUPLICIAL_THREADS sets the thread count") {
  setenv("DUPLICIAL_THREADS", "3", 1);
  CHECK(default_threads() == 3);
  setenv("DUPLICIAL_THREADS", "0", 1);
  CHECK(default_threads() >= 1);
  unsetenv("DUPLICIAL_THREADS");
  auto a = search_entwined(3, 1), b = search_entwined(3, 5);
  CHECK(a.semigroups == b.semigroups);
  CHECK(a.witnesses == b.witnesses);
}
