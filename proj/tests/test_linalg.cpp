#include <doctest.h>

#include "duplicial/elimination.hpp"

using namespace duplicial;
using namespace duplicial::linalg;
using Q = Rational;
using Map = LinMap<Q>;

namespace {

Map from_rows(const Space& dom, const Space& cod, std::vector<std::vector<int>> rows) {
  Map f = Map::zero(dom, cod);
  for (int i = 0; i < cod.dim; ++i)
    for (int j = 0; j < dom.dim; ++j) f(i, j) = Q(rows[i][j]);
  return f;
}

Space two() { return Space::basis(2); }
Space three() { return Space::basis(3); }

}  // namespace

TEST_CASE("compose: identities, zero, swap squared") {
  Map i2 = Map::identity(two());
  CHECK(compose(i2, i2) == i2);
  Map z = Map::zero(two(), two());
  Map f = from_rows(two(), two(), {{1, 2}, {3, 4}});
  CHECK(compose(f, z).is_zero());
  Space s = tensor(two(), two());
  Map swap = permute_factors<Q>(s, {1, 0});
  // hand-written 4x4 swap: e_i⊗e_j -> e_j⊗e_i
  Map expected = from_rows(s, s, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  CHECK(swap == expected);
  CHECK(compose(swap, swap) == Map::identity(s));
  CHECK_THROWS_AS(compose(Map::identity(three()), i2), DimensionError);
}

TEST_CASE("kron") {
  CHECK(kron(Map::identity(two()), Map::identity(three())) == Map::identity(Space::basis(6)));
  Map x = from_rows(two(), two(), {{0, 1}, {1, 0}});
  Map block = from_rows(Space::basis(4), Space::basis(4), {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(kron(x, Map::identity(two())) == block);
  Map f = from_rows(two(), three(), {{1, 2}, {0, -1}, {3, 0}});
  Map g = from_rows(three(), two(), {{1, 0, 2}, {0, 5, -1}});
  Map fg = kron(f, g);
  CHECK(fg.domain.factors == std::vector<int>{2, 3});
  CHECK(fg.codomain.factors == std::vector<int>{3, 2});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      Vector<Q> lhs = apply(fg, unit_vector<Q>(6, i * 3 + j));
      Vector<Q> fi = f.entries.col(i), gj = g.entries.col(j);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 2; ++b) CHECK(lhs(a * 2 + b) == fi(a) * gj(b));
    }
}

TEST_CASE("permute_factors") {
  Space s23 = tensor(two(), three());
  CHECK(permute_factors<Q>(s23, {0, 1}) == Map::identity(s23));
  Map sw = permute_factors<Q>(s23, {1, 0});
  CHECK(sw.codomain.factors == std::vector<int>{3, 2});
  // e0⊗e1 (index 1 in 2⊗3) goes to e1⊗e0 (index 2 in 3⊗2)
  CHECK(apply(sw, unit_vector<Q>(6, 1)) == unit_vector<Q>(6, 2));
  Space s222 = tensor(two(), two(), two());
  Map c = permute_factors<Q>(s222, {1, 2, 0});
  CHECK(compose(c, c, c) == Map::identity(s222));
  CHECK_FALSE(compose(c, c) == Map::identity(s222));
  CHECK_THROWS_AS(permute_factors<Q>(Space::basis(4), {0}), UsageError);
}

TEST_CASE("permute_factors is a homomorphism from S3") {
  Space s = tensor(two(), two(), two());
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (auto& a : perms)
    for (auto& b : perms) {
      std::vector<int> ab(3);
      for (int j = 0; j < 3; ++j) ab[j] = a[b[j]];
      CHECK(compose(permute_factors<Q>(s, a), permute_factors<Q>(s, b)) == permute_factors<Q>(s, ab));
    }
}

TEST_CASE("rank and kernel") {
  auto rk = rank_kernel(Map::identity(three()));
  CHECK(rk.rank == 3);
  CHECK(rk.kernel.empty());
  auto z = rank_kernel(Map::zero(Space::basis(4), Space::basis(4)));
  CHECK(z.rank == 0);
  CHECK(z.kernel.size() == 4);
  Map f = from_rows(two(), two(), {{1, 2}, {2, 4}});
  auto k = rank_kernel(f);
  CHECK(k.rank == 1);
  REQUIRE(k.kernel.size() == 1);
  // spanned by (2,-1); normalized so the free coordinate is 1
  CHECK(k.kernel[0](0) == Q(-2));
  CHECK(k.kernel[0](1) == Q(1));
  CHECK(rank(f) == 1);
}

TEST_CASE("rank over Q agrees with rank mod 10007 on random integer matrices") {
  std::mt19937_64 rng(7);
  Field<Q> fq;
  Field<ModP> fp{10007};
  for (int t = 0; t < 40; ++t) {
    int m = 1 + int(rng() % 7), n = 1 + int(rng() % 7);
    Map f = random_map(Space::basis(n), Space::basis(m), rng, fq, 4);
    if (t % 3 == 0) {  // force dependencies
      for (int i = 0; i < m; ++i) f(i, n - 1) = f(i, 0) + Q(2) * f(i, n / 2);
    }
    LinMap<ModP> g = LinMap<ModP>::zero(f.domain, f.codomain);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = fp.make(f(i, j).small_num());
    auto rk = rank_kernel(f);
    CHECK(rk.rank == rank(g));
    CHECK(rk.rank + int(rk.kernel.size()) == n);
    for (auto& v : rk.kernel) CHECK(apply(f, v) == Vector<Q>::Constant(m, Q(0)));
  }
}

TEST_CASE("random associativity and kron functoriality") {
  std::mt19937_64 rng(11);
  Field<Q> fq;
  for (int t = 0; t < 20; ++t) {
    Space a = Space::basis(2 + t % 2), b = Space::basis(3), c = Space::basis(2), d = Space::basis(3 - t % 2);
    Map h = random_map(a, b, rng, fq), g = random_map(b, c, rng, fq), f = random_map(c, d, rng, fq);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    Map f2 = random_map(b, c, rng, fq), g2 = random_map(a, b, rng, fq);
    Map f1 = random_map(c, d, rng, fq), g1 = random_map(b, a, rng, fq);
    CHECK(kron(compose(f1, f2), compose(g1, g2)) == compose(kron(f1, g1), kron(f2, g2)));
  }
}

TEST_CASE("coequalizer") {
  Map i3 = Map::identity(three());
  auto same = coequalizer(i3, i3);
  CHECK(same.q.codomain.dim == 3);
  CHECK(rank(same.q) == 3);
  auto all = coequalizer(i3, Map::zero(three(), three()));
  CHECK(all.q.codomain.dim == 0);
  std::mt19937_64 rng(3);
  Field<Q> fq;
  for (int t = 0; t < 10; ++t) {
    Map f = random_map(Space::basis(3), Space::basis(5), rng, fq);
    Map g = random_map(Space::basis(3), Space::basis(5), rng, fq);
    auto c = coequalizer(f, g);
    CHECK(compose(c.q, f) == compose(c.q, g));
    CHECK(rank(c.q) == c.q.codomain.dim);
    CHECK(c.q.codomain.dim == 5 - rank(f - g));
    CHECK(compose(c.q, c.section) == Map::identity(c.q.codomain));
  }
}

TEST_CASE("chain homology") {
  Space s2 = two(), s3 = three();
  CHECK(chain_homology<Q>({Map::zero(s3, s2), Map::zero(s2, s3)}) == std::vector<int>{2, 3, 2});
  Space k = Space::ground();
  CHECK(chain_homology<Q>({Map::identity(k)}) == std::vector<int>{0, 0});
  Map d1 = from_rows(two(), k, {{1, 1}});
  Map d2 = Map::zero(k, two());
  CHECK(chain_homology<Q>({d1, d2}) == std::vector<int>{0, 1, 1});
  Map bad = from_rows(k, two(), {{1}, {0}});
  CHECK_THROWS_AS(chain_homology<Q>({d1, bad}), ComplexError);
}

TEST_CASE("inverse and solve") {
  Map f = from_rows(two(), two(), {{2, 1}, {1, 1}});
  CHECK(compose(inverse(f), f) == Map::identity(two()));
  CHECK_THROWS(inverse(from_rows(two(), two(), {{1, 2}, {2, 4}})));
  Vector<Q> b(2);
  b << Q(3), Q(2);
  auto x = solve(f, b);
  REQUIRE(x);
  CHECK(apply(f, *x) == b);
}
