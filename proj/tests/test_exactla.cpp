#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calg/matrix.hpp"
#include "calg/rational.hpp"

using namespace calg;

namespace {

Mat random_mat(Rng& rng, int r, int c) {
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rng.rational();
  return m;
}

}  // namespace

TEST_CASE("rational parse and print round-trip") {
  CHECK(rat_parse("3/4") == rat_of(3, 4));
  CHECK(rat_parse("-3/4") == rat_of(-3, 4));
  CHECK(rat_parse("5") == rat_of(5));
  CHECK(rat_parse("6/4") == rat_of(3, 2));
  CHECK(rat_str(rat_of(3, 4)) == "3/4");
  CHECK(rat_str(rat_of(-5)) == "-5");
  CHECK(rat_str(rat_of(0)) == "0");
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("matrix arithmetic basics") {
  Mat a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  Mat i2 = Mat::identity(2);
  CHECK(a * i2 == a);
  CHECK(i2 * a == a);
  CHECK(a.trace() == rat_of(5));
  CHECK(a.transpose().at(0, 1) == rat_of(3));
  CHECK(sym_part(a).at(0, 1) == rat_of(5, 2));
  CHECK((a - a).is_zero());
}

TEST_CASE("rref is idempotent and preserves rank") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Mat m = random_mat(rng, 4, 6);
    auto [r, pivots] = rref(m);
    CHECK(rref(r).first == r);
    CHECK(rank_of(m) == rank_of(r));
    CHECK(int(pivots.size()) == rank_of(m));
  }
}

TEST_CASE("rank plus kernel dimension equals column count") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    Mat m = random_mat(rng, 5, 7);
    int r = rank_of(m);
    std::vector<Vec> ker = kernel(m);
    CHECK(r + int(ker.size()) == 7);
    for (const Vec& v : ker) {
      Vec mv = m.apply(v);
      for (const Rat& x : mv) CHECK(is_zero(x));
    }
  }
}

TEST_CASE("inverse and solve are exact") {
  Rng rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    Mat m = random_mat(rng, 4, 4);
    if (rank_of(m) < 4) continue;
    Mat inv = inverse(m);
    CHECK(m * inv == Mat::identity(4));
    Vec b = rng.vector(4);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    Vec mx = m.apply(*x);
    for (int i = 0; i < 4; ++i) CHECK(mx[i] == b[i]);
  }
  Mat sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 2;  // columns dependent
  CHECK_THROWS(inverse(sing));
}

TEST_CASE("independent_subset keeps the first spanning prefix") {
  Vec v{rat_of(1), rat_of(2), rat_of(0)};
  Vec v2{rat_of(2), rat_of(4), rat_of(0)};
  Vec w{rat_of(0), rat_of(0), rat_of(1)};
  std::vector<Vec> vs{v, v2, w};
  std::vector<int> keep = independent_subset(vs);
  REQUIRE(keep.size() == 2);
  CHECK(keep[0] == 0);
  CHECK(keep[1] == 2);
}

TEST_CASE("SpanSolver express is an exact membership certificate") {
  SpanSolver sp(3);
  Vec a{rat_of(1), rat_of(1), rat_of(0)};
  Vec b{rat_of(0), rat_of(1), rat_of(1)};
  CHECK(sp.add(a));
  CHECK(sp.add(b));
  CHECK_FALSE(sp.add(a));
  CHECK(sp.size() == 2);

  Vec target{rat_of(2), rat_of(5), rat_of(3)};  // 2a + 3b
  auto c = sp.express(target);
  REQUIRE(c.has_value());
  REQUIRE(c->size() == 2);
  CHECK((*c)[0] == rat_of(2));
  CHECK((*c)[1] == rat_of(3));

  Vec outside{rat_of(1), rat_of(0), rat_of(0)};
  CHECK_FALSE(sp.express(outside).has_value());
}

TEST_CASE("seeded rng is deterministic") {
  Rng a(99), b(99);
  for (int i = 0; i < 20; ++i) CHECK(a.rational() == b.rational());
}
