#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calg/algcore.hpp"

using namespace calg;

namespace {

AlgebraTable table(const char* name) {
  return build_basis(build_chevalley(build_root_system(RootSystemSpec::parse(name))));
}

Vec delta(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("algebra dimensions") {
  struct Row {
    const char* name;
    int dimA;
  };
  for (const Row& r : {Row{"A1", 1}, Row{"A2", 9}, Row{"B2", 20}, Row{"G2", 28}, Row{"A3", 36},
                       Row{"B3", 63}, Row{"C3", 105}}) {
    CAPTURE(r.name);
    CHECK(table(r.name).dimA == r.dimA);
  }
}

TEST_CASE("S and P on single pairs") {
  AlgebraTable t = table("A2");
  const LieAlgebra& L = t.lie;
  Rng rng(31);
  Vec x = rng.vector(std::size_t(L.dim)), y = rng.vector(std::size_t(L.dim));
  for (int i = 0; i < L.dim; ++i)
    for (int j = i; j < L.dim; ++j) {
      SOperator p = p_map(L, i, j), s = s_map(L, i, j);
      // P(XY) z = (K(Y,z) X + K(X,z) Y)/2
      Vec pz = p.op.apply(x);
      Vec expect(L.dim);
      Vec ei = delta(L.dim, i), ej = delta(L.dim, j);
      Rat kjx = L.killing(ej, x), kix = L.killing(ei, x);
      for (int k = 0; k < L.dim; ++k) expect[k] = (kjx * ei[k] + kix * ej[k]) / 2;
      CHECK(pz == expect);
      // S = hv ad.ad part + P; both are K-symmetric
      CHECK(L.killing(s.op.apply(x), y) == L.killing(x, s.op.apply(y)));
      CHECK(s.op == s_of_pre(L, pair_pre(L.dim, i, j)));
    }
}

TEST_CASE("unit acts as identity and the counit normalizes it") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(name);
    AlgebraTable t = table(name);
    for (int a = 0; a < t.dimA; ++a) {
      Vec ea = delta(t.dimA, a);
      CHECK(t.product(t.unitCoords, ea) == ea);
    }
    CHECK(t.counit(t.unitCoords) == 1);
    // the unit's preimage is K^{-1}/(hv+1), so S of K^{-1} is (hv+1) Id
    CHECK(s_of_pre(t.lie, t.unitPre) == Mat::identity(t.lie.dim));
    CHECK(s_of_pre(t.lie, t.lie.killingInv) ==
          Mat::identity(t.lie.dim).scaled(rat_of(t.lie.hCheck() + 1)));
  }
}

TEST_CASE("trace and counit pairing on the basis") {
  AlgebraTable t = table("G2");
  const LieAlgebra& L = t.lie;
  Rat hv1 = rat_of(L.hCheck() + 1);
  for (int a = 0; a < t.dimA; ++a) {
    auto [i, j] = t.basisPairs[a];
    CHECK(t.basisOp[a].trace() == hv1 * L.killingGram.at(i, j));
    // tau(e, S(XY)) = ((hv+1)/dimG) K(X,Y)
    Vec ea = delta(t.dimA, a);
    CHECK(t.tau(t.unitCoords, ea) == hv1 * L.killingGram.at(i, j) / rat_of(L.dim));
    CHECK(t.counit(ea) == t.epsilon[a]);
  }
}

TEST_CASE("product is commutative and matches operator composition route") {
  AlgebraTable t = table("B2");
  Rng rng(32);
  for (int s = 0; s < 5; ++s) {
    Vec a = rng.vector(std::size_t(t.dimA)), b = rng.vector(std::size_t(t.dimA));
    Vec ab = t.product(a, b);
    CHECK(ab == t.product(b, a));
    // the preimage of the product maps to the product of operators' S-image
    Mat u = product_pre(t.lie, t.preimage(a), t.preimage(b));
    CHECK(t.express_op(s_of_pre(t.lie, u)) == ab);
  }
}

TEST_CASE("structure table agrees with the preimage route") {
  AlgebraTable t = table("A2");
  AlgebraTable t2 = table("A2");
  structure_table(t2);
  Rng rng(33);
  for (int s = 0; s < 8; ++s) {
    Vec a = rng.vector(std::size_t(t.dimA)), b = rng.vector(std::size_t(t.dimA));
    CHECK(t.product(a, b) == t2.product(a, b));
  }
  for (int a = 0; a < t.dimA; ++a)
    for (int b = 0; b < t.dimA; ++b) CHECK(t2.prodConst[a][b] == t2.prodConst[b][a]);
}

TEST_CASE("tau is symmetric and matches the Gram matrix") {
  AlgebraTable t = table("B2");
  tau_gram(t);
  CHECK(t.tauGram == t.tauGram.transpose());
  Rng rng(34);
  Vec a = rng.vector(std::size_t(t.dimA)), b = rng.vector(std::size_t(t.dimA));
  Rat viaGram;
  for (int i = 0; i < t.dimA; ++i)
    for (int j = 0; j < t.dimA; ++j)
      if (!is_zero(a[i]) && !is_zero(b[j])) viaGram += a[i] * b[j] * t.tauGram.at(i, j);
  CHECK(t.tau(a, b) == viaGram);
}

TEST_CASE("tau on squares closed form") {
  // tau(S(X^2), S(Y^2)) = ((hv+1)/dimG) (-hv K([X,Y],[X,Y]) + K(X,Y)^2)
  for (const char* name : {"A2", "G2"}) {
    CAPTURE(name);
    AlgebraTable t = table(name);
    const LieAlgebra& L = t.lie;
    Rng rng(35);
    for (int s = 0; s < 5; ++s) {
      Vec x = rng.vector(std::size_t(L.dim)), y = rng.vector(std::size_t(L.dim));
      Mat px(L.dim, L.dim), py(L.dim, L.dim);
      for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j) {
          px.at(i, j) = x[i] * x[j];
          py.at(i, j) = y[i] * y[j];
        }
      Vec a = t.express_op(s_of_pre(L, px));
      Vec b = t.express_op(s_of_pre(L, py));
      Vec xy = L.bracket_vec(x, y);
      Rat expect = rat_of(L.hCheck() + 1) / rat_of(L.dim) *
                   (-rat_of(L.hCheck()) * L.killing(xy, xy) + L.killing(x, y) * L.killing(x, y));
      CHECK(t.tau(a, b) == expect);
    }
  }
}

TEST_CASE("quarter relation on orthogonal Cartan directions") {
  // S(X1 X2) * S(X1 X3) = (1/4) K(X1, X1) S(X2 X3) for pairwise K-orthogonal
  // Cartan X1, X2, X3.
  AlgebraTable t = table("B3");
  const LieAlgebra& L = t.lie;
  // Gram-Schmidt the three simple coroots.
  std::vector<Vec> x;
  for (int i = 0; i < 3; ++i) {
    Vec v = delta(L.dim, i);
    for (const Vec& p : x) {
      Rat c = L.killing(v, p) / L.killing(p, p);
      for (int k = 0; k < L.dim; ++k) v[k] -= c * p[k];
    }
    x.push_back(std::move(v));
  }
  auto pre_of = [&](const Vec& u, const Vec& v) {
    Mat m(L.dim, L.dim);
    for (int i = 0; i < L.dim; ++i)
      for (int j = 0; j < L.dim; ++j) m.at(i, j) = (u[i] * v[j] + v[i] * u[j]) / 2;
    return m;
  };
  Vec s12 = t.express_op(s_of_pre(L, pre_of(x[0], x[1])));
  Vec s13 = t.express_op(s_of_pre(L, pre_of(x[0], x[2])));
  Vec s23 = t.express_op(s_of_pre(L, pre_of(x[1], x[2])));
  Vec lhs = t.product(s12, s13);
  Rat k11 = L.killing(x[0], x[0]);
  for (int k = 0; k < t.dimA; ++k) CHECK(lhs[k] == k11 / 4 * s23[k]);
}

TEST_CASE("express_op rejects operators outside the algebra") {
  AlgebraTable t = table("A2");
  Mat bogus = Mat::identity(t.lie.dim);
  bogus.at(0, 1) = 7;  // not K-symmetric, not in im S
  CHECK_THROWS_AS(t.express_op(bogus), std::logic_error);
}
