#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calg/chevalley.hpp"

using namespace calg;

namespace {

LieAlgebra algebra(const char* name) {
  return build_chevalley(build_root_system(RootSystemSpec::parse(name)));
}

Vec basis_vec(const LieAlgebra& L, int i) {
  Vec v(L.dim);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("dimensions and labels") {
  struct Row {
    const char* name;
    int dim;
  };
  for (const Row& r : {Row{"A1", 3}, Row{"A2", 8}, Row{"B2", 10}, Row{"G2", 14}, Row{"B3", 21},
                       Row{"A3", 15}, Row{"F4", 52}}) {
    CAPTURE(r.name);
    LieAlgebra L = algebra(r.name);
    CHECK(L.dim == r.dim);
    CHECK(int(L.basisLabels.size()) == r.dim);
  }
}

TEST_CASE("sl2 structure constants") {
  LieAlgebra L = algebra("A1");
  // basis: H, E (= X_alpha), F (= X_-alpha)
  int e = L.rootVectorIndex(0), f = L.rootVectorIndex(1);
  REQUIRE(L.bracket[0][e].size() == 1);
  CHECK(L.bracket[0][e][0] == std::pair<int, Rat>{e, rat_of(2)});
  REQUIRE(L.bracket[0][f].size() == 1);
  CHECK(L.bracket[0][f][0] == std::pair<int, Rat>{f, rat_of(-2)});
  REQUIRE(L.bracket[e][f].size() == 1);
  CHECK(L.bracket[e][f][0] == std::pair<int, Rat>{0, rat_of(1)});  // [E, F] = H

  CHECK(L.killingGram.at(e, f) == rat_of(4));
  CHECK(L.killingGram.at(0, 0) == rat_of(8));
  CHECK(L.killingGram.at(e, e) == rat_of(0));
}

TEST_CASE("Killing form values on coroots and root-vector pairs") {
  // K(H_alpha, H_alpha) = 4 nu_alpha hv, K(X_alpha, X_-alpha) = 2 nu_alpha hv.
  for (const char* name : {"A2", "B2", "G2", "C3"}) {
    CAPTURE(name);
    LieAlgebra L = algebra(name);
    const RootDatum& d = L.datum;
    int npos = int(d.positiveRoots.size());
    for (int ri = 0; ri < npos; ++ri) {
      const RootVec& alpha = d.positiveRoots[ri];
      long nu = d.nu(alpha);
      int xa = L.rootVectorIndex(ri);
      int xm = L.rootVectorIndex(npos + ri);
      CHECK(L.killingGram.at(xa, xm) == rat_of(2 * nu * d.hCheck));
      // H_alpha = [X_alpha, X_-alpha]
      Vec h = L.bracket_vec(basis_vec(L, xa), basis_vec(L, xm));
      CHECK(L.killing(h, h) == rat_of(4 * nu * d.hCheck));
    }
  }
}

TEST_CASE("bracket antisymmetry and integrality") {
  LieAlgebra L = algebra("G2");
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      for (const auto& [k, v] : L.bracket[i][j]) {
        CHECK(v.get_den() == 1);  // Chevalley constants are integers
        Rat back;
        for (const auto& [k2, v2] : L.bracket[j][i])
          if (k2 == k) back = v2;
        CHECK(back == -v);
      }
    }
}

TEST_CASE("extraspecial structure constants are p+1 > 0") {
  LieAlgebra L = algebra("G2");
  const RootDatum& d = L.datum;
  // [X_alpha1, X_alpha2] for simple roots: the extraspecial pair of height 2.
  int r1 = d.root_index(RootVec{1, 0});
  int r2 = d.root_index(RootVec{0, 1});
  int first = L.rootVectorIndex(std::min(r1, r2));   // earlier positive root
  int second = L.rootVectorIndex(std::max(r1, r2));
  REQUIRE(L.bracket[first][second].size() == 1);
  // alpha1 - alpha2 is not a root, so p+1 = 1; the pair with the earlier
  // first member carries the positive sign.
  CHECK(L.bracket[first][second][0].second == rat_of(1));
}

TEST_CASE("ad matrices realize the bracket") {
  LieAlgebra L = algebra("B3");
  Rng rng(21);
  Vec x = rng.vector(std::size_t(L.dim)), y = rng.vector(std::size_t(L.dim));
  CHECK(L.ad_dense(x).apply(y) == L.bracket_vec(x, y));
  for (int i = 0; i < L.dim; ++i)
    CHECK(L.ad[i].dense().apply(y) == L.bracket_vec(basis_vec(L, i), y));
}

TEST_CASE("Jacobi identity on random triples") {
  for (const char* name : {"A2", "G2", "C3"}) {
    CAPTURE(name);
    LieAlgebra L = algebra(name);
    Rng rng(22);
    for (int t = 0; t < 5; ++t) {
      Vec x = rng.vector(std::size_t(L.dim));
      Vec y = rng.vector(std::size_t(L.dim));
      Vec z = rng.vector(std::size_t(L.dim));
      Vec s = L.bracket_vec(x, L.bracket_vec(y, z));
      Vec b = L.bracket_vec(y, L.bracket_vec(z, x));
      Vec c = L.bracket_vec(z, L.bracket_vec(x, y));
      for (int k = 0; k < L.dim; ++k) CHECK(s[k] + b[k] + c[k] == 0);
    }
  }
}

TEST_CASE("Killing form from ad traces matches the stored Gram") {
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    LieAlgebra L = algebra(name);
    CHECK(killing_form(L) == L.killingGram);
    // invariance K([x,y],z) + K(y,[x,z]) = 0 on a sample
    Rng rng(23);
    Vec x = rng.vector(std::size_t(L.dim)), y = rng.vector(std::size_t(L.dim)),
        z = rng.vector(std::size_t(L.dim));
    CHECK(L.killing(L.bracket_vec(x, y), z) + L.killing(y, L.bracket_vec(x, z)) == 0);
  }
}

TEST_CASE("dual basis pairing") {
  LieAlgebra L = algebra("G2");
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      Rat p;
      for (int k = 0; k < L.dim; ++k) p += L.killingGram.at(i, k) * L.dualBasis[j][k];
      CHECK(p == (i == j ? rat_of(1) : rat_of(0)));
    }
}

TEST_CASE("Cartan action pairs root vectors with coroot values") {
  LieAlgebra L = algebra("F4");
  const RootDatum& d = L.datum;
  for (int i = 0; i < d.rank; ++i)
    for (int ri = 0; ri < int(d.roots.size()); ++ri) {
      const RootVec& gamma = d.roots[ri];
      long pairing = 0;
      for (int j = 0; j < d.rank; ++j) pairing += gamma[j] * d.cartan[j][i];
      int b = L.rootVectorIndex(ri);
      const auto& br = L.bracket[i][b];
      if (pairing == 0) {
        CHECK(br.empty());
      } else {
        REQUIRE(br.size() == 1);
        CHECK(br[0] == std::pair<int, Rat>{b, rat_of(pairing)});
      }
    }
}
