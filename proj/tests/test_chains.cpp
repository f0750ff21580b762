#include <doctest.h>

#include <random>
#include <vector>

#include "deca/catalog.hpp"
#include "deca/chains.hpp"

using namespace deca;

namespace {

IntMat from_rows(const std::vector<std::vector<int>>& rows) {
  IntMat A(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c) A.at(r, c) = rows[r][c];
  return A;
}

void check_smith(const IntMat& A) {
  SmithResult S = smith_normal_form(A);
  CHECK(mul(mul(S.U, A), S.V) == S.D);
  CHECK(mul(S.U, S.Uinv) == IntMat::identity(A.rows));
  CHECK(mul(S.V, S.Vinv) == IntMat::identity(A.cols));
  CHECK(S.rank == static_cast<int>(S.divisors.size()));
  for (int r = 0; r < S.D.rows; ++r)
    for (int c = 0; c < S.D.cols; ++c) {
      if (r == c && r < S.rank) {
        CHECK(S.D.at(r, c) == S.divisors[r]);
        CHECK(S.divisors[r] > 0);
      } else {
        CHECK(S.D.at(r, c) == 0);
      }
    }
  for (size_t i = 0; i + 1 < S.divisors.size(); ++i) CHECK(S.divisors[i + 1] % S.divisors[i] == 0);
}

}  // namespace

TEST_CASE("diagonal form of fixed matrices") {
  SmithResult a = smith_normal_form(from_rows({{2, 1}, {0, 3}}));
  CHECK(a.divisors == std::vector<BigInt>{1, 6});
  SmithResult b = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  CHECK(b.divisors == std::vector<BigInt>{2, 4});
  SmithResult z = smith_normal_form(IntMat(3, 2));
  CHECK(z.rank == 0);
  check_smith(from_rows({{2, 1}, {0, 3}}));
}

TEST_CASE("diagonalization certificates hold on sampled matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-9, 9);
  const std::vector<std::pair<int, int>> shapes{{3, 5}, {5, 3}, {4, 4}, {6, 2}, {1, 1}};
  for (auto [r, c] : shapes)
    for (int rep = 0; rep < 6; ++rep) {
      IntMat A(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) A.at(i, j) = entry(rng);
      check_smith(A);
    }
}

TEST_CASE("homology of a hand-built complex with torsion") {
  ChainComplex C;
  C.top = 2;
  C.trusted = 2;
  C.rank = {1, 2, 1};
  C.boundary.resize(3);
  C.boundary[0] = IntMat(0, 1);
  C.boundary[1] = IntMat(1, 2);
  C.boundary[2] = from_rows({{0}, {2}});
  REQUIRE(validate(C).ok());
  CHECK(homology(C, 0) == AbelianGroup{1, {}});
  AbelianGroup h1 = homology(C, 1);
  CHECK(h1.rank == 1);
  CHECK(h1.torsion == std::vector<BigInt>{2});
  CHECK(homology(C, 2).trivial());
}

TEST_CASE("homology refuses degrees past the trusted range") {
  ChainComplex C;
  C.top = 2;
  C.trusted = 1;
  C.rank = {1, 0, 0};
  C.boundary.resize(3);
  C.boundary[0] = IntMat(0, 1);
  C.boundary[1] = IntMat(1, 0);
  C.boundary[2] = IntMat(0, 0);
  CHECK_NOTHROW(homology(C, 1));
  CHECK_THROWS_AS(homology(C, 2), Error);
}

TEST_CASE("composite boundaries must vanish") {
  ChainComplex C;
  C.top = 2;
  C.trusted = 2;
  C.rank = {1, 1, 1};
  C.boundary.resize(3);
  C.boundary[0] = IntMat(0, 1);
  C.boundary[1] = from_rows({{1}});
  C.boundary[2] = from_rows({{1}});
  CHECK_FALSE(validate(C).ok());
}

TEST_CASE("normalized and raw chains compute the same homology") {
  for (const char* name : {"s2", "rdelta2"}) {
    SSetPtr X = catalog_sset(name);
    ChainComplex N = normalized_chains(*X);
    ChainComplex U = unnormalized_chains(*X);
    for (int k = 0; k <= 3; ++k) CHECK(homology(N, k) == homology(U, k));
  }
  ChainComplex S = normalized_chains(*catalog_sset("s2"));
  CHECK(homology(S, 0) == AbelianGroup{1, {}});
  CHECK(homology(S, 1).trivial());
  CHECK(homology(S, 2) == AbelianGroup{1, {}});
  CHECK(homology(S, 3).trivial());
  ChainComplex R = normalized_chains(*catalog_sset("rdelta2"));
  CHECK(homology(R, 1) == AbelianGroup{2, {}});
  CHECK(homology(R, 2).trivial());
}

TEST_CASE("collapsing the circle to its vertex is detected by the cone") {
  SSetPtr s1 = catalog_sset("s1");
  SimplicialMap f;
  f.src = s1;
  f.tgt = s1;
  f.comp.resize(s1->truncation + 1);
  for (int m = 0; m <= s1->truncation; ++m) {
    int pt = 0;  // the vertex, degenerated up to level m
    for (int k = 0; k < m; ++k) pt = s1->s(k, 0, pt);
    f.comp[m].assign(s1->size(m), pt);
  }
  REQUIRE(validate(f).ok());
  ChainMap cf = chains_of_map(f);
  REQUIRE(validate(cf).ok());
  CHECK_FALSE(is_quasi_iso_upto(cf, 1));
  ChainComplex cone = mapping_cone(cf);
  CHECK(homology(cone, 1) == AbelianGroup{1, {}});

  ChainMap id = chains_of_map(identity_map(s1));
  CHECK(is_quasi_iso_upto(id, 3));
  for (const AbelianGroup& h : homology_table(mapping_cone(id), 3)) CHECK(h.trivial());
}

TEST_CASE("total complex of a full product grid is contractible") {
  DoubleComplex D = bichains(*catalog_bis("ext.delta1.delta1"));
  REQUIRE(validate(D).ok());
  ChainComplex C = tot(D, 4);
  REQUIRE(validate(C).ok());
  REQUIRE(C.trusted >= 3);
  for (int k = 0; k <= 2; ++k) {
    int expect = 0;
    for (int p = 0; p <= k; ++p) expect += D.rank_at(p, k - p);
    CHECK(C.rank_at(k) == expect);
  }
  CHECK(homology(C, 0) == AbelianGroup{1, {}});
  for (int k = 1; k <= 3; ++k) CHECK(homology(C, k).trivial());
}
