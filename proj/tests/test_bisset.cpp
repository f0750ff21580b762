#include <doctest.h>

#include <string>
#include <vector>

#include "deca/bisset.hpp"
#include "deca/catalog.hpp"

using namespace deca;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("degree shift reads one level up with split face indices") {
  for (const std::string& name : {std::string("s2"), std::string("p2")}) {
    SSetPtr X = catalog_sset(name);
    BisPtr B = catalog_bis("dec." + name);
    int N = X->truncation;
    for (int m = 0; m + 0 <= N - 1; ++m)
      for (int n = 0; m + n <= N - 1; ++n) {
        REQUIRE(B->has(m, n));
        int lvl = m + n + 1;
        REQUIRE(B->size(m, n) == X->size(lvl));
        for (int x = 0; x < X->size(lvl); ++x) {
          CHECK(B->id(m, n, x) == X->id(lvl, x));
          if (m >= 1)
            for (int i = 0; i <= m; ++i) CHECK(B->dH(m, n, i, x) == X->d(lvl, i, x));
          if (n >= 1)
            for (int i = 0; i <= n; ++i) CHECK(B->dV(m, n, i, x) == X->d(lvl, m + 1 + i, x));
          if (m + n + 1 <= N - 1) {
            for (int i = 0; i <= m; ++i) CHECK(B->sH(m, n, i, x) == X->s(lvl, i, x));
            for (int i = 0; i <= n; ++i) CHECK(B->sV(m, n, i, x) == X->s(lvl, m + 1 + i, x));
          }
        }
      }
    CHECK_FALSE(B->has(0, N));
  }
}

TEST_CASE("total object agrees with direct tuple enumeration") {
  BisPtr B = catalog_bis("dec.s1");
  TotalResult T = total_object(*B);
  for (int n = 0; n <= 3; ++n) {
    // brute force: tuples (x_0..x_n), x_i at (i, n-i), dv_0 x_i = dh_{i+1} x_{i+1}
    long long found = 0;
    std::vector<int> sizes(n + 1);
    for (int i = 0; i <= n; ++i) sizes[i] = B->size(i, n - i);
    std::vector<int> odo(n + 1, 0);
    while (true) {
      bool ok = true;
      for (int i = 0; ok && i < n; ++i)
        ok = B->dV(i, n - i, 0, odo[i]) == B->dH(i + 1, n - i - 1, i + 1, odo[i + 1]);
      if (ok) {
        ++found;
        CHECK(total_tuple_member(*B, n, odo));
      }
      int p = n;
      while (p >= 0 && odo[p] == sizes[p] - 1) --p;
      if (p < 0) break;
      ++odo[p];
      for (int q = p + 1; q <= n; ++q) odo[q] = 0;
    }
    CHECK(found == T.space->size(n));
  }
}

TEST_CASE("total structure formulas match the enumerated object") {
  BisPtr B = catalog_bis("dec.p2");
  TotalResult T = total_object(*B);
  const SimplicialSet& S = *T.space;
  auto find_tuple = [&](int n, const std::vector<int>& t) {
    std::string id = "(";
    for (int i = 0; i <= n; ++i) {
      if (i) id += ";";
      id += B->id(i, n - i, t[i]);
    }
    id += ")";
    return S.index_of(n, id);
  };
  for (int n = 1; n <= 3; ++n)
    for (int x = 0; x < S.size(n); ++x) {
      for (int i = 0; i <= n; ++i) {
        std::vector<int> ft = total_tuple_face(*B, n, T.tuples[n][x], i);
        CHECK(S.d(n, i, x) == find_tuple(n - 1, ft));
      }
      if (n < S.truncation)
        for (int i = 0; i <= n; ++i) {
          std::vector<int> st = total_tuple_deg(*B, n, T.tuples[n][x], i);
          CHECK(S.s(n, i, x) == find_tuple(n + 1, st));
        }
    }
}

TEST_CASE("diagonal of an external product is the levelwise product") {
  SimplicialSet c = restrict_truncation(*catalog_sset("s1"), 4);
  SimplicialSet diag = diagonal(*catalog_bis("ext.s1.s1"));
  REQUIRE(validate(diag).ok());
  CHECK(equal_bit_exact(diag, product(c, c)));
  CHECK(equal_bit_exact(diag, restrict_truncation(*catalog_sset("s1xs1"), 4)));
}

TEST_CASE("a one-direction tensor over a constant inflation is the external product") {
  SimplicialSet c = restrict_truncation(*catalog_sset("s1"), 4);
  BisimplicialSet viaTensor = tensor2(p1_star(c, 4), c);
  REQUIRE(validate(viaTensor).ok());
  const BisimplicialSet& ext = *catalog_bis("ext.s1.s1");
  REQUIRE(viaTensor.cells.size() == ext.cells.size());
  for (const auto& [pq, lv] : ext.cells) {
    REQUIRE(viaTensor.has(pq.first, pq.second));
    CHECK(viaTensor.cells.at(pq).ids == lv.ids);
  }
  CHECK(viaTensor.dh == ext.dh);
  CHECK(viaTensor.sh == ext.sh);
  CHECK(viaTensor.dv == ext.dv);
  CHECK(viaTensor.sv == ext.sv);
}

TEST_CASE("transpose is an involution compatible with rows and columns") {
  BisPtr B = catalog_bis("dec.delta2");
  BisimplicialSet Tr = transpose(*B);
  REQUIRE(validate(Tr).ok());
  BisimplicialSet back = transpose(Tr);
  CHECK(back.cells.size() == B->cells.size());
  for (const auto& [pq, lv] : B->cells) CHECK(back.cells.at(pq).ids == lv.ids);
  CHECK(back.dh == B->dh);
  CHECK(back.dv == B->dv);
  for (int q = 0; q <= 2; ++q) {
    SimplicialSet r = row_of(*B, q);
    SimplicialSet c = column_of(Tr, q);
    CHECK(equal_bit_exact(r, c));
  }
}

TEST_CASE("vertical components of a constant inflation give back the object") {
  SSetPtr d2 = catalog_sset("delta2");
  Pi0Rows pr = pi0_rows(*catalog_bis("p1.delta2"));
  REQUIRE(validate(*pr.space).ok());
  CHECK(equal_bit_exact(*pr.space, restrict_truncation(*d2, 4)));
  for (const auto& row : pr.class_of)
    for (size_t x = 0; x < row.size(); ++x) CHECK(row[x] == static_cast<int>(x));
}

TEST_CASE("grid maps into the interval count lattice up-sets") {
  DStarResult ds = d_star(catalog_sset("delta1"), 3, 3);
  REQUIRE(validate(*ds.object).ok());
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      CHECK(ds.object->size(m, n) == binom(m + n + 2, m + 1));
  CHECK(ds.object->size(3, 3) == 70);
  REQUIRE(validate(ds.counit).ok());
}

TEST_CASE("grid maps into a point are a point") {
  DStarResult ds = d_star(catalog_sset("delta0"), 2, 2);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) CHECK(ds.object->size(m, n) == 1);
}

TEST_CASE("column collapse marks exactly the column-generated cells") {
  BisPtr B = catalog_bis("dec.delta1");
  RowwiseReduce rr = rowwise_reduce(B);
  REQUIRE(validate(*rr.space).ok());
  for (const auto& [pq, mk] : rr.marked) {
    if (pq.first == 0)
      for (char c : mk) CHECK(c == 1);
    const std::vector<int>& cls = rr.class_of.at(pq);
    for (size_t x = 0; x < mk.size(); ++x) {
      REQUIRE(cls[x] >= 0);
      REQUIRE(cls[x] < rr.space->size(pq.first, pq.second));
    }
  }
}
