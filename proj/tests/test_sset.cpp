#include <doctest.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deca/catalog.hpp"
#include "deca/loopgroup.hpp"
#include "deca/sset.hpp"

using namespace deca;

namespace {

// all monotone maps [m] -> [t]
std::vector<OrdinalMap> all_monotone(int m, int t) {
  std::vector<OrdinalMap> out;
  std::vector<int> v(m + 1, 0);
  while (true) {
    OrdinalMap u;
    u.target = t;
    u.values = v;
    out.push_back(u);
    int i = m;
    while (i >= 0 && v[i] == t) --i;
    if (i < 0) break;
    ++v[i];
    for (int j = i + 1; j <= m; ++j) v[j] = v[i];
  }
  return out;
}

bool same(const OrdinalMap& a, const OrdinalMap& b) {
  return a.target == b.target && a.values == b.values;
}

}  // namespace

TEST_CASE("coface and codegeneracy value tables") {
  OrdinalMap d1 = coface(3, 1);
  CHECK(d1.target == 3);
  CHECK(d1.values == std::vector<int>{0, 2, 3});
  OrdinalMap s1 = codegeneracy(2, 1);
  CHECK(s1.target == 2);
  CHECK(s1.values == std::vector<int>{0, 1, 1, 2});
  CHECK(ordinal_identity(4).is_identity());
  CHECK_FALSE(d1.is_identity());
}

TEST_CASE("ordinal composition agrees with function composition") {
  for (int k = 0; k <= 2; ++k)
    for (int m = 0; m <= 2; ++m)
      for (int t = 0; t <= 3; ++t)
        for (const OrdinalMap& f : all_monotone(m, t))
          for (const OrdinalMap& g : all_monotone(k, m)) {
            OrdinalMap c = ordinal_compose(f, g);
            REQUIRE(c.target == t);
            REQUIRE(c.arity() == k);
            for (int i = 0; i <= k; ++i) CHECK(c.values[i] == f.values[g.values[i]]);
          }
}

TEST_CASE("ordinal sum is associative, unital, and a bifunctor") {
  // objects: [m] + [n] = [m+n+1]
  CHECK(same(ordinal_sum(ordinal_identity(1), ordinal_identity(2)), ordinal_identity(4)));
  auto maps = [](int m, int t) { return all_monotone(m, t); };
  for (const OrdinalMap& a : maps(1, 1))
    for (const OrdinalMap& b : maps(0, 1))
      for (const OrdinalMap& c : maps(1, 0)) {
        CHECK(same(ordinal_sum(ordinal_sum(a, b), c), ordinal_sum(a, ordinal_sum(b, c))));
      }
  // (f + g) . (f' + g') = (f . f') + (g . g')
  for (const OrdinalMap& f : maps(1, 2))
    for (const OrdinalMap& fp : maps(1, 1))
      for (const OrdinalMap& g : maps(0, 1))
        for (const OrdinalMap& gp : maps(1, 0)) {
          OrdinalMap lhs = ordinal_compose(ordinal_sum(f, g), ordinal_sum(fp, gp));
          OrdinalMap rhs = ordinal_sum(ordinal_compose(f, fp), ordinal_compose(g, gp));
          CHECK(same(lhs, rhs));
        }
}

TEST_CASE("standard simplex has one simplex per monotone value table") {
  SimplicialSet d1 = std_simplex(1, 9);
  REQUIRE(validate(d1).ok());
  for (int m = 0; m <= 9; ++m) CHECK(d1.size(m) == m + 2);
  CHECK(d1.size(1) == 3);
  CHECK(d1.index_of(1, "01") >= 0);
  SimplicialSet d2 = std_simplex(2, 4);
  REQUIRE(validate(d2).ok());
  for (int m = 0; m <= 4; ++m) CHECK(d2.size(m) == (m + 3) * (m + 2) / 2);
}

TEST_CASE("simplex action is contravariantly functorial") {
  SimplicialSet d2 = std_simplex(2, 4);
  for (int m = 0; m <= 2; ++m)
    for (int k = 0; k <= 2; ++k)
      for (const OrdinalMap& u : all_monotone(k, m))
        for (int j = 0; j <= 2; ++j)
          for (const OrdinalMap& v : all_monotone(j, k))
            for (int x = 0; x < d2.size(m); ++x) {
              int one_step = d2.apply(ordinal_compose(u, v), m, x);
              int two_step = d2.apply(v, k, d2.apply(u, m, x));
              CHECK(one_step == two_step);
            }
}

TEST_CASE("degeneracy normal form covers each level once") {
  for (const std::string& name : {std::string("s1"), std::string("s2"), std::string("p2")}) {
    SSetPtr X = catalog_sset(name);
    for (int m = 0; m <= 5; ++m) {
      std::set<std::pair<std::vector<int>, int>> seen;
      for (int x = 0; x < X->size(m); ++x) {
        EzForm e = ez_decompose(*X, m, x);
        int k = static_cast<int>(e.word.size());
        for (size_t i = 0; i + 1 < e.word.size(); ++i) REQUIRE(e.word[i] > e.word[i + 1]);
        REQUIRE_FALSE(X->is_degenerate(m - k, e.base));
        CHECK(X->is_degenerate(m, x) == (k > 0));
        // rebuild x = s_{w0} s_{w1} ... base
        int y = e.base;
        int lvl = m - k;
        for (int i = k - 1; i >= 0; --i) {
          y = X->s(lvl, e.word[i], y);
          ++lvl;
        }
        CHECK(y == x);
        seen.insert({e.word, e.base});
      }
      CHECK(static_cast<int>(seen.size()) == X->size(m));
    }
  }
}

TEST_CASE("degenerate id spells the degeneracy word") {
  CHECK(degenerate_id({1, 0}, "e") == "s1s0\xC2\xB7"
                                      "e");
  CHECK(degenerate_id({}, "e") == "\xC2\xB7"
                                  "e");
}

TEST_CASE("duplicate ids are rejected") {
  Level lv;
  lv.add("a");
  CHECK_THROWS_AS(lv.add("a"), Error);
  CHECK(lv.at("missing") == -1);
}

TEST_CASE("opposite is an involution") {
  for (const std::string& name : {std::string("p2"), std::string("s1xs1")}) {
    SSetPtr X = catalog_sset(name);
    SimplicialSet once = opposite(*X);
    REQUIRE(validate(once).ok());
    CHECK(equal_bit_exact(opposite(once), *X));
  }
}

TEST_CASE("product of intervals has square counts and known cell structure") {
  SimplicialSet d1 = std_simplex(1, 4);
  SimplicialSet p = product(d1, d1);
  REQUIRE(validate(p).ok());
  for (int m = 0; m <= 4; ++m) CHECK(p.size(m) == (m + 2) * (m + 2));
  // nondegenerate cells of the square: 4 vertices, 5 edges, 2 triangles
  std::vector<int> nondeg(4, 0);
  for (int m = 0; m <= 3; ++m)
    for (int x = 0; x < p.size(m); ++x)
      if (!p.is_degenerate(m, x)) ++nondeg[m];
  CHECK(nondeg == std::vector<int>{4, 5, 2, 0});
  CHECK(p.index_of(1, "(01|01)") >= 0);
}

TEST_CASE("collapsing the triangle's vertices leaves two free loops") {
  SimplicialSet r = reduce(std_simplex(2, 9));
  REQUIRE(validate(r).ok());
  REQUIRE(is_reduced(r));
  CHECK(r.size(0) == 1);
  FpGroup F = fundamental_group(r);
  // three edges, one relator: free of rank two after abelianization
  AbelianGroup ab = abelianization(F);
  CHECK(ab.rank == 2);
  CHECK(ab.torsion.empty());
}

TEST_CASE("quotient rejects a subcomplex that is not closed") {
  SSetPtr s1 = catalog_sset("s1");
  // the nondegenerate edge without its vertex
  std::vector<std::vector<int>> sub(s1->truncation + 1);
  for (int x = 0; x < s1->size(1); ++x)
    if (!s1->is_degenerate(1, x)) sub[1].push_back(x);
  CHECK_THROWS_AS(quotient(*s1, sub), Error);
}

TEST_CASE("path components of connected catalog objects") {
  CHECK(pi0(*catalog_sset("bdelta2")).classes == 1);
  CHECK(pi0(*catalog_sset("s1vs1")).classes == 1);
  CHECK(pi0(*catalog_sset("delta3")).classes == 1);
}

TEST_CASE("validator names a broken degeneracy identity") {
  SimplicialSet d1 = std_simplex(1, 3);
  // send s0 of vertex 0 to the nondegenerate edge: d0 s0 is no longer the identity
  d1.deg[0][0][0] = d1.index_of(1, "01");
  ValidationReport rep = validate(d1);
  REQUIRE_FALSE(rep.ok());
  bool cited = false;
  for (const std::string& v : rep.violations) cited |= v.find("d0 s0") != std::string::npos;
  CHECK(cited);
}

TEST_CASE("validator catches a rewired face") {
  SimplicialSet d2 = std_simplex(2, 3);
  std::swap(d2.face[2][0][d2.index_of(2, "012")], d2.face[2][2][d2.index_of(2, "012")]);
  CHECK_FALSE(validate(d2).ok());
}

TEST_CASE("rejected nondegenerate input names the failure") {
  // a 1-cell whose two faces disagree with any simplicial structure: d0 d0 = d0 d1 forced
  std::vector<std::vector<NondegCell>> cells(2);
  cells[0].push_back({"v", {}});
  cells[0].push_back({"w", {}});
  cells[1].push_back({"e", {"v", "missing"}});
  CHECK_THROWS_AS(build_from_nondegenerate(cells, 2), Error);
}

TEST_CASE("one-sided shift of a simplex contracts onto its augmentation") {
  SSetPtr d2 = catalog_sset("delta2");
  AugmentedContraction top = dec_top(*d2);
  REQUIRE(validate(top.aug).ok());
  REQUIRE(check_contraction(top.aug, top.extra).ok());
  SimplicialHomotopy H = contraction_to_homotopy(top.aug, top.extra);
  REQUIRE(check_homotopy(H).ok());
  CHECK(maps_equal(H.f, identity_map(top.aug.body)));
}

TEST_CASE("truncation cut keeps the low levels intact") {
  SSetPtr s2 = catalog_sset("s2");
  SimplicialSet cut = restrict_truncation(*s2, 3);
  REQUIRE(validate(cut).ok());
  CHECK(cut.truncation == 3);
  for (int m = 0; m <= 3; ++m) CHECK(cut.size(m) == s2->size(m));
  CHECK(equal_bit_exact(restrict_truncation(cut, 3), cut));
}
