#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "deca/catalog.hpp"
#include "deca/chains.hpp"
#include "deca/loopgroup.hpp"
#include "deca/sgroup.hpp"

using namespace deca;

TEST_CASE("finite group tables validate and invert") {
  FiniteGroup c4 = cyclic_group(4);
  REQUIRE(validate(c4).ok());
  for (int a = 0; a < c4.size(); ++a) CHECK(c4.op(a, c4.inv(a)) == c4.identity);
  FiniteGroup s3 = symmetric_group_3();
  REQUIRE(validate(s3).ok());
  CHECK(s3.size() == 6);
  bool noncommuting = false;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) noncommuting |= s3.op(a, b) != s3.op(b, a);
  CHECK(noncommuting);
  FiniteGroup c2cubed = direct_power(cyclic_group(2), 3);
  REQUIRE(validate(c2cubed).ok());
  CHECK(c2cubed.size() == 8);
}

TEST_CASE("free words reduce, invert, and concatenate") {
  CHECK(free_reduce({{1, -1, 2}}) == Word{{2}});
  CHECK(word_inverse({{1, 2}}) == Word{{-2, -1}});
  CHECK(free_reduce(word_concat({{1, 2}}, {{-2, -1}})).letters.empty());
}

TEST_CASE("abelianization of small presentations") {
  FpGroup free2{{"a", "b"}, {}};
  CHECK(abelianization(free2) == AbelianGroup{2, {}});
  FpGroup z2{{"a"}, {Word{{1, 1}}}};
  CHECK(abelianization(z2) == AbelianGroup{0, {2}});
  FpGroup klein{{"a", "b"}, {Word{{1, 2, 1, 2}}}};
  AbelianGroup k = abelianization(klein);
  CHECK(k.rank == 1);
  CHECK(k.torsion == std::vector<BigInt>{2});
}

TEST_CASE("homomorphism counts into small groups") {
  FpGroup z{{"a"}, {}};
  FpGroup z2{{"a"}, {Word{{1, 1}}}};
  FpGroup free2{{"a", "b"}, {}};
  CHECK(hom_count(z, cyclic_group(2)) == 2);
  CHECK(hom_count(z, symmetric_group_3()) == 6);
  CHECK(hom_count(z2, cyclic_group(3)) == 1);
  CHECK(hom_count(z2, cyclic_group(4)) == 2);
  CHECK(hom_count(z2, symmetric_group_3()) == 4);
  CHECK(hom_count(free2, symmetric_group_3()) == 36);
}

TEST_CASE("edge-path groups of the catalog surfaces") {
  FpGroup circle = fundamental_group(*catalog_sset("s1"));
  CHECK(abelianization(circle) == AbelianGroup{1, {}});
  CHECK(hom_count(circle, symmetric_group_3()) == 6);
  FpGroup proj = fundamental_group(*catalog_sset("p2"));
  CHECK(abelianization(proj) == AbelianGroup{0, {2}});
  CHECK(hom_count(proj, cyclic_group(4)) == 2);
  FpGroup wedge = fundamental_group(*catalog_sset("s1vs1"));
  CHECK(abelianization(wedge) == AbelianGroup{2, {}});
  CHECK(hom_count(wedge, symmetric_group_3()) == 36);
}

TEST_CASE("classifying object of a constant group doubles per level") {
  SimplicialSet W = wbar(catalog_group("c2"));
  REQUIRE(validate(W).ok());
  CHECK(W.truncation == 5);
  for (int n = 0; n <= 5; ++n) CHECK(W.size(n) == (1 << n));
  CHECK(W.index_of(0, "[]") == 0);
}

TEST_CASE("classifying object of the two-element group has two-torsion") {
  ChainComplex C = normalized_chains(wbar(catalog_group("c2")));
  REQUIRE(C.trusted >= 2);
  CHECK(homology(C, 0) == AbelianGroup{1, {}});
  CHECK(homology(C, 1) == AbelianGroup{0, {2}});
  CHECK(homology(C, 2).trivial());
}

TEST_CASE("levelwise-power construction has the stated sizes") {
  SimplicialGroup E = eh_construction(cyclic_group(2), 3);
  REQUIRE(validate(E).ok());
  for (int q = 0; q <= 3; ++q) CHECK(E.size(q) == (1 << (q + 1)));
  REQUIRE(validate(underlying(E)).ok());
}

TEST_CASE("nerve columns carry element tuples and the point column runs higher") {
  const SimplicialGroup& G = catalog_group("c3");
  BisimplicialSet N = nerve_bis(G, G.truncation + 1);
  REQUIRE(validate(N).ok());
  for (const auto& [pq, lv] : N.cells) {
    auto [m, q] = pq;
    long long expect = 1;
    for (int i = 0; i < m; ++i) expect *= G.size(q);
    CHECK(lv.size() == expect);
  }
  // the point column reaches one vertical level past the element columns
  int v0 = 0, v1 = 0;
  while (N.has(0, v0)) ++v0;
  while (N.has(1, v1)) ++v1;
  CHECK(v0 == v1 + 1);
}

TEST_CASE("nerve-diagonal comparison to the classifying object is levelwise bijective") {
  SimplicialMap f = dn_to_wbar(catalog_group("c3"));
  REQUIRE(validate(f).ok());
  for (int n = 0; n < f.levels(); ++n) {
    std::vector<int> img = f.comp[n];
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    CHECK(static_cast<int>(img.size()) == f.src->size(n));
    CHECK(f.src->size(n) == f.tgt->size(n));
  }
}

TEST_CASE("double cover of the circle is connected and twisted") {
  Ptcp P = double_cover_circle(4);
  REQUIRE(validate(P).ok());
  CHECK(pi0(*P.total).classes == 1);
  std::vector<std::vector<int>> tw = twisting_of(P);
  bool nontrivial = false;
  for (size_t n = 0; n < tw.size(); ++n)
    for (int g : tw[n]) nontrivial |= g != P.G.level[n].identity;
  CHECK(nontrivial);
  SimplicialMap cls = classify_ptcp(P);
  REQUIRE(validate(cls).ok());
}

TEST_CASE("trivial bundle classifies constantly and splits into components") {
  const SimplicialGroup& G = catalog_group("c2");
  SSetPtr base = std::make_shared<SimplicialSet>(restrict_truncation(*catalog_sset("s1"), G.truncation));
  Ptcp P = trivial_ptcp(G, base);
  REQUIRE(validate(P).ok());
  CHECK(pi0(*P.total).classes == 2);
  for (const auto& row : twisting_of(P))
    for (size_t i = 0; i < row.size(); ++i) CHECK(row[i] == G.level[0].identity);
  SimplicialMap cls = classify_ptcp(P);
  REQUIRE(validate(cls).ok());
  for (int n = 0; n < cls.levels(); ++n)
    for (int x : cls.comp[n]) CHECK(x == cls.comp[n][0]);
}

TEST_CASE("abelianized lower-degree complex of the free model sees the sphere") {
  PresentedSimplicialGroup FL = free_loop_group(*catalog_sset("s2"));
  REQUIRE(validate(FL).ok());
  ChainComplex C = abelianized_moore(FL);
  REQUIRE(C.trusted >= 2);
  CHECK(homology(C, 0).trivial());
  CHECK(homology(C, 1) == AbelianGroup{1, {}});
  CHECK(homology(C, 2).trivial());
}
