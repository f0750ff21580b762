#pragma once

#include "deca/bisset.hpp"
#include "deca/sset.hpp"

namespace deca {

// Finite group on named elements. Index 0 need not be the identity.
struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
  int identity = 0;

  int size() const { return static_cast<int>(names.size()); }
  int op(int a, int b) const { return mul[a][b]; }
  int inv(int a) const;
  int at(const std::string& name) const;  // -1 when absent
};

ValidationReport validate(const FiniteGroup& G);
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group_3();
FiniteGroup direct_power(const FiniteGroup& H, int k);

// Levelwise finite groups; every face and degeneracy is a homomorphism.
struct SimplicialGroup {
  int truncation = -1;
  std::vector<FiniteGroup> level;
  std::vector<std::vector<std::vector<int>>> face;  // face[m][i], 1 <= m <= truncation
  std::vector<std::vector<std::vector<int>>> deg;   // deg[m][i], m < truncation

  int size(int m) const { return level[m].size(); }
  int d(int m, int i, int x) const { return face[m][i][x]; }
  int s(int m, int i, int x) const { return deg[m][i][x]; }
};

ValidationReport validate(const SimplicialGroup& G);
SimplicialSet underlying(const SimplicialGroup& G);
SimplicialGroup constant_simplicial_group(const FiniteGroup& H, int N);
// level n = H^{n+1}; faces delete an entry, degeneracies repeat one
SimplicialGroup eh_construction(const FiniteGroup& H, int N);

// Horizontal nerve over the group direction: (m, q) carries m-tuples of
// elements of level q; the inner horizontal face at j multiplies h_{j+1}·h_j.
// The m = 0 column is a point and extends one vertical level higher.
BisimplicialSet nerve_bis(const SimplicialGroup& G, int P);

// Classifying object: level n = G_{n-1} x ... x G_0 (top level listed first),
// carried to truncation + 1.
SimplicialSet wbar(const SimplicialGroup& G);

// Mutually inverse simplicial isomorphisms between the classifying object and
// the total object of the nerve, given by the explicit tuple bijection.
struct DuskinPackage {
  BisPtr nerve;
  TotalResult tot;
  SSetPtr wb;
  SimplicialMap to_total;    // wb -> tot.space
  SimplicialMap from_total;  // tot.space -> wb
};
DuskinPackage duskin_package(const SimplicialGroup& G, long guard = 2000000);

// Comparison from the diagonal of the nerve to the classifying object:
// (h_1, ..., h_n) |-> (d_0(h_1), d_0^2(h_2), ..., d_0^n(h_n)).
SimplicialMap dn_to_wbar(const SimplicialGroup& G);

// Principal bundle data: a levelwise free and fiber-transitive right action,
// a projection, and a pseudo-section (commutes with every operator except d_0).
struct Ptcp {
  SimplicialGroup G;
  SSetPtr total, base;
  SimplicialMap proj;                                 // total -> base
  std::vector<std::vector<std::vector<int>>> action;  // action[n][g][e] = e . g
  std::vector<std::vector<int>> section;              // section[n][b] in total
};

ValidationReport validate(const Ptcp& P);

// base x G with d_0 twisted: d_0(b, g) = (d_0 b, tw[n][b] * d_0 g).
Ptcp twisted_product(const SimplicialGroup& G, const SSetPtr& base,
                     const std::vector<std::vector<int>>& tw);
Ptcp trivial_ptcp(const SimplicialGroup& G, const SSetPtr& base);
// connected double cover of the one-vertex circle, structure group of order 2
Ptcp double_cover_circle(int N);

// twisting function read back from the pseudo-section:
// tw[n][b] is the unique g with section(d_0 b) . g = d_0 section(b)
std::vector<std::vector<int>> twisting_of(const Ptcp& P);

// classifying map b |-> (tw(b), tw(d_0 b), ..., tw(d_0^{n-1} b)) into wbar(G)
SimplicialMap classify_ptcp(const Ptcp& P);

}  // namespace deca
