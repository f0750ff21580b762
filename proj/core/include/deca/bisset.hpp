#pragma once

#include <map>
#include <utility>

#include "deca/chains.hpp"
#include "deca/sset.hpp"

namespace deca {

// Bisimplicial set carried on a down-closed region of bidegrees (m,n):
// horizontal operators move m, vertical operators move n, and the two
// directions commute. Operator tables exist exactly where their target does.
struct BisimplicialSet {
  std::map<std::pair<int, int>, Level> cells;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> dh, sh, dv, sv;

  bool has(int m, int n) const { return cells.count({m, n}) != 0; }
  int size(int m, int n) const {
    auto it = cells.find({m, n});
    return it == cells.end() ? 0 : it->second.size();
  }
  int dH(int m, int n, int i, int x) const { return dh.at({m, n})[i][x]; }
  int sH(int m, int n, int i, int x) const { return sh.at({m, n})[i][x]; }
  int dV(int m, int n, int i, int x) const { return dv.at({m, n})[i][x]; }
  int sV(int m, int n, int i, int x) const { return sv.at({m, n})[i][x]; }
  const std::string& id(int m, int n, int x) const { return cells.at({m, n}).ids[x]; }
  int index_of(int m, int n, const std::string& name) const { return cells.at({m, n}).at(name); }
  int max_h() const;  // largest m with (m,0) present; -1 when empty
  int max_v() const;
};

using BisPtr = std::shared_ptr<const BisimplicialSet>;

ValidationReport validate(const BisimplicialSet& B);

struct BisimplicialMap {
  BisPtr src, tgt;
  std::map<std::pair<int, int>, std::vector<int>> comp;
};

ValidationReport validate(const BisimplicialMap& f);
BisimplicialMap identity_bmap(const BisPtr& B);
BisimplicialMap bcompose(const BisimplicialMap& g, const BisimplicialMap& f);
bool bmaps_equal(const BisimplicialMap& f, const BisimplicialMap& g);

// Homotopy between bisimplicial maps along one direction; components at (m,n)
// raise that direction's degree by one and commute with the other direction.
struct BiHomotopy {
  bool vertical = true;
  BisimplicialMap f, g;  // vertical: d^v_top h_top = f, d^v_0 h_0 = g (mirrored horizontally)
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> h;
};
ValidationReport check_bihomotopy(const BiHomotopy& H);

// constant inflations along the two projections
BisimplicialSet p1_star(const SimplicialSet& X, int Q);
BisimplicialSet p2_star(const SimplicialSet& X, int P);
BisimplicialSet external_product(const SimplicialSet& X, const SimplicialSet& Y);
// levelwise product with a simplicial set in one direction
BisimplicialSet tensor1(const BisimplicialSet& B, const SimplicialSet& K);
BisimplicialSet tensor2(const BisimplicialSet& B, const SimplicialSet& K);

BisimplicialSet transpose(const BisimplicialSet& B);
SimplicialSet row_of(const BisimplicialSet& B, int q);
SimplicialSet column_of(const BisimplicialSet& B, int m);

SimplicialSet diagonal(const BisimplicialSet& B);
SimplicialMap diagonal_map(const BisimplicialMap& f);

// Degree shift: cells(m,n) = X_{m+n+1}; horizontal operators use the bottom
// indices of X, vertical ones the top indices. Region: m+n <= truncation-1.
BisimplicialSet dec_total(const SimplicialSet& X);

// one-sided shifts, with the augmentation and its contraction witness
struct AugmentedContraction {
  AugmentedSimplicialSet aug;
  Contraction extra;
};
AugmentedContraction dec_top(const SimplicialSet& X);
AugmentedContraction dec_bottom(const SimplicialSet& X);

// the shift with its two counits to the constant inflations
struct DecPackage {
  SSetPtr base;
  BisPtr dec, rows, cols;
  BisimplicialMap eps_r;  // dec -> rows: iterated top faces
  BisimplicialMap eps_c;  // dec -> cols: iterated bottom faces
};
DecPackage dec_package(const SSetPtr& X);

// On a standard simplex both counits admit sections, each a deformation
// retraction; the witnesses are packaged with their homotopies.
struct SectionPackage {
  DecPackage base;
  BisimplicialMap sigma_r, sigma_c;  // rows -> dec, cols -> dec
  BiHomotopy vert;   // id ~ sigma_r . eps_r along the vertical direction
  BiHomotopy horiz;  // sigma_c . eps_c ~ id along the horizontal direction
};
SectionPackage sigma_sections(int n, int trunc);

// Level n of the total object: tuples (x_0..x_n), x_i at (i,n-i), with
// d^v_0 x_i = d^h_{i+1} x_{i+1}. Defined through the last full antidiagonal.
struct TotalResult {
  SSetPtr space;
  std::vector<std::vector<std::vector<int>>> tuples;  // per level, per cell
};
TotalResult total_object(const BisimplicialSet& B, long guard = 2000000);
SimplicialSet total(const BisimplicialSet& B, long guard = 2000000);
SimplicialMap total_map(const BisimplicialMap& f, const TotalResult& tsrc, const TotalResult& ttgt);

// structure formulas for total tuples, usable without enumerating the object
std::vector<int> total_tuple_face(const BisimplicialSet& B, int n, const std::vector<int>& x, int i);
std::vector<int> total_tuple_deg(const BisimplicialSet& B, int n, const std::vector<int>& x, int i);
bool total_tuple_member(const BisimplicialSet& B, int n, const std::vector<int>& x);

// vertical path components of each row, with the induced horizontal structure
struct Pi0Rows {
  SSetPtr space;
  std::vector<std::vector<int>> class_of;  // per row m, per cell of (m,0)
};
Pi0Rows pi0_rows(const BisimplicialSet& B);

// unit X -> total(dec_total X) together with its canonical retraction
struct UnitPackage {
  SSetPtr x_trunc;  // X cut to the levels the total carries
  BisPtr dec;
  TotalResult tot;
  SimplicialMap eta;      // x |-> (s_0 x, ..., s_n x)
  SimplicialMap retract;  // tuple |-> d_top(x_n)
};
UnitPackage unit_package(const SSetPtr& X, long guard = 2000000);

// canonical comparison from the diagonal to the total object
SimplicialMap comparison(const BisPtr& B, const SSetPtr& diag, const TotalResult& tot);

// Right adjoint of the diagonal: cells at (m,n) are simplicial maps
// Delta[m] x Delta[n] -> K, represented by their values on maximal grid
// chains; the counit evaluates at the diagonal.
struct DStarResult {
  BisPtr object;
  SSetPtr diag;          // diagonal(object)
  SimplicialMap counit;  // diag -> K
};
DStarResult d_star(const SSetPtr& K, int P, int Q, long guard = 100000);

// collapse of the sub-object generated by the cells of column 0
struct RowwiseReduce {
  BisPtr space;
  std::map<std::pair<int, int>, std::vector<char>> marked;    // collapsed cells
  std::map<std::pair<int, int>, std::vector<int>> class_of;
};
RowwiseReduce rowwise_reduce(const BisPtr& B);

// normalized chains in both directions: bihomogeneous nondegenerate basis
DoubleComplex bichains(const BisimplicialSet& B);

}  // namespace deca
