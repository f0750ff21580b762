#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deca/sset.hpp"

namespace deca {

using BigInt = boost::multiprecision::cpp_int;

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  static IntMat identity(int n);
  bool is_zero() const;
  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMat mul(const IntMat& A, const IntMat& B);

// U A V = D with U, V unimodular (integer inverses included as certificates).
struct SmithResult {
  IntMat U, D, V, Uinv, Vinv;
  int rank = 0;
  std::vector<BigInt> divisors;  // positive, each dividing the next
};
SmithResult smith_normal_form(const IntMat& A);

struct AbelianGroup {
  int rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next
  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
};
std::string show(const AbelianGroup& g);

struct ChainComplex {
  int top = -1;      // highest degree carried
  int trusted = -1;  // homology is reliable up to this degree
  std::vector<int> rank;
  std::vector<IntMat> boundary;  // boundary[k]: rank[k-1] x rank[k]; boundary[0] has 0 rows
  std::vector<std::vector<std::string>> basis;  // optional

  int rank_at(int k) const { return (k < 0 || k > top) ? 0 : rank[k]; }
};
ValidationReport validate(const ChainComplex& C);
AbelianGroup homology(const ChainComplex& C, int k);
std::vector<AbelianGroup> homology_table(const ChainComplex& C, int kmax);

struct ChainMap {
  ChainComplex src, tgt;
  std::vector<IntMat> comp;  // comp[k]: tgt.rank[k] x src.rank[k]
};
ValidationReport validate(const ChainMap& f);
ChainComplex mapping_cone(const ChainMap& f);
// vanishing of the cone homology through degree k
bool is_quasi_iso_upto(const ChainMap& f, int k);

// Basis: nondegenerate simplices; faces landing on degenerates are dropped.
ChainComplex normalized_chains(const SimplicialSet& X);
ChainComplex unnormalized_chains(const SimplicialSet& X);
ChainMap chains_of_map(const SimplicialMap& f);

// First-quadrant double complex over a down-closed region; dh and dv commute
// (signs are introduced by tot).
struct DoubleComplex {
  std::map<std::pair<int, int>, int> rank;
  std::map<std::pair<int, int>, IntMat> dh;  // (p,q) -> (p-1,q); stored for p >= 1
  std::map<std::pair<int, int>, IntMat> dv;  // (p,q) -> (p,q-1); stored for q >= 1
  std::map<std::pair<int, int>, std::vector<std::string>> basis;

  int rank_at(int p, int q) const {
    auto it = rank.find({p, q});
    return it == rank.end() ? 0 : it->second;
  }
};
ValidationReport validate(const DoubleComplex& D);
// trusted: caller states through which total degree the region is complete
ChainComplex tot(const DoubleComplex& D, int trusted);

}  // namespace deca
