#include "deca/chains.hpp"

#include <algorithm>

namespace deca {

IntMat IntMat::identity(int n) {
  IntMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

bool IntMat::is_zero() const {
  for (const BigInt& v : a)
    if (v != 0) return false;
  return true;
}

IntMat mul(const IntMat& A, const IntMat& B) {
  if (A.cols != B.rows) throw Error("mul: shape mismatch");
  IntMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const BigInt& v = A.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        if (B.at(k, j) != 0) C.at(i, j) += v * B.at(k, j);
    }
  return C;
}

namespace {

struct SmithWork {
  IntMat A, U, Uinv, V, Vinv;

  explicit SmithWork(const IntMat& M)
      : A(M),
        U(IntMat::identity(M.rows)),
        Uinv(IntMat::identity(M.rows)),
        V(IntMat::identity(M.cols)),
        Vinv(IntMat::identity(M.cols)) {}

  void rswap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
  }
  void cswap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    for (int c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
  }
  void rneg(int i) {
    for (int c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
    for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
  }
  // row_i += c * row_j
  void radd(int i, int j, const BigInt& c) {
    for (int k = 0; k < A.cols; ++k) A.at(i, k) += c * A.at(j, k);
    for (int k = 0; k < U.cols; ++k) U.at(i, k) += c * U.at(j, k);
    for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, j) -= c * Uinv.at(r, i);
  }
  // col_i += c * col_j
  void cadd(int i, int j, const BigInt& c) {
    for (int k = 0; k < A.rows; ++k) A.at(k, i) += c * A.at(k, j);
    for (int k = 0; k < V.rows; ++k) V.at(k, i) += c * V.at(k, j);
    for (int k = 0; k < Vinv.cols; ++k) Vinv.at(j, k) -= c * Vinv.at(i, k);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& A0) {
  SmithWork w(A0);
  IntMat& A = w.A;
  const int m = A.rows, n = A.cols;
  int t = 0;
  for (; t < std::min(m, n); ++t) {
    while (true) {
      int pr = -1, pc = -1;
      BigInt best;
      for (int r = t; r < m; ++r)
        for (int c = t; c < n; ++c) {
          if (A.at(r, c) == 0) continue;
          BigInt v = abs(A.at(r, c));
          if (pr < 0 || v < best) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) goto done;
      w.rswap(t, pr);
      w.cswap(t, pc);
      if (A.at(t, t) < 0) w.rneg(t);
      bool clean = true;
      for (int r = t + 1; r < m; ++r) {
        if (A.at(r, t) == 0) continue;
        BigInt q = A.at(r, t) / A.at(t, t);
        if (q != 0) w.radd(r, t, -q);
        if (A.at(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < n; ++c) {
        if (A.at(t, c) == 0) continue;
        BigInt q = A.at(t, c) / A.at(t, t);
        if (q != 0) w.cadd(c, t, -q);
        if (A.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      bool fixed = false;
      for (int r = t + 1; r < m && !fixed; ++r)
        for (int c = t + 1; c < n && !fixed; ++c)
          if (A.at(r, c) % A.at(t, t) != 0) {
            w.radd(t, r, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
  }
done:
  SmithResult out;
  out.U = std::move(w.U);
  out.Uinv = std::move(w.Uinv);
  out.V = std::move(w.V);
  out.Vinv = std::move(w.Vinv);
  out.D = std::move(w.A);
  for (int i = 0; i < std::min(m, n); ++i)
    if (out.D.at(i, i) != 0) {
      out.divisors.push_back(out.D.at(i, i));
      ++out.rank;
    }
  // certificates: the transforms are genuinely unimodular and land on D
  if (!(mul(mul(out.U, A0), out.V) == out.D)) throw Error("smith_normal_form: transform check failed");
  if (!(mul(out.U, out.Uinv) == IntMat::identity(m))) throw Error("smith_normal_form: U inverse check failed");
  if (!(mul(out.V, out.Vinv) == IntMat::identity(n))) throw Error("smith_normal_form: V inverse check failed");
  for (size_t i = 0; i + 1 < out.divisors.size(); ++i)
    if (out.divisors[i + 1] % out.divisors[i] != 0) throw Error("smith_normal_form: divisor chain broken");
  return out;
}

std::string show(const AbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.rank == 1) parts.push_back("Z");
  else if (g.rank > 1) parts.push_back("Z^" + std::to_string(g.rank));
  for (const BigInt& t : g.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

ValidationReport validate(const ChainComplex& C) {
  ValidationReport rep;
  if (C.top < 0) {
    rep.fail("empty complex");
    return rep;
  }
  if (static_cast<int>(C.rank.size()) != C.top + 1 || static_cast<int>(C.boundary.size()) != C.top + 1) {
    rep.fail("rank/boundary table size mismatch");
    return rep;
  }
  for (int k = 0; k <= C.top; ++k) {
    int prev = k == 0 ? 0 : C.rank[k - 1];
    if (C.boundary[k].rows != prev || C.boundary[k].cols != C.rank[k]) {
      rep.fail("boundary shape wrong in degree " + std::to_string(k));
      return rep;
    }
  }
  for (int k = 2; k <= C.top; ++k)
    if (!mul(C.boundary[k - 1], C.boundary[k]).is_zero()) {
      rep.fail("dd != 0 in degree " + std::to_string(k));
      return rep;
    }
  return rep;
}

AbelianGroup homology(const ChainComplex& C, int k) {
  if (k < 0) throw Error("homology: negative degree");
  if (k > C.trusted)
    throw Error("homology: degree " + std::to_string(k) + " beyond trusted range " +
                std::to_string(C.trusted));
  const int nk = C.rank_at(k);
  AbelianGroup out;
  if (nk == 0) return out;
  IntMat dk = k == 0 ? IntMat(0, nk) : C.boundary[k];
  SmithResult s = smith_normal_form(dk);
  const int r = s.rank;          // rank of d_k
  const int kerdim = nk - r;     // cycles
  IntMat dk1 = k + 1 <= C.top ? C.boundary[k + 1] : IntMat(nk, 0);
  // in the V-basis of C_k the last kerdim coordinates span the cycle lattice
  IntMat coords = mul(s.Vinv, dk1);
  IntMat M(kerdim, dk1.cols);
  for (int i = 0; i < kerdim; ++i)
    for (int j = 0; j < dk1.cols; ++j) M.at(i, j) = coords.at(r + i, j);
  SmithResult sm = smith_normal_form(M);
  out.rank = kerdim - sm.rank;
  for (const BigInt& d : sm.divisors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::vector<AbelianGroup> homology_table(const ChainComplex& C, int kmax) {
  std::vector<AbelianGroup> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(homology(C, k));
  return out;
}

ValidationReport validate(const ChainMap& f) {
  ValidationReport rep;
  ValidationReport rs = validate(f.src), rt = validate(f.tgt);
  if (!rs.ok()) {
    rep.fail("source: " + rs.violations.front());
    return rep;
  }
  if (!rt.ok()) {
    rep.fail("target: " + rt.violations.front());
    return rep;
  }
  int L = static_cast<int>(f.comp.size());
  if (L == 0 || L > std::min(f.src.top, f.tgt.top) + 1) {
    rep.fail("component count out of range");
    return rep;
  }
  for (int k = 0; k < L; ++k)
    if (f.comp[k].rows != f.tgt.rank[k] || f.comp[k].cols != f.src.rank[k]) {
      rep.fail("component shape wrong in degree " + std::to_string(k));
      return rep;
    }
  for (int k = 1; k < L; ++k)
    if (!(mul(f.tgt.boundary[k], f.comp[k]) == mul(f.comp[k - 1], f.src.boundary[k]))) {
      rep.fail("does not commute with the boundary in degree " + std::to_string(k));
      return rep;
    }
  return rep;
}

ChainComplex mapping_cone(const ChainMap& f) {
  ValidationReport rep = validate(f);
  if (!rep.ok()) throw Error("mapping_cone: " + rep.violations.front());
  const ChainComplex& A = f.src;
  const ChainComplex& B = f.tgt;
  const int L = static_cast<int>(f.comp.size());  // components 0..L-1
  ChainComplex C;
  // degree-k boundary reads A.boundary[k-1], f.comp[k-1], B.boundary[k]
  C.top = std::min({A.top + 1, B.top, L});
  C.trusted = std::min({A.trusted + 1, B.trusted, C.top - 1});
  C.rank.resize(C.top + 1);
  C.boundary.resize(C.top + 1);
  for (int k = 0; k <= C.top; ++k) C.rank[k] = A.rank_at(k - 1) + B.rank_at(k);
  for (int k = 0; k <= C.top; ++k) {
    int ra = A.rank_at(k - 1), rb = B.rank_at(k);
    int pa = A.rank_at(k - 2), pb = B.rank_at(k - 1);
    IntMat d(pa + pb, ra + rb);
    if (k >= 2)
      for (int i = 0; i < pa; ++i)
        for (int j = 0; j < ra; ++j) d.at(i, j) = -A.boundary[k - 1].at(i, j);
    if (k >= 1) {
      for (int i = 0; i < pb; ++i)
        for (int j = 0; j < ra; ++j) d.at(pa + i, j) = f.comp[k - 1].at(i, j);
      for (int i = 0; i < pb; ++i)
        for (int j = 0; j < rb; ++j) d.at(pa + i, ra + j) = B.boundary[k].at(i, j);
    }
    C.boundary[k] = std::move(d);
  }
  return C;
}

bool is_quasi_iso_upto(const ChainMap& f, int k) {
  ChainComplex C = mapping_cone(f);
  if (k > C.trusted) throw Error("is_quasi_iso_upto: degree beyond trusted range");
  for (int n = 0; n <= k; ++n)
    if (!homology(C, n).trivial()) return false;
  return true;
}

namespace {

// indices of nondegenerate simplices per level, with back-references
struct NondegIndex {
  std::vector<std::vector<int>> list;   // level -> basis position -> simplex
  std::vector<std::vector<int>> pos;    // level -> simplex -> basis position or -1
};

NondegIndex nondeg_index(const SimplicialSet& X) {
  NondegIndex ix;
  ix.list.resize(X.truncation + 1);
  ix.pos.resize(X.truncation + 1);
  for (int m = 0; m <= X.truncation; ++m) {
    ix.pos[m].assign(X.size(m), -1);
    for (int x = 0; x < X.size(m); ++x)
      if (!X.is_degenerate(m, x)) {
        ix.pos[m][x] = static_cast<int>(ix.list[m].size());
        ix.list[m].push_back(x);
      }
  }
  return ix;
}

}  // namespace

ChainComplex normalized_chains(const SimplicialSet& X) {
  NondegIndex ix = nondeg_index(X);
  ChainComplex C;
  C.top = X.truncation;
  C.trusted = X.truncation - 1;
  C.rank.resize(C.top + 1);
  C.boundary.resize(C.top + 1);
  C.basis.resize(C.top + 1);
  for (int k = 0; k <= C.top; ++k) {
    C.rank[k] = static_cast<int>(ix.list[k].size());
    for (int x : ix.list[k]) C.basis[k].push_back(X.id(k, x));
  }
  C.boundary[0] = IntMat(0, C.rank[0]);
  for (int k = 1; k <= C.top; ++k) {
    IntMat d(C.rank[k - 1], C.rank[k]);
    for (int j = 0; j < C.rank[k]; ++j) {
      int x = ix.list[k][j];
      for (int i = 0; i <= k; ++i) {
        int y = ix.pos[k - 1][X.d(k, i, x)];
        if (y >= 0) d.at(y, j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    C.boundary[k] = std::move(d);
  }
  return C;
}

ChainComplex unnormalized_chains(const SimplicialSet& X) {
  ChainComplex C;
  C.top = X.truncation;
  C.trusted = X.truncation - 1;
  C.rank.resize(C.top + 1);
  C.boundary.resize(C.top + 1);
  C.basis.resize(C.top + 1);
  for (int k = 0; k <= C.top; ++k) {
    C.rank[k] = X.size(k);
    C.basis[k] = X.level[k].ids;
  }
  C.boundary[0] = IntMat(0, C.rank[0]);
  for (int k = 1; k <= C.top; ++k) {
    IntMat d(C.rank[k - 1], C.rank[k]);
    for (int j = 0; j < C.rank[k]; ++j)
      for (int i = 0; i <= k; ++i) d.at(X.d(k, i, j), j) += (i % 2 == 0) ? 1 : -1;
    C.boundary[k] = std::move(d);
  }
  return C;
}

ChainMap chains_of_map(const SimplicialMap& f) {
  ValidationReport rep = validate(f);
  if (!rep.ok()) throw Error("chains_of_map: " + rep.violations.front());
  NondegIndex sx = nondeg_index(*f.src);
  NondegIndex tx = nondeg_index(*f.tgt);
  ChainMap out;
  out.src = normalized_chains(*f.src);
  out.tgt = normalized_chains(*f.tgt);
  const int L = f.levels();
  out.comp.resize(L);
  for (int k = 0; k < L; ++k) {
    IntMat M(out.tgt.rank[k], out.src.rank[k]);
    for (int j = 0; j < out.src.rank[k]; ++j) {
      int y = tx.pos[k][f.comp[k][sx.list[k][j]]];
      if (y >= 0) M.at(y, j) = 1;
    }
    out.comp[k] = std::move(M);
  }
  return out;
}

ValidationReport validate(const DoubleComplex& D) {
  ValidationReport rep;
  for (const auto& [pq, r] : D.rank) {
    auto [p, q] = pq;
    if (p < 0 || q < 0 || r < 0) {
      rep.fail("bad bidegree or rank");
      return rep;
    }
    if (p >= 1 && D.rank.count({p - 1, q})) {
      auto it = D.dh.find(pq);
      if (it == D.dh.end() || it->second.rows != D.rank_at(p - 1, q) || it->second.cols != r) {
        rep.fail("horizontal boundary missing or misshapen at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        return rep;
      }
    }
    if (q >= 1 && D.rank.count({p, q - 1})) {
      auto it = D.dv.find(pq);
      if (it == D.dv.end() || it->second.rows != D.rank_at(p, q - 1) || it->second.cols != r) {
        rep.fail("vertical boundary missing or misshapen at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        return rep;
      }
    }
  }
  for (const auto& [pq, r] : D.rank) {
    auto [p, q] = pq;
    (void)r;
    if (p >= 2 && D.rank.count({p - 2, q}))
      if (!mul(D.dh.at({p - 1, q}), D.dh.at(pq)).is_zero()) {
        rep.fail("horizontal dd != 0 at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        return rep;
      }
    if (q >= 2 && D.rank.count({p, q - 2}))
      if (!mul(D.dv.at({p, q - 1}), D.dv.at(pq)).is_zero()) {
        rep.fail("vertical dd != 0 at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        return rep;
      }
    if (p >= 1 && q >= 1 && D.rank.count({p - 1, q - 1}))
      if (!(mul(D.dv.at({p - 1, q}), D.dh.at(pq)) == mul(D.dh.at({p, q - 1}), D.dv.at(pq)))) {
        rep.fail("squares do not commute at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        return rep;
      }
  }
  return rep;
}

ChainComplex tot(const DoubleComplex& D, int trusted) {
  ValidationReport rep = validate(D);
  if (!rep.ok()) throw Error("tot: " + rep.violations.front());
  int top = -1;
  for (const auto& [pq, r] : D.rank) {
    (void)r;
    top = std::max(top, pq.first + pq.second);
  }
  if (top < 0) throw Error("tot: empty double complex");
  ChainComplex C;
  C.top = top;
  C.trusted = std::min(trusted, top - 1);
  C.rank.assign(top + 1, 0);
  C.boundary.resize(top + 1);
  C.basis.resize(top + 1);
  // degree n basis: blocks (p, n-p) with p ascending
  std::map<std::pair<int, int>, int> offset;
  for (int n = 0; n <= top; ++n)
    for (int p = 0; p <= n; ++p) {
      int r = D.rank_at(p, n - p);
      if (D.rank.count({p, n - p})) {
        offset[{p, n - p}] = C.rank[n];
        C.rank[n] += r;
        auto it = D.basis.find({p, n - p});
        for (int j = 0; j < r; ++j)
          C.basis[n].push_back(it != D.basis.end() ? it->second[j]
                                                   : "(" + std::to_string(p) + "," + std::to_string(n - p) + "):" + std::to_string(j));
      }
    }
  C.boundary[0] = IntMat(0, C.rank[0]);
  for (int n = 1; n <= top; ++n) {
    IntMat d(C.rank[n - 1], C.rank[n]);
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      if (!D.rank.count({p, q})) continue;
      int col0 = offset.at({p, q});
      int r = D.rank_at(p, q);
      if (p >= 1 && D.rank.count({p - 1, q})) {
        const IntMat& H = D.dh.at({p, q});
        int row0 = offset.at({p - 1, q});
        for (int i = 0; i < H.rows; ++i)
          for (int j = 0; j < r; ++j) d.at(row0 + i, col0 + j) += H.at(i, j);
      }
      if (q >= 1 && D.rank.count({p, q - 1})) {
        const IntMat& Vm = D.dv.at({p, q});
        int row0 = offset.at({p, q - 1});
        int sign = (p % 2 == 0) ? 1 : -1;
        for (int i = 0; i < Vm.rows; ++i)
          for (int j = 0; j < r; ++j) d.at(row0 + i, col0 + j) += sign * Vm.at(i, j);
      }
    }
    C.boundary[n] = std::move(d);
  }
  ValidationReport rc = validate(C);
  if (!rc.ok()) throw Error("tot: result invalid: " + rc.violations.front());
  return C;
}

}  // namespace deca
