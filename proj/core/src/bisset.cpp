#include "deca/bisset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace deca {

int BisimplicialSet::max_h() const {
  int m = -1;
  for (const auto& [pq, lv] : cells) {
    (void)lv;
    if (pq.second == 0) m = std::max(m, pq.first);
  }
  return m;
}

int BisimplicialSet::max_v() const {
  int n = -1;
  for (const auto& [pq, lv] : cells) {
    (void)lv;
    if (pq.first == 0) n = std::max(n, pq.second);
  }
  return n;
}

SimplicialSet row_of(const BisimplicialSet& B, int q) {
  int M = -1;
  while (B.has(M + 1, q)) ++M;
  if (M < 0) throw Error("row_of: row absent");
  SimplicialSet X;
  X.truncation = M;
  X.level.resize(M + 1);
  X.face.resize(M + 1);
  X.deg.resize(M);
  for (int m = 0; m <= M; ++m) {
    X.level[m] = B.cells.at({m, q});
    if (m >= 1) X.face[m] = B.dh.at({m, q});
    if (m < M) X.deg[m] = B.sh.at({m, q});
  }
  return X;
}

SimplicialSet column_of(const BisimplicialSet& B, int m) {
  int M = -1;
  while (B.has(m, M + 1)) ++M;
  if (M < 0) throw Error("column_of: column absent");
  SimplicialSet X;
  X.truncation = M;
  X.level.resize(M + 1);
  X.face.resize(M + 1);
  X.deg.resize(M);
  for (int q = 0; q <= M; ++q) {
    X.level[q] = B.cells.at({m, q});
    if (q >= 1) X.face[q] = B.dv.at({m, q});
    if (q < M) X.deg[q] = B.sv.at({m, q});
  }
  return X;
}

ValidationReport validate(const BisimplicialSet& B) {
  ValidationReport rep;
  if (B.cells.empty()) {
    rep.fail("empty bisimplicial set");
    return rep;
  }
  for (const auto& [pq, lv] : B.cells) {
    (void)lv;
    auto [m, n] = pq;
    if (m < 0 || n < 0) {
      rep.fail("negative bidegree");
      return rep;
    }
    if (m >= 1 && !B.has(m - 1, n)) {
      rep.fail("region not down-closed at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      return rep;
    }
    if (n >= 1 && !B.has(m, n - 1)) {
      rep.fail("region not down-closed at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      return rep;
    }
  }
  auto shape = [&rep](const char* what, int have, int want, int m, int n) {
    if (have != want)
      rep.fail(std::string(what) + " arity wrong at (" + std::to_string(m) + "," + std::to_string(n) + ")");
  };
  for (const auto& [pq, lv] : B.cells) {
    auto [m, n] = pq;
    (void)lv;
    if ((m >= 1) != (B.dh.count(pq) != 0)) {
      rep.fail("horizontal face table presence wrong");
      return rep;
    }
    if ((n >= 1) != (B.dv.count(pq) != 0)) {
      rep.fail("vertical face table presence wrong");
      return rep;
    }
    if (B.has(m + 1, n) != (B.sh.count(pq) != 0)) {
      rep.fail("horizontal degeneracy table presence wrong");
      return rep;
    }
    if (B.has(m, n + 1) != (B.sv.count(pq) != 0)) {
      rep.fail("vertical degeneracy table presence wrong");
      return rep;
    }
    if (m >= 1) shape("dh", static_cast<int>(B.dh.at(pq).size()), m + 1, m, n);
    if (n >= 1) shape("dv", static_cast<int>(B.dv.at(pq).size()), n + 1, m, n);
    if (B.has(m + 1, n)) shape("sh", static_cast<int>(B.sh.at(pq).size()), m + 1, m, n);
    if (B.has(m, n + 1)) shape("sv", static_cast<int>(B.sv.at(pq).size()), n + 1, m, n);
    if (!rep.ok()) return rep;
  }
  // direction-wise identities via the row and column complexes
  int H = B.max_h(), V = B.max_v();
  for (int q = 0; q <= V; ++q) {
    ValidationReport r = validate(row_of(B, q));
    if (!r.ok()) {
      rep.fail("row " + std::to_string(q) + ": " + r.violations.front());
      return rep;
    }
  }
  for (int m = 0; m <= H; ++m) {
    ValidationReport r = validate(column_of(B, m));
    if (!r.ok()) {
      rep.fail("column " + std::to_string(m) + ": " + r.violations.front());
      return rep;
    }
  }
  // the two directions commute
  auto bad = [&rep](const char* what, int m, int n) {
    rep.fail(std::string(what) + " does not commute at (" + std::to_string(m) + "," + std::to_string(n) + ")");
  };
  for (const auto& [pq, lv] : B.cells) {
    auto [m, n] = pq;
    int sz = lv.size();
    for (int x = 0; x < sz && rep.ok(); ++x) {
      if (m >= 1 && n >= 1)
        for (int i = 0; i <= m && rep.ok(); ++i)
          for (int j = 0; j <= n; ++j)
            if (B.dV(m - 1, n, j, B.dH(m, n, i, x)) != B.dH(m, n - 1, i, B.dV(m, n, j, x))) {
              bad("dh dv", m, n);
              break;
            }
      if (m >= 1 && B.has(m, n + 1))
        for (int i = 0; i <= m && rep.ok(); ++i)
          for (int j = 0; j <= n; ++j)
            if (B.dH(m, n + 1, i, B.sV(m, n, j, x)) != B.sV(m - 1, n, j, B.dH(m, n, i, x))) {
              bad("dh sv", m, n);
              break;
            }
      if (n >= 1 && B.has(m + 1, n))
        for (int i = 0; i <= m && rep.ok(); ++i)
          for (int j = 0; j <= n; ++j)
            if (B.dV(m + 1, n, j, B.sH(m, n, i, x)) != B.sH(m, n - 1, i, B.dV(m, n, j, x))) {
              bad("sh dv", m, n);
              break;
            }
      if (B.has(m + 1, n) && B.has(m, n + 1) && B.has(m + 1, n + 1))
        for (int i = 0; i <= m && rep.ok(); ++i)
          for (int j = 0; j <= n; ++j)
            if (B.sV(m + 1, n, j, B.sH(m, n, i, x)) != B.sH(m, n + 1, i, B.sV(m, n, j, x))) {
              bad("sh sv", m, n);
              break;
            }
    }
    if (!rep.ok()) return rep;
  }
  return rep;
}

namespace {

bool bis_equal(const BisimplicialSet& A, const BisimplicialSet& B) {
  if (A.cells.size() != B.cells.size()) return false;
  for (const auto& [pq, lv] : A.cells) {
    auto it = B.cells.find(pq);
    if (it == B.cells.end() || it->second.ids != lv.ids) return false;
  }
  return A.dh == B.dh && A.sh == B.sh && A.dv == B.dv && A.sv == B.sv;
}

}  // namespace

ValidationReport validate(const BisimplicialMap& f) {
  ValidationReport rep;
  if (!f.src || !f.tgt) {
    rep.fail("map missing endpoints");
    return rep;
  }
  const BisimplicialSet& S = *f.src;
  const BisimplicialSet& T = *f.tgt;
  for (const auto& [pq, lv] : S.cells) {
    auto [m, n] = pq;
    auto it = f.comp.find(pq);
    if (it == f.comp.end() || !T.has(m, n)) {
      rep.fail("component missing at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      return rep;
    }
    if (static_cast<int>(it->second.size()) != lv.size()) {
      rep.fail("component size wrong at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      return rep;
    }
    for (int v : it->second)
      if (v < 0 || v >= T.size(m, n)) {
        rep.fail("component out of range at (" + std::to_string(m) + "," + std::to_string(n) + ")");
        return rep;
      }
  }
  auto bad = [&rep](const char* what, int m, int n) {
    rep.fail(std::string("does not commute with ") + what + " at (" + std::to_string(m) + "," +
             std::to_string(n) + ")");
  };
  for (const auto& [pq, lv] : S.cells) {
    auto [m, n] = pq;
    int sz = lv.size();
    const std::vector<int>& here = f.comp.at(pq);
    for (int x = 0; x < sz && rep.ok(); ++x) {
      if (m >= 1)
        for (int i = 0; i <= m; ++i)
          if (T.dH(m, n, i, here[x]) != f.comp.at({m - 1, n})[S.dH(m, n, i, x)]) {
            bad("dh", m, n);
            break;
          }
      if (n >= 1 && rep.ok())
        for (int i = 0; i <= n; ++i)
          if (T.dV(m, n, i, here[x]) != f.comp.at({m, n - 1})[S.dV(m, n, i, x)]) {
            bad("dv", m, n);
            break;
          }
      if (S.has(m + 1, n) && rep.ok()) {
        if (!T.has(m + 1, n)) {
          rep.fail("target region too small at (" + std::to_string(m + 1) + "," + std::to_string(n) + ")");
          return rep;
        }
        for (int i = 0; i <= m; ++i)
          if (T.sH(m, n, i, here[x]) != f.comp.at({m + 1, n})[S.sH(m, n, i, x)]) {
            bad("sh", m, n);
            break;
          }
      }
      if (S.has(m, n + 1) && rep.ok()) {
        if (!T.has(m, n + 1)) {
          rep.fail("target region too small at (" + std::to_string(m) + "," + std::to_string(n + 1) + ")");
          return rep;
        }
        for (int i = 0; i <= n; ++i)
          if (T.sV(m, n, i, here[x]) != f.comp.at({m, n + 1})[S.sV(m, n, i, x)]) {
            bad("sv", m, n);
            break;
          }
      }
    }
    if (!rep.ok()) return rep;
  }
  return rep;
}

BisimplicialMap identity_bmap(const BisPtr& B) {
  BisimplicialMap f;
  f.src = f.tgt = B;
  for (const auto& [pq, lv] : B->cells) {
    std::vector<int> v(lv.size());
    std::iota(v.begin(), v.end(), 0);
    f.comp[pq] = std::move(v);
  }
  return f;
}

BisimplicialMap bcompose(const BisimplicialMap& g, const BisimplicialMap& f) {
  if (g.src.get() != f.tgt.get() && !bis_equal(*g.src, *f.tgt))
    throw Error("bcompose: endpoints do not match");
  BisimplicialMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  for (const auto& [pq, v] : f.comp) {
    const std::vector<int>& gv = g.comp.at(pq);
    std::vector<int> out(v.size());
    for (size_t x = 0; x < v.size(); ++x) out[x] = gv[v[x]];
    h.comp[pq] = std::move(out);
  }
  return h;
}

bool bmaps_equal(const BisimplicialMap& f, const BisimplicialMap& g) {
  bool src_ok = f.src.get() == g.src.get() || bis_equal(*f.src, *g.src);
  bool tgt_ok = f.tgt.get() == g.tgt.get() || bis_equal(*f.tgt, *g.tgt);
  return src_ok && tgt_ok && f.comp == g.comp;
}

namespace {

// constant inflation along rows over a down-closed predicate
BisimplicialSet inflate_rows(const SimplicialSet& X, const std::function<bool(int, int)>& keep) {
  BisimplicialSet B;
  for (int m = 0; m <= X.truncation; ++m)
    for (int n = 0; keep(m, n); ++n) {
      B.cells[{m, n}] = X.level[m];
      if (m >= 1) B.dh[{m, n}] = X.face[m];
      if (m < X.truncation && keep(m + 1, n)) B.sh[{m, n}] = X.deg[m];
      std::vector<int> idv(X.size(m));
      std::iota(idv.begin(), idv.end(), 0);
      if (n >= 1) B.dv[{m, n}].assign(n + 1, idv);
      if (keep(m, n + 1)) B.sv[{m, n}].assign(n + 1, idv);
    }
  return B;
}

}  // namespace

BisimplicialSet transpose(const BisimplicialSet& B) {
  BisimplicialSet T;
  for (const auto& [pq, lv] : B.cells) T.cells[{pq.second, pq.first}] = lv;
  for (const auto& [pq, t] : B.dh) T.dv[{pq.second, pq.first}] = t;
  for (const auto& [pq, t] : B.sh) T.sv[{pq.second, pq.first}] = t;
  for (const auto& [pq, t] : B.dv) T.dh[{pq.second, pq.first}] = t;
  for (const auto& [pq, t] : B.sv) T.sh[{pq.second, pq.first}] = t;
  return T;
}

BisimplicialSet p1_star(const SimplicialSet& X, int Q) {
  return inflate_rows(X, [Q](int, int n) { return n <= Q; });
}

BisimplicialSet p2_star(const SimplicialSet& X, int P) {
  return transpose(p1_star(X, P));
}

BisimplicialSet external_product(const SimplicialSet& X, const SimplicialSet& Y) {
  BisimplicialSet B;
  for (int m = 0; m <= X.truncation; ++m)
    for (int n = 0; n <= Y.truncation; ++n) {
      Level lv;
      for (int x = 0; x < X.size(m); ++x)
        for (int y = 0; y < Y.size(n); ++y) lv.add("(" + X.id(m, x) + "|" + Y.id(n, y) + ")");
      B.cells[{m, n}] = std::move(lv);
      auto idx = [&](int x, int y) { return x * Y.size(n) + y; };
      if (m >= 1) {
        auto& t = B.dh[{m, n}];
        t.assign(m + 1, std::vector<int>(X.size(m) * Y.size(n)));
        for (int i = 0; i <= m; ++i)
          for (int x = 0; x < X.size(m); ++x)
            for (int y = 0; y < Y.size(n); ++y) t[i][idx(x, y)] = X.d(m, i, x) * Y.size(n) + y;
      }
      if (m < X.truncation) {
        auto& t = B.sh[{m, n}];
        t.assign(m + 1, std::vector<int>(X.size(m) * Y.size(n)));
        for (int i = 0; i <= m; ++i)
          for (int x = 0; x < X.size(m); ++x)
            for (int y = 0; y < Y.size(n); ++y) t[i][idx(x, y)] = X.s(m, i, x) * Y.size(n) + y;
      }
      if (n >= 1) {
        auto& t = B.dv[{m, n}];
        t.assign(n + 1, std::vector<int>(X.size(m) * Y.size(n)));
        for (int i = 0; i <= n; ++i)
          for (int x = 0; x < X.size(m); ++x)
            for (int y = 0; y < Y.size(n); ++y) t[i][idx(x, y)] = x * Y.size(n - 1) + Y.d(n, i, y);
      }
      if (n < Y.truncation) {
        auto& t = B.sv[{m, n}];
        t.assign(n + 1, std::vector<int>(X.size(m) * Y.size(n)));
        for (int i = 0; i <= n; ++i)
          for (int x = 0; x < X.size(m); ++x)
            for (int y = 0; y < Y.size(n); ++y) t[i][idx(x, y)] = x * Y.size(n + 1) + Y.s(n, i, y);
      }
    }
  return B;
}

BisimplicialSet tensor1(const BisimplicialSet& B, const SimplicialSet& K) {
  BisimplicialSet T;
  auto keep = [&](int m, int n) { return B.has(m, n) && m <= K.truncation; };
  for (const auto& [pq, lv] : B.cells) {
    auto [m, n] = pq;
    if (!keep(m, n)) continue;
    Level out;
    for (int b = 0; b < lv.size(); ++b)
      for (int k = 0; k < K.size(m); ++k) out.add("(" + lv.ids[b] + "|" + K.id(m, k) + ")");
    T.cells[pq] = std::move(out);
    int km = K.size(m);
    if (m >= 1) {
      auto& t = T.dh[pq];
      t.assign(m + 1, std::vector<int>(lv.size() * km));
      for (int i = 0; i <= m; ++i)
        for (int b = 0; b < lv.size(); ++b)
          for (int k = 0; k < km; ++k)
            t[i][b * km + k] = B.dH(m, n, i, b) * K.size(m - 1) + K.d(m, i, k);
    }
    if (keep(m + 1, n)) {
      auto& t = T.sh[pq];
      t.assign(m + 1, std::vector<int>(lv.size() * km));
      for (int i = 0; i <= m; ++i)
        for (int b = 0; b < lv.size(); ++b)
          for (int k = 0; k < km; ++k)
            t[i][b * km + k] = B.sH(m, n, i, b) * K.size(m + 1) + K.s(m, i, k);
    }
    if (n >= 1) {
      auto& t = T.dv[pq];
      t.assign(n + 1, std::vector<int>(lv.size() * km));
      for (int i = 0; i <= n; ++i)
        for (int b = 0; b < lv.size(); ++b)
          for (int k = 0; k < km; ++k) t[i][b * km + k] = B.dV(m, n, i, b) * km + k;
    }
    if (keep(m, n + 1)) {
      auto& t = T.sv[pq];
      t.assign(n + 1, std::vector<int>(lv.size() * km));
      for (int i = 0; i <= n; ++i)
        for (int b = 0; b < lv.size(); ++b)
          for (int k = 0; k < km; ++k) t[i][b * km + k] = B.sV(m, n, i, b) * km + k;
    }
  }
  return T;
}

BisimplicialSet tensor2(const BisimplicialSet& B, const SimplicialSet& K) {
  return transpose(tensor1(transpose(B), K));
}

SimplicialSet diagonal(const BisimplicialSet& B) {
  int D = -1;
  while (B.has(D + 1, D + 1)) ++D;
  if (D < 0) throw Error("diagonal: empty");
  SimplicialSet X;
  X.truncation = D;
  X.level.resize(D + 1);
  X.face.resize(D + 1);
  X.deg.resize(D);
  for (int n = 0; n <= D; ++n) {
    X.level[n] = B.cells.at({n, n});
    if (n >= 1) {
      X.face[n].assign(n + 1, std::vector<int>(B.size(n, n)));
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < B.size(n, n); ++x)
          X.face[n][i][x] = B.dV(n - 1, n, i, B.dH(n, n, i, x));
    }
    if (n < D) {
      X.deg[n].assign(n + 1, std::vector<int>(B.size(n, n)));
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < B.size(n, n); ++x)
          X.deg[n][i][x] = B.sH(n, n + 1, i, B.sV(n, n, i, x));
    }
  }
  return X;
}

SimplicialMap diagonal_map(const BisimplicialMap& f) {
  SimplicialMap g;
  g.src = std::make_shared<SimplicialSet>(diagonal(*f.src));
  g.tgt = std::make_shared<SimplicialSet>(diagonal(*f.tgt));
  int L = std::min(g.src->truncation, g.tgt->truncation);
  g.comp.resize(L + 1);
  for (int n = 0; n <= L; ++n) g.comp[n] = f.comp.at({n, n});
  return g;
}

BisimplicialSet dec_total(const SimplicialSet& X) {
  if (X.truncation < 1) throw Error("dec_total: need at least one level above the vertices");
  const int N = X.truncation;
  BisimplicialSet B;
  for (int m = 0; m < N; ++m)
    for (int n = 0; m + n < N; ++n) {
      int lev = m + n + 1;
      B.cells[{m, n}] = X.level[lev];
      if (m >= 1) {
        auto& t = B.dh[{m, n}];
        t.resize(m + 1);
        for (int i = 0; i <= m; ++i) t[i] = X.face[lev][i];
      }
      if (m + n + 1 < N) {
        auto& t = B.sh[{m, n}];
        t.resize(m + 1);
        for (int i = 0; i <= m; ++i) t[i] = X.deg[lev][i];
      }
      if (n >= 1) {
        auto& t = B.dv[{m, n}];
        t.resize(n + 1);
        for (int i = 0; i <= n; ++i) t[i] = X.face[lev][m + 1 + i];
      }
      if (m + n + 1 < N) {
        auto& t = B.sv[{m, n}];
        t.resize(n + 1);
        for (int i = 0; i <= n; ++i) t[i] = X.deg[lev][m + 1 + i];
      }
    }
  return B;
}

AugmentedContraction dec_top(const SimplicialSet& X) {
  if (X.truncation < 1) throw Error("dec_top: need at least one level above the vertices");
  const int N = X.truncation;
  auto body = std::make_shared<SimplicialSet>();
  body->truncation = N - 1;
  body->level.resize(N);
  body->face.resize(N);
  body->deg.resize(N - 1);
  for (int n = 0; n < N; ++n) {
    body->level[n] = X.level[n + 1];
    if (n >= 1) {
      body->face[n].resize(n + 1);
      for (int i = 0; i <= n; ++i) body->face[n][i] = X.face[n + 1][i];
    }
    if (n < N - 1) {
      body->deg[n].resize(n + 1);
      for (int i = 0; i <= n; ++i) body->deg[n][i] = X.deg[n + 1][i];
    }
  }
  AugmentedContraction out;
  out.aug.body = body;
  out.aug.points = X.level[0];
  out.aug.eps = X.face[1][0];
  out.extra.side = Handedness::right;
  out.extra.sec = X.deg[0][0];
  out.extra.extra.resize(N - 1);
  for (int k = 0; k + 1 < N; ++k) out.extra.extra[k] = X.deg[k + 1][k + 1];
  return out;
}

AugmentedContraction dec_bottom(const SimplicialSet& X) {
  if (X.truncation < 1) throw Error("dec_bottom: need at least one level above the vertices");
  const int N = X.truncation;
  auto body = std::make_shared<SimplicialSet>();
  body->truncation = N - 1;
  body->level.resize(N);
  body->face.resize(N);
  body->deg.resize(N - 1);
  for (int n = 0; n < N; ++n) {
    body->level[n] = X.level[n + 1];
    if (n >= 1) {
      body->face[n].resize(n + 1);
      for (int i = 0; i <= n; ++i) body->face[n][i] = X.face[n + 1][i + 1];
    }
    if (n < N - 1) {
      body->deg[n].resize(n + 1);
      for (int i = 0; i <= n; ++i) body->deg[n][i] = X.deg[n + 1][i + 1];
    }
  }
  AugmentedContraction out;
  out.aug.body = body;
  out.aug.points = X.level[0];
  out.aug.eps = X.face[1][1];
  out.extra.side = Handedness::left;
  out.extra.sec = X.deg[0][0];
  out.extra.extra.resize(N - 1);
  for (int k = 0; k + 1 < N; ++k) out.extra.extra[k] = X.deg[k + 1][0];
  return out;
}

DecPackage dec_package(const SSetPtr& X) {
  const int N = X->truncation;
  DecPackage pk;
  pk.base = X;
  auto keep = [N](int m, int n) { return m + n <= N - 1; };
  pk.dec = std::make_shared<BisimplicialSet>(dec_total(*X));
  pk.rows = std::make_shared<BisimplicialSet>(inflate_rows(*X, keep));
  pk.cols = std::make_shared<BisimplicialSet>(transpose(inflate_rows(*X, keep)));
  pk.eps_r.src = pk.dec;
  pk.eps_r.tgt = pk.rows;
  pk.eps_c.src = pk.dec;
  pk.eps_c.tgt = pk.cols;
  for (const auto& [pq, lv] : pk.dec->cells) {
    auto [m, q] = pq;
    std::vector<int> r(lv.size()), c(lv.size());
    for (int x = 0; x < lv.size(); ++x) {
      int v = x;
      for (int t = m + q + 1; t > m; --t) v = X->face[t][t][v];
      r[x] = v;
      v = x;
      for (int t = m + q + 1; t > q; --t) v = X->face[t][0][v];
      c[x] = v;
    }
    pk.eps_r.comp[pq] = std::move(r);
    pk.eps_c.comp[pq] = std::move(c);
  }
  return pk;
}

namespace {

std::vector<int> parse_digits(const std::string& id) {
  std::vector<int> out;
  for (char ch : id) {
    if (ch < '0' || ch > '9') throw Error("expected a digit id, got " + id);
    out.push_back(ch - '0');
  }
  return out;
}

}  // namespace

SectionPackage sigma_sections(int n, int trunc) {
  if (n < 0 || n > 9) throw Error("sigma_sections: vertex count out of supported range");
  if (trunc < 1) throw Error("sigma_sections: truncation too small");
  SectionPackage out;
  auto X = std::make_shared<SimplicialSet>(std_simplex(n, trunc));
  out.base = dec_package(X);
  const BisimplicialSet& D = *out.base.dec;

  out.sigma_r.src = out.base.rows;
  out.sigma_r.tgt = out.base.dec;
  out.sigma_c.src = out.base.cols;
  out.sigma_c.tgt = out.base.dec;
  for (const auto& [pq, lv] : out.base.rows->cells) {
    auto [m, q] = pq;
    std::vector<int> r(lv.size());
    for (int x = 0; x < lv.size(); ++x) {
      std::vector<int> t = parse_digits(lv.ids[x]);
      t.insert(t.end(), q + 1, n);
      r[x] = X->level[m + q + 1].at(simplex_value_id(t));
    }
    out.sigma_r.comp[pq] = std::move(r);
  }
  for (const auto& [pq, lv] : out.base.cols->cells) {
    auto [m, q] = pq;
    std::vector<int> c(lv.size());
    for (int x = 0; x < lv.size(); ++x) {
      std::vector<int> t = parse_digits(lv.ids[x]);
      t.insert(t.begin(), m + 1, 0);
      c[x] = X->level[m + q + 1].at(simplex_value_id(t));
    }
    out.sigma_c.comp[pq] = std::move(c);
  }

  out.vert.vertical = true;
  out.vert.f = identity_bmap(out.base.dec);
  out.vert.g = bcompose(out.sigma_r, out.base.eps_r);
  for (const auto& [pq, lv] : D.cells) {
    auto [m, q] = pq;
    if (!D.has(m, q + 1)) continue;
    auto& h = out.vert.h[pq];
    h.assign(q + 1, std::vector<int>(lv.size()));
    for (int i = 0; i <= q; ++i)
      for (int x = 0; x < lv.size(); ++x) {
        std::vector<int> t = parse_digits(lv.ids[x]);
        t.resize(m + 2 + i);
        t.insert(t.end(), q + 1 - i, n);
        h[i][x] = X->level[m + q + 2].at(simplex_value_id(t));
      }
  }

  out.horiz.vertical = false;
  out.horiz.f = bcompose(out.sigma_c, out.base.eps_c);
  out.horiz.g = identity_bmap(out.base.dec);
  for (const auto& [pq, lv] : D.cells) {
    auto [m, q] = pq;
    if (!D.has(m + 1, q)) continue;
    auto& h = out.horiz.h[pq];
    h.assign(m + 1, std::vector<int>(lv.size()));
    for (int i = 0; i <= m; ++i)
      for (int x = 0; x < lv.size(); ++x) {
        std::vector<int> t = parse_digits(lv.ids[x]);
        t.erase(t.begin(), t.begin() + i);
        t.insert(t.begin(), i + 1, 0);
        h[i][x] = X->level[m + q + 2].at(simplex_value_id(t));
      }
  }
  return out;
}

namespace {

BisimplicialMap transpose_bmap(const BisimplicialMap& f, const BisPtr& ts, const BisPtr& tt) {
  BisimplicialMap g;
  g.src = ts;
  g.tgt = tt;
  for (const auto& [pq, v] : f.comp) g.comp[{pq.second, pq.first}] = v;
  return g;
}

ValidationReport check_bihomotopy_vertical(const BiHomotopy& H) {
  ValidationReport rep;
  const BisimplicialMap& f = H.f;
  const BisimplicialMap& g = H.g;
  if ((f.src.get() != g.src.get() && !bis_equal(*f.src, *g.src)) ||
      (f.tgt.get() != g.tgt.get() && !bis_equal(*f.tgt, *g.tgt))) {
    rep.fail("homotopy endpoints do not share source and target");
    return rep;
  }
  ValidationReport rf = validate(f), rg = validate(g);
  if (!rf.ok()) {
    rep.fail("first endpoint not a map: " + rf.violations.front());
    return rep;
  }
  if (!rg.ok()) {
    rep.fail("second endpoint not a map: " + rg.violations.front());
    return rep;
  }
  const BisimplicialSet& S = *f.src;
  const BisimplicialSet& T = *f.tgt;
  for (const auto& [pq, lv] : S.cells) {
    auto [m, q] = pq;
    bool want = S.has(m, q + 1) && T.has(m, q + 1);
    if (want != (H.h.count(pq) != 0)) {
      rep.fail("component presence wrong at (" + std::to_string(m) + "," + std::to_string(q) + ")");
      return rep;
    }
    if (!want) continue;
    const auto& h = H.h.at(pq);
    if (static_cast<int>(h.size()) != q + 1) {
      rep.fail("component count wrong at (" + std::to_string(m) + "," + std::to_string(q) + ")");
      return rep;
    }
    for (const auto& vv : h) {
      if (static_cast<int>(vv.size()) != lv.size()) {
        rep.fail("component size wrong at (" + std::to_string(m) + "," + std::to_string(q) + ")");
        return rep;
      }
      for (int v : vv)
        if (v < 0 || v >= T.size(m, q + 1)) {
          rep.fail("component out of range at (" + std::to_string(m) + "," + std::to_string(q) + ")");
          return rep;
        }
    }
  }
  auto bad = [&rep](const char* what, int m, int q) {
    rep.fail(std::string(what) + " fails at (" + std::to_string(m) + "," + std::to_string(q) + ")");
  };
  for (const auto& [pq, hv] : H.h) {
    auto [m, q] = pq;
    int sz = S.size(m, q);
    for (int x = 0; x < sz && rep.ok(); ++x) {
      if (T.dV(m, q + 1, q + 1, hv[q][x]) != f.comp.at(pq)[x]) bad("top face endpoint", m, q);
      if (rep.ok() && T.dV(m, q + 1, 0, hv[0][x]) != g.comp.at(pq)[x]) bad("bottom face endpoint", m, q);
      for (int j = 0; j <= q && rep.ok(); ++j) {
        for (int i = 0; i <= q + 1 && rep.ok(); ++i) {
          if (i < j) {
            if (T.dV(m, q + 1, i, hv[j][x]) != H.h.at({m, q - 1})[j - 1][S.dV(m, q, i, x)])
              bad("vertical face below", m, q);
          } else if (i == j + 1 && j + 1 <= q) {
            if (T.dV(m, q + 1, i, hv[j + 1][x]) != T.dV(m, q + 1, i, hv[j][x]))
              bad("matching vertical faces", m, q);
          } else if (i > j + 1) {
            if (T.dV(m, q + 1, i, hv[j][x]) != H.h.at({m, q - 1})[j][S.dV(m, q, i - 1, x)])
              bad("vertical face above", m, q);
          }
        }
        if (S.has(m, q + 2) && T.has(m, q + 2))
          for (int i = 0; i <= q + 1 && rep.ok(); ++i) {
            if (i <= j) {
              if (T.sV(m, q + 1, i, hv[j][x]) != H.h.at({m, q + 1})[j + 1][S.sV(m, q, i, x)])
                bad("vertical degeneracy below", m, q);
            } else {
              if (T.sV(m, q + 1, i, hv[j][x]) != H.h.at({m, q + 1})[j][S.sV(m, q, i - 1, x)])
                bad("vertical degeneracy above", m, q);
            }
          }
      }
      // commutation with the horizontal operators
      if (m >= 1)
        for (int j = 0; j <= m && rep.ok(); ++j)
          for (int i = 0; i <= q && rep.ok(); ++i)
            if (T.dH(m, q + 1, j, hv[i][x]) != H.h.at({m - 1, q})[i][S.dH(m, q, j, x)])
              bad("horizontal face commutation", m, q);
      if (S.has(m + 1, q) && T.has(m + 1, q + 1) && H.h.count({m + 1, q}))
        for (int j = 0; j <= m && rep.ok(); ++j)
          for (int i = 0; i <= q && rep.ok(); ++i)
            if (T.sH(m, q + 1, j, hv[i][x]) != H.h.at({m + 1, q})[i][S.sH(m, q, j, x)])
              bad("horizontal degeneracy commutation", m, q);
    }
    if (!rep.ok()) return rep;
  }
  return rep;
}

}  // namespace

ValidationReport check_bihomotopy(const BiHomotopy& H) {
  if (H.vertical) return check_bihomotopy_vertical(H);
  auto ts = std::make_shared<BisimplicialSet>(transpose(*H.f.src));
  auto tt = std::make_shared<BisimplicialSet>(transpose(*H.f.tgt));
  BiHomotopy T;
  T.vertical = true;
  T.f = transpose_bmap(H.f, ts, tt);
  T.g = transpose_bmap(H.g, ts, tt);
  for (const auto& [pq, v] : H.h) T.h[{pq.second, pq.first}] = v;
  return check_bihomotopy_vertical(T);
}

namespace {

std::string tuple_id(const BisimplicialSet& B, int n, const std::vector<int>& t) {
  std::string out = "(";
  for (int i = 0; i <= n; ++i) {
    if (i) out += ";";
    out += B.id(i, n - i, t[i]);
  }
  out += ")";
  return out;
}

SimplicialSet total_build(const BisimplicialSet& B, long guard,
                          std::vector<std::vector<std::vector<int>>>* tuples_out) {
  int T = -1;
  while (true) {
    bool full = true;
    for (int i = 0; i <= T + 1; ++i)
      if (!B.has(i, T + 1 - i)) {
        full = false;
        break;
      }
    if (!full) break;
    ++T;
  }
  if (T < 0) throw Error("total: empty antidiagonal");
  SimplicialSet X;
  X.truncation = T;
  X.level.resize(T + 1);
  X.face.resize(T + 1);
  X.deg.resize(T);
  std::vector<std::vector<std::vector<int>>> tuples(T + 1);
  long count = 0;
  for (int n = 0; n <= T; ++n) {
    // candidates for slot i grouped by the matching value d^h_i x_i
    std::vector<std::map<int, std::vector<int>>> match(n + 1);
    for (int i = 1; i <= n; ++i)
      for (int x = 0; x < B.size(i, n - i); ++x) match[i][B.dH(i, n - i, i, x)].push_back(x);
    std::vector<int> cur;
    std::function<void(int)> dfs = [&](int i) {
      if (i > n) {
        if (++count > guard) throw GuardExceeded("total: cell guard exceeded");
        tuples[n].push_back(cur);
        X.level[n].add(tuple_id(B, n, cur));
        return;
      }
      if (i == 0) {
        for (int x = 0; x < B.size(0, n); ++x) {
          cur.push_back(x);
          dfs(1);
          cur.pop_back();
        }
      } else {
        int need = B.dV(i - 1, n - i + 1, 0, cur.back());
        auto it = match[i].find(need);
        if (it == match[i].end()) return;
        for (int x : it->second) {
          cur.push_back(x);
          dfs(i + 1);
          cur.pop_back();
        }
      }
    };
    dfs(0);
  }
  for (int n = 1; n <= T; ++n) {
    X.face[n].assign(n + 1, std::vector<int>(X.size(n)));
    for (int x = 0; x < X.size(n); ++x)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> y = total_tuple_face(B, n, tuples[n][x], i);
        int idx = X.level[n - 1].at(tuple_id(B, n - 1, y));
        if (idx < 0) throw Error("total: face left the enumerated object");
        X.face[n][i][x] = idx;
      }
  }
  for (int n = 0; n < T; ++n) {
    X.deg[n].assign(n + 1, std::vector<int>(X.size(n)));
    for (int x = 0; x < X.size(n); ++x)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> y = total_tuple_deg(B, n, tuples[n][x], i);
        int idx = X.level[n + 1].at(tuple_id(B, n + 1, y));
        if (idx < 0) throw Error("total: degeneracy left the enumerated object");
        X.deg[n][i][x] = idx;
      }
  }
  if (tuples_out) *tuples_out = std::move(tuples);
  return X;
}

}  // namespace

std::vector<int> total_tuple_face(const BisimplicialSet& B, int n, const std::vector<int>& x, int i) {
  std::vector<int> y(n);
  for (int j = 0; j < n; ++j)
    y[j] = j < i ? B.dV(j, n - j, i - j, x[j]) : B.dH(j + 1, n - j - 1, i, x[j + 1]);
  return y;
}

std::vector<int> total_tuple_deg(const BisimplicialSet& B, int n, const std::vector<int>& x, int i) {
  std::vector<int> y(n + 2);
  for (int j = 0; j <= n + 1; ++j)
    y[j] = j <= i ? B.sV(j, n - j, i - j, x[j]) : B.sH(j - 1, n - j + 1, i, x[j - 1]);
  return y;
}

bool total_tuple_member(const BisimplicialSet& B, int n, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != n + 1) return false;
  for (int i = 0; i <= n; ++i) {
    if (!B.has(i, n - i) || x[i] < 0 || x[i] >= B.size(i, n - i)) return false;
    if (i < n && B.dV(i, n - i, 0, x[i]) != B.dH(i + 1, n - i - 1, i + 1, x[i + 1])) return false;
  }
  return true;
}

TotalResult total_object(const BisimplicialSet& B, long guard) {
  TotalResult out;
  std::vector<std::vector<std::vector<int>>> tuples;
  out.space = std::make_shared<SimplicialSet>(total_build(B, guard, &tuples));
  out.tuples = std::move(tuples);
  return out;
}

SimplicialSet total(const BisimplicialSet& B, long guard) { return total_build(B, guard, nullptr); }

SimplicialMap total_map(const BisimplicialMap& f, const TotalResult& tsrc, const TotalResult& ttgt) {
  SimplicialMap g;
  g.src = tsrc.space;
  g.tgt = ttgt.space;
  int L = std::min(tsrc.space->truncation, ttgt.space->truncation);
  g.comp.resize(L + 1);
  for (int n = 0; n <= L; ++n) {
    g.comp[n].resize(tsrc.space->size(n));
    for (int x = 0; x < tsrc.space->size(n); ++x) {
      std::vector<int> img(n + 1);
      for (int i = 0; i <= n; ++i) img[i] = f.comp.at({i, n - i})[tsrc.tuples[n][x][i]];
      int idx = ttgt.space->level[n].at(tuple_id(*f.tgt, n, img));
      if (idx < 0) throw Error("total_map: image tuple missing");
      g.comp[n][x] = idx;
    }
  }
  return g;
}

SimplicialMap comparison(const BisPtr& B, const SSetPtr& diag, const TotalResult& tot) {
  SimplicialMap f;
  f.src = diag;
  f.tgt = tot.space;
  int L = std::min(diag->truncation, tot.space->truncation);
  f.comp.resize(L + 1);
  for (int n = 0; n <= L; ++n) {
    f.comp[n].resize(diag->size(n));
    for (int x = 0; x < diag->size(n); ++x) {
      std::vector<int> t(n + 1);
      for (int i = 0; i <= n; ++i) {
        int y = x;
        for (int k = 1; k <= i; ++k) y = B->dV(n, n - k + 1, 0, y);
        for (int k = n; k > i; --k) y = B->dH(k, n - i, k, y);
        t[i] = y;
      }
      int idx = tot.space->level[n].at(tuple_id(*B, n, t));
      if (idx < 0) throw Error("comparison: image tuple missing");
      f.comp[n][x] = idx;
    }
  }
  return f;
}

UnitPackage unit_package(const SSetPtr& X, long guard) {
  UnitPackage out;
  out.dec = std::make_shared<BisimplicialSet>(dec_total(*X));
  out.tot = total_object(*out.dec, guard);
  const int T = out.tot.space->truncation;
  out.x_trunc = std::make_shared<SimplicialSet>(restrict_truncation(*X, T));
  out.eta.src = out.x_trunc;
  out.eta.tgt = out.tot.space;
  out.eta.comp.resize(T + 1);
  for (int n = 0; n <= T; ++n) {
    out.eta.comp[n].resize(X->size(n));
    for (int x = 0; x < X->size(n); ++x) {
      std::vector<int> t(n + 1);
      for (int i = 0; i <= n; ++i) t[i] = X->deg[n][i][x];
      int idx = out.tot.space->level[n].at(tuple_id(*out.dec, n, t));
      if (idx < 0) throw Error("unit: image tuple missing");
      out.eta.comp[n][x] = idx;
    }
  }
  out.retract.src = out.tot.space;
  out.retract.tgt = out.x_trunc;
  out.retract.comp.resize(T + 1);
  for (int n = 0; n <= T; ++n) {
    out.retract.comp[n].resize(out.tot.space->size(n));
    for (int x = 0; x < out.tot.space->size(n); ++x)
      out.retract.comp[n][x] = X->face[n + 1][n + 1][out.tot.tuples[n][x][n]];
  }
  return out;
}

Pi0Rows pi0_rows(const BisimplicialSet& B) {
  int M = -1;
  while (B.has(M + 1, 0) && B.has(M + 1, 1)) ++M;
  if (M < 0) throw Error("pi0_rows: need two vertical levels in every row");
  Pi0Rows out;
  auto X = std::make_shared<SimplicialSet>();
  X->truncation = M;
  X->level.resize(M + 1);
  X->face.resize(M + 1);
  X->deg.resize(M);
  out.class_of.resize(M + 1);
  std::vector<std::vector<int>> reps(M + 1);
  for (int m = 0; m <= M; ++m) {
    int sz = B.size(m, 0);
    std::vector<int> parent(sz);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (int e = 0; e < B.size(m, 1); ++e) {
      int a = find(B.dV(m, 1, 0, e)), b = find(B.dV(m, 1, 1, e));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    out.class_of[m].assign(sz, -1);
    for (int x = 0; x < sz; ++x) {
      int r = find(x);
      if (out.class_of[m][r] < 0) {
        out.class_of[m][r] = static_cast<int>(reps[m].size());
        reps[m].push_back(r);
        X->level[m].add(B.id(m, 0, r));
      }
      out.class_of[m][x] = out.class_of[m][r];
    }
  }
  for (int m = 1; m <= M; ++m) {
    X->face[m].assign(m + 1, std::vector<int>(reps[m].size(), -1));
    for (int x = 0; x < B.size(m, 0); ++x)
      for (int i = 0; i <= m; ++i) {
        int c = out.class_of[m][x];
        int fc = out.class_of[m - 1][B.dH(m, 0, i, x)];
        if (X->face[m][i][c] < 0) X->face[m][i][c] = fc;
        else if (X->face[m][i][c] != fc)
          throw Error("pi0_rows: horizontal face not constant on classes");
      }
  }
  for (int m = 0; m < M; ++m) {
    X->deg[m].assign(m + 1, std::vector<int>(reps[m].size(), -1));
    for (int x = 0; x < B.size(m, 0); ++x)
      for (int i = 0; i <= m; ++i) {
        int c = out.class_of[m][x];
        int sc = out.class_of[m + 1][B.sH(m, 0, i, x)];
        if (X->deg[m][i][c] < 0) X->deg[m][i][c] = sc;
        else if (X->deg[m][i][c] != sc)
          throw Error("pi0_rows: horizontal degeneracy not constant on classes");
      }
  }
  ValidationReport rep = validate(*X);
  if (!rep.ok()) throw Error("pi0_rows: result invalid: " + rep.violations.front());
  out.space = X;
  return out;
}

namespace {

using Pt = std::pair<int, int>;
using Chain = std::vector<Pt>;

void grow_chains(int m, int n, Chain& cur, std::vector<Chain>& out) {
  out.push_back(cur);
  Pt last = cur.back();
  for (int p = last.first; p <= m; ++p)
    for (int q = last.second; q <= n; ++q) {
      if (p == last.first && q == last.second) continue;
      cur.push_back({p, q});
      grow_chains(m, n, cur, out);
      cur.pop_back();
    }
}

// all strictly increasing chains in the (m+1) x (n+1) grid, by dimension then order
std::vector<Chain> grid_chains(int m, int n) {
  std::vector<Chain> out;
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q <= n; ++q) {
      Chain c{{p, q}};
      grow_chains(m, n, c, out);
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const Chain& a, const Chain& b) { return a.size() < b.size(); });
  return out;
}

std::string chain_key(const Chain& c) {
  std::string k;
  for (auto [p, q] : c) {
    k += std::to_string(p);
    k += ',';
    k += std::to_string(q);
    k += ';';
  }
  return k;
}

struct DStarLevel {
  std::vector<Chain> chains;                 // all nondegenerate product cells
  std::map<std::string, int> chain_index;    // key -> position in chains
  std::vector<int> maximal;                  // positions of the maximal chains
  std::map<std::string, int> maximal_index;  // key -> position in the maximal list
  std::vector<std::vector<int>> cells;       // each cell: images of the maximal chains
};

// canonical extension of a weakly increasing point path to a maximal chain
Chain extend_path(int m, int n, const std::vector<Pt>& pts) {
  Chain c;
  Pt cur{0, 0};
  c.push_back(cur);
  auto walk_to = [&](Pt t) {
    while (cur.first < t.first) {
      ++cur.first;
      c.push_back(cur);
    }
    while (cur.second < t.second) {
      ++cur.second;
      c.push_back(cur);
    }
  };
  for (const Pt& p : pts) walk_to(p);
  walk_to({m, n});
  return c;
}

}  // namespace

DStarResult d_star(const SSetPtr& K, int P, int Q, long guard) {
  if (P < 0 || Q < 0) throw Error("d_star: negative bounds");
  if (K->truncation < P + Q) throw Error("d_star: source object not deep enough for the requested region");
  std::map<Pt, DStarLevel> levels;
  auto eval = [&](int m, int n, const std::vector<int>& cell, const std::vector<Pt>& pts) {
    const DStarLevel& L = levels.at({m, n});
    std::vector<Pt> strict;
    for (const Pt& p : pts)
      if (strict.empty() || p != strict.back()) strict.push_back(p);
    Chain C = extend_path(m, n, strict);
    int pos = L.maximal_index.at(chain_key(C));
    int y = cell[pos];
    OrdinalMap u;
    u.target = m + n;
    for (const Pt& p : pts) u.values.push_back(p.first + p.second);
    return K->apply(u, m + n, y);
  };

  long count = 0;
  for (int m = 0; m <= P; ++m)
    for (int n = 0; n <= Q; ++n) {
      DStarLevel L;
      L.chains = grid_chains(m, n);
      for (size_t i = 0; i < L.chains.size(); ++i) L.chain_index[chain_key(L.chains[i])] = static_cast<int>(i);
      for (size_t i = 0; i < L.chains.size(); ++i)
        if (static_cast<int>(L.chains[i].size()) == m + n + 1 && L.chains[i].front() == Pt{0, 0} &&
            L.chains[i].back() == Pt{m, n}) {
          L.maximal_index[chain_key(L.chains[i])] = static_cast<int>(L.maximal.size());
          L.maximal.push_back(static_cast<int>(i));
        }
      // A map off the grid is pinned by its values on the maximal chains, and a
      // tuple of values glues iff each pair agrees on the shared subchain. In a
      // maximal chain the index of a point is its height p+q, so the restriction
      // to an overlap is the same ordinal map on both sides.
      int nm = static_cast<int>(L.maximal.size());
      std::vector<std::vector<OrdinalMap>> overlap(nm);  // overlap[j][i] for i < j
      for (int j = 0; j < nm; ++j) {
        overlap[j].resize(j);
        const Chain& cj = L.chains[L.maximal[j]];
        for (int i = 0; i < j; ++i) {
          const Chain& ci = L.chains[L.maximal[i]];
          OrdinalMap u;
          u.target = m + n;
          for (const Pt& p : cj)
            if (std::find(ci.begin(), ci.end(), p) != ci.end()) u.values.push_back(p.first + p.second);
          overlap[j][i] = std::move(u);
        }
      }
      const int dim = m + n;
      std::vector<int> img(nm, -1);
      std::function<void(int)> assign = [&](int j) {
        if (j == nm) {
          if (++count > guard) throw GuardExceeded("d_star: cell guard exceeded");
          L.cells.push_back(img);
          return;
        }
        for (int y = 0; y < K->size(dim); ++y) {
          if (++count > guard) throw GuardExceeded("d_star: search guard exceeded");
          bool ok = true;
          for (int i = 0; i < j && ok; ++i)
            ok = K->apply(overlap[j][i], dim, y) == K->apply(overlap[j][i], dim, img[i]);
          if (ok) {
            img[j] = y;
            assign(j + 1);
          }
        }
        img[j] = -1;
      };
      assign(0);
      levels[{m, n}] = std::move(L);
    }

  auto B = std::make_shared<BisimplicialSet>();
  for (int m = 0; m <= P; ++m)
    for (int n = 0; n <= Q; ++n) {
      const DStarLevel& L = levels.at({m, n});
      Level lv;
      for (const auto& cell : L.cells) {
        std::string id = "{";
        for (size_t i = 0; i < cell.size(); ++i) {
          if (i) id += ",";
          id += K->id(m + n, cell[i]);
        }
        id += "}";
        lv.add(id);
      }
      B->cells[{m, n}] = std::move(lv);
    }
  auto locate = [&](int m, int n, const std::vector<int>& imgs) {
    std::string id = "{";
    for (size_t i = 0; i < imgs.size(); ++i) {
      if (i) id += ",";
      id += K->id(m + n, imgs[i]);
    }
    id += "}";
    int idx = B->cells.at({m, n}).at(id);
    if (idx < 0) throw Error("d_star: image cell missing");
    return idx;
  };
  // operators by precomposition with the grid maps
  for (int m = 0; m <= P; ++m)
    for (int n = 0; n <= Q; ++n) {
      const DStarLevel& L = levels.at({m, n});
      int sz = static_cast<int>(L.cells.size());
      if (m >= 1) {
        auto& t = (*B).dh[{m, n}];
        t.assign(m + 1, std::vector<int>(sz));
        const DStarLevel& LT = levels.at({m - 1, n});
        for (int i = 0; i <= m; ++i)
          for (int x = 0; x < sz; ++x) {
            std::vector<int> imgs(LT.maximal.size());
            for (size_t c = 0; c < LT.maximal.size(); ++c) {
              std::vector<Pt> pts;
              for (Pt p : LT.chains[LT.maximal[c]]) pts.push_back({p.first < i ? p.first : p.first + 1, p.second});
              imgs[c] = eval(m, n, L.cells[x], pts);
            }
            t[i][x] = locate(m - 1, n, imgs);
          }
      }
      if (m + 1 <= P) {
        auto& t = (*B).sh[{m, n}];
        t.assign(m + 1, std::vector<int>(sz));
        const DStarLevel& LT = levels.at({m + 1, n});
        for (int i = 0; i <= m; ++i)
          for (int x = 0; x < sz; ++x) {
            std::vector<int> imgs(LT.maximal.size());
            for (size_t c = 0; c < LT.maximal.size(); ++c) {
              std::vector<Pt> pts;
              for (Pt p : LT.chains[LT.maximal[c]]) pts.push_back({p.first <= i ? p.first : p.first - 1, p.second});
              imgs[c] = eval(m, n, L.cells[x], pts);
            }
            t[i][x] = locate(m + 1, n, imgs);
          }
      }
      if (n >= 1) {
        auto& t = (*B).dv[{m, n}];
        t.assign(n + 1, std::vector<int>(sz));
        const DStarLevel& LT = levels.at({m, n - 1});
        for (int i = 0; i <= n; ++i)
          for (int x = 0; x < sz; ++x) {
            std::vector<int> imgs(LT.maximal.size());
            for (size_t c = 0; c < LT.maximal.size(); ++c) {
              std::vector<Pt> pts;
              for (Pt p : LT.chains[LT.maximal[c]]) pts.push_back({p.first, p.second < i ? p.second : p.second + 1});
              imgs[c] = eval(m, n, L.cells[x], pts);
            }
            t[i][x] = locate(m, n - 1, imgs);
          }
      }
      if (n + 1 <= Q) {
        auto& t = (*B).sv[{m, n}];
        t.assign(n + 1, std::vector<int>(sz));
        const DStarLevel& LT = levels.at({m, n + 1});
        for (int i = 0; i <= n; ++i)
          for (int x = 0; x < sz; ++x) {
            std::vector<int> imgs(LT.maximal.size());
            for (size_t c = 0; c < LT.maximal.size(); ++c) {
              std::vector<Pt> pts;
              for (Pt p : LT.chains[LT.maximal[c]]) pts.push_back({p.first, p.second <= i ? p.second : p.second - 1});
              imgs[c] = eval(m, n, L.cells[x], pts);
            }
            t[i][x] = locate(m, n + 1, imgs);
          }
      }
    }

  DStarResult out;
  out.object = B;
  out.diag = std::make_shared<SimplicialSet>(diagonal(*B));
  out.counit.src = out.diag;
  out.counit.tgt = K;
  int D = out.diag->truncation;
  out.counit.comp.resize(D + 1);
  for (int nd = 0; nd <= D; ++nd) {
    out.counit.comp[nd].resize(out.diag->size(nd));
    const DStarLevel& L = levels.at({nd, nd});
    std::vector<Pt> pts;
    for (int tt = 0; tt <= nd; ++tt) pts.push_back({tt, tt});
    for (int x = 0; x < out.diag->size(nd); ++x) out.counit.comp[nd][x] = eval(nd, nd, L.cells[x], pts);
  }
  return out;
}

RowwiseReduce rowwise_reduce(const BisPtr& B) {
  RowwiseReduce out;
  std::map<std::pair<int, int>, std::vector<char>> marked;
  for (const auto& [pq, lv] : B->cells) marked[pq].assign(lv.size(), pq.first == 0 ? 1 : 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [pq, lv] : B->cells) {
      auto [m, n] = pq;
      for (int x = 0; x < lv.size(); ++x) {
        if (!marked[pq][x]) continue;
        auto push = [&](std::pair<int, int> t, int y) {
          if (!marked[t][y]) {
            marked[t][y] = 1;
            changed = true;
          }
        };
        if (m >= 1)
          for (int i = 0; i <= m; ++i) push({m - 1, n}, B->dH(m, n, i, x));
        if (n >= 1)
          for (int i = 0; i <= n; ++i) push({m, n - 1}, B->dV(m, n, i, x));
        if (B->has(m + 1, n))
          for (int i = 0; i <= m; ++i) push({m + 1, n}, B->sH(m, n, i, x));
        if (B->has(m, n + 1))
          for (int i = 0; i <= n; ++i) push({m, n + 1}, B->sV(m, n, i, x));
      }
    }
  }
  auto R = std::make_shared<BisimplicialSet>();
  for (const auto& [pq, lv] : B->cells) {
    Level out_lv;
    std::string base = "*";
    bool clash = true;
    while (clash) {
      clash = false;
      for (int x = 0; x < lv.size(); ++x)
        if (!marked[pq][x] && lv.ids[x] == base) {
          base = "*" + base;
          clash = true;
          break;
        }
    }
    out_lv.add(base);
    auto& cls = out.class_of[pq];
    cls.assign(lv.size(), 0);
    for (int x = 0; x < lv.size(); ++x)
      if (!marked[pq][x]) cls[x] = out_lv.add(lv.ids[x]);
    R->cells[pq] = std::move(out_lv);
  }
  for (const auto& [pq, lv] : B->cells) {
    auto [m, n] = pq;
    int outsz = R->size(m, n);
    if (m >= 1) {
      auto& t = R->dh[pq];
      t.assign(m + 1, std::vector<int>(outsz, 0));
      for (int x = 0; x < lv.size(); ++x)
        if (!marked[pq][x])
          for (int i = 0; i <= m; ++i)
            t[i][out.class_of[pq][x]] = out.class_of[{m - 1, n}][B->dH(m, n, i, x)];
    }
    if (n >= 1) {
      auto& t = R->dv[pq];
      t.assign(n + 1, std::vector<int>(outsz, 0));
      for (int x = 0; x < lv.size(); ++x)
        if (!marked[pq][x])
          for (int i = 0; i <= n; ++i)
            t[i][out.class_of[pq][x]] = out.class_of[{m, n - 1}][B->dV(m, n, i, x)];
    }
    if (B->has(m + 1, n)) {
      auto& t = R->sh[pq];
      t.assign(m + 1, std::vector<int>(outsz, 0));
      for (int x = 0; x < lv.size(); ++x)
        if (!marked[pq][x])
          for (int i = 0; i <= m; ++i)
            t[i][out.class_of[pq][x]] = out.class_of[{m + 1, n}][B->sH(m, n, i, x)];
    }
    if (B->has(m, n + 1)) {
      auto& t = R->sv[pq];
      t.assign(n + 1, std::vector<int>(outsz, 0));
      for (int x = 0; x < lv.size(); ++x)
        if (!marked[pq][x])
          for (int i = 0; i <= n; ++i)
            t[i][out.class_of[pq][x]] = out.class_of[{m, n + 1}][B->sV(m, n, i, x)];
    }
  }
  ValidationReport rep = validate(*R);
  if (!rep.ok()) throw Error("rowwise_reduce: result invalid: " + rep.violations.front());
  out.space = R;
  out.marked = std::move(marked);
  return out;
}

DoubleComplex bichains(const BisimplicialSet& B) {
  DoubleComplex D;
  std::map<std::pair<int, int>, std::vector<int>> pos;
  std::map<std::pair<int, int>, std::vector<int>> list;
  for (const auto& [pq, lv] : B.cells) {
    auto [p, q] = pq;
    auto& ps = pos[pq];
    ps.assign(lv.size(), -1);
    for (int x = 0; x < lv.size(); ++x) {
      bool degen = false;
      for (int i = 0; i < p && !degen; ++i)
        degen = B.sH(p - 1, q, i, B.dH(p, q, i, x)) == x;
      for (int i = 0; i < q && !degen; ++i)
        degen = B.sV(p, q - 1, i, B.dV(p, q, i, x)) == x;
      if (!degen) {
        ps[x] = static_cast<int>(list[pq].size());
        list[pq].push_back(x);
        D.basis[pq].push_back(lv.ids[x]);
      }
    }
    D.rank[pq] = static_cast<int>(list[pq].size());
  }
  for (const auto& [pq, r] : D.rank) {
    auto [p, q] = pq;
    if (p >= 1) {
      IntMat M(D.rank.at({p - 1, q}), r);
      for (int j = 0; j < r; ++j) {
        int x = list[pq][j];
        for (int i = 0; i <= p; ++i) {
          int y = pos[{p - 1, q}][B.dH(p, q, i, x)];
          if (y >= 0) M.at(y, j) += (i % 2 == 0) ? 1 : -1;
        }
      }
      D.dh[pq] = std::move(M);
    }
    if (q >= 1) {
      IntMat M(D.rank.at({p, q - 1}), r);
      for (int j = 0; j < r; ++j) {
        int x = list[pq][j];
        for (int i = 0; i <= q; ++i) {
          int y = pos[{p, q - 1}][B.dV(p, q, i, x)];
          if (y >= 0) M.at(y, j) += (i % 2 == 0) ? 1 : -1;
        }
      }
      D.dv[pq] = std::move(M);
    }
  }
  return D;
}

}  // namespace deca
