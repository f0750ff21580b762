#include "deca/sgroup.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace deca {

int FiniteGroup::inv(int a) const {
  for (int b = 0; b < size(); ++b)
    if (mul[a][b] == identity) return b;
  throw Error("element without inverse: " + names[a]);
}

int FiniteGroup::at(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

ValidationReport validate(const FiniteGroup& G) {
  ValidationReport rep;
  int n = G.size();
  if (n == 0) {
    rep.fail("empty group");
    return rep;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (G.names[i] == G.names[j]) {
        rep.fail("duplicate element name " + G.names[i]);
        return rep;
      }
  if (static_cast<int>(G.mul.size()) != n) {
    rep.fail("multiplication table size wrong");
    return rep;
  }
  for (const auto& row : G.mul) {
    if (static_cast<int>(row.size()) != n) {
      rep.fail("multiplication table row size wrong");
      return rep;
    }
    for (int v : row)
      if (v < 0 || v >= n) {
        rep.fail("multiplication table entry out of range");
        return rep;
      }
  }
  if (G.identity < 0 || G.identity >= n) {
    rep.fail("identity out of range");
    return rep;
  }
  for (int a = 0; a < n; ++a)
    if (G.mul[G.identity][a] != a || G.mul[a][G.identity] != a) {
      rep.fail("identity law fails at " + G.names[a]);
      return rep;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.mul[G.mul[a][b]][c] != G.mul[a][G.mul[b][c]]) {
          rep.fail("associativity fails at (" + G.names[a] + "," + G.names[b] + "," + G.names[c] + ")");
          return rep;
        }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = G.mul[a][b] == G.identity && G.mul[b][a] == G.identity;
    if (!found) {
      rep.fail("no inverse for " + G.names[a]);
      return rep;
    }
  }
  return rep;
}

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw Error("cyclic_group: order must be positive");
  FiniteGroup G;
  G.names.push_back("e");
  for (int i = 1; i < n; ++i) G.names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
  G.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.mul[a][b] = (a + b) % n;
  G.identity = 0;
  return G;
}

namespace {

std::array<int, 3> perm_compose(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  // (a after b)
  return {a[b[0]], a[b[1]], a[b[2]]};
}

std::string perm_name(const std::array<int, 3>& p) {
  if (p == std::array<int, 3>{0, 1, 2}) return "e";
  if (p == std::array<int, 3>{1, 0, 2}) return "(01)";
  if (p == std::array<int, 3>{2, 1, 0}) return "(02)";
  if (p == std::array<int, 3>{0, 2, 1}) return "(12)";
  if (p == std::array<int, 3>{1, 2, 0}) return "(012)";
  return "(021)";
}

}  // namespace

FiniteGroup symmetric_group_3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  FiniteGroup G;
  for (const auto& p : perms) G.names.push_back(perm_name(p));
  G.mul.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto c = perm_compose(perms[a], perms[b]);
      G.mul[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  G.identity = 0;
  return G;
}

FiniteGroup direct_power(const FiniteGroup& H, int k) {
  if (k <= 0) throw Error("direct_power: exponent must be positive");
  int h = H.size();
  long total = 1;
  for (int i = 0; i < k; ++i) total *= h;
  FiniteGroup G;
  auto unrank = [&](long r) {
    std::vector<int> t(k);
    for (int i = k - 1; i >= 0; --i) {
      t[i] = static_cast<int>(r % h);
      r /= h;
    }
    return t;
  };
  auto rank = [&](const std::vector<int>& t) {
    long r = 0;
    for (int v : t) r = r * h + v;
    return r;
  };
  for (long r = 0; r < total; ++r) {
    std::vector<int> t = unrank(r);
    std::string name = "(";
    for (int i = 0; i < k; ++i) {
      if (i) name += ",";
      name += H.names[t[i]];
    }
    name += ")";
    G.names.push_back(name);
  }
  G.mul.assign(total, std::vector<int>(total));
  for (long a = 0; a < total; ++a) {
    std::vector<int> ta = unrank(a);
    for (long b = 0; b < total; ++b) {
      std::vector<int> tb = unrank(b), tc(k);
      for (int i = 0; i < k; ++i) tc[i] = H.op(ta[i], tb[i]);
      G.mul[a][b] = static_cast<int>(rank(tc));
    }
  }
  std::vector<int> ti(k, H.identity);
  G.identity = static_cast<int>(rank(ti));
  return G;
}

SimplicialSet underlying(const SimplicialGroup& G) {
  SimplicialSet X;
  X.truncation = G.truncation;
  X.level.resize(G.truncation + 1);
  X.face = G.face;
  X.deg = G.deg;
  for (int m = 0; m <= G.truncation; ++m)
    for (const std::string& nm : G.level[m].names) X.level[m].add(nm);
  if (static_cast<int>(X.face.size()) != G.truncation + 1) X.face.resize(G.truncation + 1);
  if (static_cast<int>(X.deg.size()) != std::max(G.truncation, 0)) X.deg.resize(std::max(G.truncation, 0));
  return X;
}

ValidationReport validate(const SimplicialGroup& G) {
  ValidationReport rep;
  if (G.truncation < 0 || static_cast<int>(G.level.size()) != G.truncation + 1) {
    rep.fail("level count wrong");
    return rep;
  }
  for (int m = 0; m <= G.truncation; ++m) {
    ValidationReport r = validate(G.level[m]);
    if (!r.ok()) {
      rep.fail("level " + std::to_string(m) + ": " + r.violations.front());
      return rep;
    }
  }
  ValidationReport shape = validate(underlying(G));
  if (!shape.ok()) {
    rep.fail(shape.violations.front());
    return rep;
  }
  for (int m = 1; m <= G.truncation; ++m)
    for (int i = 0; i <= m; ++i)
      for (int a = 0; a < G.size(m); ++a)
        for (int b = 0; b < G.size(m); ++b)
          if (G.d(m, i, G.level[m].op(a, b)) != G.level[m - 1].op(G.d(m, i, a), G.d(m, i, b))) {
            rep.fail("face " + std::to_string(i) + " at level " + std::to_string(m) +
                     " is not a homomorphism");
            return rep;
          }
  for (int m = 0; m < G.truncation; ++m)
    for (int i = 0; i <= m; ++i)
      for (int a = 0; a < G.size(m); ++a)
        for (int b = 0; b < G.size(m); ++b)
          if (G.s(m, i, G.level[m].op(a, b)) != G.level[m + 1].op(G.s(m, i, a), G.s(m, i, b))) {
            rep.fail("degeneracy " + std::to_string(i) + " at level " + std::to_string(m) +
                     " is not a homomorphism");
            return rep;
          }
  return rep;
}

SimplicialGroup constant_simplicial_group(const FiniteGroup& H, int N) {
  if (N < 0) throw Error("constant_simplicial_group: negative truncation");
  SimplicialGroup G;
  G.truncation = N;
  G.level.assign(N + 1, H);
  G.face.resize(N + 1);
  G.deg.resize(N);
  std::vector<int> idv(H.size());
  std::iota(idv.begin(), idv.end(), 0);
  for (int m = 1; m <= N; ++m) G.face[m].assign(m + 1, idv);
  for (int m = 0; m < N; ++m) G.deg[m].assign(m + 1, idv);
  return G;
}

SimplicialGroup eh_construction(const FiniteGroup& H, int N) {
  if (N < 0) throw Error("eh_construction: negative truncation");
  SimplicialGroup G;
  G.truncation = N;
  G.face.resize(N + 1);
  G.deg.resize(N);
  int h = H.size();
  auto unrank = [&](long r, int k) {
    std::vector<int> t(k);
    for (int i = k - 1; i >= 0; --i) {
      t[i] = static_cast<int>(r % h);
      r /= h;
    }
    return t;
  };
  auto rank = [&](const std::vector<int>& t) {
    long r = 0;
    for (int v : t) r = r * h + v;
    return r;
  };
  for (int m = 0; m <= N; ++m) G.level.push_back(direct_power(H, m + 1));
  for (int m = 1; m <= N; ++m) {
    long sz = G.size(m);
    G.face[m].assign(m + 1, std::vector<int>(sz));
    for (long x = 0; x < sz; ++x) {
      std::vector<int> t = unrank(x, m + 1);
      for (int i = 0; i <= m; ++i) {
        std::vector<int> u = t;
        u.erase(u.begin() + i);
        G.face[m][i][x] = static_cast<int>(rank(u));
      }
    }
  }
  for (int m = 0; m < N; ++m) {
    long sz = G.size(m);
    G.deg[m].assign(m + 1, std::vector<int>(sz));
    for (long x = 0; x < sz; ++x) {
      std::vector<int> t = unrank(x, m + 1);
      for (int i = 0; i <= m; ++i) {
        std::vector<int> u = t;
        u.insert(u.begin() + i, t[i]);
        G.deg[m][i][x] = static_cast<int>(rank(u));
      }
    }
  }
  return G;
}

namespace {

// tuples at nerve bidegree (m, q): m digits in base |G_q|, first entry most
// significant
std::vector<int> nerve_unrank(long r, int m, int base) {
  std::vector<int> t(m);
  for (int i = m - 1; i >= 0; --i) {
    t[i] = static_cast<int>(r % base);
    r /= base;
  }
  return t;
}

long nerve_rank(const std::vector<int>& t, int base) {
  long r = 0;
  for (int v : t) r = r * base + v;
  return r;
}

std::string nerve_id(const SimplicialGroup& G, int q, const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += G.level[q].names[t[i]];
  }
  s += ")";
  return s;
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

BisimplicialSet nerve_bis(const SimplicialGroup& G, int P) {
  if (P < 0) throw Error("nerve_bis: negative horizontal bound");
  const int NG = G.truncation;
  BisimplicialSet B;
  auto present = [&](int m, int q) {
    if (m == 0) return q <= NG + 1;
    return m <= P && q <= NG;
  };
  for (int m = 0; m <= P; ++m)
    for (int q = 0; q <= NG + 1; ++q) {
      if (!present(m, q)) continue;
      int base = m == 0 ? 1 : G.size(q);
      long sz = ipow(base, m);
      Level lv;
      for (long r = 0; r < sz; ++r) lv.add(nerve_id(G, std::min(q, NG), nerve_unrank(r, m, base)));
      B.cells[{m, q}] = std::move(lv);
      if (m >= 1) {
        auto& t = B.dh[{m, q}];
        t.assign(m + 1, std::vector<int>(sz));
        for (long r = 0; r < sz; ++r) {
          std::vector<int> h = nerve_unrank(r, m, base);
          for (int i = 0; i <= m; ++i) {
            std::vector<int> u;
            if (i == 0) u.assign(h.begin() + 1, h.end());
            else if (i == m) u.assign(h.begin(), h.end() - 1);
            else {
              u = h;
              u[i - 1] = G.level[q].op(h[i], h[i - 1]);
              u.erase(u.begin() + i);
            }
            t[i][r] = static_cast<int>(nerve_rank(u, base));
          }
        }
      }
      if (present(m + 1, q)) {
        auto& t = B.sh[{m, q}];
        t.assign(m + 1, std::vector<int>(sz));
        for (long r = 0; r < sz; ++r) {
          std::vector<int> h = nerve_unrank(r, m, base);
          for (int i = 0; i <= m; ++i) {
            std::vector<int> u = h;
            u.insert(u.begin() + i, G.level[q].identity);
            t[i][r] = static_cast<int>(nerve_rank(u, G.size(q)));
          }
        }
      }
      if (q >= 1) {
        auto& t = B.dv[{m, q}];
        t.assign(q + 1, std::vector<int>(sz));
        for (long r = 0; r < sz; ++r) {
          std::vector<int> h = nerve_unrank(r, m, base);
          for (int i = 0; i <= q; ++i) {
            std::vector<int> u(h.size());
            for (size_t j = 0; j < h.size(); ++j) u[j] = G.d(q, i, h[j]);
            t[i][r] = static_cast<int>(nerve_rank(u, m == 0 ? 1 : G.size(q - 1)));
          }
        }
      }
      if (present(m, q + 1)) {
        auto& t = B.sv[{m, q}];
        t.assign(q + 1, std::vector<int>(sz));
        for (long r = 0; r < sz; ++r) {
          std::vector<int> h = nerve_unrank(r, m, base);
          for (int i = 0; i <= q; ++i) {
            std::vector<int> u(h.size());
            for (size_t j = 0; j < h.size(); ++j) u[j] = G.s(q, i, h[j]);
            t[i][r] = static_cast<int>(nerve_rank(u, m == 0 ? 1 : G.size(q + 1)));
          }
        }
      }
    }
  return B;
}

namespace {

// classifying-object tuples at level n: position p holds an element of
// G_{n-1-p}; position 0 is most significant in the rank
std::vector<long> wbar_sizes(const SimplicialGroup& G, int n) {
  std::vector<long> sz(n);
  for (int p = 0; p < n; ++p) sz[p] = G.size(n - 1 - p);
  return sz;
}

std::vector<int> wbar_unrank(long r, const std::vector<long>& sz) {
  std::vector<int> t(sz.size());
  for (int p = static_cast<int>(sz.size()) - 1; p >= 0; --p) {
    t[p] = static_cast<int>(r % sz[p]);
    r /= sz[p];
  }
  return t;
}

long wbar_rank(const std::vector<int>& t, const std::vector<long>& sz) {
  long r = 0;
  for (size_t p = 0; p < t.size(); ++p) r = r * sz[p] + t[p];
  return r;
}

std::string wbar_id(const SimplicialGroup& G, int n, const std::vector<int>& t) {
  std::string s = "[";
  for (int p = 0; p < n; ++p) {
    if (p) s += ",";
    s += G.level[n - 1 - p].names[t[p]];
  }
  s += "]";
  return s;
}

}  // namespace

SimplicialSet wbar(const SimplicialGroup& G) {
  const int NG = G.truncation;
  const int N = NG + 1;
  SimplicialSet W;
  W.truncation = N;
  W.level.resize(N + 1);
  W.face.resize(N + 1);
  W.deg.resize(N);
  for (int n = 0; n <= N; ++n) {
    std::vector<long> sz = wbar_sizes(G, n);
    long total = 1;
    for (long v : sz) total *= v;
    for (long r = 0; r < total; ++r) W.level[n].add(wbar_id(G, n, wbar_unrank(r, sz)));
    if (n >= 1) {
      std::vector<long> szo = wbar_sizes(G, n - 1);
      W.face[n].assign(n + 1, std::vector<int>(total));
      for (long r = 0; r < total; ++r) {
        std::vector<int> t = wbar_unrank(r, sz);
        for (int i = 0; i <= n; ++i) {
          std::vector<int> u(n - 1);
          if (i == 0) {
            for (int p = 0; p + 1 < n; ++p) u[p] = t[p + 1];
          } else if (i == n) {
            for (int p = 0; p + 1 < n; ++p) u[p] = G.d(n - 1 - p, n - 1 - p, t[p]);
          } else {
            for (int p = 0; p <= i - 2; ++p) u[p] = G.d(n - 1 - p, i - 1 - p, t[p]);
            u[i - 1] = G.level[n - i - 1].op(t[i], G.d(n - i, 0, t[i - 1]));
            for (int p = i; p + 1 < n; ++p) u[p] = t[p + 1];
          }
          W.face[n][i][r] = static_cast<int>(wbar_rank(u, szo));
        }
      }
    }
    if (n < N) {
      std::vector<long> szo = wbar_sizes(G, n + 1);
      W.deg[n].assign(n + 1, std::vector<int>(total));
      for (long r = 0; r < total; ++r) {
        std::vector<int> t = wbar_unrank(r, sz);
        for (int i = 0; i <= n; ++i) {
          std::vector<int> u(n + 1);
          for (int p = 0; p <= i - 1; ++p) u[p] = G.s(n - 1 - p, i - 1 - p, t[p]);
          u[i] = G.level[n - i].identity;
          for (int p = i + 1; p <= n; ++p) u[p] = t[p - 1];
          W.deg[n][i][r] = static_cast<int>(wbar_rank(u, szo));
        }
      }
    }
  }
  return W;
}

DuskinPackage duskin_package(const SimplicialGroup& G, long guard) {
  DuskinPackage out;
  out.nerve = std::make_shared<BisimplicialSet>(nerve_bis(G, G.truncation + 1));
  out.tot = total_object(*out.nerve, guard);
  out.wb = std::make_shared<SimplicialSet>(wbar(G));
  const int T = out.tot.space->truncation;
  if (T != out.wb->truncation)
    throw Error("duskin_package: total object and classifying object disagree on depth");
  out.to_total.src = out.wb;
  out.to_total.tgt = out.tot.space;
  out.from_total.src = out.tot.space;
  out.from_total.tgt = out.wb;
  out.to_total.comp.resize(T + 1);
  out.from_total.comp.resize(T + 1);
  for (int n = 0; n <= T; ++n) {
    std::vector<long> sz = wbar_sizes(G, n);
    out.to_total.comp[n].resize(out.wb->size(n));
    for (int w = 0; w < out.wb->size(n); ++w) {
      std::vector<int> t = wbar_unrank(w, sz);
      std::vector<int> tup(n + 1);
      tup[0] = 0;
      for (int i = 1; i <= n; ++i) {
        std::vector<int> e(i);
        for (int j = 1; j <= i; ++j) {
          int v = t[j - 1];
          for (int k = 0; k < i - j; ++k) v = G.d(n - j - k, 0, v);
          e[j - 1] = v;
        }
        tup[i] = static_cast<int>(nerve_rank(e, G.size(n - i)));
      }
      std::string id = "(";
      for (int i = 0; i <= n; ++i) {
        if (i) id += ";";
        id += out.nerve->id(i, n - i, tup[i]);
      }
      id += ")";
      int idx = out.tot.space->level[n].at(id);
      if (idx < 0) throw Error("duskin_package: image tuple missing at level " + std::to_string(n));
      out.to_total.comp[n][w] = idx;
    }
    out.from_total.comp[n].resize(out.tot.space->size(n));
    for (int x = 0; x < out.tot.space->size(n); ++x) {
      const std::vector<int>& tup = out.tot.tuples[n][x];
      std::vector<int> t(n);
      for (int i = 1; i <= n; ++i) {
        std::vector<int> e = nerve_unrank(tup[i], i, G.size(n - i));
        t[i - 1] = e[i - 1];
      }
      out.from_total.comp[n][x] = static_cast<int>(wbar_rank(t, sz));
    }
  }
  return out;
}

SimplicialMap dn_to_wbar(const SimplicialGroup& G) {
  auto nerve = std::make_shared<BisimplicialSet>(nerve_bis(G, G.truncation + 1));
  SimplicialMap f;
  f.src = std::make_shared<SimplicialSet>(diagonal(*nerve));
  f.tgt = std::make_shared<SimplicialSet>(wbar(G));
  const int L = f.src->truncation;
  f.comp.resize(L + 1);
  for (int n = 0; n <= L; ++n) {
    std::vector<long> sz = wbar_sizes(G, n);
    f.comp[n].resize(f.src->size(n));
    for (int x = 0; x < f.src->size(n); ++x) {
      std::vector<int> h = nerve_unrank(x, n, n == 0 ? 1 : G.size(n));
      std::vector<int> t(n);
      for (int i = 1; i <= n; ++i) {
        int v = h[i - 1];
        for (int k = 0; k < i; ++k) v = G.d(n - k, 0, v);
        t[i - 1] = v;
      }
      f.comp[n][x] = static_cast<int>(wbar_rank(t, sz));
    }
  }
  return f;
}

ValidationReport validate(const Ptcp& P) {
  ValidationReport rep;
  if (!P.total || !P.base) {
    rep.fail("missing spaces");
    return rep;
  }
  const SimplicialSet& E = *P.total;
  const SimplicialSet& B = *P.base;
  const int T = E.truncation;
  ValidationReport r = validate(P.G);
  if (!r.ok()) {
    rep.fail("structure group: " + r.violations.front());
    return rep;
  }
  if (P.G.truncation < T || B.truncation < T) {
    rep.fail("group or base too shallow for the bundle");
    return rep;
  }
  r = validate(E);
  if (!r.ok()) {
    rep.fail("bundle space: " + r.violations.front());
    return rep;
  }
  r = validate(P.proj);
  if (!r.ok()) {
    rep.fail("projection: " + r.violations.front());
    return rep;
  }
  if (P.proj.src.get() != P.total.get() || P.proj.tgt.get() != P.base.get() ||
      P.proj.levels() != T + 1) {
    rep.fail("projection endpoints or level count wrong");
    return rep;
  }
  if (static_cast<int>(P.action.size()) != T + 1 || static_cast<int>(P.section.size()) != T + 1) {
    rep.fail("action or section level count wrong");
    return rep;
  }
  for (int n = 0; n <= T; ++n) {
    if (static_cast<int>(P.action[n].size()) != P.G.size(n)) {
      rep.fail("action table size wrong at level " + std::to_string(n));
      return rep;
    }
    for (const auto& perm : P.action[n]) {
      if (static_cast<int>(perm.size()) != E.size(n)) {
        rep.fail("action entry size wrong at level " + std::to_string(n));
        return rep;
      }
      for (int v : perm)
        if (v < 0 || v >= E.size(n)) {
          rep.fail("action entry out of range at level " + std::to_string(n));
          return rep;
        }
    }
    const auto& act = P.action[n];
    for (int e = 0; e < E.size(n); ++e)
      if (act[P.G.level[n].identity][e] != e) {
        rep.fail("identity does not act trivially at level " + std::to_string(n));
        return rep;
      }
    for (int g = 0; g < P.G.size(n); ++g)
      for (int h = 0; h < P.G.size(n); ++h)
        for (int e = 0; e < E.size(n); ++e)
          if (act[P.G.level[n].op(g, h)][e] != act[h][act[g][e]]) {
            rep.fail("action is not associative at level " + std::to_string(n));
            return rep;
          }
    for (int g = 0; g < P.G.size(n); ++g)
      for (int e = 0; e < E.size(n); ++e)
        if (P.proj.comp[n][act[g][e]] != P.proj.comp[n][e]) {
          rep.fail("action moves between fibers at level " + std::to_string(n));
          return rep;
        }
    // free and transitive on each fiber
    std::vector<int> fiber_size(B.size(n), 0);
    for (int e = 0; e < E.size(n); ++e) ++fiber_size[P.proj.comp[n][e]];
    for (int b = 0; b < B.size(n); ++b)
      if (fiber_size[b] != P.G.size(n)) {
        rep.fail("fiber size wrong over " + B.id(n, b));
        return rep;
      }
    for (int e = 0; e < E.size(n); ++e) {
      std::vector<char> seen(E.size(n), 0);
      for (int g = 0; g < P.G.size(n); ++g) {
        int img = act[g][e];
        if (seen[img]) {
          rep.fail("action is not free at level " + std::to_string(n));
          return rep;
        }
        seen[img] = 1;
      }
    }
  }
  for (int n = 1; n <= T; ++n)
    for (int i = 0; i <= n; ++i)
      for (int g = 0; g < P.G.size(n); ++g)
        for (int e = 0; e < E.size(n); ++e)
          if (E.d(n, i, P.action[n][g][e]) !=
              P.action[n - 1][P.G.d(n, i, g)][E.d(n, i, e)]) {
            rep.fail("action does not commute with face " + std::to_string(i) + " at level " +
                     std::to_string(n));
            return rep;
          }
  for (int n = 0; n < T; ++n)
    for (int i = 0; i <= n; ++i)
      for (int g = 0; g < P.G.size(n); ++g)
        for (int e = 0; e < E.size(n); ++e)
          if (E.s(n, i, P.action[n][g][e]) !=
              P.action[n + 1][P.G.s(n, i, g)][E.s(n, i, e)]) {
            rep.fail("action does not commute with degeneracy " + std::to_string(i) + " at level " +
                     std::to_string(n));
            return rep;
          }
  for (int n = 0; n <= T; ++n) {
    if (static_cast<int>(P.section[n].size()) != B.size(n)) {
      rep.fail("section size wrong at level " + std::to_string(n));
      return rep;
    }
    for (int b = 0; b < B.size(n); ++b) {
      int e = P.section[n][b];
      if (e < 0 || e >= E.size(n)) {
        rep.fail("section out of range at level " + std::to_string(n));
        return rep;
      }
      if (P.proj.comp[n][e] != b) {
        rep.fail("section is not a section over " + B.id(n, b));
        return rep;
      }
    }
  }
  for (int n = 1; n <= T; ++n)
    for (int i = 1; i <= n; ++i)
      for (int b = 0; b < B.size(n); ++b)
        if (P.section[n - 1][B.d(n, i, b)] != E.d(n, i, P.section[n][b])) {
          rep.fail("section does not commute with face " + std::to_string(i) + " at level " +
                   std::to_string(n));
          return rep;
        }
  for (int n = 0; n < T; ++n)
    for (int i = 0; i <= n; ++i)
      for (int b = 0; b < B.size(n); ++b)
        if (P.section[n + 1][B.s(n, i, b)] != E.s(n, i, P.section[n][b])) {
          rep.fail("section does not commute with degeneracy " + std::to_string(i) + " at level " +
                   std::to_string(n));
          return rep;
        }
  return rep;
}

Ptcp twisted_product(const SimplicialGroup& G, const SSetPtr& base,
                     const std::vector<std::vector<int>>& tw) {
  const int T = std::min(base->truncation, G.truncation);
  if (static_cast<int>(tw.size()) < T + 1) throw Error("twisted_product: twisting too shallow");
  Ptcp P;
  P.G = G;
  P.G.truncation = G.truncation;
  P.base = base;
  auto E = std::make_shared<SimplicialSet>();
  E->truncation = T;
  E->level.resize(T + 1);
  E->face.resize(T + 1);
  E->deg.resize(T);
  auto idx = [&](int n, int b, int g) { return b * G.size(n) + g; };
  for (int n = 0; n <= T; ++n)
    for (int b = 0; b < base->size(n); ++b)
      for (int g = 0; g < G.size(n); ++g)
        E->level[n].add("(" + base->id(n, b) + "|" + G.level[n].names[g] + ")");
  for (int n = 1; n <= T; ++n) {
    if (static_cast<int>(tw[n].size()) != base->size(n))
      throw Error("twisted_product: twisting size wrong at level " + std::to_string(n));
    E->face[n].assign(n + 1, std::vector<int>(E->size(n)));
    for (int b = 0; b < base->size(n); ++b)
      for (int g = 0; g < G.size(n); ++g) {
        int t = tw[n][b];
        if (t < 0 || t >= G.size(n - 1))
          throw Error("twisted_product: twisting value out of range");
        E->face[n][0][idx(n, b, g)] =
            idx(n - 1, base->d(n, 0, b), G.level[n - 1].op(t, G.d(n, 0, g)));
        for (int i = 1; i <= n; ++i)
          E->face[n][i][idx(n, b, g)] = idx(n - 1, base->d(n, i, b), G.d(n, i, g));
      }
  }
  for (int n = 0; n < T; ++n) {
    E->deg[n].assign(n + 1, std::vector<int>(E->size(n)));
    for (int b = 0; b < base->size(n); ++b)
      for (int g = 0; g < G.size(n); ++g)
        for (int i = 0; i <= n; ++i)
          E->deg[n][i][idx(n, b, g)] = idx(n + 1, base->s(n, i, b), G.s(n, i, g));
  }
  P.total = E;
  P.proj.src = P.total;
  P.proj.tgt = P.base;
  P.proj.comp.resize(T + 1);
  P.action.resize(T + 1);
  P.section.resize(T + 1);
  for (int n = 0; n <= T; ++n) {
    P.proj.comp[n].resize(E->size(n));
    for (int b = 0; b < base->size(n); ++b)
      for (int g = 0; g < G.size(n); ++g) P.proj.comp[n][idx(n, b, g)] = b;
    P.action[n].assign(G.size(n), std::vector<int>(E->size(n)));
    for (int g = 0; g < G.size(n); ++g)
      for (int b = 0; b < base->size(n); ++b)
        for (int h = 0; h < G.size(n); ++h)
          P.action[n][g][idx(n, b, h)] = idx(n, b, G.level[n].op(h, g));
    P.section[n].resize(base->size(n));
    for (int b = 0; b < base->size(n); ++b) P.section[n][b] = idx(n, b, G.level[n].identity);
  }
  return P;
}

Ptcp trivial_ptcp(const SimplicialGroup& G, const SSetPtr& base) {
  const int T = std::min(base->truncation, G.truncation);
  std::vector<std::vector<int>> tw(T + 1);
  for (int n = 1; n <= T; ++n) tw[n].assign(base->size(n), G.level[n - 1].identity);
  return twisted_product(G, base, tw);
}

Ptcp double_cover_circle(int N) {
  if (N < 2) throw Error("double_cover_circle: need at least two levels");
  std::vector<std::vector<NondegCell>> cells(2);
  cells[0].push_back({"*", {}});
  cells[1].push_back({"a", {"*", "*"}});
  auto B = std::make_shared<SimplicialSet>(build_from_nondegenerate(cells, N));
  SimplicialGroup G = constant_simplicial_group(cyclic_group(2), N);
  std::vector<std::vector<int>> tw(N + 1);
  for (int n = 1; n <= N; ++n) {
    tw[n].resize(B->size(n));
    for (int x = 0; x < B->size(n); ++x) {
      EzForm f = ez_decompose(*B, n, x);
      int blev = n - static_cast<int>(f.word.size());
      bool zero = std::find(f.word.begin(), f.word.end(), 0) != f.word.end();
      bool on_a = blev == 1 && B->id(1, f.base) == "a";
      tw[n][x] = (on_a && !zero) ? 1 : 0;
    }
  }
  return twisted_product(G, B, tw);
}

std::vector<std::vector<int>> twisting_of(const Ptcp& P) {
  const SimplicialSet& E = *P.total;
  const SimplicialSet& B = *P.base;
  const int T = E.truncation;
  std::vector<std::vector<int>> tw(T + 1);
  for (int n = 1; n <= T; ++n) {
    tw[n].resize(B.size(n));
    for (int b = 0; b < B.size(n); ++b) {
      int target = E.d(n, 0, P.section[n][b]);
      int start = P.section[n - 1][B.d(n, 0, b)];
      int found = -1;
      for (int g = 0; g < P.G.size(n - 1); ++g)
        if (P.action[n - 1][g][start] == target) {
          found = g;
          break;
        }
      if (found < 0) throw Error("twisting_of: section faces lie in different orbits");
      tw[n][b] = found;
    }
  }
  return tw;
}

SimplicialMap classify_ptcp(const Ptcp& P) {
  std::vector<std::vector<int>> tw = twisting_of(P);
  const SimplicialSet& B = *P.base;
  SimplicialMap c;
  c.src = P.base;
  c.tgt = std::make_shared<SimplicialSet>(wbar(P.G));
  const int L = std::min({B.truncation, P.total->truncation, c.tgt->truncation});
  c.comp.resize(L + 1);
  for (int n = 0; n <= L; ++n) {
    std::vector<long> sz = wbar_sizes(P.G, n);
    c.comp[n].resize(B.size(n));
    for (int b = 0; b < B.size(n); ++b) {
      std::vector<int> t(n);
      int v = b;
      for (int p = 0; p < n; ++p) {
        t[p] = tw[n - p][v];
        if (p + 1 < n) v = B.d(n - p, 0, v);
      }
      c.comp[n][b] = static_cast<int>(wbar_rank(t, sz));
    }
  }
  return c;
}

}  // namespace deca
