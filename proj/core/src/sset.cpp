#include "deca/sset.hpp"

#include <algorithm>
#include <numeric>

namespace deca {

bool OrdinalMap::is_monotone() const {
  for (size_t t = 0; t + 1 < values.size(); ++t)
    if (values[t] > values[t + 1]) return false;
  return !values.empty() && values.front() >= 0 && values.back() <= target;
}

bool OrdinalMap::is_identity() const {
  if (arity() != target) return false;
  for (int t = 0; t <= target; ++t)
    if (values[t] != t) return false;
  return true;
}

OrdinalMap ordinal_identity(int n) {
  OrdinalMap u;
  u.target = n;
  u.values.resize(n + 1);
  std::iota(u.values.begin(), u.values.end(), 0);
  return u;
}

OrdinalMap coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw Error("coface: bad indices");
  OrdinalMap u;
  u.target = n;
  for (int t = 0; t <= n; ++t)
    if (t != i) u.values.push_back(t);
  return u;
}

OrdinalMap codegeneracy(int n, int i) {
  if (i < 0 || i > n) throw Error("codegeneracy: bad indices");
  OrdinalMap u;
  u.target = n;
  for (int t = 0; t <= n + 1; ++t) u.values.push_back(t <= i ? t : t - 1);
  return u;
}

OrdinalMap ordinal_compose(const OrdinalMap& f, const OrdinalMap& g) {
  if (g.target != f.arity()) throw Error("ordinal_compose: arity mismatch");
  OrdinalMap u;
  u.target = f.target;
  u.values.reserve(g.values.size());
  for (int v : g.values) u.values.push_back(f.values[v]);
  return u;
}

OrdinalMap ordinal_sum(const OrdinalMap& a, const OrdinalMap& b) {
  OrdinalMap u;
  u.target = a.target + b.target + 1;
  u.values = a.values;
  for (int v : b.values) u.values.push_back(v + a.target + 1);
  return u;
}

int Level::add(const std::string& id) {
  auto [it, fresh] = index.emplace(id, static_cast<int>(ids.size()));
  if (!fresh) throw Error("duplicate simplex id: " + id);
  ids.push_back(id);
  return it->second;
}

int Level::at(const std::string& id) const {
  auto it = index.find(id);
  return it == index.end() ? -1 : it->second;
}

bool SimplicialSet::is_degenerate(int m, int x) const {
  for (int i = 0; i < m; ++i)
    if (deg[m - 1][i][face[m][i][x]] == x) return true;
  return false;
}

int SimplicialSet::apply(const OrdinalMap& u, int m, int x) const {
  if (u.target != m) throw Error("apply: map target does not match simplex level");
  if (!u.is_monotone()) throw Error("apply: map not monotone");
  int k = u.arity();
  if (u.is_identity()) return x;
  // factor through the largest value missed by u
  std::vector<bool> hit(m + 1, false);
  for (int v : u.values) hit[v] = true;
  for (int v = m; v >= 0; --v) {
    if (!hit[v]) {
      OrdinalMap rest;
      rest.target = m - 1;
      for (int w : u.values) rest.values.push_back(w < v ? w : w - 1);
      return apply(rest, m - 1, face[m][v][x]);
    }
  }
  // u surjective and not injective: split off the first repeat
  for (int t = 0; t < k; ++t) {
    if (u.values[t] == u.values[t + 1]) {
      OrdinalMap rest;
      rest.target = m;
      for (int j = 0; j <= k; ++j)
        if (j != t + 1) rest.values.push_back(u.values[j]);
      int y = apply(rest, m, x);
      return deg[k - 1][t][y];
    }
  }
  throw Error("apply: unreachable");
}

ValidationReport validate(const SimplicialSet& X) {
  ValidationReport rep;
  const int N = X.truncation;
  auto cap = [&rep]() { return rep.violations.size() < 50; };
  if (static_cast<int>(X.level.size()) != N + 1) {
    rep.fail("level count does not match truncation");
    return rep;
  }
  if (static_cast<int>(X.face.size()) != N + 1 || static_cast<int>(X.deg.size()) != N) {
    rep.fail("operator table shape does not match truncation");
    return rep;
  }
  for (int m = 1; m <= N; ++m) {
    if (static_cast<int>(X.face[m].size()) != m + 1) {
      rep.fail("face arity wrong at level " + std::to_string(m));
      return rep;
    }
    for (int i = 0; i <= m; ++i) {
      if (static_cast<int>(X.face[m][i].size()) != X.size(m)) {
        rep.fail("face table size wrong at level " + std::to_string(m));
        return rep;
      }
      for (int x = 0; x < X.size(m); ++x)
        if (X.face[m][i][x] < 0 || X.face[m][i][x] >= X.size(m - 1)) {
          rep.fail("face index out of range at level " + std::to_string(m));
          return rep;
        }
    }
  }
  for (int m = 0; m < N; ++m) {
    if (static_cast<int>(X.deg[m].size()) != m + 1) {
      rep.fail("degeneracy arity wrong at level " + std::to_string(m));
      return rep;
    }
    for (int i = 0; i <= m; ++i) {
      if (static_cast<int>(X.deg[m][i].size()) != X.size(m)) {
        rep.fail("degeneracy table size wrong at level " + std::to_string(m));
        return rep;
      }
      for (int x = 0; x < X.size(m); ++x)
        if (X.deg[m][i][x] < 0 || X.deg[m][i][x] >= X.size(m + 1)) {
          rep.fail("degeneracy index out of range at level " + std::to_string(m));
          return rep;
        }
    }
  }

  auto where = [&X](int m, int x) { return " at level " + std::to_string(m) + " simplex " + X.id(m, x); };
  // d_i d_j = d_{j-1} d_i for i < j
  for (int m = 2; m <= N && cap(); ++m)
    for (int j = 1; j <= m && cap(); ++j)
      for (int i = 0; i < j && cap(); ++i)
        for (int x = 0; x < X.size(m); ++x)
          if (X.d(m - 1, i, X.d(m, j, x)) != X.d(m - 1, j - 1, X.d(m, i, x))) {
            rep.fail("d" + std::to_string(i) + " d" + std::to_string(j) + " identity fails" + where(m, x));
            break;
          }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int m = 0; m + 2 <= N && cap(); ++m)
    for (int j = 0; j <= m && cap(); ++j)
      for (int i = 0; i <= j && cap(); ++i)
        for (int x = 0; x < X.size(m); ++x)
          if (X.s(m + 1, i, X.s(m, j, x)) != X.s(m + 1, j + 1, X.s(m, i, x))) {
            rep.fail("s" + std::to_string(i) + " s" + std::to_string(j) + " identity fails" + where(m, x));
            break;
          }
  // d_i s_j relations
  for (int m = 0; m < N && cap(); ++m)
    for (int j = 0; j <= m && cap(); ++j)
      for (int i = 0; i <= m + 1 && cap(); ++i)
        for (int x = 0; x < X.size(m); ++x) {
          int lhs = X.d(m + 1, i, X.s(m, j, x));
          int rhs;
          if (i == j || i == j + 1) rhs = x;
          else if (i < j) rhs = X.s(m - 1, j - 1, X.d(m, i, x));
          else rhs = X.s(m - 1, j, X.d(m, i - 1, x));
          if (lhs != rhs) {
            rep.fail("d" + std::to_string(i) + " s" + std::to_string(j) + " identity fails" + where(m, x));
            break;
          }
        }
  if (!cap()) rep.note("violation list truncated");
  return rep;
}

std::string simplex_value_id(const std::vector<int>& values) {
  bool wide = false;
  for (int v : values) wide |= v > 9;
  std::string out;
  for (size_t t = 0; t < values.size(); ++t) {
    if (wide && t) out += '.';
    out += std::to_string(values[t]);
  }
  return out;
}

namespace {

void monotone_tuples(int len, int maxval, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == len) {
    emit(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v <= maxval; ++v) {
    cur.push_back(v);
    monotone_tuples(len, maxval, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

SimplicialSet std_simplex(int n, int N) {
  if (n < 0 || N < 0) throw Error("std_simplex: bad arguments");
  SimplicialSet X;
  X.truncation = N;
  X.level.resize(N + 1);
  std::vector<std::vector<std::vector<int>>> tuples(N + 1);
  for (int m = 0; m <= N; ++m) {
    std::vector<int> cur;
    monotone_tuples(m + 1, n, cur, [&](const std::vector<int>& t) {
      tuples[m].push_back(t);
      X.level[m].add(simplex_value_id(t));
    });
  }
  X.face.resize(N + 1);
  X.deg.resize(N);
  for (int m = 1; m <= N; ++m) {
    X.face[m].assign(m + 1, std::vector<int>(X.size(m)));
    for (int x = 0; x < X.size(m); ++x)
      for (int i = 0; i <= m; ++i) {
        std::vector<int> t = tuples[m][x];
        t.erase(t.begin() + i);
        X.face[m][i][x] = X.level[m - 1].at(simplex_value_id(t));
      }
  }
  for (int m = 0; m < N; ++m) {
    X.deg[m].assign(m + 1, std::vector<int>(X.size(m)));
    for (int x = 0; x < X.size(m); ++x)
      for (int i = 0; i <= m; ++i) {
        std::vector<int> t = tuples[m][x];
        t.insert(t.begin() + i, t[i]);
        X.deg[m][i][x] = X.level[m + 1].at(simplex_value_id(t));
      }
  }
  return X;
}

std::string degenerate_id(const std::vector<int>& word, const std::string& base) {
  std::string out;
  for (int i : word) out += "s" + std::to_string(i);
  out += "\xC2\xB7";  // middle dot
  out += base;
  return out;
}

namespace {

// prepend s_i to a strictly decreasing degeneracy word, renormalizing
std::vector<int> word_after_s(int i, std::vector<int> w) {
  size_t pos = 0;
  while (pos < w.size() && i <= w[pos]) {
    ++w[pos];
    ++pos;
  }
  w.insert(w.begin() + pos, i);
  return w;
}

}  // namespace

SimplicialSet build_from_nondegenerate(const std::vector<std::vector<NondegCell>>& cells, int N) {
  if (cells.empty() || cells[0].empty()) throw Error("build_from_nondegenerate: need at least one vertex");
  SimplicialSet X;
  X.truncation = N;
  X.level.resize(N + 1);
  X.face.resize(N + 1);
  X.deg.resize(N);
  // canonical form of each simplex as built: (degeneracy word, base index at level m - |word|)
  std::vector<std::vector<EzForm>> form(N + 1);

  for (const NondegCell& c : cells[0]) {
    int x = X.level[0].add(c.id);
    form[0].push_back({{}, x});
  }
  for (int m = 1; m <= N; ++m) {
    if (m < static_cast<int>(cells.size())) {
      for (const NondegCell& c : cells[m]) {
        if (static_cast<int>(c.faces.size()) != m + 1)
          throw Error("cell " + c.id + ": expected " + std::to_string(m + 1) + " faces");
        int x = X.level[m].add(c.id);
        form[m].push_back({{}, x});
        (void)x;
      }
    }
    int nondeg = X.size(m);
    X.face[m].assign(m + 1, std::vector<int>(nondeg, -1));
    // attach all degeneracies of level m-1
    X.deg[m - 1].assign(m, std::vector<int>(X.size(m - 1), -1));
    for (int y = 0; y < X.size(m - 1); ++y)
      for (int i = 0; i < m; ++i) {
        std::vector<int> w = word_after_s(i, form[m - 1][y].word);
        int b = form[m - 1][y].base;
        std::string id = degenerate_id(w, X.id(m - 1 - static_cast<int>(form[m - 1][y].word.size()), b));
        int z = X.level[m].at(id);
        if (z < 0) {
          z = X.level[m].add(id);
          form[m].push_back({w, b});
          for (int a = 0; a <= m; ++a) X.face[m][a].push_back(-1);
          // faces of s_i y via the mixed identities; everything lives one level down
          for (int a = 0; a <= m; ++a) {
            if (a == i || a == i + 1) X.face[m][a][z] = y;
            else if (a < i) X.face[m][a][z] = X.deg[m - 2][i - 1][X.face[m - 1][a][y]];
            else X.face[m][a][z] = X.deg[m - 2][i][X.face[m - 1][a - 1][y]];
          }
        }
        X.deg[m - 1][i][y] = z;
      }
    // resolve declared faces of the nondegenerate cells
    if (m < static_cast<int>(cells.size())) {
      for (size_t k = 0; k < cells[m].size(); ++k) {
        const NondegCell& c = cells[m][k];
        for (int a = 0; a <= m; ++a) {
          int f = X.level[m - 1].at(c.faces[a]);
          if (f < 0) throw Error("cell " + c.id + ": unknown face " + c.faces[a]);
          X.face[m][a][k] = f;
        }
      }
    }
    for (int a = 0; a <= m; ++a)
      for (int x = 0; x < X.size(m); ++x)
        if (X.face[m][a][x] < 0) throw Error("internal: missing face entry");
  }
  ValidationReport rep = validate(X);
  if (!rep.ok()) throw Error("build_from_nondegenerate: " + rep.violations.front());
  return X;
}

EzForm ez_decompose(const SimplicialSet& X, int m, int x) {
  EzForm out;
  int lev = m, cur = x;
  while (lev > 0) {
    int found = -1;
    for (int i = lev - 1; i >= 0; --i) {
      int y = X.face[lev][i][cur];
      if (X.deg[lev - 1][i][y] == cur) {
        found = i;
        cur = y;
        break;
      }
    }
    if (found < 0) break;
    out.word.push_back(found);
    --lev;
  }
  out.base = cur;
  return out;
}

SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y) {
  SimplicialSet P;
  P.truncation = std::min(X.truncation, Y.truncation);
  const int N = P.truncation;
  P.level.resize(N + 1);
  P.face.resize(N + 1);
  P.deg.resize(N);
  auto pair_index = [&](int m, int x, int y) { return x * Y.size(m) + y; };
  for (int m = 0; m <= N; ++m)
    for (int x = 0; x < X.size(m); ++x)
      for (int y = 0; y < Y.size(m); ++y)
        P.level[m].add("(" + X.id(m, x) + "|" + Y.id(m, y) + ")");
  for (int m = 1; m <= N; ++m) {
    P.face[m].assign(m + 1, std::vector<int>(P.size(m)));
    for (int x = 0; x < X.size(m); ++x)
      for (int y = 0; y < Y.size(m); ++y)
        for (int i = 0; i <= m; ++i)
          P.face[m][i][pair_index(m, x, y)] = pair_index(m - 1, X.d(m, i, x), Y.d(m, i, y));
  }
  for (int m = 0; m < N; ++m) {
    P.deg[m].assign(m + 1, std::vector<int>(P.size(m)));
    for (int x = 0; x < X.size(m); ++x)
      for (int y = 0; y < Y.size(m); ++y)
        for (int i = 0; i <= m; ++i)
          P.deg[m][i][pair_index(m, x, y)] = pair_index(m + 1, X.s(m, i, x), Y.s(m, i, y));
  }
  return P;
}

SimplicialSet quotient(const SimplicialSet& X, const std::vector<std::vector<int>>& sub) {
  const int N = X.truncation;
  if (static_cast<int>(sub.size()) != N + 1) throw Error("quotient: subcomplex must list every level");
  std::vector<std::vector<bool>> in(N + 1);
  for (int m = 0; m <= N; ++m) {
    in[m].assign(X.size(m), false);
    for (int x : sub[m]) {
      if (x < 0 || x >= X.size(m)) throw Error("quotient: simplex index out of range");
      in[m][x] = true;
    }
  }
  if (sub[0].empty()) throw Error("quotient: subcomplex has no vertices");
  for (int m = 0; m <= N; ++m)
    for (int x = 0; x < X.size(m); ++x) {
      if (!in[m][x]) continue;
      if (m >= 1)
        for (int i = 0; i <= m; ++i)
          if (!in[m - 1][X.d(m, i, x)])
            throw Error("quotient: not closed under faces at " + X.id(m, x));
      if (m < N)
        for (int i = 0; i <= m; ++i)
          if (!in[m + 1][X.s(m, i, x)])
            throw Error("quotient: not closed under degeneracies at " + X.id(m, x));
    }

  SimplicialSet Q;
  Q.truncation = N;
  Q.level.resize(N + 1);
  Q.face.resize(N + 1);
  Q.deg.resize(N);
  // image index of every X-simplex; collapsed simplices map to the basepoint (index 0)
  std::vector<std::vector<int>> cls(N + 1);
  std::string base0 = "*";
  while (X.level[0].at(base0) >= 0 || false) base0 = "*" + base0;
  for (int m = 0; m <= N; ++m) {
    std::vector<int> w(m);
    for (int i = 0; i < m; ++i) w[i] = m - 1 - i;
    std::string bid = m == 0 ? base0 : degenerate_id(w, base0);
    while (X.level[m].at(bid) >= 0) bid = "*" + bid;
    Q.level[m].add(bid);
    cls[m].assign(X.size(m), 0);
    for (int x = 0; x < X.size(m); ++x)
      if (!in[m][x]) cls[m][x] = Q.level[m].add(X.id(m, x));
  }
  for (int m = 1; m <= N; ++m) {
    Q.face[m].assign(m + 1, std::vector<int>(Q.size(m), 0));
    for (int x = 0; x < X.size(m); ++x)
      if (!in[m][x])
        for (int i = 0; i <= m; ++i) Q.face[m][i][cls[m][x]] = cls[m - 1][X.d(m, i, x)];
  }
  for (int m = 0; m < N; ++m) {
    Q.deg[m].assign(m + 1, std::vector<int>(Q.size(m), 0));
    for (int x = 0; x < X.size(m); ++x)
      if (!in[m][x])
        for (int i = 0; i <= m; ++i) Q.deg[m][i][cls[m][x]] = cls[m + 1][X.s(m, i, x)];
  }
  ValidationReport rep = validate(Q);
  if (!rep.ok()) throw Error("quotient: result invalid: " + rep.violations.front());
  return Q;
}

SimplicialSet reduce(const SimplicialSet& X) {
  std::vector<std::vector<int>> sub(X.truncation + 1);
  for (int m = 0; m <= X.truncation; ++m)
    for (int x = 0; x < X.size(m); ++x)
      if (static_cast<int>(ez_decompose(X, m, x).word.size()) == m) sub[m].push_back(x);
  return quotient(X, sub);
}

bool is_reduced(const SimplicialSet& X) { return X.size(0) == 1; }

Pi0 pi0(const SimplicialSet& X) {
  Pi0 out;
  int n = X.size(0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  if (X.truncation >= 1)
    for (int e = 0; e < X.size(1); ++e) {
      int a = find(X.d(1, 0, e)), b = find(X.d(1, 1, e));
      if (a != b) parent[a] = b;
    }
  out.class_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (out.class_of[r] < 0) out.class_of[r] = out.classes++;
    out.class_of[v] = out.class_of[r];
  }
  return out;
}

SimplicialSet opposite(const SimplicialSet& X) {
  SimplicialSet Y = X;
  for (int m = 1; m <= X.truncation; ++m)
    for (int i = 0; i <= m; ++i) Y.face[m][i] = X.face[m][m - i];
  for (int m = 0; m < X.truncation; ++m)
    for (int i = 0; i <= m; ++i) Y.deg[m][i] = X.deg[m][m - i];
  return Y;
}

SimplicialSet restrict_truncation(const SimplicialSet& X, int N) {
  if (N > X.truncation) throw Error("restrict_truncation: cannot extend");
  SimplicialSet Y;
  Y.truncation = N;
  Y.level.assign(X.level.begin(), X.level.begin() + N + 1);
  Y.face.assign(X.face.begin(), X.face.begin() + N + 1);
  Y.deg.assign(X.deg.begin(), X.deg.begin() + N);
  return Y;
}

ValidationReport validate(const SimplicialMap& f) {
  ValidationReport rep;
  if (!f.src || !f.tgt) {
    rep.fail("map missing endpoints");
    return rep;
  }
  const int L = f.levels();
  if (L == 0 || L > f.src->truncation + 1 || L > f.tgt->truncation + 1) {
    rep.fail("map level count out of range");
    return rep;
  }
  for (int m = 0; m < L; ++m) {
    if (static_cast<int>(f.comp[m].size()) != f.src->size(m)) {
      rep.fail("component size wrong at level " + std::to_string(m));
      return rep;
    }
    for (int x : f.comp[m])
      if (x < 0 || x >= f.tgt->size(m)) {
        rep.fail("component out of range at level " + std::to_string(m));
        return rep;
      }
  }
  for (int m = 1; m < L; ++m)
    for (int i = 0; i <= m; ++i)
      for (int x = 0; x < f.src->size(m); ++x)
        if (f.tgt->d(m, i, f.comp[m][x]) != f.comp[m - 1][f.src->d(m, i, x)]) {
          rep.fail("does not commute with d" + std::to_string(i) + " at level " + std::to_string(m) +
                   " simplex " + f.src->id(m, x));
          return rep;
        }
  for (int m = 0; m + 1 < L; ++m)
    for (int i = 0; i <= m; ++i)
      for (int x = 0; x < f.src->size(m); ++x)
        if (f.tgt->s(m, i, f.comp[m][x]) != f.comp[m + 1][f.src->s(m, i, x)]) {
          rep.fail("does not commute with s" + std::to_string(i) + " at level " + std::to_string(m) +
                   " simplex " + f.src->id(m, x));
          return rep;
        }
  return rep;
}

SimplicialMap identity_map(const SSetPtr& X) {
  SimplicialMap f;
  f.src = f.tgt = X;
  f.comp.resize(X->truncation + 1);
  for (int m = 0; m <= X->truncation; ++m) {
    f.comp[m].resize(X->size(m));
    std::iota(f.comp[m].begin(), f.comp[m].end(), 0);
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (g.src.get() != f.tgt.get() && !equal_bit_exact(*g.src, *f.tgt))
    throw Error("compose: endpoints do not match");
  SimplicialMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  int L = std::min(f.levels(), g.levels());
  h.comp.resize(L);
  for (int m = 0; m < L; ++m) {
    h.comp[m].resize(f.comp[m].size());
    for (size_t x = 0; x < f.comp[m].size(); ++x) h.comp[m][x] = g.comp[m][f.comp[m][x]];
  }
  return h;
}

bool maps_equal(const SimplicialMap& f, const SimplicialMap& g) {
  bool src_ok = f.src.get() == g.src.get() || equal_bit_exact(*f.src, *g.src);
  bool tgt_ok = f.tgt.get() == g.tgt.get() || equal_bit_exact(*f.tgt, *g.tgt);
  return src_ok && tgt_ok && f.comp == g.comp;
}

bool equal_bit_exact(const SimplicialSet& X, const SimplicialSet& Y) {
  if (X.truncation != Y.truncation) return false;
  for (int m = 0; m <= X.truncation; ++m)
    if (X.level[m].ids != Y.level[m].ids) return false;
  return X.face == Y.face && X.deg == Y.deg;
}

ValidationReport validate(const AugmentedSimplicialSet& A) {
  ValidationReport rep;
  if (!A.body) {
    rep.fail("augmentation missing body");
    return rep;
  }
  if (static_cast<int>(A.eps.size()) != A.body->size(0)) {
    rep.fail("augmentation size wrong");
    return rep;
  }
  for (int v : A.eps)
    if (v < 0 || v >= A.points.size()) {
      rep.fail("augmentation out of range");
      return rep;
    }
  if (A.body->truncation >= 1)
    for (int e = 0; e < A.body->size(1); ++e)
      if (A.eps[A.body->d(1, 0, e)] != A.eps[A.body->d(1, 1, e)]) {
        rep.fail("augmentation does not coequalize the two vertex maps at " + A.body->id(1, e));
        return rep;
      }
  return rep;
}

ValidationReport check_contraction(const AugmentedSimplicialSet& A, const Contraction& c) {
  ValidationReport rep = validate(A);
  if (!rep.ok()) return rep;
  const SimplicialSet& X = *A.body;
  const int N = X.truncation;
  if (static_cast<int>(c.extra.size()) != N) {
    rep.fail("contraction must supply one extra operator per level below truncation");
    return rep;
  }
  if (static_cast<int>(c.sec.size()) != A.points.size()) {
    rep.fail("section size wrong");
    return rep;
  }
  for (int p = 0; p < A.points.size(); ++p)
    if (A.eps[c.sec[p]] != p) {
      rep.fail("section is not a section of the augmentation");
      return rep;
    }
  for (int k = 0; k < N; ++k) {
    if (static_cast<int>(c.extra[k].size()) != X.size(k)) {
      rep.fail("extra operator size wrong at level " + std::to_string(k));
      return rep;
    }
    for (int x : c.extra[k])
      if (x < 0 || x >= X.size(k + 1)) {
        rep.fail("extra operator out of range at level " + std::to_string(k));
        return rep;
      }
  }
  auto bad = [&rep, &X](const std::string& what, int k, int x) {
    rep.fail(what + " fails at level " + std::to_string(k) + " simplex " + X.id(k, x));
  };
  if (c.side == Handedness::right) {
    for (int k = 0; k < N && rep.ok(); ++k)
      for (int x = 0; x < X.size(k) && rep.ok(); ++x) {
        if (X.d(k + 1, k + 1, c.extra[k][x]) != x) bad("d_top extra = id", k, x);
        for (int i = 0; i <= k && rep.ok(); ++i) {
          int lhs = X.d(k + 1, i, c.extra[k][x]);
          int rhs = (k == 0) ? c.sec[A.eps[x]] : c.extra[k - 1][X.d(k, i, x)];
          if (lhs != rhs) bad("d_i extra", k, x);
        }
        if (k + 1 < N) {
          for (int i = 0; i <= k && rep.ok(); ++i)
            if (X.s(k + 1, i, c.extra[k][x]) != c.extra[k + 1][X.s(k, i, x)]) bad("s_i extra", k, x);
          if (rep.ok() && X.s(k + 1, k + 1, c.extra[k][x]) != c.extra[k + 1][c.extra[k][x]])
            bad("s_top extra = extra extra", k, x);
        }
      }
  } else {
    for (int k = 0; k < N && rep.ok(); ++k)
      for (int x = 0; x < X.size(k) && rep.ok(); ++x) {
        if (X.d(k + 1, 0, c.extra[k][x]) != x) bad("d_0 extra = id", k, x);
        for (int j = 0; j <= k && rep.ok(); ++j) {
          int lhs = X.d(k + 1, j + 1, c.extra[k][x]);
          int rhs = (k == 0) ? c.sec[A.eps[x]] : c.extra[k - 1][X.d(k, j, x)];
          if (lhs != rhs) bad("d_{j+1} extra", k, x);
        }
        if (k + 1 < N) {
          for (int j = 0; j <= k && rep.ok(); ++j)
            if (X.s(k + 1, j + 1, c.extra[k][x]) != c.extra[k + 1][X.s(k, j, x)]) bad("s_{j+1} extra", k, x);
          if (rep.ok() && X.s(k + 1, 0, c.extra[k][x]) != c.extra[k + 1][c.extra[k][x]])
            bad("s_0 extra = extra extra", k, x);
        }
      }
  }
  return rep;
}

ValidationReport check_homotopy(const SimplicialHomotopy& H) {
  ValidationReport rep;
  const SimplicialMap& f = H.f;
  const SimplicialMap& g = H.g;
  if (f.src.get() != g.src.get() || f.tgt.get() != g.tgt.get()) {
    rep.fail("homotopy endpoints do not share source and target");
    return rep;
  }
  ValidationReport rf = validate(f), rg = validate(g);
  if (!rf.ok()) {
    rep.fail("left endpoint not simplicial: " + rf.violations.front());
    return rep;
  }
  if (!rg.ok()) {
    rep.fail("right endpoint not simplicial: " + rg.violations.front());
    return rep;
  }
  const SimplicialSet& X = *f.src;
  const SimplicialSet& Y = *f.tgt;
  const int N = std::min(X.truncation, Y.truncation);
  if (static_cast<int>(H.h.size()) != N) {
    rep.fail("homotopy must have one component family per level below truncation");
    return rep;
  }
  for (int n = 0; n < N; ++n) {
    if (static_cast<int>(H.h[n].size()) != n + 1) {
      rep.fail("component count wrong at level " + std::to_string(n));
      return rep;
    }
    for (int i = 0; i <= n; ++i) {
      if (static_cast<int>(H.h[n][i].size()) != X.size(n)) {
        rep.fail("component size wrong at level " + std::to_string(n));
        return rep;
      }
      for (int v : H.h[n][i])
        if (v < 0 || v >= Y.size(n + 1)) {
          rep.fail("component out of range at level " + std::to_string(n));
          return rep;
        }
    }
  }
  auto bad = [&rep, &X](const std::string& what, int n, int x) {
    rep.fail(what + " fails at level " + std::to_string(n) + " simplex " + X.id(n, x));
  };
  for (int n = 0; n < N && rep.ok(); ++n)
    for (int x = 0; x < X.size(n) && rep.ok(); ++x) {
      if (Y.d(n + 1, n + 1, H.h[n][n][x]) != f.comp[n][x]) bad("d_top h_top = f", n, x);
      if (rep.ok() && Y.d(n + 1, 0, H.h[n][0][x]) != g.comp[n][x]) bad("d_0 h_0 = g", n, x);
      for (int j = 0; j <= n && rep.ok(); ++j) {
        for (int i = 0; i <= n + 1 && rep.ok(); ++i) {
          if (i < j) {
            if (Y.d(n + 1, i, H.h[n][j][x]) != H.h[n - 1][j - 1][X.d(n, i, x)]) bad("d_i h_j (i<j)", n, x);
          } else if (i == j + 1 && j + 1 <= n) {
            if (Y.d(n + 1, i, H.h[n][j + 1][x]) != Y.d(n + 1, i, H.h[n][j][x])) bad("matching faces", n, x);
          } else if (i > j + 1) {
            if (Y.d(n + 1, i, H.h[n][j][x]) != H.h[n - 1][j][X.d(n, i - 1, x)]) bad("d_i h_j (i>j+1)", n, x);
          }
        }
        if (n + 1 < N)
          for (int i = 0; i <= n + 1 && rep.ok(); ++i) {
            if (i <= j) {
              if (Y.s(n + 1, i, H.h[n][j][x]) != H.h[n + 1][j + 1][X.s(n, i, x)]) bad("s_i h_j (i<=j)", n, x);
            } else {
              if (Y.s(n + 1, i, H.h[n][j][x]) != H.h[n + 1][j][X.s(n, i - 1, x)]) bad("s_i h_j (i>j)", n, x);
            }
          }
      }
    }
  return rep;
}

SimplicialHomotopy contraction_to_homotopy(const AugmentedSimplicialSet& A, const Contraction& c) {
  ValidationReport rep = check_contraction(A, c);
  if (!rep.ok()) throw Error("contraction_to_homotopy: " + rep.violations.front());
  const SSetPtr X = A.body;
  const int N = X->truncation;

  SimplicialMap idm = identity_map(X);
  // constant retraction through the augmentation points
  SimplicialMap ret;
  ret.src = ret.tgt = X;
  ret.comp.resize(N + 1);
  for (int v = 0; v < X->size(0); ++v) ret.comp[0].push_back(c.sec[A.eps[v]]);
  for (int m = 1; m <= N; ++m) {
    ret.comp[m].resize(X->size(m));
    for (int x = 0; x < X->size(m); ++x) {
      int v = x;
      for (int t = m; t >= 1; --t) v = X->d(t, 0, v);
      int y = c.sec[A.eps[v]];
      for (int t = 0; t < m; ++t) y = X->s(t, 0, y);
      ret.comp[m][x] = y;
    }
  }

  SimplicialHomotopy H;
  H.h.resize(N);
  if (c.side == Handedness::right) {
    // h_i strips the top faces down to level i, then cones back up:
    // h_i = extra^{n+1-i} . d_{i+1..n} (apply d_n first); relates id and the retraction
    H.f = idm;
    H.g = ret;
    for (int n = 0; n < N; ++n) {
      H.h[n].assign(n + 1, std::vector<int>(X->size(n)));
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < X->size(n); ++x) {
          int y = x;
          for (int t = n; t > i; --t) y = X->d(t, t, y);
          for (int k = i; k <= n; ++k) y = c.extra[k][y];
          H.h[n][i][x] = y;
        }
    }
  } else {
    // mirrored: h_i = extra^{i+1} . d_0^i; relates the retraction and id
    H.f = ret;
    H.g = idm;
    for (int n = 0; n < N; ++n) {
      H.h[n].assign(n + 1, std::vector<int>(X->size(n)));
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < X->size(n); ++x) {
          int y = x;
          for (int t = n; t > n - i; --t) y = X->d(t, 0, y);
          for (int k = n - i; k <= n; ++k) y = c.extra[k][y];
          H.h[n][i][x] = y;
        }
    }
  }
  return H;
}

}  // namespace deca
