#include "deca/loopgroup.hpp"

#include <algorithm>

namespace deca {

Word free_reduce(const Word& w) {
  Word out;
  for (int l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -l) out.letters.pop_back();
    else out.letters.push_back(l);
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::string show_word(const Word& w, const std::vector<std::string>& gens) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += "*";
    int l = w.letters[i];
    s += gens[std::abs(l) - 1];
    if (l < 0) s += "^-1";
  }
  return s;
}

ValidationReport validate(const FpGroup& F) {
  ValidationReport rep;
  int g = static_cast<int>(F.gens.size());
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j)
      if (F.gens[i] == F.gens[j]) {
        rep.fail("duplicate generator name " + F.gens[i]);
        return rep;
      }
  for (const Word& r : F.rels)
    for (int l : r.letters)
      if (l == 0 || std::abs(l) > g) {
        rep.fail("relator letter out of range");
        return rep;
      }
  return rep;
}

AbelianGroup abelianization(const FpGroup& F) {
  int g = static_cast<int>(F.gens.size());
  IntMat R(g, static_cast<int>(F.rels.size()));
  for (size_t c = 0; c < F.rels.size(); ++c)
    for (int l : F.rels[c].letters) R.at(std::abs(l) - 1, static_cast<int>(c)) += l > 0 ? 1 : -1;
  SmithResult S = smith_normal_form(R);
  AbelianGroup A;
  A.rank = g - S.rank;
  for (const BigInt& d : S.divisors)
    if (d > 1) A.torsion.push_back(d);
  return A;
}

long hom_count(const FpGroup& F, const FiniteGroup& H, long guard) {
  int g = static_cast<int>(F.gens.size());
  long total = 1;
  for (int i = 0; i < g; ++i) {
    if (total > guard / H.size() + 1) throw GuardExceeded("hom_count: assignment space too large");
    total *= H.size();
  }
  if (total > guard) throw GuardExceeded("hom_count: assignment space too large");
  std::vector<int> img(g, 0);
  long count = 0;
  auto ok = [&]() {
    for (const Word& r : F.rels) {
      int v = H.identity;
      for (int l : r.letters) {
        int x = img[std::abs(l) - 1];
        if (l < 0) x = H.inv(x);
        v = H.op(v, x);
      }
      if (v != H.identity) return false;
    }
    return true;
  };
  while (true) {
    if (ok()) ++count;
    int p = g - 1;
    while (p >= 0 && img[p] == H.size() - 1) img[p--] = 0;
    if (p < 0) break;
    ++img[p];
  }
  return count;
}

FpGroup fundamental_group(const SimplicialSet& X) {
  if (X.truncation < 2) throw Error("fundamental_group: need levels through 2");
  if (X.size(0) != 1) throw Error("fundamental_group: object must have a single vertex");
  FpGroup F;
  std::vector<int> letter(X.size(1), 0);
  for (int x = 0; x < X.size(1); ++x)
    if (!X.is_degenerate(1, x)) {
      F.gens.push_back(X.id(1, x));
      letter[x] = static_cast<int>(F.gens.size());
    }
  auto w = [&](int e) {
    Word out;
    if (letter[e] != 0) out.letters.push_back(letter[e]);
    return out;
  };
  for (int t = 0; t < X.size(2); ++t) {
    if (X.is_degenerate(2, t)) continue;
    Word r = word_concat(word_concat(w(X.d(2, 2, t)), w(X.d(2, 0, t))), word_inverse(w(X.d(2, 1, t))));
    r = free_reduce(r);
    if (!r.letters.empty()) F.rels.push_back(std::move(r));
  }
  return F;
}

namespace {

Word apply_word(const std::vector<Word>& table, const Word& w) {
  Word out;
  for (int l : w.letters) {
    const Word& img = table[std::abs(l) - 1];
    if (l > 0) out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
    else {
      Word inv = word_inverse(img);
      out.letters.insert(out.letters.end(), inv.letters.begin(), inv.letters.end());
    }
  }
  return out;
}

std::vector<BigInt> exponent_vector(const Word& w, int gens) {
  std::vector<BigInt> v(gens);
  for (int l : w.letters) v[std::abs(l) - 1] += l > 0 ? 1 : -1;
  return v;
}

bool in_relator_lattice(const FpGroup& F, const Word& w) {
  int g = static_cast<int>(F.gens.size());
  std::vector<BigInt> v = exponent_vector(w, g);
  if (F.rels.empty()) {
    for (const BigInt& x : v)
      if (x != 0) return false;
    return true;
  }
  IntMat R(g, static_cast<int>(F.rels.size()));
  for (size_t c = 0; c < F.rels.size(); ++c)
    for (int l : F.rels[c].letters) R.at(std::abs(l) - 1, static_cast<int>(c)) += l > 0 ? 1 : -1;
  SmithResult S = smith_normal_form(R);
  std::vector<BigInt> y(g);
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < g; ++c) y[r] += S.U.at(r, c) * v[c];
  for (int r = 0; r < g; ++r) {
    if (r < S.rank) {
      if (y[r] % S.divisors[r] != 0) return false;
    } else if (y[r] != 0) {
      return false;
    }
  }
  return true;
}

// 0 = equal as words, 1 = consequence established, 2 = inconclusive, 3 = refuted
int conclude_trivial(const FpGroup& tgt, const Word& w) {
  Word r = free_reduce(w);
  if (r.letters.empty()) return 0;
  for (const Word& rel : tgt.rels) {
    Word rr = free_reduce(rel);
    if (r == rr || r == free_reduce(word_inverse(rr))) return 1;
  }
  if (!in_relator_lattice(tgt, r)) return 3;
  return 2;
}

}  // namespace

ValidationReport validate(const PresentedSimplicialGroup& G) {
  ValidationReport rep;
  const int N = G.truncation;
  if (N < 0 || static_cast<int>(G.level.size()) != N + 1 ||
      static_cast<int>(G.face.size()) != N + 1 || static_cast<int>(G.deg.size()) != N) {
    rep.fail("level or table count wrong");
    return rep;
  }
  for (int n = 0; n <= N; ++n) {
    ValidationReport r = validate(G.level[n]);
    if (!r.ok()) {
      rep.fail("level " + std::to_string(n) + ": " + r.violations.front());
      return rep;
    }
  }
  auto check_table = [&](const std::vector<std::vector<Word>>& t, int n, int count, int tgt_level,
                         const char* what) {
    if (static_cast<int>(t.size()) != count) {
      rep.fail(std::string(what) + " arity wrong at level " + std::to_string(n));
      return false;
    }
    for (const auto& col : t) {
      if (col.size() != G.level[n].gens.size()) {
        rep.fail(std::string(what) + " size wrong at level " + std::to_string(n));
        return false;
      }
      for (const Word& w : col)
        for (int l : w.letters)
          if (l == 0 || std::abs(l) > static_cast<int>(G.level[tgt_level].gens.size())) {
            rep.fail(std::string(what) + " letter out of range at level " + std::to_string(n));
            return false;
          }
    }
    return true;
  };
  for (int n = 1; n <= N; ++n)
    if (!check_table(G.face[n], n, n + 1, n - 1, "face table")) return rep;
  for (int n = 0; n < N; ++n)
    if (!check_table(G.deg[n], n, n + 1, n + 1, "degeneracy table")) return rep;

  int inconclusive = 0;
  auto same = [&](const Word& a, const Word& b, int tgt_level, const std::string& what) {
    int c = conclude_trivial(G.level[tgt_level], free_reduce(word_concat(a, word_inverse(b))));
    if (c == 3) {
      rep.fail(what + " fails");
      return false;
    }
    if (c == 2) ++inconclusive;
    return true;
  };
  auto gen_word = [](int g) {
    Word w;
    w.letters.push_back(g + 1);
    return w;
  };
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (size_t g = 0; g < G.level[n].gens.size(); ++g) {
          Word lhs = apply_word(G.face[n - 1][i], G.face[n][j][g]);
          Word rhs = apply_word(G.face[n - 1][j - 1], G.face[n][i][g]);
          if (!same(lhs, rhs, n - 2,
                    "face-face identity at level " + std::to_string(n) + " (" + std::to_string(i) +
                        "," + std::to_string(j) + ")"))
            return rep;
        }
  for (int n = 0; n + 1 < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (size_t g = 0; g < G.level[n].gens.size(); ++g) {
          Word lhs = apply_word(G.deg[n + 1][i], G.deg[n][j][g]);
          Word rhs = apply_word(G.deg[n + 1][j + 1], G.deg[n][i][g]);
          if (!same(lhs, rhs, n + 2,
                    "degeneracy-degeneracy identity at level " + std::to_string(n) + " (" +
                        std::to_string(i) + "," + std::to_string(j) + ")"))
            return rep;
        }
  // face-degeneracy identities: evaluate on generators of level n, composing
  // s_j: n -> n+1 then d_i: n+1 -> n, for n + 1 <= N
  for (int n = 0; n + 1 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (size_t g = 0; g < G.level[n].gens.size(); ++g) {
          Word lhs = apply_word(G.face[n + 1][i], G.deg[n][j][g]);
          Word rhs;
          if (i < j) rhs = apply_word(G.deg[n - 1][j - 1], G.face[n][i][g]);
          else if (i == j || i == j + 1) rhs = gen_word(static_cast<int>(g));
          else rhs = apply_word(G.deg[n - 1][j], G.face[n][i - 1][g]);
          if (!same(lhs, rhs, n,
                    "face-degeneracy identity at level " + std::to_string(n) + " (" +
                        std::to_string(i) + "," + std::to_string(j) + ")"))
            return rep;
        }
  // relator images must be consequences
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      for (const Word& rel : G.level[n].rels) {
        int c = conclude_trivial(G.level[n - 1], apply_word(G.face[n][i], rel));
        if (c == 3) {
          rep.fail("face " + std::to_string(i) + " at level " + std::to_string(n) +
                   " destroys a relator");
          return rep;
        }
        if (c == 2) ++inconclusive;
      }
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      for (const Word& rel : G.level[n].rels) {
        int c = conclude_trivial(G.level[n + 1], apply_word(G.deg[n][i], rel));
        if (c == 3) {
          rep.fail("degeneracy " + std::to_string(i) + " at level " + std::to_string(n) +
                   " destroys a relator");
          return rep;
        }
        if (c == 2) ++inconclusive;
      }
  if (inconclusive > 0)
    rep.note("inconclusive word checks: " + std::to_string(inconclusive) +
             " (verified abelianized only)");
  return rep;
}

PresentedSimplicialGroup loop_group(const SimplicialSet& X) {
  if (X.truncation < 3) throw Error("loop_group: need levels through 3");
  auto D = std::make_shared<BisimplicialSet>(dec_total(X));
  RowwiseReduce R = rowwise_reduce(D);
  const BisimplicialSet& S = *R.space;
  PresentedSimplicialGroup G;
  G.truncation = X.truncation - 3;
  const int T = G.truncation;
  G.level.resize(T + 1);
  G.face.resize(T + 1);
  G.deg.resize(T);
  // generator letters per row: cell index at (1, n) -> signed letter
  std::vector<std::vector<int>> letter(T + 2);
  for (int n = 0; n <= T + 1; ++n) {
    letter[n].assign(S.size(1, n), 0);
    for (int x = 1; x < S.size(1, n); ++x) letter[n][x] = x;  // basepoint is index 0
  }
  auto w = [&](int n, int cell) {
    Word out;
    if (cell != 0) out.letters.push_back(letter[n][cell]);
    return out;
  };
  for (int n = 0; n <= T; ++n) {
    for (int x = 1; x < S.size(1, n); ++x) G.level[n].gens.push_back(S.id(1, n, x));
    for (int t = 1; t < S.size(2, n); ++t) {
      bool degen = false;
      for (int i = 0; i < 2 && !degen; ++i) degen = S.sH(1, n, i, S.dH(2, n, i, t)) == t;
      if (degen) continue;
      Word r = word_concat(word_concat(w(n, S.dH(2, n, 2, t)), w(n, S.dH(2, n, 0, t))),
                           word_inverse(w(n, S.dH(2, n, 1, t))));
      r = free_reduce(r);
      if (!r.letters.empty()) G.level[n].rels.push_back(std::move(r));
    }
    if (n >= 1) {
      G.face[n].assign(n + 1, std::vector<Word>(G.level[n].gens.size()));
      for (int i = 0; i <= n; ++i)
        for (int x = 1; x < S.size(1, n); ++x) G.face[n][i][x - 1] = w(n - 1, S.dV(1, n, i, x));
    }
    if (n < T) {
      G.deg[n].assign(n + 1, std::vector<Word>(G.level[n].gens.size()));
      for (int i = 0; i <= n; ++i)
        for (int x = 1; x < S.size(1, n); ++x) G.deg[n][i][x - 1] = w(n + 1, S.sV(1, n, i, x));
    }
  }
  return G;
}

PresentedSimplicialGroup free_loop_group(const SimplicialSet& X) {
  if (X.truncation < 1) throw Error("free_loop_group: need at least one level above the vertices");
  if (!is_reduced(X)) throw Error("free_loop_group: object must be reduced");
  PresentedSimplicialGroup G;
  G.truncation = X.truncation - 1;
  const int T = G.truncation;
  G.level.resize(T + 1);
  G.face.resize(T + 1);
  G.deg.resize(T);
  // a cell of X_{n+1} is killed exactly when it is s_0 of something
  std::vector<std::vector<int>> letter(T + 1);
  for (int n = 0; n <= T; ++n) {
    letter[n].assign(X.size(n + 1), 0);
    std::vector<char> s0img(X.size(n + 1), 0);
    for (int y = 0; y < X.size(n); ++y) s0img[X.s(n, 0, y)] = 1;
    int next = 1;
    for (int x = 0; x < X.size(n + 1); ++x)
      if (!s0img[x]) letter[n][x] = next++;
  }
  auto w = [&](int n, int cell) {
    Word out;
    if (letter[n][cell] != 0) out.letters.push_back(letter[n][cell]);
    return out;
  };
  for (int n = 0; n <= T; ++n) {
    for (int x = 0; x < X.size(n + 1); ++x)
      if (letter[n][x] != 0) G.level[n].gens.push_back(X.id(n + 1, x));
    if (n >= 1) {
      G.face[n].assign(n + 1, std::vector<Word>(G.level[n].gens.size()));
      for (int x = 0; x < X.size(n + 1); ++x) {
        if (letter[n][x] == 0) continue;
        int col = letter[n][x] - 1;
        G.face[n][0][col] =
            free_reduce(word_concat(w(n - 1, X.d(n + 1, 1, x)), word_inverse(w(n - 1, X.d(n + 1, 0, x)))));
        for (int i = 1; i <= n; ++i) G.face[n][i][col] = w(n - 1, X.d(n + 1, i + 1, x));
      }
    }
    if (n < T) {
      G.deg[n].assign(n + 1, std::vector<Word>(G.level[n].gens.size()));
      for (int x = 0; x < X.size(n + 1); ++x) {
        if (letter[n][x] == 0) continue;
        int col = letter[n][x] - 1;
        for (int i = 0; i <= n; ++i) G.deg[n][i][col] = w(n + 1, X.s(n + 1, i + 1, x));
      }
    }
  }
  return G;
}

FpGroup pi0_sgroup(const PresentedSimplicialGroup& G) {
  FpGroup F = G.level[0];
  if (G.truncation >= 1)
    for (size_t g = 0; g < G.level[1].gens.size(); ++g) {
      Word r = free_reduce(
          word_concat(G.face[1][0][g], word_inverse(G.face[1][1][g])));
      if (!r.letters.empty()) F.rels.push_back(std::move(r));
    }
  return F;
}

ChainComplex abelianized_moore(const PresentedSimplicialGroup& G) {
  ChainComplex C;
  C.top = G.truncation;
  C.trusted = G.truncation - 1;
  C.rank.resize(C.top + 1);
  C.boundary.resize(C.top + 1);
  C.basis.resize(C.top + 1);
  std::vector<std::vector<int>> pos(C.top + 1);
  for (int n = 0; n <= C.top; ++n) {
    int g = static_cast<int>(G.level[n].gens.size());
    std::vector<char> hit(g, 0);
    if (n >= 1)
      for (const auto& col : G.deg[n - 1])
        for (const Word& wd : col) {
          Word r = free_reduce(wd);
          if (r.letters.size() == 1 && r.letters[0] > 0) hit[r.letters[0] - 1] = 1;
        }
    pos[n].assign(g, -1);
    for (int x = 0; x < g; ++x)
      if (!hit[x]) {
        pos[n][x] = C.rank[n]++;
        C.basis[n].push_back(G.level[n].gens[x]);
      }
  }
  C.boundary[0] = IntMat(0, C.rank[0]);
  for (int n = 1; n <= C.top; ++n) {
    IntMat M(C.rank[n - 1], C.rank[n]);
    for (int x = 0; x < static_cast<int>(G.level[n].gens.size()); ++x) {
      if (pos[n][x] < 0) continue;
      for (int i = 0; i <= n; ++i) {
        int sign = i % 2 == 0 ? 1 : -1;
        for (int l : G.face[n][i][x].letters) {
          int t = pos[n - 1][std::abs(l) - 1];
          if (t >= 0) M.at(t, pos[n][x]) += (l > 0 ? sign : -sign);
        }
      }
    }
    C.boundary[n] = std::move(M);
  }
  ValidationReport r = validate(C);
  if (!r.ok()) throw Error("abelianized_moore: " + r.violations.front());
  return C;
}

}  // namespace deca
