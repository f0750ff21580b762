#include "deca/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>

namespace deca {

namespace {

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object()) throw Error("expected an object while reading field '" + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw Error("missing field '" + key + "'");
  return *it;
}

int int_field(const Json& j, const std::string& key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw Error("field '" + key + "' must be an integer");
  return v.get<int>();
}

void expect_kind(const Json& j, const std::string& kind) {
  if (json_kind(j) != kind) {
    throw Error("expected kind '" + kind + "', found '" + json_kind(j) + "'");
  }
}

// operator table as an id -> id object over a known source level
Json table_to_json(const Level& src, const Level& tgt, const std::vector<int>& t) {
  Json o = Json::object();
  for (int x = 0; x < src.size(); ++x) o[src.ids[x]] = tgt.ids[t[x]];
  return o;
}

std::vector<int> table_from_json(const Json& o, const Level& src, const Level& tgt,
                                 const std::string& where) {
  if (!o.is_object()) throw Error("table " + where + " must be an object");
  std::vector<int> t(src.size(), -1);
  for (auto it = o.begin(); it != o.end(); ++it) {
    int x = src.at(it.key());
    if (x < 0) throw Error("table " + where + ": unknown source id '" + it.key() + "'");
    if (!it.value().is_string()) throw Error("table " + where + ": value for '" + it.key() + "' must be an id string");
    int y = tgt.at(it.value().get<std::string>());
    if (y < 0) throw Error("table " + where + ": unknown target id '" + it.value().get<std::string>() + "'");
    t[x] = y;
  }
  for (int x = 0; x < src.size(); ++x) {
    if (t[x] < 0) throw Error("table " + where + ": no entry for id '" + src.ids[x] + "'");
  }
  return t;
}

Level level_from_json(const Json& a, const std::string& where) {
  if (!a.is_array()) throw Error(where + " must be an array of id strings");
  Level L;
  for (const Json& e : a) {
    if (!e.is_string()) throw Error(where + " must contain only id strings");
    std::string id = e.get<std::string>();
    if (L.at(id) >= 0) throw Error(where + ": duplicate id '" + id + "'");
    L.add(id);
  }
  return L;
}

Json big_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

BigInt big_from_json(const Json& e) {
  if (e.is_number_integer()) return BigInt(e.get<long long>());
  if (e.is_string()) return BigInt(e.get<std::string>());
  throw Error("matrix entries must be integers or decimal strings");
}

std::pair<int, int> parse_bidegree(const std::string& key) {
  int m = -1, n = -1;
  char tail = 0;
  if (std::sscanf(key.c_str(), "%d,%d%c", &m, &n, &tail) != 2 || m < 0 || n < 0) {
    throw Error("bad bidegree key '" + key + "' (expected \"m,n\")");
  }
  return {m, n};
}

std::string bidegree_key(int m, int n) {
  return std::to_string(m) + "," + std::to_string(n);
}

Json word_to_json(const Word& w) {
  Json a = Json::array();
  for (int l : w.letters) a.push_back(l);
  return a;
}

Word word_from_json(const Json& a, const std::string& where) {
  if (!a.is_array()) throw Error(where + ": word must be an array of signed indices");
  Word w;
  for (const Json& e : a) {
    if (!e.is_number_integer() || e.get<int>() == 0) {
      throw Error(where + ": word letters are nonzero signed 1-based indices");
    }
    w.letters.push_back(e.get<int>());
  }
  return w;
}

Json int_matrix_to_json(const std::vector<std::vector<int>>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (int v : r) row.push_back(v);
    a.push_back(row);
  }
  return a;
}

std::vector<std::vector<int>> int_matrix_from_json(const Json& a, const std::string& where) {
  if (!a.is_array()) throw Error(where + " must be an array");
  std::vector<std::vector<int>> out;
  for (const Json& r : a) {
    if (!r.is_array()) throw Error(where + " must be an array of integer arrays");
    std::vector<int> row;
    for (const Json& e : r) {
      if (!e.is_number_integer()) throw Error(where + " must contain integers");
      row.push_back(e.get<int>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::string json_kind(const Json& j) {
  if (!j.is_object()) return "";
  auto it = j.find("kind");
  if (it == j.end() || !it->is_string()) return "";
  return it->get<std::string>();
}

Json to_json(const SimplicialSet& X) {
  Json j;
  j["kind"] = "sset";
  j["truncation"] = X.truncation;
  Json levels = Json::array();
  for (int m = 0; m <= X.truncation; ++m) {
    Json ids = Json::array();
    for (const std::string& id : X.level[m].ids) ids.push_back(id);
    levels.push_back(std::move(ids));
  }
  j["levels"] = std::move(levels);
  Json face = Json::array();
  face.push_back(Json::array());
  for (int m = 1; m <= X.truncation; ++m) {
    Json fm = Json::array();
    for (int i = 0; i <= m; ++i) fm.push_back(table_to_json(X.level[m], X.level[m - 1], X.face[m][i]));
    face.push_back(std::move(fm));
  }
  j["face"] = std::move(face);
  Json deg = Json::array();
  for (int m = 0; m < X.truncation; ++m) {
    Json dm = Json::array();
    for (int i = 0; i <= m; ++i) dm.push_back(table_to_json(X.level[m], X.level[m + 1], X.deg[m][i]));
    deg.push_back(std::move(dm));
  }
  j["deg"] = std::move(deg);
  return j;
}

SimplicialSet sset_from_json(const Json& j) {
  expect_kind(j, "sset");
  SimplicialSet X;
  X.truncation = int_field(j, "truncation");
  if (X.truncation < 0) throw Error("truncation must be >= 0");
  const Json& levels = field(j, "levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != X.truncation + 1) {
    throw Error("levels must be an array of truncation+1 id arrays");
  }
  for (int m = 0; m <= X.truncation; ++m) {
    X.level.push_back(level_from_json(levels[m], "levels[" + std::to_string(m) + "]"));
  }
  const Json& face = field(j, "face");
  if (!face.is_array() || static_cast<int>(face.size()) != X.truncation + 1) {
    throw Error("face must be an array of truncation+1 entries (entry 0 empty)");
  }
  X.face.resize(X.truncation + 1);
  for (int m = 1; m <= X.truncation; ++m) {
    const Json& fm = face[m];
    if (!fm.is_array() || static_cast<int>(fm.size()) != m + 1) {
      throw Error("face[" + std::to_string(m) + "] must list m+1 tables");
    }
    for (int i = 0; i <= m; ++i) {
      X.face[m].push_back(table_from_json(fm[i], X.level[m], X.level[m - 1],
                                          "face[" + std::to_string(m) + "][" + std::to_string(i) + "]"));
    }
  }
  const Json& deg = field(j, "deg");
  if (!deg.is_array() || static_cast<int>(deg.size()) != X.truncation) {
    throw Error("deg must be an array of truncation entries");
  }
  X.deg.resize(std::max(X.truncation, 0));
  for (int m = 0; m < X.truncation; ++m) {
    const Json& dm = deg[m];
    if (!dm.is_array() || static_cast<int>(dm.size()) != m + 1) {
      throw Error("deg[" + std::to_string(m) + "] must list m+1 tables");
    }
    for (int i = 0; i <= m; ++i) {
      X.deg[m].push_back(table_from_json(dm[i], X.level[m], X.level[m + 1],
                                         "deg[" + std::to_string(m) + "][" + std::to_string(i) + "]"));
    }
  }
  return X;
}

Json to_json(const BisimplicialSet& B) {
  Json j;
  j["kind"] = "bisset";
  j["P"] = B.max_h();
  j["Q"] = B.max_v();
  Json cells = Json::object();
  for (const auto& [mn, L] : B.cells) {
    Json ids = Json::array();
    for (const std::string& id : L.ids) ids.push_back(id);
    cells[bidegree_key(mn.first, mn.second)] = std::move(ids);
  }
  j["cells"] = std::move(cells);
  auto emit = [&](const std::map<std::pair<int, int>, std::vector<std::vector<int>>>& tab,
                  int dm, int dn, bool arity_h) {
    Json o = Json::object();
    for (const auto& [mn, t] : tab) {
      const Level& src = B.cells.at(mn);
      const Level& tgt = B.cells.at({mn.first + dm, mn.second + dn});
      Json arr = Json::array();
      int arity = arity_h ? mn.first : mn.second;
      if (static_cast<int>(t.size()) != arity + 1) throw Error("operator table with unexpected arity");
      for (int i = 0; i <= arity; ++i) arr.push_back(table_to_json(src, tgt, t[i]));
      o[bidegree_key(mn.first, mn.second)] = std::move(arr);
    }
    return o;
  };
  j["dh"] = emit(B.dh, -1, 0, true);
  j["sh"] = emit(B.sh, +1, 0, true);
  j["dv"] = emit(B.dv, 0, -1, false);
  j["sv"] = emit(B.sv, 0, +1, false);
  return j;
}

BisimplicialSet bisset_from_json(const Json& j) {
  expect_kind(j, "bisset");
  BisimplicialSet B;
  const Json& cells = field(j, "cells");
  if (!cells.is_object()) throw Error("cells must be an object keyed by \"m,n\"");
  for (auto it = cells.begin(); it != cells.end(); ++it) {
    auto mn = parse_bidegree(it.key());
    B.cells[mn] = level_from_json(it.value(), "cells[" + it.key() + "]");
  }
  auto load = [&](const char* name, int dm, int dn, bool arity_h,
                  std::map<std::pair<int, int>, std::vector<std::vector<int>>>& tab) {
    const Json& o = field(j, name);
    if (!o.is_object()) throw Error(std::string(name) + " must be an object keyed by \"m,n\"");
    for (auto it = o.begin(); it != o.end(); ++it) {
      auto mn = parse_bidegree(it.key());
      if (!B.has(mn.first, mn.second) || !B.has(mn.first + dm, mn.second + dn)) {
        throw Error(std::string(name) + "[" + it.key() + "]: source or target bidegree absent");
      }
      const Level& src = B.cells.at(mn);
      const Level& tgt = B.cells.at({mn.first + dm, mn.second + dn});
      int arity = arity_h ? mn.first : mn.second;
      const Json& arr = it.value();
      if (!arr.is_array() || static_cast<int>(arr.size()) != arity + 1) {
        throw Error(std::string(name) + "[" + it.key() + "] must list the full index range");
      }
      std::vector<std::vector<int>> t;
      for (int i = 0; i <= arity; ++i) {
        t.push_back(table_from_json(arr[i], src, tgt,
                                    std::string(name) + "[" + it.key() + "][" + std::to_string(i) + "]"));
      }
      tab[mn] = std::move(t);
    }
  };
  load("dh", -1, 0, true, B.dh);
  load("sh", +1, 0, true, B.sh);
  load("dv", 0, -1, false, B.dv);
  load("sv", 0, +1, false, B.sv);
  return B;
}

Json to_json(const SimplicialGroup& G) {
  Json j;
  j["kind"] = "sgroup";
  Json levels = Json::array();
  for (int m = 0; m <= G.truncation; ++m) {
    Json L;
    Json names = Json::array();
    for (const std::string& s : G.level[m].names) names.push_back(s);
    L["elements"] = std::move(names);
    L["identity"] = G.level[m].identity;
    Json mul = Json::array();
    for (const auto& row : G.level[m].mul) {
      Json r = Json::array();
      for (int v : row) r.push_back(v);
      mul.push_back(std::move(r));
    }
    L["mul"] = std::move(mul);
    levels.push_back(std::move(L));
  }
  j["levels"] = std::move(levels);
  Json faces = Json::array();
  faces.push_back(Json::array());
  for (int m = 1; m <= G.truncation; ++m) faces.push_back(int_matrix_to_json(G.face[m]));
  j["faces"] = std::move(faces);
  Json degs = Json::array();
  for (int m = 0; m < G.truncation; ++m) degs.push_back(int_matrix_to_json(G.deg[m]));
  j["degs"] = std::move(degs);
  return j;
}

SimplicialGroup sgroup_from_json(const Json& j) {
  expect_kind(j, "sgroup");
  SimplicialGroup G;
  const Json& levels = field(j, "levels");
  if (!levels.is_array() || levels.empty()) throw Error("levels must be a nonempty array");
  G.truncation = static_cast<int>(levels.size()) - 1;
  for (int m = 0; m <= G.truncation; ++m) {
    const Json& L = levels[m];
    FiniteGroup H;
    const Json& names = field(L, "elements");
    if (!names.is_array() || names.empty()) throw Error("elements must be a nonempty array");
    for (const Json& e : names) {
      if (!e.is_string()) throw Error("elements must be strings");
      H.names.push_back(e.get<std::string>());
    }
    H.identity = int_field(L, "identity");
    H.mul = int_matrix_from_json(field(L, "mul"), "mul");
    G.level.push_back(std::move(H));
  }
  const Json& faces = field(j, "faces");
  if (!faces.is_array() || static_cast<int>(faces.size()) != G.truncation + 1) {
    throw Error("faces must have truncation+1 entries (entry 0 empty)");
  }
  G.face.resize(G.truncation + 1);
  for (int m = 1; m <= G.truncation; ++m) {
    G.face[m] = int_matrix_from_json(faces[m], "faces[" + std::to_string(m) + "]");
    if (static_cast<int>(G.face[m].size()) != m + 1) {
      throw Error("faces[" + std::to_string(m) + "] must list m+1 tables");
    }
  }
  const Json& degs = field(j, "degs");
  if (!degs.is_array() || static_cast<int>(degs.size()) != G.truncation) {
    throw Error("degs must have truncation entries");
  }
  G.deg.resize(std::max(G.truncation, 0));
  for (int m = 0; m < G.truncation; ++m) {
    G.deg[m] = int_matrix_from_json(degs[m], "degs[" + std::to_string(m) + "]");
    if (static_cast<int>(G.deg[m].size()) != m + 1) {
      throw Error("degs[" + std::to_string(m) + "] must list m+1 tables");
    }
  }
  return G;
}

Json to_json(const FpGroup& F) {
  Json j;
  j["kind"] = "fpgroup";
  Json gens = Json::array();
  for (const std::string& g : F.gens) gens.push_back(g);
  j["gens"] = std::move(gens);
  Json rels = Json::array();
  for (const Word& w : F.rels) rels.push_back(word_to_json(w));
  j["rels"] = std::move(rels);
  return j;
}

FpGroup fpgroup_from_json(const Json& j) {
  expect_kind(j, "fpgroup");
  FpGroup F;
  const Json& gens = field(j, "gens");
  if (!gens.is_array()) throw Error("gens must be an array");
  for (const Json& e : gens) {
    if (!e.is_string()) throw Error("gens must be strings");
    F.gens.push_back(e.get<std::string>());
  }
  const Json& rels = field(j, "rels");
  if (!rels.is_array()) throw Error("rels must be an array of words");
  for (size_t k = 0; k < rels.size(); ++k) {
    F.rels.push_back(word_from_json(rels[k], "rels[" + std::to_string(k) + "]"));
  }
  return F;
}

Json to_json(const PresentedSimplicialGroup& G) {
  Json j;
  j["kind"] = "psgroup";
  Json levels = Json::array();
  for (int n = 0; n <= G.truncation; ++n) {
    Json L;
    Json gens = Json::array();
    for (const std::string& g : G.level[n].gens) gens.push_back(g);
    L["gens"] = std::move(gens);
    Json rels = Json::array();
    for (const Word& w : G.level[n].rels) rels.push_back(word_to_json(w));
    L["rels"] = std::move(rels);
    levels.push_back(std::move(L));
  }
  j["levels"] = std::move(levels);
  auto emit = [](const std::vector<std::vector<Word>>& maps) {
    Json arr = Json::array();
    for (const auto& images : maps) {
      Json per = Json::array();
      for (const Word& w : images) per.push_back(word_to_json(w));
      arr.push_back(std::move(per));
    }
    return arr;
  };
  Json faces = Json::array();
  faces.push_back(Json::array());
  for (int n = 1; n <= G.truncation; ++n) faces.push_back(emit(G.face[n]));
  j["faces"] = std::move(faces);
  Json degs = Json::array();
  for (int n = 0; n < G.truncation; ++n) degs.push_back(emit(G.deg[n]));
  j["degs"] = std::move(degs);
  return j;
}

PresentedSimplicialGroup psgroup_from_json(const Json& j) {
  expect_kind(j, "psgroup");
  PresentedSimplicialGroup G;
  const Json& levels = field(j, "levels");
  if (!levels.is_array() || levels.empty()) throw Error("levels must be a nonempty array");
  G.truncation = static_cast<int>(levels.size()) - 1;
  for (int n = 0; n <= G.truncation; ++n) {
    Json wrapped = levels[n];
    wrapped["kind"] = "fpgroup";
    G.level.push_back(fpgroup_from_json(wrapped));
  }
  auto load = [&](const Json& arr, int n, int arity, const std::string& where) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != arity) {
      throw Error(where + " must list the full index range");
    }
    std::vector<std::vector<Word>> maps;
    for (int i = 0; i < arity; ++i) {
      const Json& per = arr[i];
      if (!per.is_array() || per.size() != G.level[n].gens.size()) {
        throw Error(where + "[" + std::to_string(i) + "] must give one word per generator");
      }
      std::vector<Word> images;
      for (size_t g = 0; g < per.size(); ++g) {
        images.push_back(word_from_json(per[g], where + "[" + std::to_string(i) + "]"));
      }
      maps.push_back(std::move(images));
    }
    return maps;
  };
  const Json& faces = field(j, "faces");
  if (!faces.is_array() || static_cast<int>(faces.size()) != G.truncation + 1) {
    throw Error("faces must have truncation+1 entries (entry 0 empty)");
  }
  G.face.resize(G.truncation + 1);
  for (int n = 1; n <= G.truncation; ++n) {
    G.face[n] = load(faces[n], n, n + 1, "faces[" + std::to_string(n) + "]");
  }
  const Json& degs = field(j, "degs");
  if (!degs.is_array() || static_cast<int>(degs.size()) != G.truncation) {
    throw Error("degs must have truncation entries");
  }
  G.deg.resize(std::max(G.truncation, 0));
  for (int n = 0; n < G.truncation; ++n) {
    G.deg[n] = load(degs[n], n, n + 1, "degs[" + std::to_string(n) + "]");
  }
  return G;
}

Json to_json(const Ptcp& P) {
  Json j;
  j["kind"] = "ptcp";
  j["group"] = to_json(P.G);
  j["total"] = to_json(*P.total);
  j["base"] = to_json(*P.base);
  j["proj"] = int_matrix_to_json(P.proj.comp);
  Json action = Json::array();
  for (const auto& level : P.action) action.push_back(int_matrix_to_json(level));
  j["action"] = std::move(action);
  j["section"] = int_matrix_to_json(P.section);
  return j;
}

Ptcp ptcp_from_json(const Json& j) {
  expect_kind(j, "ptcp");
  Ptcp P;
  P.G = sgroup_from_json(field(j, "group"));
  P.total = std::make_shared<SimplicialSet>(sset_from_json(field(j, "total")));
  P.base = std::make_shared<SimplicialSet>(sset_from_json(field(j, "base")));
  P.proj.src = P.total;
  P.proj.tgt = P.base;
  P.proj.comp = int_matrix_from_json(field(j, "proj"), "proj");
  const Json& action = field(j, "action");
  if (!action.is_array()) throw Error("action must be an array of per-level tables");
  for (size_t n = 0; n < action.size(); ++n) {
    P.action.push_back(int_matrix_from_json(action[n], "action[" + std::to_string(n) + "]"));
  }
  P.section = int_matrix_from_json(field(j, "section"), "section");
  return P;
}

Json to_json(const IntMat& A) {
  Json j;
  j["rows"] = A.rows;
  j["cols"] = A.cols;
  Json data = Json::array();
  for (const BigInt& v : A.a) data.push_back(big_to_json(v));
  j["data"] = std::move(data);
  return j;
}

IntMat intmat_from_json(const Json& j) {
  int r = int_field(j, "rows"), c = int_field(j, "cols");
  if (r < 0 || c < 0) throw Error("matrix dimensions must be nonnegative");
  IntMat A(r, c);
  const Json& data = field(j, "data");
  if (!data.is_array() || static_cast<int>(data.size()) != r * c) {
    throw Error("matrix data must be a row-major array of rows*cols entries");
  }
  for (size_t k = 0; k < data.size(); ++k) A.a[k] = big_from_json(data[k]);
  return A;
}

Json to_json(const ChainComplex& C) {
  Json j;
  j["kind"] = "chain";
  j["top"] = C.top;
  j["trusted"] = C.trusted;
  Json ranks = Json::array();
  for (int r : C.rank) ranks.push_back(r);
  j["ranks"] = std::move(ranks);
  Json boundary = Json::array();
  for (const IntMat& B : C.boundary) boundary.push_back(to_json(B));
  j["boundary"] = std::move(boundary);
  if (!C.basis.empty()) {
    Json basis = Json::array();
    for (const auto& names : C.basis) {
      Json b = Json::array();
      for (const std::string& s : names) b.push_back(s);
      basis.push_back(std::move(b));
    }
    j["basis"] = std::move(basis);
  }
  return j;
}

ChainComplex chain_from_json(const Json& j) {
  expect_kind(j, "chain");
  ChainComplex C;
  C.top = int_field(j, "top");
  C.trusted = int_field(j, "trusted");
  const Json& ranks = field(j, "ranks");
  if (!ranks.is_array() || static_cast<int>(ranks.size()) != C.top + 1) {
    throw Error("ranks must list top+1 entries");
  }
  for (const Json& e : ranks) {
    if (!e.is_number_integer() || e.get<int>() < 0) throw Error("ranks must be nonnegative integers");
    C.rank.push_back(e.get<int>());
  }
  const Json& boundary = field(j, "boundary");
  if (!boundary.is_array() || static_cast<int>(boundary.size()) != C.top + 1) {
    throw Error("boundary must list top+1 matrices");
  }
  for (const Json& b : boundary) C.boundary.push_back(intmat_from_json(b));
  if (j.contains("basis")) {
    const Json& basis = j.at("basis");
    if (!basis.is_array() || static_cast<int>(basis.size()) != C.top + 1) {
      throw Error("basis must list top+1 name arrays");
    }
    for (const Json& names : basis) {
      std::vector<std::string> b;
      for (const Json& s : names) {
        if (!s.is_string()) throw Error("basis entries must be strings");
        b.push_back(s.get<std::string>());
      }
      C.basis.push_back(std::move(b));
    }
  }
  ValidationReport rep = validate(C);
  if (!rep.ok()) throw Error("chain complex invalid: " + rep.violations.front());
  return C;
}

Json to_json(const ChainMap& f) {
  Json j;
  j["kind"] = "chainmap";
  j["src"] = to_json(f.src);
  j["tgt"] = to_json(f.tgt);
  Json comp = Json::array();
  for (const IntMat& M : f.comp) comp.push_back(to_json(M));
  j["comp"] = std::move(comp);
  return j;
}

ChainMap chainmap_from_json(const Json& j) {
  expect_kind(j, "chainmap");
  ChainMap f;
  f.src = chain_from_json(field(j, "src"));
  f.tgt = chain_from_json(field(j, "tgt"));
  const Json& comp = field(j, "comp");
  if (!comp.is_array()) throw Error("comp must list per-degree matrices");
  for (const Json& m : comp) f.comp.push_back(intmat_from_json(m));
  ValidationReport rep = validate(f);
  if (!rep.ok()) throw Error("chain map invalid: " + rep.violations.front());
  return f;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return Json::parse(in);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(1) << "\n";
}

}  // namespace deca
