#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace deca {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Guard for operations whose output size is data-dependent (enumerations).
struct GuardExceeded : Error {
  using Error::Error;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;  // non-fatal flags (e.g. inconclusive word checks)
  bool ok() const { return violations.empty(); }
  void fail(std::string v) { violations.push_back(std::move(v)); }
  void note(std::string v) { notes.push_back(std::move(v)); }
};

// Monotone map [m] -> [target], stored by its value table.
struct OrdinalMap {
  int target = 0;
  std::vector<int> values;  // size m+1, nondecreasing, each in [0, target]

  int arity() const { return static_cast<int>(values.size()) - 1; }
  bool is_identity() const;
  bool is_monotone() const;
};

OrdinalMap ordinal_identity(int n);
OrdinalMap coface(int n, int i);        // [n-1] -> [n], skips i
OrdinalMap codegeneracy(int n, int i);  // [n+1] -> [n], repeats i
// f after g: [k] -g-> [m] -f-> [n]
OrdinalMap ordinal_compose(const OrdinalMap& f, const OrdinalMap& g);
// Ordinal sum on objects is [m] + [n] = [m+n+1]; on maps it concatenates,
// shifting the second block past the first target.
OrdinalMap ordinal_sum(const OrdinalMap& a, const OrdinalMap& b);

// One level of a complex: simplices are indexed densely, names are unique ids.
struct Level {
  std::vector<std::string> ids;
  std::unordered_map<std::string, int> index;

  int add(const std::string& id);
  int at(const std::string& id) const;  // -1 when absent
  int size() const { return static_cast<int>(ids.size()); }
};

// Simplicial set truncated at level `truncation`:
//   face[m][i] defined for 1 <= m <= truncation, 0 <= i <= m
//   deg[m][i]  defined for 0 <= m <  truncation, 0 <= i <= m
struct SimplicialSet {
  int truncation = 0;
  std::vector<Level> level;
  std::vector<std::vector<std::vector<int>>> face;
  std::vector<std::vector<std::vector<int>>> deg;

  int size(int m) const { return level[m].size(); }
  int d(int m, int i, int x) const { return face[m][i][x]; }
  int s(int m, int i, int x) const { return deg[m][i][x]; }
  const std::string& id(int m, int x) const { return level[m].ids[x]; }
  int index_of(int m, const std::string& name) const { return level[m].at(name); }

  bool is_degenerate(int m, int x) const;
  // Action of a monotone u: [k] -> [m] on an m-simplex, landing in level k.
  int apply(const OrdinalMap& u, int m, int x) const;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

ValidationReport validate(const SimplicialSet& X);

// Standard n-simplex truncated at N; simplices are monotone maps [m] -> [n],
// named by their value tables.
SimplicialSet std_simplex(int n, int N);
std::string simplex_value_id(const std::vector<int>& values);

// Input cell for build_from_nondegenerate: faces name simplices one level
// down, possibly by their canonical degenerate ids.
struct NondegCell {
  std::string id;
  std::vector<std::string> faces;  // size dim+1; empty for dim 0
};

// Canonical id of s_{w[0]} s_{w[1]} ... s_{w.back()} base  (w strictly decreasing).
std::string degenerate_id(const std::vector<int>& word, const std::string& base);

// Generates all degeneracies of the listed cells up to level N. Rejects face
// assignments violating the simplicial identities, naming the first failure.
SimplicialSet build_from_nondegenerate(const std::vector<std::vector<NondegCell>>& cells, int N);

// Eilenberg-Zilber normal form: x = s_{word[0]} ... s_{word[k-1]} base with
// word strictly decreasing and base nondegenerate (in level m - k).
struct EzForm {
  std::vector<int> word;
  int base = -1;
};
EzForm ez_decompose(const SimplicialSet& X, int m, int x);

SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y);

// Collapses a levelwise-closed subcomplex to one basepoint simplex per level.
// sub[m] lists simplex indices; closure under faces and degeneracies is checked.
SimplicialSet quotient(const SimplicialSet& X, const std::vector<std::vector<int>>& sub);
// quotient by the 0-skeleton (all iterated degeneracies of vertices)
SimplicialSet reduce(const SimplicialSet& X);
bool is_reduced(const SimplicialSet& X);

struct Pi0 {
  int classes = 0;
  std::vector<int> class_of;  // per vertex
};
Pi0 pi0(const SimplicialSet& X);

SimplicialSet opposite(const SimplicialSet& X);

SimplicialSet restrict_truncation(const SimplicialSet& X, int N);

struct SimplicialMap {
  SSetPtr src, tgt;
  std::vector<std::vector<int>> comp;  // comp[m][x], m <= levels()-1

  int levels() const { return static_cast<int>(comp.size()); }
  int at(int m, int x) const { return comp[m][x]; }
};

ValidationReport validate(const SimplicialMap& f);
SimplicialMap identity_map(const SSetPtr& X);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
bool maps_equal(const SimplicialMap& f, const SimplicialMap& g);
// strict structural equality: same level sizes, ids, and operator tables
bool equal_bit_exact(const SimplicialSet& X, const SimplicialSet& Y);

// Augmentation: eps coequalizes d_0, d_1 at level 1.
struct AugmentedSimplicialSet {
  SSetPtr body;
  Level points;            // the augmentation object
  std::vector<int> eps;    // level 0 -> points
};
ValidationReport validate(const AugmentedSimplicialSet& A);

// Extra degeneracies witnessing a contraction of an augmented object.
// Right-handed: extras act as a spare top degeneracy (d_top extra = id).
// Left-handed: spare bottom degeneracy (d_0 extra = id).
enum class Handedness { right, left };

struct Contraction {
  Handedness side = Handedness::right;
  std::vector<int> sec;                  // points -> level 0
  std::vector<std::vector<int>> extra;   // extra[k]: level k -> level k+1
};
ValidationReport check_contraction(const AugmentedSimplicialSet& A, const Contraction& c);

// Homotopy from f to g: d_{n+1} h[n] = f and d_0 h[0] = g.
struct SimplicialHomotopy {
  SimplicialMap f, g;
  std::vector<std::vector<std::vector<int>>> h;  // h[n][i][x] in tgt level n+1
};
ValidationReport check_homotopy(const SimplicialHomotopy& H);

// Cone homotopy of a contraction: strip to a prefix with top (resp. bottom)
// faces, then rebuild with extras. Right-handed relates the identity (top
// endpoint) to the constant retraction sec . eps (bottom endpoint); the
// left-handed case is mirrored.
SimplicialHomotopy contraction_to_homotopy(const AugmentedSimplicialSet& A, const Contraction& c);

}  // namespace deca
