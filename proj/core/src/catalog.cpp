#include "deca/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>

#include "deca/json_io.hpp"

namespace deca {

namespace {

constexpr int kSsetTrunc = 9;
constexpr int kStarTrunc = 4;  // p1/p2/ext entries: enough for degree-3 homology

std::mutex cache_mutex;

// DECA_CATALOG override: returns true and fills j when <dir>/<name>.json exists
bool override_json(const std::string& name, Json& j) {
  const char* dir = std::getenv("DECA_CATALOG");
  if (dir == nullptr || *dir == '\0') return false;
  std::filesystem::path p = std::filesystem::path(dir) / (name + ".json");
  if (!std::filesystem::exists(p)) return false;
  j = read_json_file(p.string());
  return true;
}

SimplicialSet build_sset_recipe(const std::string& name) {
  if (name == "delta0") return std_simplex(0, kSsetTrunc);
  if (name == "delta1") return std_simplex(1, kSsetTrunc);
  if (name == "delta2") return std_simplex(2, kSsetTrunc);
  if (name == "delta3") return std_simplex(3, kSsetTrunc);
  if (name == "bdelta2") return build_boundary_delta2(kSsetTrunc);
  if (name == "s1") return build_sphere(1, kSsetTrunc);
  if (name == "s2") return build_sphere(2, kSsetTrunc);
  if (name == "s1vs1") return build_wedge_circles(kSsetTrunc);
  if (name == "p2") return build_p2(kSsetTrunc);
  if (name == "rdelta1") return reduce(std_simplex(1, kSsetTrunc));
  if (name == "rdelta2") return reduce(std_simplex(2, kSsetTrunc));
  if (name == "delta1xdelta1") {
    return product(std_simplex(1, kSsetTrunc), std_simplex(1, kSsetTrunc));
  }
  if (name == "s1xs1") {
    SimplicialSet c = build_sphere(1, kSsetTrunc);
    return product(c, c);
  }
  throw Error("unknown simplicial catalog entry '" + name + "'");
}

SimplicialGroup build_group_recipe(const std::string& name) {
  if (name == "c2") return constant_simplicial_group(cyclic_group(2), 4);
  if (name == "c3") return constant_simplicial_group(cyclic_group(3), 4);
  if (name == "s3") return constant_simplicial_group(symmetric_group_3(), 3);
  if (name == "ehc2") return eh_construction(cyclic_group(2), 3);
  throw Error("unknown group catalog entry '" + name + "'");
}

BisimplicialSet build_bis_recipe(const std::string& name) {
  auto starts_with = [&](const std::string& prefix) {
    return name.rfind(prefix, 0) == 0;
  };
  if (starts_with("p1.")) {
    return p1_star(restrict_truncation(*catalog_sset(name.substr(3)), kStarTrunc), kStarTrunc);
  }
  if (starts_with("p2.")) {
    return p2_star(restrict_truncation(*catalog_sset(name.substr(3)), kStarTrunc), kStarTrunc);
  }
  if (starts_with("dec.")) return dec_total(*catalog_sset(name.substr(4)));
  if (name == "ext.delta1.delta1") {
    SimplicialSet d1 = std_simplex(1, kStarTrunc);
    return external_product(d1, d1);
  }
  if (name == "ext.s1.s1") {
    SimplicialSet c = restrict_truncation(*catalog_sset("s1"), kStarTrunc);
    return external_product(c, c);
  }
  if (starts_with("nerve.")) {
    const SimplicialGroup& G = catalog_group(name.substr(6));
    return nerve_bis(G, G.truncation + 1);
  }
  if (name == "dstar.delta1") {
    return *d_star(catalog_sset("delta1"), 3, 3).object;
  }
  throw Error("unknown bisimplicial catalog entry '" + name + "'");
}

}  // namespace

std::vector<std::string> catalog_sset_names() {
  return {"delta0", "delta1", "delta2", "delta3", "bdelta2", "s1",
          "s2",     "s1vs1",  "p2",     "rdelta1", "rdelta2",
          "delta1xdelta1", "s1xs1"};
}

std::vector<std::string> catalog_reduced_names() {
  return {"s1", "s2", "s1vs1", "p2", "rdelta1", "rdelta2"};
}

std::vector<std::string> catalog_group_names() { return {"c2", "c3", "s3", "ehc2"}; }

std::vector<std::string> catalog_bis_names() {
  std::vector<std::string> out;
  for (const std::string& s : catalog_sset_names()) out.push_back("p1." + s);
  for (const std::string& s : catalog_sset_names()) out.push_back("p2." + s);
  for (const std::string& s : catalog_sset_names()) out.push_back("dec." + s);
  out.push_back("ext.delta1.delta1");
  out.push_back("ext.s1.s1");
  for (const std::string& g : catalog_group_names()) out.push_back("nerve." + g);
  out.push_back("dstar.delta1");
  return out;
}

// Lookup under the lock, build outside it (bisimplicial recipes read other
// catalog entries), insert under the lock again; a racing first insert wins.
template <typename T, typename Build>
static std::shared_ptr<const T> cached(std::map<std::string, std::shared_ptr<const T>>& cache,
                                       const std::string& name, Build build) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  std::shared_ptr<const T> value = std::make_shared<T>(build());
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(name, value).first->second;
}

SSetPtr catalog_sset(const std::string& name) {
  static std::map<std::string, SSetPtr> cache;
  return cached(cache, name, [&]() {
    Json j;
    return override_json(name, j) ? sset_from_json(j) : build_sset_recipe(name);
  });
}

BisPtr catalog_bis(const std::string& name) {
  static std::map<std::string, BisPtr> cache;
  return cached(cache, name, [&]() {
    Json j;
    return override_json(name, j) ? bisset_from_json(j) : build_bis_recipe(name);
  });
}

const SimplicialGroup& catalog_group(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const SimplicialGroup>> cache;
  return *cached(cache, name, [&]() {
    Json j;
    return override_json(name, j) ? sgroup_from_json(j) : build_group_recipe(name);
  });
}

std::vector<CatalogExpectation> catalog_expectations() {
  return {
      {"delta1", "level sizes m+2", "counted", {2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
      {"delta2", "level sizes C(m+3,2)", "counted", {3, 6, 10, 15, 21, 28, 36, 45, 55, 66}},
      {"bdelta2", "level sizes C(m+3,2)-C(m,2)", "counted", {3, 6, 9, 12, 15, 18, 21, 24, 27, 30}},
      {"s1", "level sizes m+1", "counted", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
      {"s2", "level sizes 1+C(m,2)", "counted", {1, 1, 2, 4, 7, 11, 16, 22, 29, 37}},
      {"s1vs1", "level sizes 2m+1", "counted", {1, 3, 5, 7, 9, 11, 13, 15, 17, 19}},
      {"p2", "level sizes", "construction", {1, 2, 4, 7}},
      {"rdelta1", "level sizes m+1", "computed", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
      {"s1xs1", "level sizes (m+1)^2", "computed", {1, 4, 9, 16, 25, 36, 49, 64, 81, 100}},
  };
}

SimplicialSet build_sphere(int dim, int N) {
  if (dim == 1) {
    std::vector<std::vector<NondegCell>> cells(2);
    cells[0].push_back({"*", {}});
    cells[1].push_back({"a", {"*", "*"}});
    return build_from_nondegenerate(cells, N);
  }
  if (dim == 2) {
    std::vector<std::vector<NondegCell>> cells(3);
    cells[0].push_back({"*", {}});
    std::string e = degenerate_id({0}, "*");
    cells[2].push_back({"sigma", {e, e, e}});
    return build_from_nondegenerate(cells, N);
  }
  throw Error("sphere builder supports dimensions 1 and 2");
}

SimplicialSet build_p2(int N) {
  std::vector<std::vector<NondegCell>> cells(3);
  cells[0].push_back({"*", {}});
  cells[1].push_back({"x", {"*", "*"}});
  cells[2].push_back({"tau", {"x", degenerate_id({0}, "*"), "x"}});
  return build_from_nondegenerate(cells, N);
}

SimplicialSet build_wedge_circles(int N) {
  std::vector<std::vector<NondegCell>> cells(2);
  cells[0].push_back({"*", {}});
  cells[1].push_back({"a", {"*", "*"}});
  cells[1].push_back({"b", {"*", "*"}});
  return build_from_nondegenerate(cells, N);
}

SimplicialSet build_boundary_delta2(int N) {
  std::vector<std::vector<NondegCell>> cells(2);
  cells[0].push_back({"0", {}});
  cells[0].push_back({"1", {}});
  cells[0].push_back({"2", {}});
  cells[1].push_back({"01", {"1", "0"}});
  cells[1].push_back({"02", {"2", "0"}});
  cells[1].push_back({"12", {"2", "1"}});
  return build_from_nondegenerate(cells, N);
}

}  // namespace deca
