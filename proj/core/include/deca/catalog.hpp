#pragma once

#include <string>
#include <vector>

#include "deca/bisset.hpp"
#include "deca/sgroup.hpp"
#include "deca/sset.hpp"

namespace deca {

// Fixed corpus the verification suites quantify over. Objects are produced by
// named recipes and memoized per process. When the environment variable
// DECA_CATALOG names a directory containing "<name>.json", that file takes
// precedence over the recipe.
//
// Simplicial entries (truncation 9):
//   delta0..delta3    standard simplices
//   bdelta2           boundary of delta2
//   s1, s2            one-vertex circle and sphere
//   s1vs1             wedge of two circles (one vertex, two edges)
//   p2                one vertex, one edge x, one 2-cell with x*x contractible
//   rdelta1, rdelta2  delta1 and delta2 with the vertex skeleton collapsed
//   delta1xdelta1, s1xs1   levelwise products
//
// Group entries: c2, c3 (constant, truncation 4), s3 (constant, truncation 3),
// ehc2 (levelwise powers of C2, truncation 3).
//
// Bisimplicial entries: p1.<s>, p2.<s>, dec.<s> over every simplicial entry;
// ext.delta1.delta1 and ext.s1.s1 (factors cut to truncation 4);
// nerve.<g> over every group entry; dstar.delta1 (bidegrees up to (3,3)).

std::vector<std::string> catalog_sset_names();
std::vector<std::string> catalog_reduced_names();  // the one-vertex entries
std::vector<std::string> catalog_bis_names();
std::vector<std::string> catalog_group_names();

SSetPtr catalog_sset(const std::string& name);
BisPtr catalog_bis(const std::string& name);
const SimplicialGroup& catalog_group(const std::string& name);

// level-size expectations frozen alongside the recipes
struct CatalogExpectation {
  std::string name;
  std::string claim;
  std::string basis;  // "counted" | "computed" | "construction"
  std::vector<int> level_sizes;
};
std::vector<CatalogExpectation> catalog_expectations();

// parametric one-vertex builders behind the CLI
SimplicialSet build_sphere(int dim, int N);  // dim 1 or 2
SimplicialSet build_p2(int N);
SimplicialSet build_wedge_circles(int N);
SimplicialSet build_boundary_delta2(int N);

}  // namespace deca
