#pragma once

#include <vector>

#include "delone/periodic_set.hpp"

namespace delone {

// One cell of the periodic Delaunay subdivision whose circumball was certified
// to stay inside the enumeration window, so it is an empty ball of the infinite
// set, not just of the finite sample.
struct DelaunayCell {
  std::vector<Site> vertices;
  RVec circumcenter;  // lattice coordinates
  Rat circumradius_sq;
};

struct PeriodicDelaunayResult {
  // Certified cells with circumcenter inside the closed unit cell; the deepest
  // hole of the set is one of these circumcenters.
  std::vector<DelaunayCell> fundamental_cells;
  Rat covering_radius_sq;
  int padding = 0;
};

// Exact rational Bowyer-Watson over a padded window, integer determinant
// predicates with index-ordered tie perturbation. Dimensions above 4 throw
// unsupported_dimension_error; supply a declared covering radius there.
PeriodicDelaunayResult periodic_delaunay(const PeriodicSet& x);

}  // namespace delone
