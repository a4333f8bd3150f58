#pragma once

#include "delone/delaunay.hpp"
#include "delone/periodic_set.hpp"

namespace delone {

// Statistical screening of a user-supplied covering radius: sample points in the
// fundamental cell and measure the exact distance to the nearest site.  A PASS
// is evidence, not proof; a FAIL is a definite refutation.
struct DeclaredRadiusReport {
    Rat declared_R_sq;
    int samples = 0;
    unsigned long long seed = 0;
    Rat max_observed_sq;
    bool consistent = false;
};

// r^2 where 2r is the shortest inter-point distance.
Rat packing_radius_sq(const PeriodicSet& x);

// R^2 as the largest circumradius over the periodic Delaunay cells.
// Exact, but only available for d <= 4; beyond that use a declared radius.
Rat covering_radius_sq(const PeriodicSet& x);

// Bundle r^2 and R^2, preferring the exact covering radius when the dimension
// allows it and falling back to declared_R_sq otherwise.
MetricParameters metric_parameters(const PeriodicSet& x);

DeclaredRadiusReport verify_declared_R(const PeriodicSet& x, const Rat& R_sq,
                                       int sample_count, unsigned long long seed);

}  // namespace delone
