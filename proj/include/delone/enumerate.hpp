#pragma once

#include <utility>
#include <vector>

#include "delone/periodic_set.hpp"

namespace delone {

// Exact squared distance between two sites.
Rat sq_dist(const PeriodicSet& x, const Site& a, const Site& b);

struct BallSite {
  Site site;
  Rat sq_dist;  // to the ball center
};

// All sites within squared distance rho_sq of `center`, sorted by
// (sq_dist, motif_index, translation). Lattice-reduction enumeration with exact
// rational pruning; requires rho_sq >= 0.
std::vector<BallSite> enumerate_in_ball(const PeriodicSet& x, const Site& center,
                                        const Rat& rho_sq);

// Same, with squared radius s + t*sqrt(D) (the radius sums that arise from
// rho0 + 2R). Enumerates under a rational over-bound, then filters exactly.
std::vector<BallSite> enumerate_in_ball_surd(const PeriodicSet& x, const Site& center,
                                             const Rat& s, const Rat& t, const Rat& D);

std::vector<Site> sites_in_ball(const PeriodicSet& x, const Site& center, const Rat& rho_sq);

// Ball query around an arbitrary point given in lattice coordinates.
std::vector<BallSite> enumerate_near_point(const PeriodicSet& x, const RVec& point,
                                           const Rat& rho_sq);

// Exact squared distance from an arbitrary point to its nearest site.
Rat nearest_site_sq_dist(const PeriodicSet& x, const RVec& point);

// Minimum squared distance between distinct sites; this is (2r)^2.
Rat shortest_nonzero_sq_dist(const PeriodicSet& x);

// Distinct positive squared distances from any motif point to the set, up to
// rho_sq_max inclusive, ascending. These are the radii where clusters can change.
std::vector<Rat> distance_breakpoints(const PeriodicSet& x, const Rat& rho_sq_max);

}  // namespace delone
