#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delone/enumerate.hpp"
#include "delone/periodic_set.hpp"

namespace delone {

// Squared radius of the form s + t*sqrt(disc). Rational radii have t = disc = 0;
// the irrational ones arise as (rho + 2R)^2 when rho^2 R^2 is not a square.
struct SurdRadius {
  Rat s;
  Rat t;
  Int disc;
};

bool operator==(const SurdRadius& a, const SurdRadius& b);
SurdRadius surd_radius(const Rat& sq);
// Normalizes t*sqrt(disc): extracts square factors, folds perfect squares into s.
SurdRadius make_surd(const Rat& s, const Rat& t, const Int& disc);
std::string surd_str(const SurdRadius& r);
// Rational upper bound on the value (exact when rational).
Rat surd_upper(const SurdRadius& r);

// The point's neighborhood: every site within the radius, center included.
struct Cluster {
  Site center;
  SurdRadius radius_sq;
  std::vector<BallSite> members;  // sorted by (distance, motif, translation); [0] is the center
  std::vector<RVec> diffs;        // member position minus center position
};

Cluster get_cluster(const PeriodicSet& x, int motif_index, const Rat& rho_sq);
Cluster get_cluster(const PeriodicSet& x, int motif_index, const SurdRadius& rho_sq);

int cluster_rank(const PeriodicSet& x, const Cluster& c);

// Existence of a center-fixing congruence between two clusters of equal radius.
// Unequal radii are a caller bug and throw.
struct ClusterMatch {
  bool equivalent = false;
  std::vector<int> witness_perm;   // source member index -> target member index
  std::optional<RMat> linear_map;  // present when the clusters span the space
};
ClusterMatch clusters_equivalent(const PeriodicSet& x, const Cluster& a, const Cluster& b);

// Symmetry group of one cluster about its center. perm_* describe the induced
// member permutations; euclidean_order counts ambient center-fixing isometries
// preserving the cluster, finite exactly when the cluster spans at least a
// hyperplane (each hyperplane symmetry extends two ways, full-rank ones one way).
struct ClusterGroup {
  Int perm_order = 1;
  std::vector<std::vector<int>> perm_generators;
  int rank = 0;
  bool euclidean_finite = true;
  Int euclidean_order = 1;   // meaningful only when euclidean_finite
  std::optional<int> omega;  // prime factors of euclidean_order with multiplicity
};
ClusterGroup cluster_group(const PeriodicSet& x, const Cluster& c);

}  // namespace delone
