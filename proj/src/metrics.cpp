#include "delone/metrics.hpp"

#include <random>

#include "delone/enumerate.hpp"

namespace delone {

Rat packing_radius_sq(const PeriodicSet& x) {
    return shortest_nonzero_sq_dist(x) / 4;
}

Rat covering_radius_sq(const PeriodicSet& x) {
    return periodic_delaunay(x).covering_radius_sq;
}

MetricParameters metric_parameters(const PeriodicSet& x) {
    MetricParameters mp;
    mp.two_r_sq = shortest_nonzero_sq_dist(x);
    if (x.dim() <= 4) {
        mp.R_sq = covering_radius_sq(x);
        mp.R_exact = true;
    } else if (x.declared_R_sq) {
        mp.R_sq = *x.declared_R_sq;
        mp.R_exact = false;
    } else {
        throw unsupported_dimension_error(
            "exact covering radius unavailable for dimension > 4; supply a declared R^2");
    }
    return mp;
}

DeclaredRadiusReport verify_declared_R(const PeriodicSet& x, const Rat& R_sq,
                                       int sample_count, unsigned long long seed) {
    if (R_sq <= 0) throw std::invalid_argument("verify_declared_R: R_sq must be positive");
    DeclaredRadiusReport rep;
    rep.declared_R_sq = R_sq;
    rep.samples = sample_count;
    rep.seed = seed;
    rep.max_observed_sq = 0;

    std::mt19937_64 rng(seed);
    const long denom_bits = 20;
    const Int denom = Int(1) << denom_bits;
    const int d = x.dim();
    for (int s = 0; s < sample_count; ++s) {
        RVec p(d);
        for (int i = 0; i < d; ++i) {
            unsigned long long bits = rng() & ((1ull << denom_bits) - 1);
            p[i] = rat(Int(static_cast<unsigned long>(bits)), denom);
        }
        Rat dist = nearest_site_sq_dist(x, p);
        if (dist > rep.max_observed_sq) rep.max_observed_sq = dist;
    }
    rep.consistent = rep.max_observed_sq <= R_sq;
    return rep;
}

}  // namespace delone
