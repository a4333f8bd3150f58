#pragma once

// Randomized property suites with fixed seeds. Each suite returns a summary so
// both the unit tests and the acceptance harness can run them and report.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "delone/catalog.hpp"
#include "delone/cluster.hpp"
#include "delone/metrics.hpp"
#include "delone/reachability.hpp"
#include "delone/regularity.hpp"
#include "oracles.hpp"

namespace suites {

using namespace delone;

struct SuiteResult {
    bool ok = true;
    long cases = 0;
    std::string detail;  // first failure description

    void fail(const std::string& msg) {
        if (ok) detail = msg;
        ok = false;
    }
};

// Random small positive definite form with motif, for enumeration fuzzing.
inline PeriodicSet random_set(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim_pick(1, 3), entry(-2, 2), msize(1, 3),
        coord(0, 3);
    int d = dim_pick(rng);
    RMat a;
    Rat dt(0);
    do {
        a.assign(d, RVec(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a[i][j] = Rat(static_cast<long>(entry(rng)));
        dt = det(a);
    } while (dt == 0);
    RMat g(d, RVec(d, Rat(0)));  // g = a^T a, positive definite
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) g[i][j] += a[k][i] * a[k][j];
    int m = msize(rng);
    std::vector<RVec> motif;
    for (int t = 0; t < m; ++t) {
        RVec p(d);
        for (int i = 0; i < d; ++i) p[i] = rat(static_cast<long>(coord(rng)), 4);
        bool dup = false;
        for (const auto& q : motif) dup = dup || q == p;
        if (!dup) motif.push_back(p);
    }
    return PeriodicSet(GramMatrix(g), motif);
}

// Ball enumeration against the brute box scan: same sites, same distances.
inline SuiteResult suite_enumeration_vs_box(int instances, unsigned long long seed) {
    SuiteResult r;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> rad_num(1, 24), center_coord(0, 3);
    for (int it = 0; it < instances; ++it) {
        PeriodicSet x = random_set(rng);
        Rat rho_sq = rat(static_cast<long>(rad_num(rng)), 4);
        RVec c(x.dim());
        for (int i = 0; i < x.dim(); ++i)
            c[i] = rat(static_cast<long>(center_coord(rng)), 4);
        auto got = enumerate_near_point(x, c, rho_sq);
        auto want = oracle::ball_sites_box(x, c, rho_sq);
        ++r.cases;
        if (got.size() != want.size()) {
            std::ostringstream os;
            os << "instance " << it << ": enumeration found " << got.size()
               << " sites, box scan found " << want.size();
            r.fail(os.str());
            continue;
        }
        for (size_t i = 0; i < got.size(); ++i)
            if (got[i].site != want[i].site || got[i].sq_dist != want[i].sq_dist) {
                std::ostringstream os;
                os << "instance " << it << ": mismatch at entry " << i;
                r.fail(os.str());
                break;
            }
    }
    return r;
}

// Pool of clusters from the catalog, grouped so equivalence comparisons stay
// within one (set, radius) pair.
struct ClusterPool {
    std::vector<PeriodicSet> sets;
    std::vector<std::vector<std::vector<Cluster>>> groups;  // [set][radius][motif]
};

inline ClusterPool build_cluster_pool() {
    ClusterPool pool;
    for (const char* name : {"z1", "z2", "z3", "hexagonal", "d3_plus", "d4_plus",
                             "two_orbit", "layered_3_3", "p2_orbit", "p4m_orbit"}) {
        pool.sets.push_back(catalog_make(name));
    }
    for (const auto& x : pool.sets) {
        Rat cap = Rat(6) * shortest_nonzero_sq_dist(x);
        auto bps = distance_breakpoints(x, cap);
        if (bps.size() > 2) bps.resize(2);
        std::vector<std::vector<Cluster>> per_radius;
        for (const auto& b : bps) {
            std::vector<Cluster> cl;
            for (int i = 0; i < x.motif_size(); ++i) cl.push_back(get_cluster(x, i, b));
            per_radius.push_back(std::move(cl));
        }
        pool.groups.push_back(std::move(per_radius));
    }
    return pool;
}

// Congruence is an equivalence relation: reflexive, symmetric, and transitive
// on every sampled triple.
inline SuiteResult suite_equivalence_axioms(int triples, unsigned long long seed) {
    SuiteResult r;
    ClusterPool pool = build_cluster_pool();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> set_pick(0, pool.sets.size() - 1);
    while (r.cases < triples) {
        size_t si = set_pick(rng);
        const PeriodicSet& x = pool.sets[si];
        if (pool.groups[si].empty()) continue;
        std::uniform_int_distribution<size_t> rad_pick(0, pool.groups[si].size() - 1);
        const auto& clusters = pool.groups[si][rad_pick(rng)];
        std::uniform_int_distribution<size_t> cl_pick(0, clusters.size() - 1);
        const Cluster& a = clusters[cl_pick(rng)];
        const Cluster& b = clusters[cl_pick(rng)];
        const Cluster& c = clusters[cl_pick(rng)];
        ++r.cases;
        bool ab = clusters_equivalent(x, a, b).equivalent;
        bool ba = clusters_equivalent(x, b, a).equivalent;
        bool bc = clusters_equivalent(x, b, c).equivalent;
        bool ac = clusters_equivalent(x, a, c).equivalent;
        if (!clusters_equivalent(x, a, a).equivalent) r.fail("reflexivity violated");
        if (ab != ba) r.fail("symmetry violated");
        if (ab && bc && !ac) r.fail("transitivity violated");
        if (!r.ok) break;
    }
    return r;
}

// The class count never decreases as the radius grows.
inline SuiteResult suite_n_monotone() {
    SuiteResult r;
    for (const auto& e : catalog_entries()) {
        const PeriodicSet& x = e.set;
        Rat cap = Rat(5) * metric_parameters(x).R_sq;
        auto bps = breakpoints(x, cap);
        if (bps.size() > 6) bps.resize(6);
        int prev = 1;
        for (const auto& b : bps) {
            int n = n_rho(x, b).class_count;
            ++r.cases;
            if (n < prev) r.fail(e.name + ": class count dropped along growing radius");
            prev = n;
        }
    }
    return r;
}

// Past 2R the cluster group can only shrink to a subgroup: each order divides
// the previous one along the breakpoint chain.
inline SuiteResult suite_order_divisibility() {
    SuiteResult r;
    for (const char* name : {"z1", "z2", "z3", "z4", "hexagonal", "d3_plus", "d4_plus",
                             "p1_orbit", "p2_orbit", "p4_orbit", "p4m_orbit", "p6_orbit"}) {
        PeriodicSet x = catalog_make(name);
        Rat four_R_sq = Rat(4) * metric_parameters(x).R_sq;
        auto bps = breakpoints(x, Rat(9, 4) * four_R_sq);
        std::vector<Rat> radii;
        for (const auto& b : bps)
            if (b >= four_R_sq) radii.push_back(b);
        if (radii.size() > 4) radii.resize(4);
        Int prev(0);
        for (const auto& rho : radii) {
            ClusterGroup g = cluster_group(x, get_cluster(x, 0, rho));
            ++r.cases;
            if (!g.euclidean_finite) {
                r.fail(std::string(name) + ": infinite group past 2R");
                break;
            }
            if (prev != 0 && prev % g.euclidean_order != 0) {
                r.fail(std::string(name) + ": order does not divide the previous one");
                break;
            }
            prev = g.euclidean_order;
        }
        if (!r.ok) break;
    }
    return r;
}

// Library cluster groups against the exhaustive permutation search on every
// catalog cluster with at most ten members.
inline SuiteResult suite_group_vs_exhaustive() {
    SuiteResult r;
    ClusterPool pool = build_cluster_pool();
    for (size_t si = 0; si < pool.sets.size(); ++si) {
        const PeriodicSet& x = pool.sets[si];
        for (const auto& per_radius : pool.groups[si]) {
            for (const auto& c : per_radius) {
                if (c.members.size() > 10) continue;
                ++r.cases;
                long want = oracle::perm_isometry_order(x.gram, oracle::cluster_points(x, c));
                ClusterGroup g = cluster_group(x, c);
                if (g.perm_order != want) {
                    std::ostringstream os;
                    os << "cluster of " << c.members.size() << " members: library order "
                       << g.perm_order.get_str() << ", exhaustive " << want;
                    r.fail(os.str());
                    return r;
                }
            }
            // congruence verdicts against brute bijection search, pairwise
            for (size_t i = 0; i < per_radius.size(); ++i)
                for (size_t j = i + 1; j < per_radius.size(); ++j) {
                    const Cluster& a = per_radius[i];
                    const Cluster& b = per_radius[j];
                    if (a.members.size() > 10 || b.members.size() > 10) continue;
                    ++r.cases;
                    bool want = oracle::perm_bijection_exists(
                        x.gram, oracle::cluster_points(x, a), oracle::cluster_points(x, b));
                    bool got = clusters_equivalent(x, a, b).equivalent;
                    if (got != want) {
                        r.fail("congruence verdict disagrees with brute bijection search");
                        return r;
                    }
                }
        }
    }
    return r;
}

// Any step length of at least 2R bonds the set.
inline SuiteResult suite_bonded_above_2R() {
    SuiteResult r;
    for (const auto& e : catalog_entries()) {
        Rat four_R_sq = Rat(4) * metric_parameters(e.set).R_sq;
        const Rat steps[] = {four_R_sq, Rat(four_R_sq + 2)};
        for (const Rat& t_sq : steps) {
            ++r.cases;
            if (!is_t_bonded(e.set, t_sq))
                r.fail(e.name + ": not bonded at step >= 2R");
        }
        if (!r.ok) break;
    }
    return r;
}

// Bounded reachability against brute breadth-first search on enumerated sites.
inline SuiteResult suite_reach_vs_bfs() {
    SuiteResult r;
    for (const char* name : {"z1", "z2", "hexagonal", "d3_plus", "two_orbit", "layered_3_3"}) {
        PeriodicSet x = catalog_make(name);
        Rat t_sq = shortest_nonzero_sq_dist(x);
        for (int k : {1, 2}) {
            for (int i = 0; i < x.motif_size(); ++i) {
                ++r.cases;
                auto got = reachable_set(x, i, t_sq, k).sites;
                auto want = oracle::reach_bfs_box(x, i, t_sq, k);
                if (got.size() != want.size()) {
                    r.fail(std::string(name) + ": k-step site count disagrees with BFS");
                    return r;
                }
                for (size_t p = 0; p < got.size(); ++p)
                    if (got[p] != want[p]) {
                        r.fail(std::string(name) + ": k-step site list disagrees with BFS");
                        return r;
                    }
            }
        }
    }
    return r;
}

// The certifying checks never contradict the explicit symmetry construction.
inline SuiteResult suite_oracle_agreement(int orbit_count, unsigned long long seed) {
    SuiteResult r;
    std::vector<std::pair<std::string, PeriodicSet>> pool;
    for (const auto& e : catalog_entries()) pool.emplace_back(e.name, e.set);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> den_pick(5, 12), group_pick(0, 4);
    const char* groups[] = {"p1", "p2", "p4", "p4m", "p6"};
    for (int i = 0; i < orbit_count; ++i) {
        int q = den_pick(rng);
        std::uniform_int_distribution<int> num_pick(0, q - 1);
        RVec s{rat(static_cast<long>(num_pick(rng)), static_cast<long>(q)),
               rat(static_cast<long>(num_pick(rng)), static_cast<long>(q))};
        const char* g = groups[group_pick(rng)];
        pool.emplace_back(std::string(g) + " orbit " + rat_str(s[0]) + "," + rat_str(s[1]),
                          wallpaper_orbit(g, s));
    }
    for (const auto& [name, x] : pool) {
        ++r.cases;
        Verdict oracle_v = oracle_is_regular(x).verdict;
        Verdict tower_v = tower_check(x).verdict;
        Verdict local_v =
            local_criterion_scan(x, Rat(9) * metric_parameters(x).R_sq).verdict;
        if (oracle_v == Verdict::NOT_REGULAR &&
            (tower_v == Verdict::REGULAR || local_v == Verdict::REGULAR)) {
            r.fail(name + ": certifying check contradicts the symmetry construction");
            break;
        }
        if (tower_v == Verdict::NOT_REGULAR || local_v == Verdict::NOT_REGULAR) {
            r.fail(name + ": one-directional check claimed NOT_REGULAR");
            break;
        }
    }
    return r;
}

}  // namespace suites
