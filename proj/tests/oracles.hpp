#pragma once

// Brute-force reference implementations, deliberately naive and independent of
// the library's enumeration and search machinery. Used to cross-check results;
// correctness over speed throughout.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "delone/cluster.hpp"
#include "delone/enumerate.hpp"
#include "delone/gram_auto.hpp"
#include "delone/periodic_set.hpp"

namespace oracle {

using namespace delone;

// All sites within sq-distance rho_sq of point c (lattice coordinates), found
// by scanning an explicit integer box. The box bound comes from the inverse
// form: x^T G x <= s implies x_i^2 <= s * (G^-1)_ii.
inline std::vector<BallSite> ball_sites_box(const PeriodicSet& x, const RVec& c,
                                            const Rat& rho_sq) {
    int d = x.dim();
    std::vector<long> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        Rat w = rho_sq * x.gram.inv[i][i];
        long h = ceil_int(sqrt_ub(w)).get_si();
        // z must satisfy |motif_i + z_i - c_i| <= h with motif_i in [0,1)
        lo[i] = floor_int(c[i]).get_si() - h - 1;
        hi[i] = ceil_int(c[i]).get_si() + h;
    }
    std::vector<BallSite> out;
    std::vector<long long> z(d, 0);
    for (int j = 0; j < x.motif_size(); ++j) {
        // odometer over the box
        std::vector<long> cur(d);
        for (int i = 0; i < d; ++i) cur[i] = lo[i];
        while (true) {
            RVec diff(d);
            for (int i = 0; i < d; ++i)
                diff[i] = x.motif[j][i] + Rat(static_cast<long>(cur[i])) - c[i];
            Rat v = form_value(x.gram, diff);
            if (v <= rho_sq) {
                Site s;
                s.motif_index = j;
                s.translation.assign(cur.begin(), cur.end());
                out.push_back(BallSite{s, v});
            }
            int k = 0;
            while (k < d && cur[k] == hi[k]) { cur[k] = lo[k]; ++k; }
            if (k == d) break;
            ++cur[k];
        }
    }
    std::sort(out.begin(), out.end(), [](const BallSite& a, const BallSite& b) {
        if (a.sq_dist != b.sq_dist) return a.sq_dist < b.sq_dist;
        return site_less(a.site, b.site);
    });
    return out;
}

// Order of the group of permutations of pts fixing pts[0] and preserving all
// pairwise sq-distances. pts are absolute positions in lattice coordinates;
// every such permutation is realized by an ambient isometry (rigid extension),
// so this equals the cluster's permutation group order.
inline long perm_isometry_order(const GramMatrix& gm, const std::vector<RVec>& pts) {
    int n = static_cast<int>(pts.size());
    std::vector<std::vector<Rat>> dd(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dd[i][j] = form_value(gm, rvec_sub(pts[i], pts[j]));
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    img[0] = 0;
    used[0] = 1;
    long count = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) { ++count; return; }
        for (int j = 1; j < n; ++j) {
            if (used[j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k)
                if (img[k] >= 0 && dd[i][k] != dd[j][img[k]]) ok = false;
            if (!ok) continue;
            img[i] = j;
            used[j] = 1;
            self(self, i + 1);
            used[j] = 0;
            img[i] = -1;
        }
    };
    rec(rec, 1);
    return count;
}

// Whether some distance-preserving bijection a -> b exists that maps a[0] to
// b[0]; the brute-force counterpart of cluster congruence.
inline bool perm_bijection_exists(const GramMatrix& gm, const std::vector<RVec>& a,
                                  const std::vector<RVec>& b) {
    if (a.size() != b.size()) return false;
    int n = static_cast<int>(a.size());
    std::vector<std::vector<Rat>> da(n, std::vector<Rat>(n)), db(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            da[i][j] = form_value(gm, rvec_sub(a[i], a[j]));
            db[i][j] = form_value(gm, rvec_sub(b[i], b[j]));
        }
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    img[0] = 0;
    used[0] = 1;
    bool found = false;
    auto rec = [&](auto&& self, int i) -> void {
        if (found) return;
        if (i == n) { found = true; return; }
        for (int j = 1; j < n; ++j) {
            if (used[j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k)
                if (img[k] >= 0 && da[i][k] != db[j][img[k]]) ok = false;
            if (!ok) continue;
            img[i] = j;
            used[j] = 1;
            self(self, i + 1);
            used[j] = 0;
            img[i] = -1;
        }
    };
    rec(rec, 1);
    return found;
}

// Count of integer matrices with entries in [-bound, bound] preserving the
// (scaled, integral) form. Exhaustive over (2*bound+1)^(d*d) candidates.
inline long gram_auto_count_box(const GramMatrix& gm, int bound) {
    int d = gm.d;
    std::vector<std::vector<long>> s(d, std::vector<long>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s[i][j] = gm.scaled[i][j].get_si();
    int cells = d * d;
    std::vector<int> e(cells, -bound);
    long count = 0;
    std::vector<std::vector<long>> u(d, std::vector<long>(d));
    while (true) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) u[i][j] = e[i * d + j];
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
            for (int j = i; j < d && ok; ++j) {
                long acc = 0;  // (U^T S U)_ij = sum_{p,q} U_pi S_pq U_qj
                for (int p = 0; p < d; ++p)
                    for (int q = 0; q < d; ++q) acc += u[p][i] * s[p][q] * u[q][j];
                if (acc != s[i][j]) ok = false;
            }
        if (ok) ++count;
        int k = 0;
        while (k < cells && e[k] == bound) { e[k] = -bound; ++k; }
        if (k == cells) break;
        ++e[k];
    }
    return count;
}

// Max over the grid {0, 1/q, ..., (q-1)/q}^d of the distance to the nearest
// site, nearest found by brute box scan under the cap. A lower bound for the
// covering radius; exact whenever the grid hits a deep hole. When the set is
// invariant under coordinate permutations, sorted_coords_only restricts the
// scan to one representative per permutation orbit.
inline Rat deep_hole_grid(const PeriodicSet& x, int q, const Rat& cap,
                          bool sorted_coords_only = false) {
    int d = x.dim();
    Rat best(0);
    std::vector<int> g(d, 0);
    while (true) {
        bool sorted_ok = true;
        for (int i = 1; i < d && sorted_ok; ++i) sorted_ok = g[i - 1] >= g[i];
        if (!sorted_coords_only || sorted_ok) {
            RVec p(d);
            for (int i = 0; i < d; ++i)
                p[i] = rat(static_cast<long>(g[i]), static_cast<long>(q));
            auto near = ball_sites_box(x, p, cap);
            if (!near.empty() && near.front().sq_dist > best) best = near.front().sq_dist;
        }
        int k = 0;
        while (k < d && g[k] == q - 1) { g[k] = 0; ++k; }
        if (k == d) break;
        ++g[k];
    }
    return best;
}

// Breadth-first k-step reachability over explicitly enumerated neighbors.
inline std::vector<Site> reach_bfs_box(const PeriodicSet& x, int motif_index,
                                       const Rat& t_sq, int k) {
    using Key = std::pair<int, std::vector<long long>>;
    auto key = [](const Site& s) { return Key{s.motif_index, s.translation}; };
    Site start = x.origin(motif_index);
    std::set<Key> seen{key(start)};
    std::vector<Site> frontier{start}, all{start};
    for (int step = 0; step < k; ++step) {
        std::vector<Site> next;
        for (const auto& s : frontier) {
            for (const auto& bs : ball_sites_box(x, x.position(s), t_sq)) {
                if (bs.site == s) continue;
                if (seen.insert(key(bs.site)).second) {
                    next.push_back(bs.site);
                    all.push_back(bs.site);
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::sort(all.begin(), all.end(), site_less);
    return all;
}

inline std::vector<RVec> cluster_points(const PeriodicSet& x, const Cluster& c) {
    std::vector<RVec> pts;
    pts.reserve(c.members.size());
    for (const auto& m : c.members) pts.push_back(x.position(m.site));
    return pts;
}

}  // namespace oracle
