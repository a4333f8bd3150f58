#include "delone/regularity.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "delone/enumerate.hpp"
#include "delone/gram_auto.hpp"
#include "delone/reachability.hpp"

namespace delone {

namespace {

RVec frac_vec(RVec v) {
    for (auto& c : v) c -= Rat(floor_int(c));
    return v;
}

RVec imat_apply_r(const IMat& u, const RVec& v) {
    const int d = static_cast<int>(v.size());
    RVec out(d, Rat(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (sgn(u[i][j]) != 0) out[i] += Rat(u[i][j]) * v[j];
    return out;
}

// Congruence classes among motif clusters at one radius; returns the count and
// optionally one representative motif index per class.
int class_count(const PeriodicSet& x, const SurdRadius& radius,
                std::vector<int>* reps_out) {
    std::vector<Cluster> reps;
    std::vector<int> rep_idx;
    for (int i = 0; i < x.motif_size(); ++i) {
        Cluster c = get_cluster(x, i, radius);
        bool matched = false;
        for (std::size_t j = 0; j < reps.size() && !matched; ++j)
            matched = clusters_equivalent(x, reps[j], c).equivalent;
        if (!matched) {
            reps.push_back(std::move(c));
            rep_idx.push_back(i);
        }
    }
    if (reps_out) *reps_out = rep_idx;
    return static_cast<int>(reps.size());
}

// (sqrt(b) + sqrt(fourR))^2 = b + fourR + 2*sqrt(b*fourR) as a normalized surd.
SurdRadius grown_radius_sq(const Rat& b, const Rat& fourR) {
    if (sgn(b) == 0) return surd_radius(fourR);
    Rat prod = b * fourR;
    Int num = prod.get_num(), den = prod.get_den();
    return make_surd(b + fourR, rat(Int(2), den), num * den);
}

std::string join(const std::vector<std::string>& parts) {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out + "]";
}

std::string approx_str(const Rat& lo, const Rat& hi) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "~%.6g", rat_double((lo + hi) / 2));
    return buf;
}

Rat dyadic_round(const Rat& x, unsigned bits, bool up) {
    Int num = x.get_num() * (Int(1) << bits);
    Int den = x.get_den();
    Int q;
    if (up)
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return rat(q, Int(1) << bits);
}

Rat log2_bound(const Rat& x, int frac_bits, bool upper) {
    Rat v = x;
    long e = 0;
    while (v >= 2) {
        v /= 2;
        ++e;
    }
    while (v < 1) {
        v *= 2;
        --e;
    }
    Rat acc(e);
    Rat w(1, 2);
    for (int i = 0; i < frac_bits; ++i) {
        v = dyadic_round(v * v, 192, upper);
        if (v >= 2) {
            acc += w;
            v /= 2;
        }
        w /= 2;
    }
    // The discarded tail log2(v)/2^frac_bits lies in [0, 2); round it whole-sale.
    if (upper) acc += Rat(Int(2), Int(1) << frac_bits);
    return acc;
}

struct LocalCore {
    RegularityVerdict v;
    std::optional<Rat> rho0_sq;
    std::optional<SurdRadius> tau_sq;
};

LocalCore local_core(const PeriodicSet& x, const Rat& rho_sq_max) {
    LocalCore out;
    out.v.method = Method::LOCAL_CRITERION;
    out.v.verdict = Verdict::INCONCLUSIVE;
    auto& cert = out.v.certificate;

    MetricParameters mp = metric_parameters(x);
    ReducedSet red = reduce_translations(x);
    const PeriodicSet& y = red.set;
    const int d = y.dim();
    cert["R_sq"] = rat_str(mp.R_sq);
    cert["R_exact"] = mp.R_exact ? "true" : "false";
    cert["rho_sq_cap"] = rat_str(rho_sq_max);
    if (red.index != 1) cert["translation_reduction_index"] = red.index.get_str();

    const Rat fourR = 4 * mp.R_sq;
    std::vector<Rat> candidates;
    candidates.push_back(Rat(0));
    for (const Rat& b : breakpoints(y, rho_sq_max)) candidates.push_back(b);

    int tested = 0, skipped = 0;
    for (const Rat& b : candidates) {
        Cluster c0 = get_cluster(y, 0, b);
        if (cluster_rank(y, c0) < d - 1) {
            ++skipped;
            continue;
        }
        ++tested;
        SurdRadius tau = grown_radius_sq(b, fourR);
        if (y.motif_size() > 1 && class_count(y, tau, nullptr) != 1) continue;
        ClusterGroup g0 = cluster_group(y, c0);
        ClusterGroup gt = cluster_group(y, get_cluster(y, 0, tau));
        if (!g0.euclidean_finite || !gt.euclidean_finite) continue;
        if (g0.euclidean_order != gt.euclidean_order) continue;
        out.v.verdict = Verdict::REGULAR;
        cert["rho0_sq"] = rat_str(b);
        cert["tau_sq"] = surd_str(tau);
        cert["stable_order"] = g0.euclidean_order.get_str();
        out.rho0_sq = b;
        out.tau_sq = tau;
        return out;
    }
    cert["candidates_tested"] = std::to_string(tested);
    cert["candidates_skipped_low_rank"] = std::to_string(skipped);
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

std::string render_symmetry(const IMat& u, const RVec& t) {
    std::string out = "U=[";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (std::size_t j = 0; j < u[i].size(); ++j) {
            if (j) out += ",";
            out += u[i][j].get_str();
        }
        out += "]";
    }
    out += "] t=(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += rat_str(t[i]);
    }
    return out + ")";
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::TOWER: return "TOWER";
        case Method::LOCAL_CRITERION: return "LOCAL_CRITERION";
        default: return "ORACLE";
    }
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::REGULAR: return "REGULAR";
        case Verdict::NOT_REGULAR: return "NOT_REGULAR";
        default: return "INCONCLUSIVE";
    }
}

void log2_interval(const Rat& x, int frac_bits, Rat& lo, Rat& hi) {
    if (sgn(x) <= 0) throw std::invalid_argument("log2_interval: argument must be positive");
    lo = log2_bound(x, frac_bits, false);
    hi = log2_bound(x, frac_bits, true);
}

ReducedSet reduce_translations(const PeriodicSet& x) {
    const int d = x.dim();
    const int m = x.motif_size();
    ReducedSet out{x, rmat_identity(d), std::vector<int>(m), Int(1)};
    std::iota(out.motif_map.begin(), out.motif_map.end(), 0);
    if (m == 1) return out;

    std::map<RVec, int> where;
    for (int i = 0; i < m; ++i) where[x.motif[i]] = i;

    std::vector<RVec> valid;
    for (int j = 1; j < m; ++j) {
        RVec v = frac_vec(rvec_sub(x.motif[j], x.motif[0]));
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = where.count(frac_vec(rvec_add(x.motif[i], v))) > 0;
        if (ok) valid.push_back(v);
    }
    if (valid.empty()) return out;

    Int q(1);
    for (const RVec& v : valid)
        for (const Rat& c : v) {
            Int den = c.get_den();
            mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
        }

    const int nv = static_cast<int>(valid.size());
    IMat cols(d, IVec(d + nv, Int(0)));
    for (int i = 0; i < d; ++i) cols[i][i] = q;
    for (int k = 0; k < nv; ++k)
        for (int i = 0; i < d; ++i) {
            Rat scaled = valid[k][i] * Rat(q);
            if (scaled.get_den() != 1) throw std::logic_error("translation lattice scaling failed");
            cols[i][d + k] = scaled.get_num();
        }
    IMat h = hnf_basis(cols);
    if (static_cast<int>(h[0].size()) != d)
        throw std::logic_error("translation lattice is not full rank");

    RMat basis(d, RVec(d, Rat(0)));
    Int hdet(1);
    for (int i = 0; i < d; ++i) {
        hdet *= h[i][i];
        for (int j = 0; j < d; ++j) basis[i][j] = rat(h[i][j], q);
    }
    RMat binv = inverse(basis);

    std::vector<RVec> nm;
    std::map<RVec, int> nwhere;
    std::vector<int> raw(m);
    for (int i = 0; i < m; ++i) {
        RVec yv = frac_vec(rmat_apply(binv, x.motif[i]));
        auto it = nwhere.find(yv);
        if (it == nwhere.end()) {
            nwhere[yv] = static_cast<int>(nm.size());
            raw[i] = static_cast<int>(nm.size());
            nm.push_back(yv);
        } else {
            raw[i] = it->second;
        }
    }

    // Canonical order for the new motif, then remap the index translation.
    std::vector<int> order(nm.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return nm[a] < nm[b]; });
    std::vector<int> pos(nm.size());
    std::vector<RVec> sorted_motif(nm.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        pos[order[r]] = static_cast<int>(r);
        sorted_motif[r] = nm[order[r]];
    }
    for (int i = 0; i < m; ++i) out.motif_map[i] = pos[raw[i]];

    if (m % nm.size() != 0) throw std::logic_error("motif did not collapse evenly");
    Int index(static_cast<long>(m / nm.size()));
    Int qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
    if (hdet * index != qd) throw std::logic_error("translation lattice index mismatch");

    GramMatrix g2(rmat_mul(rmat_transpose(basis), rmat_mul(x.gram.g, basis)));
    out.set = PeriodicSet(std::move(g2), std::move(sorted_motif), x.declared_R_sq);
    out.basis = basis;
    out.index = index;
    return out;
}

NRhoReport n_rho(const PeriodicSet& x, const Rat& rho_sq) {
    if (sgn(rho_sq) < 0) throw std::invalid_argument("n_rho: negative squared radius");
    NRhoReport rep;
    rep.rho_sq = rho_sq;
    rep.class_count = class_count(x, surd_radius(rho_sq), &rep.class_representatives);
    return rep;
}

std::vector<Rat> breakpoints(const PeriodicSet& x, const Rat& rho_sq_max) {
    return distance_breakpoints(x, rho_sq_max);
}

RegularityVerdict tower_check(const PeriodicSet& x) {
    RegularityVerdict v;
    v.method = Method::TOWER;
    v.verdict = Verdict::INCONCLUSIVE;
    auto& cert = v.certificate;

    MetricParameters mp = metric_parameters(x);
    ReducedSet red = reduce_translations(x);
    const PeriodicSet& y = red.set;
    const int d = y.dim();
    cert["R_sq"] = rat_str(mp.R_sq);
    cert["R_exact"] = mp.R_exact ? "true" : "false";
    if (red.index != 1) cert["translation_reduction_index"] = red.index.get_str();

    const Rat fourR = 4 * mp.R_sq;
    cert["radius_2R_sq"] = rat_str(fourR);
    int n2 = class_count(y, surd_radius(fourR), nullptr);
    cert["classes_at_2R"] = std::to_string(n2);
    if (n2 != 1) {
        cert["failed_stage"] = "2R-isometric";
        return v;
    }

    Cluster c2 = get_cluster(y, 0, fourR);
    if (cluster_rank(y, c2) < d)
        throw inconsistent_parameters_error(
            "cluster at 2R is rank-deficient; the covering radius parameter cannot be right");
    ClusterGroup g2 = cluster_group(y, c2);
    cert["order_2R"] = g2.euclidean_order.get_str();
    const int om = *g2.omega;
    cert["omega_2R"] = std::to_string(om);

    Rat tower_sq = Rat(4L * (om + 2) * (om + 2)) * mp.R_sq;  // (2(omega+2)R)^2
    cert["tower_radius_sq"] = rat_str(tower_sq);
    int nt = (y.motif_size() == 1) ? 1 : class_count(y, surd_radius(tower_sq), nullptr);
    cert["classes_at_tower_radius"] = std::to_string(nt);
    if (nt != 1) {
        cert["failed_stage"] = "tower-radius-isometric";
        return v;
    }
    v.verdict = Verdict::REGULAR;
    return v;
}

RegularityVerdict local_criterion_scan(const PeriodicSet& x, const Rat& rho_sq_max) {
    return local_core(x, rho_sq_max).v;
}

RegularityVerdict oracle_is_regular(const PeriodicSet& x) {
    RegularityVerdict v;
    v.method = Method::ORACLE;
    auto& cert = v.certificate;

    ReducedSet red = reduce_translations(x);
    const PeriodicSet& y = red.set;
    const int m = y.motif_size();
    cert["motif_classes_after_reduction"] = std::to_string(m);
    if (red.index != 1) cert["translation_reduction_index"] = red.index.get_str();
    if (m == 1) {
        v.verdict = Verdict::REGULAR;
        cert["transitive_by"] = "lattice translations";
        return v;
    }

    GramAutoGroup aut = gram_automorphisms(y.gram);
    cert["point_group_candidates"] = aut.order.get_str();

    std::map<RVec, int> where;
    for (int i = 0; i < m; ++i) where[y.motif[i]] = i;

    UnionFind uf(m);
    std::vector<std::string> gens;
    for (const IMat& u : aut.elements) {
        RVec u0 = frac_vec(imat_apply_r(u, y.motif[0]));
        for (int j = 0; j < m; ++j) {
            RVec t = frac_vec(rvec_sub(y.motif[j], u0));
            std::vector<int> sigma(m, -1);
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                RVec img = frac_vec(rvec_add(imat_apply_r(u, y.motif[i]), t));
                auto it = where.find(img);
                if (it == where.end())
                    ok = false;
                else
                    sigma[i] = it->second;
            }
            if (!ok) continue;
            bool merged = false;
            for (int i = 0; i < m; ++i) merged |= uf.unite(i, sigma[i]);
            if (merged) gens.push_back(render_symmetry(u, t));
        }
    }

    std::map<int, std::vector<int>> orbits;  // over input motif indices
    for (std::size_t i = 0; i < red.motif_map.size(); ++i)
        orbits[uf.find(red.motif_map[i])].push_back(static_cast<int>(i));
    cert["orbit_count"] = std::to_string(orbits.size());
    if (orbits.size() == 1) {
        v.verdict = Verdict::REGULAR;
        std::string g;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) g += " ; ";
            g += gens[i];
        }
        cert["transitive_by"] = g.empty() ? "lattice translations" : g;
    } else {
        v.verdict = Verdict::NOT_REGULAR;
        std::string parts;
        for (const auto& [root, members] : orbits) {
            parts += "{";
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (i) parts += ",";
                parts += std::to_string(members[i]);
            }
            parts += "}";
        }
        cert["separating_invariant"] = "motif orbit partition " + parts;
    }
    return v;
}

DropReport drop_sequence(const PeriodicSet& x, int K) {
    if (K < 1) throw std::invalid_argument("drop_sequence: K must be at least 1");
    RegularityVerdict orc = oracle_is_regular(x);
    if (orc.verdict != Verdict::REGULAR)
        throw std::domain_error("drop sequence is defined for regular systems only");

    MetricParameters mp = metric_parameters(x);
    ReducedSet red = reduce_translations(x);
    const PeriodicSet& y = red.set;
    DropReport rep;
    rep.R_sq = mp.R_sq;
    Int prev(0);
    for (int k = 1; k <= K; ++k) {
        Rat radius = Rat(4L * k * k) * mp.R_sq;
        ClusterGroup g = cluster_group(y, get_cluster(y, 0, radius));
        if (!g.euclidean_finite)
            throw inconsistent_parameters_error(
                "cluster group infinite at a multiple of 2R; covering radius parameter wrong");
        rep.orders.push_back(g.euclidean_order);
        if (k > 1) {
            if (prev % g.euclidean_order != 0)
                throw std::logic_error("drop orders do not form a divisibility chain");
            if (g.euclidean_order < prev) ++rep.drop_count;
        }
        prev = g.euclidean_order;
    }
    return rep;
}

BoundsReport bounds_report(const PeriodicSet& x) {
    BoundsReport rep;
    MetricParameters mp = metric_parameters(x);
    ReducedSet red = reduce_translations(x);
    const PeriodicSet& y = red.set;
    const int d = y.dim();
    const Rat fourR = 4 * mp.R_sq;
    const Rat r_sq = mp.two_r_sq / 4;

    // Radius bound: 2R(d^2+1)log2(2R/r+2), compared against the certified
    // local radius rho0+2R when one exists. Certified interval arithmetic.
    {
        BoundCheck c;
        c.name = "dls_bound";
        c.values["formula"] = "2R(d^2+1)log2(2R/r+2)";
        Rat w = fourR / r_sq;  // (2R/r)^2
        Rat w_lo, w_hi;
        sqrt_interval(w, 96, w_lo, w_hi);
        Rat l_lo = log2_bound(w_lo + 2, 48, false);
        Rat l_hi = log2_bound(w_hi + 2, 48, true);
        Rat s2R_lo, s2R_hi;
        sqrt_interval(fourR, 96, s2R_lo, s2R_hi);
        Rat dd(static_cast<long>(d) * d + 1);
        Rat rhs_lo = dd * s2R_lo * l_lo;
        Rat rhs_hi = dd * s2R_hi * l_hi;
        c.values["bound_approx"] = approx_str(rhs_lo, rhs_hi);

        LocalCore lc = local_core(x, 16 * mp.R_sq);
        if (lc.v.verdict == Verdict::REGULAR) {
            const Rat& b = *lc.rho0_sq;
            Rat b_lo(0), b_hi(0);
            if (sgn(b) > 0) sqrt_interval(b, 96, b_lo, b_hi);
            Rat tau_lo = b_lo + s2R_lo, tau_hi = b_hi + s2R_hi;
            c.values["certified_rho0_sq"] = rat_str(b);
            c.values["certified_radius_approx"] = approx_str(tau_lo, tau_hi);
            if (tau_hi <= rhs_lo)
                c.status = "PASS";
            else if (tau_lo > rhs_hi)
                c.status = "FAIL";
            else
                c.status = "NON_CERTIFIED";
        } else {
            c.status = "NOT_APPLICABLE";
            c.values["note"] = "no certified local radius within the scan cap";
        }
        rep.checks.push_back(std::move(c));
    }

    // Order bound: omega(|G|)+1 <= log2(2|G|) for each finite cluster group at
    // 2R; the comparison is the exact integer test 2^omega <= |G|.
    {
        BoundCheck c;
        c.name = "omega_bound";
        c.values["radius_sq"] = rat_str(fourR);
        std::vector<std::string> orders, lhs, rhs;
        bool all_pass = true, any = false;
        for (int i = 0; i < y.motif_size(); ++i) {
            ClusterGroup g = cluster_group(y, get_cluster(y, i, fourR));
            if (!g.euclidean_finite) continue;
            any = true;
            const Int& o = g.euclidean_order;
            int om = *g.omega;
            orders.push_back(o.get_str());
            lhs.push_back(std::to_string(om + 1));
            Rat lo, hi;
            log2_interval(Rat(2 * o), 40, lo, hi);
            rhs.push_back(approx_str(lo, hi));
            if (!((Int(1) << om) <= o)) all_pass = false;
        }
        c.values["orders"] = join(orders);
        c.values["omega_plus_one"] = join(lhs);
        c.values["log2_double_order"] = join(rhs);
        c.status = any ? (all_pass ? "PASS" : "FAIL") : "NOT_APPLICABLE";
        rep.checks.push_back(std::move(c));
    }

    // Shell order chain: |S(2R)| <= |S(2r)| <= product of kissing numbers,
    // gated on a full-dimensional one-step neighborhood and proven dimensions.
    {
        BoundCheck c;
        c.name = "prop31_bound";
        if (d > 4) {
            c.status = "NON_CERTIFIED";
            c.values["note"] = "kissing numbers are unproven in this dimension";
        } else {
            static const long kiss[5] = {0, 2, 6, 12, 24};
            Int prod(1);
            for (int i = 1; i <= d; ++i) prod *= kiss[i];
            bool gate = true, pass = true;
            std::vector<std::string> o2R_s, o2r_s;
            for (int i = 0; i < y.motif_size() && gate; ++i) {
                Cluster c2r = get_cluster(y, i, mp.two_r_sq);
                if (cluster_rank(y, c2r) < d) {
                    gate = false;
                    break;
                }
                ClusterGroup g2r = cluster_group(y, c2r);
                ClusterGroup g2R = cluster_group(y, get_cluster(y, i, fourR));
                o2r_s.push_back(g2r.euclidean_order.get_str());
                o2R_s.push_back(g2R.euclidean_order.get_str());
                pass = pass && g2R.euclidean_order <= g2r.euclidean_order &&
                       g2r.euclidean_order <= prod;
            }
            if (!gate) {
                c.status = "NOT_APPLICABLE";
                c.values["note"] = "one-step neighborhood is not full-dimensional";
            } else {
                c.values["orders_2R"] = join(o2R_s);
                c.values["orders_2r"] = join(o2r_s);
                c.values["kissing_product"] = prod.get_str();
                c.status = pass ? "PASS" : "FAIL";
            }
        }
        rep.checks.push_back(std::move(c));
    }

    // Packing bound on d-step reach counts: mu <= (2d+1)^d at t = 2r.
    {
        BoundCheck c;
        c.name = "mu_bound";
        c.values["t_sq"] = rat_str(mp.two_r_sq);
        Int limit;
        mpz_ui_pow_ui(limit.get_mpz_t(), static_cast<unsigned long>(2 * d + 1),
                      static_cast<unsigned long>(d));
        std::vector<std::string> counts;
        bool pass = true;
        for (int i = 0; i < x.motif_size(); ++i) {
            ReachableSet rs = reachable_set(x, i, mp.two_r_sq, d);
            Int mu(static_cast<long>(rs.sites.size()));
            counts.push_back(mu.get_str());
            if (mu > limit) pass = false;
        }
        c.values["mu_per_motif"] = join(counts);
        c.values["limit"] = limit.get_str();
        c.status = pass ? "PASS" : "FAIL";
        rep.checks.push_back(std::move(c));
    }

    {
        BoundCheck c;
        c.name = "kissing_table_used";
        c.status = "INFO";
        c.values["tau_1_to_4"] = "[2, 6, 12, 24]";
        c.values["source"] = "literature constants, proven in dimensions 1-4";
        if (d > 4) c.values["note"] = "not applied: dimension exceeds the proven table";
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

}  // namespace delone
