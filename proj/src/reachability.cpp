#include "delone/reachability.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "delone/enumerate.hpp"
#include "delone/metrics.hpp"

namespace delone {

namespace {

using Key = std::pair<int, std::vector<long long>>;

std::vector<long long> add_ll(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

// Distinct nonzero integer vectors spanning the cycle space of one component:
// for every edge, tree-potential difference plus the edge shift.
std::vector<std::vector<long long>> cycle_vectors(const QuotientGraph& g, int root) {
    std::set<std::vector<long long>> seen;
    for (const QEdge& e : g.edges) {
        if (g.component[e.from] != root) continue;
        std::vector<long long> c = g.potential[e.from];
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += e.shift[i] - g.potential[e.to][i];
        bool zero = std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; });
        if (!zero) seen.insert(std::move(c));
    }
    return {seen.begin(), seen.end()};
}

bool cycles_are_unimodular(const QuotientGraph& g, int root, int d) {
    auto cyc = cycle_vectors(g, root);
    if (cyc.empty()) return d == 0;
    IMat cols(d, IVec(cyc.size(), Int(0)));
    for (std::size_t c = 0; c < cyc.size(); ++c)
        for (int i = 0; i < d; ++i) cols[i][c] = Int(static_cast<long>(cyc[c][i]));
    return hnf_is_identity(hnf_basis(cols), d);
}

}  // namespace

QuotientGraph build_quotient_graph(const PeriodicSet& x, const Rat& t_sq) {
    if (sgn(t_sq) < 0) throw std::invalid_argument("quotient graph: negative squared step");
    const int d = x.dim();
    const int m = x.motif_size();
    QuotientGraph g;
    g.t_sq = t_sq;
    g.adj.resize(m);
    for (int i = 0; i < m; ++i) {
        for (const BallSite& bs : enumerate_in_ball(x, x.origin(i), t_sq)) {
            if (bs.site.motif_index == i &&
                std::all_of(bs.site.translation.begin(), bs.site.translation.end(),
                            [](long long v) { return v == 0; }))
                continue;
            g.adj[i].push_back(static_cast<int>(g.edges.size()));
            g.edges.push_back(QEdge{i, bs.site.motif_index, bs.site.translation});
        }
    }
    // Components and integer potentials by BFS from ascending roots.
    g.component.assign(m, -1);
    g.potential.assign(m, std::vector<long long>(d, 0));
    for (int root = 0; root < m; ++root) {
        if (g.component[root] >= 0) continue;
        g.component[root] = root;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int ei : g.adj[u]) {
                const QEdge& e = g.edges[ei];
                if (g.component[e.to] >= 0) continue;
                g.component[e.to] = root;
                g.potential[e.to] = add_ll(g.potential[u], e.shift);
                queue.push_back(e.to);
            }
        }
    }
    return g;
}

ReachableSet reachable_set(const PeriodicSet& x, int motif_index, const Rat& t_sq, int k) {
    if (k < 0) throw std::invalid_argument("reachable_set: negative step count");
    if (motif_index < 0 || motif_index >= x.motif_size())
        throw std::out_of_range("reachable_set: motif index");
    QuotientGraph g = build_quotient_graph(x, t_sq);
    ReachableSet out;
    out.origin = x.origin(motif_index);
    out.t_sq = t_sq;
    out.bounded = true;
    out.k = k;

    std::set<Key> visited;
    std::deque<Key> frontier;
    Key start{motif_index, std::vector<long long>(x.dim(), 0)};
    visited.insert(start);
    frontier.push_back(start);
    for (int step = 0; step < k && !frontier.empty(); ++step) {
        std::deque<Key> next;
        for (const Key& cur : frontier) {
            for (int ei : g.adj[cur.first]) {
                const QEdge& e = g.edges[ei];
                Key to{e.to, add_ll(cur.second, e.shift)};
                if (visited.insert(to).second) next.push_back(to);
            }
        }
        frontier = std::move(next);
    }
    out.sites.reserve(visited.size());
    for (const Key& key : visited) out.sites.push_back(Site{key.first, key.second});
    std::sort(out.sites.begin(), out.sites.end(), site_less);
    return out;
}

ReachableSet reachability_closure(const PeriodicSet& x, int motif_index, const Rat& t_sq) {
    if (motif_index < 0 || motif_index >= x.motif_size())
        throw std::out_of_range("reachability_closure: motif index");
    const int d = x.dim();
    QuotientGraph g = build_quotient_graph(x, t_sq);
    const int root = g.component[motif_index];

    ReachableSet out;
    out.origin = x.origin(motif_index);
    out.t_sq = t_sq;
    out.bounded = false;
    for (int j = 0; j < x.motif_size(); ++j)
        if (g.component[j] == root) out.component_motifs.push_back(j);

    // Difference vectors from the origin point to one representative of every
    // reachable class, together with the integer cycle lattice, generate the
    // closure; scale out denominators and reduce.
    std::vector<RVec> gens;
    for (const auto& cyc : cycle_vectors(g, root)) {
        RVec v(d);
        for (int i = 0; i < d; ++i) v[i] = Rat(static_cast<long>(cyc[i]));
        gens.push_back(std::move(v));
    }
    for (int j : out.component_motifs) {
        RVec v = rvec_sub(x.motif[j], x.motif[motif_index]);
        for (int i = 0; i < d; ++i) v[i] += Rat(static_cast<long>(g.potential[j][i]));
        if (!rvec_is_zero(v)) gens.push_back(std::move(v));
    }

    Int den(1);
    for (const RVec& v : gens)
        for (const Rat& c : v) {
            Int cd = c.get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), cd.get_mpz_t());
        }
    out.closure_denominator = den;
    if (!gens.empty()) {
        IMat cols(d, IVec(gens.size(), Int(0)));
        for (std::size_t c = 0; c < gens.size(); ++c)
            for (int i = 0; i < d; ++i) {
                Rat scaled = gens[c][i] * Rat(den);
                cols[i][c] = scaled.get_num();
            }
        out.closure_hnf = hnf_basis(cols);
        int r = 0;
        for (const Int& v : snf_diagonal(cols))
            if (sgn(v) != 0) ++r;
        out.rank = r;
    }
    out.translation_complete = cycles_are_unimodular(g, root, d);
    return out;
}

bool is_t_bonded(const PeriodicSet& x, const Rat& t_sq) {
    QuotientGraph g = build_quotient_graph(x, t_sq);
    for (int j = 0; j < x.motif_size(); ++j)
        if (g.component[j] != 0) return false;
    return cycles_are_unimodular(g, 0, x.dim());
}

FamilyMembershipReport family_membership(const PeriodicSet& x, const Rat& a) {
    if (a < 1) throw std::domain_error("family_membership: a must be at least 1");
    FamilyMembershipReport rep;
    rep.a = a;
    rep.t_sq = a * a * shortest_nonzero_sq_dist(x);

    bool all_full = true;
    for (int i = 0; i < x.motif_size(); ++i) {
        int r = reachability_closure(x, i, rep.t_sq).rank;
        rep.ranks.push_back(r);
        all_full = all_full && r == x.dim();
    }
    rep.in_family = all_full;

    // a > R/r makes every point reachable outright; flag it when R is known.
    std::optional<Rat> R_sq;
    if (x.dim() <= 4)
        R_sq = covering_radius_sq(x);
    else if (x.declared_R_sq)
        R_sq = *x.declared_R_sq;
    if (R_sq) rep.a_exceeds_R_over_r = rep.t_sq > 4 * *R_sq;
    return rep;
}

}  // namespace delone
