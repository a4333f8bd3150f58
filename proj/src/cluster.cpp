#include "delone/cluster.hpp"

#include <stdexcept>
#include <unordered_map>

#include "delone/gram_auto.hpp"
#include "delone/isometry_search.hpp"

namespace delone {

bool operator==(const SurdRadius& a, const SurdRadius& b) {
  return a.s == b.s && a.t == b.t && a.disc == b.disc;
}

SurdRadius surd_radius(const Rat& sq) { return SurdRadius{sq, Rat(0), Int(0)}; }

SurdRadius make_surd(const Rat& s, const Rat& t, const Int& disc) {
  if (sgn(t) == 0 || sgn(disc) == 0) return surd_radius(s);
  Int root, sf;
  split_square(disc, root, sf);
  Rat tt = t * Rat(root);
  if (sf == 1) return surd_radius(s + tt);
  return SurdRadius{s, tt, sf};
}

std::string surd_str(const SurdRadius& r) {
  if (sgn(r.t) == 0) return rat_str(r.s);
  std::string out = rat_str(r.s);
  if (sgn(r.t) < 0) {
    out += "-" + rat_str(-r.t);
  } else {
    out += "+" + rat_str(r.t);
  }
  out += "*sqrt(" + r.disc.get_str() + ")";
  return out;
}

Rat surd_upper(const SurdRadius& r) {
  if (sgn(r.t) == 0) return r.s;
  if (sgn(r.t) > 0) return r.s + r.t * sqrt_ub(Rat(r.disc));
  return r.s + r.t * sqrt_lb(Rat(r.disc));
}

namespace {

Cluster build_cluster(const PeriodicSet& x, int motif_index, const SurdRadius& rsq,
                      std::vector<BallSite> members) {
  Cluster c;
  c.center = x.origin(motif_index);
  c.radius_sq = rsq;
  c.members = std::move(members);
  if (c.members.empty() || c.members[0].site != c.center)
    throw std::logic_error("cluster enumeration did not return its own center first");
  const RVec& base = x.motif[motif_index];
  c.diffs.reserve(c.members.size());
  for (const auto& bs : c.members) c.diffs.push_back(rvec_sub(x.position(bs.site), base));
  return c;
}

// Single-point sets: when the members generate the full translation lattice,
// the cluster symmetries are exactly the integral isometries of the form, so
// the matrix search replaces per-member backtracking.
bool lattice_fast_path(const PeriodicSet& x, const Cluster& c, int rank_hint, ClusterGroup& out) {
  if (x.motif_size() != 1 || rank_hint != x.dim()) return false;
  const int d = x.dim();
  IMat cols(d, IVec(c.members.size(), Int(0)));
  for (std::size_t i = 0; i < c.members.size(); ++i)
    for (int k = 0; k < d; ++k)
      cols[k][i] = Int(static_cast<long>(c.members[i].site.translation[k]));
  if (!hnf_is_identity(hnf_basis(cols), d)) return false;

  GramAutoGroup ag = gram_automorphisms(x.gram);
  std::unordered_multimap<std::uint64_t, int> lookup;
  for (std::size_t i = 0; i < c.diffs.size(); ++i) lookup.emplace(vec_hash(c.diffs[i]), static_cast<int>(i));
  auto act = [&](const IMat& u) {
    std::vector<int> perm(c.diffs.size(), -1);
    for (std::size_t i = 0; i < c.diffs.size(); ++i) {
      RVec img(d, Rat(0));
      for (int r = 0; r < d; ++r)
        for (int k = 0; k < d; ++k)
          if (sgn(u[r][k]) != 0) img[r] += Rat(u[r][k]) * c.diffs[i][k];
      auto range = lookup.equal_range(vec_hash(img));
      int found = -1;
      for (auto it = range.first; it != range.second; ++it)
        if (c.diffs[it->second] == img) {
          found = it->second;
          break;
        }
      if (found < 0) throw std::logic_error("lattice automorphism does not preserve cluster");
      perm[i] = found;
    }
    return perm;
  };
  out.perm_order = ag.order;
  for (const auto& g : ag.generators) out.perm_generators.push_back(act(g));
  out.rank = d;
  out.euclidean_finite = true;
  out.euclidean_order = ag.order;
  out.omega = omega_with_multiplicity(out.euclidean_order);
  return true;
}

}  // namespace

Cluster get_cluster(const PeriodicSet& x, int motif_index, const Rat& rho_sq) {
  return build_cluster(x, motif_index, surd_radius(rho_sq),
                       enumerate_in_ball(x, x.origin(motif_index), rho_sq));
}

Cluster get_cluster(const PeriodicSet& x, int motif_index, const SurdRadius& rho_sq) {
  if (sgn(rho_sq.t) == 0) return get_cluster(x, motif_index, rho_sq.s);
  return build_cluster(
      x, motif_index, rho_sq,
      enumerate_in_ball_surd(x, x.origin(motif_index), rho_sq.s, rho_sq.t, Rat(rho_sq.disc)));
}

int cluster_rank(const PeriodicSet& x, const Cluster& c) {
  RMat m(x.dim(), RVec(c.diffs.size(), Rat(0)));
  for (std::size_t i = 0; i < c.diffs.size(); ++i)
    for (int k = 0; k < x.dim(); ++k) m[k][i] = c.diffs[i][k];
  return rank(m);
}

ClusterMatch clusters_equivalent(const PeriodicSet& x, const Cluster& a, const Cluster& b) {
  if (!(a.radius_sq == b.radius_sq))
    throw std::invalid_argument("comparing clusters of different radii");
  ClusterMatch out;
  if (a.members.size() != b.members.size()) return out;
  IsoSearchOutcome res = isometry_maps(x.gram, a.diffs, b.diffs, /*first_only=*/true);
  if (res.maps.empty()) return out;
  out.equivalent = true;
  out.witness_perm = std::move(res.maps[0].perm);
  out.linear_map = std::move(res.maps[0].ambient_matrix);
  return out;
}

ClusterGroup cluster_group(const PeriodicSet& x, const Cluster& c) {
  ClusterGroup out;
  const int d = x.dim();
  int rk = cluster_rank(x, c);
  if (lattice_fast_path(x, c, rk, out)) return out;

  IsoSearchOutcome res = isometry_maps(x.gram, c.diffs, c.diffs, /*first_only=*/false);
  if (res.maps.empty()) throw std::logic_error("cluster symmetry search lost the identity");
  out.rank = res.src_rank;
  if (out.rank != rk) throw std::logic_error("cluster rank disagreement");
  std::vector<std::vector<int>> perms;
  perms.reserve(res.maps.size());
  for (auto& m : res.maps) perms.push_back(std::move(m.perm));
  PermGroupSummary summary = summarize_perm_group(perms);
  out.perm_order = summary.order;
  out.perm_generators = std::move(summary.generators);

  if (out.rank == d) {
    out.euclidean_finite = true;
    out.euclidean_order = out.perm_order;
  } else if (out.rank == d - 1) {
    out.euclidean_finite = true;
    out.euclidean_order = 2 * out.perm_order;
  } else {
    out.euclidean_finite = false;
  }
  if (out.euclidean_finite) out.omega = omega_with_multiplicity(out.euclidean_order);
  return out;
}

}  // namespace delone
