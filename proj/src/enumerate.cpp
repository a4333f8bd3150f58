#include "delone/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "delone/stats.hpp"

namespace delone {

Stats& stats() {
  static Stats s;
  return s;
}

Rat sq_dist(const PeriodicSet& x, const Site& a, const Site& b) {
  RVec diff = rvec_sub(x.position(a), x.position(b));
  return form_value(x.gram, diff);
}

namespace {

// Enumerates v in Z^d with q(v - t) <= bound via the LDL cone: writing
// q(y) = sum_i d_i (y_i + sum_{j>i} U_ij y_j)^2, coordinates are fixed from the
// last to the first with exact budget pruning at every level.
struct BallEnum {
  const GramMatrix& gm;
  const RVec& t;
  const Rat& bound;
  int d;
  std::vector<long long> v;
  RVec y;  // y_i = v_i - t_i once fixed
  std::vector<BallSite>* out = nullptr;
  int motif_index = 0;
  const PeriodicSet* set = nullptr;

  BallEnum(const PeriodicSet& s, int mi, const RVec& target, const Rat& b)
      : gm(s.gram), t(target), bound(b), d(s.gram.d), v(d, 0), y(d, Rat(0)), motif_index(mi),
        set(&s) {}

  void run(std::vector<BallSite>& sink) {
    out = &sink;
    descend(d - 1, bound);
  }

  void descend(int level, const Rat& budget) {
    stats().enum_nodes.fetch_add(1, std::memory_order_relaxed);
    if (level < 0) {
      emit(budget);
      return;
    }
    const Rat& dk = gm.ldl.diag[level];
    // Center of the admissible interval for v[level]: t[level] - sum_{j>level} U_lj y_j.
    Rat center = t[level];
    for (int j = level + 1; j < d; ++j) center -= gm.ldl.upper[level][j] * y[j];
    Rat half_sq = budget / dk;                 // (v - center)^2 <= half_sq
    Rat half = sqrt_ub(half_sq);
    Int lo = ceil_int(center - half), hi = floor_int(center + half);
    for (Int n = lo; n <= hi; ++n) {
      Rat yl = Rat(n) - t[level];
      Rat term = Rat(n) - center;
      Rat used = dk * term * term;
      if (used > budget) continue;  // over-approximated interval endpoints
      if (!n.fits_slong_p()) throw std::overflow_error("translation exceeds integer range");
      v[level] = mpz_get_si(n.get_mpz_t());
      y[level] = yl;
      descend(level - 1, budget - used);
    }
  }

  void emit(const Rat& slack) {
    BallSite bs;
    bs.site.motif_index = motif_index;
    bs.site.translation = v;
    bs.sq_dist = bound - slack;
    out->push_back(std::move(bs));
    stats().enum_sites.fetch_add(1, std::memory_order_relaxed);
  }
};

void sort_sites(std::vector<BallSite>& sites) {
  std::sort(sites.begin(), sites.end(), [](const BallSite& a, const BallSite& b) {
    int c = cmp(a.sq_dist, b.sq_dist);
    if (c != 0) return c < 0;
    if (a.site.motif_index != b.site.motif_index) return a.site.motif_index < b.site.motif_index;
    return a.site.translation < b.site.translation;
  });
}

std::vector<BallSite> enumerate_rational(const PeriodicSet& x, const RVec& c,
                                         const Rat& rho_sq) {
  if (rho_sq < 0) throw std::invalid_argument("ball radius must be nonnegative");
  std::vector<BallSite> sites;
  for (int j = 0; j < x.motif_size(); ++j) {
    RVec target(x.dim());
    for (int i = 0; i < x.dim(); ++i) target[i] = c[i] - x.motif[j][i];
    BallEnum be(x, j, target, rho_sq);
    be.run(sites);
  }
  sort_sites(sites);
  return sites;
}

}  // namespace

std::vector<BallSite> enumerate_in_ball(const PeriodicSet& x, const Site& center,
                                        const Rat& rho_sq) {
  return enumerate_rational(x, x.position(center), rho_sq);
}

std::vector<BallSite> enumerate_near_point(const PeriodicSet& x, const RVec& point,
                                           const Rat& rho_sq) {
  if (static_cast<int>(point.size()) != x.dim())
    throw std::invalid_argument("query point has wrong dimension");
  RVec p = point;
  for (Rat& c : p) c.canonicalize();  // tolerate raw p/q pairs from callers
  return enumerate_rational(x, p, rho_sq);
}

Rat nearest_site_sq_dist(const PeriodicSet& x, const RVec& point) {
  if (static_cast<int>(point.size()) != x.dim())
    throw std::invalid_argument("query point has wrong dimension");
  RVec p = point;
  for (Rat& c : p) c.canonicalize();
  // Rounding the point against each motif sheet gives a finite upper bound.
  std::optional<Rat> bound;
  for (int j = 0; j < x.motif_size(); ++j) {
    RVec diff(x.dim());
    for (int i = 0; i < x.dim(); ++i) {
      Rat off = p[i] - x.motif[j][i];
      diff[i] = off - Rat(round_nearest(off));
    }
    Rat q = form_value(x.gram, diff);
    if (!bound || q < *bound) bound = q;
  }
  Rat best = *bound;
  for (const BallSite& bs : enumerate_rational(x, p, *bound))
    if (bs.sq_dist < best) best = bs.sq_dist;
  return best;
}

std::vector<BallSite> enumerate_in_ball_surd(const PeriodicSet& x, const Site& center,
                                             const Rat& s, const Rat& t, const Rat& D) {
  if (sgn(t) < 0) throw std::invalid_argument("surd radius with negative radical part");
  Rat over = s + t * sqrt_ub(D);
  if (over < 0) throw std::invalid_argument("surd ball radius must be nonnegative");
  std::vector<BallSite> sites = enumerate_rational(x, x.position(center), over);
  std::vector<BallSite> kept;
  kept.reserve(sites.size());
  for (BallSite& bs : sites)
    if (cmp_surd(bs.sq_dist, s, t, D) >= 0) kept.push_back(std::move(bs));
  return kept;
}

std::vector<Site> sites_in_ball(const PeriodicSet& x, const Site& center, const Rat& rho_sq) {
  std::vector<BallSite> full = enumerate_in_ball(x, center, rho_sq);
  std::vector<Site> out;
  out.reserve(full.size());
  for (BallSite& bs : full) out.push_back(std::move(bs.site));
  return out;
}

Rat shortest_nonzero_sq_dist(const PeriodicSet& x) {
  // Any valid upper bound to seed the search: basis steps, and motif pairs over
  // the adjacent translation block.
  Rat bound = x.gram.at(0, 0);
  for (int i = 1; i < x.dim(); ++i) bound = std::min(bound, x.gram.at(i, i));
  const int d = x.dim();
  if (x.motif_size() > 1) {
    std::vector<long long> shift(d, -1);
    for (;;) {
      for (int a = 0; a < x.motif_size(); ++a)
        for (int b = a + 1; b < x.motif_size(); ++b) {
          RVec diff = rvec_sub(x.motif[b], x.motif[a]);
          for (int i = 0; i < d; ++i) diff[i] += Rat(static_cast<long>(shift[i]));
          Rat q = form_value(x.gram, diff);
          if (sgn(q) > 0) bound = std::min(bound, q);
        }
      int i = 0;
      while (i < d && shift[i] == 1) shift[i++] = -1;
      if (i == d) break;
      ++shift[i];
    }
  }
  Rat best = bound;
  for (int j = 0; j < x.motif_size(); ++j) {
    Site c = x.origin(j);
    for (const BallSite& bs : enumerate_in_ball(x, c, bound))
      if (sgn(bs.sq_dist) > 0) best = std::min(best, bs.sq_dist);
  }
  return best;
}

std::vector<Rat> distance_breakpoints(const PeriodicSet& x, const Rat& rho_sq_max) {
  if (rho_sq_max < 0) throw std::invalid_argument("breakpoint scan radius must be nonnegative");
  std::set<Rat> values;
  for (int j = 0; j < x.motif_size(); ++j) {
    Site c = x.origin(j);
    for (const BallSite& bs : enumerate_in_ball(x, c, rho_sq_max))
      if (sgn(bs.sq_dist) > 0) values.insert(bs.sq_dist);
  }
  return std::vector<Rat>(values.begin(), values.end());
}

}  // namespace delone
