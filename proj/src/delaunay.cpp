#include "delone/delaunay.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "delone/enumerate.hpp"
#include "delone/stats.hpp"

namespace delone {
namespace {

constexpr int kMaxDim = 4;

// Upper bound on the squared covering radius: rounding any point to the nearest
// translate of one motif sheet leaves a fractional part in [-1/2,1/2]^d.
Rat covering_upper_bound(const GramMatrix& gm) {
  Rat sum(0);
  for (int i = 0; i < gm.d; ++i)
    for (int j = 0; j < gm.d; ++j) sum += abs(gm.at(i, j));
  return sum / 4;
}

struct Builder {
  const PeriodicSet& x;
  int d;
  int pad;        // window: translations in {-pad .. pad+1}^d
  Int L;          // common denominator of motif coordinates
  const IMat& ghat;
  const Int& gscale;

  std::vector<IVec> pts;  // scaled integer coordinates; ids 0..d are the outer simplex
  std::vector<Int> lift;
  std::vector<Site> site_of;

  struct Cell {
    std::array<int, 5> v{};
    std::array<int, 5> nbr{};  // across the facet opposite v[i]; -1 = outside
    bool alive = true;
  };
  std::vector<Cell> cells;
  std::vector<char> in_conflict;

  IMat scr_big, scr_small;  // reused determinant scratch

  Builder(const PeriodicSet& set, int extra_pad)
      : x(set), d(set.dim()), ghat(set.gram.scaled), gscale(set.gram.scale) {
    Rat need = covering_upper_bound(x.gram) * max_inv_diag();
    Int p = ceil_int(sqrt_ub(need));
    if (p < 1) p = 1;
    p += extra_pad;
    if (!p.fits_sint_p()) throw std::overflow_error("window padding out of range");
    pad = static_cast<int>(mpz_get_si(p.get_mpz_t()));

    L = 1;
    for (const RVec& m : x.motif)
      for (const Rat& c : m) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());

    scr_big.assign(d + 2, IVec(d + 2, Int(0)));
    scr_small.assign(d + 1, IVec(d + 1, Int(0)));
    make_points();
    make_outer_simplex();
  }

  Rat max_inv_diag() const {
    Rat best = x.gram.inv[0][0];
    for (int i = 1; i < d; ++i) best = std::max(best, x.gram.inv[i][i]);
    return best;
  }

  Int quad(const IVec& z) const {
    Int acc(0);
    for (int i = 0; i < d; ++i) {
      if (sgn(z[i]) == 0) continue;
      for (int j = 0; j < d; ++j) acc += z[i] * ghat[i][j] * z[j];
    }
    return acc;
  }

  void add_point(IVec z, Site s) {
    lift.push_back(quad(z));
    pts.push_back(std::move(z));
    site_of.push_back(std::move(s));
  }

  void make_points() {
    // Outer simplex strictly containing the window: { y_i >= -M, sum y <= M }.
    Int M = Int(16) * (d + 1) * L * (pad + 2);
    IVec a0(d, -M);
    Site none;
    none.motif_index = -1;
    none.translation.assign(d, 0);
    add_point(a0, none);
    for (int k = 0; k < d; ++k) {
      IVec ak(d, -M);
      ak[k] = M * d;
      add_point(ak, none);
    }
    for (int mi = 0; mi < x.motif_size(); ++mi) {
      std::vector<long long> n(d, -pad);
      for (;;) {
        IVec z(d);
        for (int i = 0; i < d; ++i) {
          Rat c = (x.motif[mi][i] + Rat(static_cast<long>(n[i]))) * Rat(L);
          if (c.get_den() != 1) throw std::logic_error("window coordinate not integral");
          z[i] = c.get_num();
        }
        Site s;
        s.motif_index = mi;
        s.translation = n;
        add_point(std::move(z), std::move(s));
        int i = 0;
        while (i < d && n[i] == pad + 1) n[i++] = -pad;
        if (i == d) break;
        ++n[i];
      }
    }
  }

  int orient_sign(const int* ids) {
    for (int r = 0; r <= d; ++r) {
      scr_small[r][0] = 1;
      for (int c = 0; c < d; ++c) scr_small[r][c + 1] = pts[ids[r]][c];
    }
    return sgn(det_bareiss_destructive(scr_small));
  }

  void make_outer_simplex() {
    Cell c0;
    for (int i = 0; i <= d; ++i) {
      c0.v[i] = i;
      c0.nbr[i] = -1;
    }
    if (orient_sign(c0.v.data()) < 0) std::swap(c0.v[0], c0.v[1]);
    if (orient_sign(c0.v.data()) <= 0) throw std::logic_error("degenerate outer simplex");
    cells.push_back(c0);
  }

  // Sign of the lifted determinant with the index-ordered tie rule: every lift
  // is lowered by an infinitesimal that shrinks as the point index grows, so a
  // tie is resolved by the first point (smallest index) whose cofactor - an
  // orientation determinant of the remaining points - is nonzero. The query
  // row's cofactor is the cell orientation, so the cascade always terminates.
  bool conflicts(const Cell& c, int q) {
    stats().insphere_calls.fetch_add(1, std::memory_order_relaxed);
    std::array<int, 6> row_pt{};
    for (int r = 0; r <= d; ++r) row_pt[r] = c.v[r];
    row_pt[d + 1] = q;
    for (int r = 0; r <= d + 1; ++r) {
      scr_big[r][0] = 1;
      for (int cc = 0; cc < d; ++cc) scr_big[r][cc + 1] = pts[row_pt[r]][cc];
      scr_big[r][d + 1] = lift[row_pt[r]];
    }
    int s = sgn(det_bareiss_destructive(scr_big));
    if (s != 0) return s < 0;

    std::array<int, 6> order{};
    for (int r = 0; r <= d + 1; ++r) order[r] = r;
    std::sort(order.begin(), order.begin() + d + 2,
              [&](int a, int b) { return row_pt[a] < row_pt[b]; });
    for (int oi = 0; oi <= d + 1; ++oi) {
      int skip = order[oi];
      int rr = 0;
      for (int r = 0; r <= d + 1; ++r) {
        if (r == skip) continue;
        scr_small[rr][0] = 1;
        for (int cc = 0; cc < d; ++cc) scr_small[rr][cc + 1] = pts[row_pt[r]][cc];
        ++rr;
      }
      int minor = sgn(det_bareiss_destructive(scr_small));
      if (minor == 0) continue;
      int cofactor = ((skip + d + 1) % 2 == 0) ? minor : -minor;
      return -cofactor < 0;
    }
    throw std::logic_error("lifted determinant cascade exhausted");
  }

  void insert(int q) {
    in_conflict.assign(cells.size(), 0);
    std::vector<int> confl;
    for (int ci = 0; ci < static_cast<int>(in_conflict.size()); ++ci)
      if (cells[ci].alive && conflicts(cells[ci], q)) {
        in_conflict[ci] = 1;
        confl.push_back(ci);
      }
    if (confl.empty()) throw std::logic_error("inserted point conflicts with no cell");

    std::map<std::vector<int>, std::pair<int, int>> ridge;
    for (int ci : confl)
      for (int f = 0; f <= d; ++f) {
        int outside = cells[ci].nbr[f];
        if (outside >= 0 && in_conflict[outside]) continue;

        Cell nc;
        int k = 0;
        for (int j = 0; j <= d; ++j)
          if (j != f) nc.v[k++] = cells[ci].v[j];
        nc.v[d] = q;
        int s = orient_sign(nc.v.data());
        if (s == 0) throw std::logic_error("flat cell from cavity facet");
        if (s < 0) std::swap(nc.v[0], nc.v[1]);
        int qpos = 0;
        while (nc.v[qpos] != q) ++qpos;
        for (int j = 0; j <= d; ++j) nc.nbr[j] = -1;
        nc.nbr[qpos] = outside;

        int id = static_cast<int>(cells.size());
        cells.push_back(nc);
        stats().delaunay_cells.fetch_add(1, std::memory_order_relaxed);
        if (outside >= 0) {
          Cell& oc = cells[outside];
          for (int j = 0; j <= d; ++j)
            if (oc.nbr[j] == ci) {
              oc.nbr[j] = id;
              break;
            }
        }
        for (int j = 0; j <= d; ++j) {
          if (j == qpos) continue;
          std::vector<int> key;
          key.reserve(d - 1);
          for (int t = 0; t <= d; ++t)
            if (t != j && t != qpos) key.push_back(cells[id].v[t]);
          std::sort(key.begin(), key.end());
          auto it = ridge.find(key);
          if (it == ridge.end()) {
            ridge.emplace(std::move(key), std::make_pair(id, j));
          } else {
            cells[id].nbr[j] = it->second.first;
            cells[it->second.first].nbr[it->second.second] = id;
            ridge.erase(it);
          }
        }
      }
    if (!ridge.empty()) throw std::logic_error("unmatched cavity ridge");
    for (int ci : confl) cells[ci].alive = false;
  }

  void build() {
    for (int q = d + 1; q < static_cast<int>(pts.size()); ++q) insert(q);
  }

  PeriodicDelaunayResult extract() {
    PeriodicDelaunayResult out;
    out.padding = pad;
    Rat best(-1);
    Rat unit = Rat(L) * Rat(L) * Rat(gscale);
    for (const Cell& c : cells) {
      if (!c.alive) continue;
      bool real = true;
      for (int i = 0; i <= d; ++i)
        if (c.v[i] <= d) real = false;
      if (!real) continue;

      // Circumcenter: 2 (z_i - z_0)^T Ghat y = lift_i - lift_0 in scaled coords.
      RMat a(d, RVec(d, Rat(0)));
      RVec b(d, Rat(0));
      for (int i = 1; i <= d; ++i) {
        IVec diff(d);
        for (int cc = 0; cc < d; ++cc) diff[cc] = pts[c.v[i]][cc] - pts[c.v[0]][cc];
        for (int cc = 0; cc < d; ++cc) {
          Int acc(0);
          for (int t = 0; t < d; ++t) acc += diff[t] * ghat[t][cc];
          a[i - 1][cc] = Rat(2) * Rat(acc);
        }
        b[i - 1] = Rat(lift[c.v[i]] - lift[c.v[0]]);
      }
      auto center_scaled = solve(a, b);
      if (!center_scaled) throw std::logic_error("flat cell at extraction");

      RVec rad_diff(d);
      for (int cc = 0; cc < d; ++cc) rad_diff[cc] = Rat(pts[c.v[0]][cc]) - (*center_scaled)[cc];
      Rat rho_scaled(0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rho_scaled += rad_diff[i] * Rat(ghat[i][j]) * rad_diff[j];
      Rat rho_sq = rho_scaled / unit;
      RVec center(d);
      for (int cc = 0; cc < d; ++cc) center[cc] = (*center_scaled)[cc] / Rat(L);

      if (!ball_in_window(center, rho_sq)) continue;
      bool in_cube = true;
      for (int cc = 0; cc < d && in_cube; ++cc)
        if (sgn(center[cc]) < 0 || center[cc] > 1) in_cube = false;
      if (!in_cube) continue;

      DelaunayCell dc;
      for (int i = 0; i <= d; ++i) dc.vertices.push_back(site_of[c.v[i]]);
      dc.circumcenter = std::move(center);
      dc.circumradius_sq = rho_sq;
      if (dc.circumradius_sq > best) best = dc.circumradius_sq;
      out.fundamental_cells.push_back(std::move(dc));
    }
    if (out.fundamental_cells.empty())
      throw std::logic_error("no certified cell with circumcenter in the unit cell");
    out.covering_radius_sq = best;
    return out;
  }

  // The closed circumball must stay inside the closed window box
  // [-pad, pad+1]^d; then every set point strictly inside it is a window point
  // and the ball is genuinely empty in the infinite set.
  bool ball_in_window(const RVec& center, const Rat& rho_sq) const {
    for (int i = 0; i < d; ++i) {
      Rat ext_sq = rho_sq * x.gram.inv[i][i];  // squared coordinate extent of the ball
      Rat lo = center[i] + pad;                // distance to the lower wall
      Rat hi = Rat(pad + 1) - center[i];
      if (sgn(lo) < 0 || sgn(hi) < 0) return false;
      if (lo * lo < ext_sq || hi * hi < ext_sq) return false;
    }
    return true;
  }
};

bool post_check(const PeriodicSet& x, const PeriodicDelaunayResult& res) {
  for (const DelaunayCell& c : res.fundamental_cells) {
    for (const BallSite& bs : enumerate_near_point(x, c.circumcenter, c.circumradius_sq))
      if (bs.sq_dist < c.circumradius_sq) return false;
    for (const Site& v : c.vertices) {
      RVec diff = rvec_sub(x.position(v), c.circumcenter);
      if (form_value(x.gram, diff) != c.circumradius_sq) return false;
    }
  }
  return true;
}

}  // namespace

PeriodicDelaunayResult periodic_delaunay(const PeriodicSet& x) {
  if (x.dim() > kMaxDim)
    throw unsupported_dimension_error(
        "exact covering radius is limited to dimension 4; provide declared_R_sq");
  for (int extra = 0; extra <= 2; ++extra) {
    Builder builder(x, extra);
    builder.build();
    PeriodicDelaunayResult res = builder.extract();
    if (post_check(x, res)) return res;
  }
  throw std::logic_error("circumball verification failed at every window size");
}

}  // namespace delone
