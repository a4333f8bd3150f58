#include "delone/gram_auto.hpp"

#include <map>
#include <string>
#include <unordered_set>

#include "delone/enumerate.hpp"
#include "delone/stats.hpp"

namespace delone {
namespace {

std::string imat_key(const IMat& m) {
  std::string s;
  for (const auto& row : m)
    for (const auto& v : row) {
      s += v.get_str();
      s += ',';
    }
  return s;
}

// All lattice vectors of a given squared norm, in deterministic order.
std::vector<IVec> shell_vectors(const PeriodicSet& lattice, const Rat& norm) {
  std::vector<IVec> out;
  for (const auto& bs : enumerate_in_ball(lattice, lattice.origin(0), norm)) {
    if (bs.sq_dist != norm) continue;
    IVec v(lattice.dim());
    for (int i = 0; i < lattice.dim(); ++i) v[i] = Int(static_cast<long>(bs.site.translation[i]));
    out.push_back(std::move(v));
  }
  return out;
}

struct AutoSearch {
  const GramMatrix& gm;
  std::map<Rat, std::vector<IVec>> shells;
  std::vector<const std::vector<IVec>*> cands;  // per column
  std::vector<IVec> chosen;
  std::vector<IMat> found;

  explicit AutoSearch(const GramMatrix& g) : gm(g) {}

  void run() {
    PeriodicSet lattice(GramMatrix(gm.g), {RVec(gm.d, Rat(0))});
    for (int k = 0; k < gm.d; ++k) {
      Rat nk = gm.at(k, k);
      if (!shells.count(nk)) shells.emplace(nk, shell_vectors(lattice, nk));
      cands.push_back(&shells.at(nk));
    }
    chosen.assign(gm.d, IVec());
    descend(0);
  }

  void descend(int col) {
    if (col == gm.d) {
      IMat u(gm.d, IVec(gm.d));
      for (int c = 0; c < gm.d; ++c)
        for (int r = 0; r < gm.d; ++r) u[r][c] = chosen[c][r];
      found.push_back(std::move(u));
      return;
    }
    for (const IVec& v : *cands[col]) {
      stats().iso_nodes.fetch_add(1, std::memory_order_relaxed);
      bool ok = true;
      for (int l = 0; l < col && ok; ++l)
        if (iform_inner(gm, v, chosen[l]) != gm.at(col, l)) ok = false;
      if (!ok) continue;
      chosen[col] = v;
      descend(col + 1);
    }
  }
};

}  // namespace

Rat iform_inner(const GramMatrix& gm, const IVec& a, const IVec& b) {
  Rat acc(0);
  for (int i = 0; i < gm.d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < gm.d; ++j) {
      if (sgn(b[j]) == 0) continue;
      acc += gm.at(i, j) * Rat(a[i]) * Rat(b[j]);
    }
  }
  return acc;
}

IVec imat_apply(const IMat& m, const IVec& v) {
  const int d = static_cast<int>(m.size());
  IVec out(d, Int(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out[i] += m[i][j] * v[j];
  return out;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  const int d = static_cast<int>(a.size());
  IMat out(d, IVec(d, Int(0)));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (int j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

GramAutoGroup gram_automorphisms(const GramMatrix& gm) {
  AutoSearch search(gm);
  search.run();
  GramAutoGroup out;
  out.elements = std::move(search.found);
  out.order = Int(static_cast<long>(out.elements.size()));

  std::unordered_set<std::string> closure;
  IMat ident(gm.d, IVec(gm.d, Int(0)));
  for (int i = 0; i < gm.d; ++i) ident[i][i] = 1;
  closure.insert(imat_key(ident));
  auto close_over = [&](const std::vector<IMat>& gens) {
    std::vector<IMat> frontier;
    frontier.push_back(ident);
    // Re-walk the closure from scratch; group orders here are small.
    closure.clear();
    closure.insert(imat_key(ident));
    while (!frontier.empty()) {
      std::vector<IMat> next;
      for (const auto& a : frontier)
        for (const auto& g : gens) {
          IMat p = imat_mul(g, a);
          if (closure.insert(imat_key(p)).second) next.push_back(std::move(p));
        }
      frontier = std::move(next);
    }
  };
  for (const auto& e : out.elements) {
    if (closure.count(imat_key(e))) continue;
    out.generators.push_back(e);
    close_over(out.generators);
  }
  return out;
}

}  // namespace delone
