#include "delone/isometry_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "delone/linalg.hpp"
#include "delone/stats.hpp"

namespace delone {
namespace {

// Columns of `cols` are vectors; returns the r x r matrix of pairwise inner
// products under gm.g.
RMat pairwise_gram(const GramMatrix& gm, const std::vector<RVec>& cols) {
  const int r = static_cast<int>(cols.size());
  RMat out(r, RVec(r, Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Rat v = form_inner(gm, cols[i], cols[j]);
      out[i][j] = v;
      out[j][i] = v;
    }
  return out;
}

struct Search {
  const GramMatrix& gm;
  const std::vector<RVec>& src;
  const std::vector<RVec>& tgt;
  bool first_only;

  std::vector<Rat> src_norm, tgt_norm;
  std::vector<int> basis;              // indices into src
  std::vector<RVec> basis_vec;
  RMat basis_gram;                     // pairwise inner products of basis
  RMat basis_gram_inv;
  std::vector<RVec> coords;            // coords[i]: src[i] in basis coordinates
  std::unordered_multimap<std::uint64_t, int> tgt_lookup;
  std::vector<std::vector<int>> level_cands;  // tgt indices with matching norm
  std::vector<int> chosen;             // image index per level
  std::vector<RVec> chosen_vec;
  IsoSearchOutcome out;
  bool done = false;

  explicit Search(const GramMatrix& g, const std::vector<RVec>& s, const std::vector<RVec>& t,
                  bool fo)
      : gm(g), src(s), tgt(t), first_only(fo) {}

  bool prepare() {
    const int n = static_cast<int>(src.size());
    if (static_cast<int>(tgt.size()) != n) return false;
    src_norm.reserve(n);
    tgt_norm.reserve(n);
    for (const auto& v : src) src_norm.push_back(form_value(gm, v));
    for (const auto& v : tgt) tgt_norm.push_back(form_value(gm, v));
    {
      std::vector<Rat> a = src_norm, b = tgt_norm;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }

    // Greedy independent basis from src, in index order. Independence is
    // checked by the Gram determinant, which is nonzero exactly for
    // independent vectors under a positive definite form.
    for (int i = 0; i < n; ++i) {
      std::vector<RVec> trial = basis_vec;
      trial.push_back(src[i]);
      if (sgn(det(pairwise_gram(gm, trial))) != 0) {
        basis.push_back(i);
        basis_vec = std::move(trial);
        if (static_cast<int>(basis.size()) == gm.d) break;
      }
    }
    const int r = static_cast<int>(basis.size());
    out.src_rank = r;

    {
      RMat tmat(gm.d, RVec(n, Rat(0)));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < gm.d; ++k) tmat[k][i] = tgt[i][k];
      if (rank(tmat) != r) return false;
    }

    basis_gram = pairwise_gram(gm, basis_vec);
    if (r > 0) basis_gram_inv = inverse(basis_gram);

    // coords[i] solves  (B^T G B) c = B^T G src[i]; exact because src[i] lies
    // in the span of the basis by construction.
    coords.assign(n, RVec(r, Rat(0)));
    for (int i = 0; i < n; ++i) {
      RVec rhs(r, Rat(0));
      for (int k = 0; k < r; ++k) rhs[k] = form_inner(gm, basis_vec[k], src[i]);
      for (int k = 0; k < r; ++k) {
        Rat acc(0);
        for (int l = 0; l < r; ++l) acc += basis_gram_inv[k][l] * rhs[l];
        coords[i][k] = acc;
      }
    }

    for (int i = 0; i < n; ++i) tgt_lookup.emplace(vec_hash(tgt[i]), i);

    level_cands.assign(r, {});
    for (int k = 0; k < r; ++k)
      for (int i = 0; i < n; ++i)
        if (tgt_norm[i] == src_norm[basis[k]]) level_cands[k].push_back(i);

    chosen.assign(r, -1);
    chosen_vec.assign(r, RVec());
    return true;
  }

  // The images of the basis preserve all pairwise inner products, so the
  // induced linear map is an isometry of spans; it remains to check it carries
  // the source set onto the target set pointwise.
  bool verify_and_emit() {
    const int n = static_cast<int>(src.size());
    const int r = static_cast<int>(basis.size());
    IsoMapping m;
    m.perm.assign(n, -1);
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
      RVec u(gm.d, Rat(0));
      for (int k = 0; k < r; ++k) {
        if (sgn(coords[i][k]) == 0) continue;
        for (int c = 0; c < gm.d; ++c) u[c] += coords[i][k] * chosen_vec[k][c];
      }
      int found = -1;
      auto range = tgt_lookup.equal_range(vec_hash(u));
      for (auto it = range.first; it != range.second; ++it)
        if (tgt[it->second] == u) {
          found = it->second;
          break;
        }
      if (found < 0 || used[found]) return false;
      used[found] = 1;
      m.perm[i] = found;
    }
    if (r == gm.d) {
      RMat bmat(gm.d, RVec(gm.d)), tmat(gm.d, RVec(gm.d));
      for (int k = 0; k < gm.d; ++k)
        for (int c = 0; c < gm.d; ++c) {
          bmat[c][k] = basis_vec[k][c];
          tmat[c][k] = chosen_vec[k][c];
        }
      m.ambient_matrix = rmat_mul(tmat, inverse(bmat));
    }
    out.maps.push_back(std::move(m));
    if (first_only) done = true;
    return true;
  }

  void descend(int level) {
    if (done) return;
    const int r = static_cast<int>(basis.size());
    if (level == r) {
      verify_and_emit();
      return;
    }
    for (int cand : level_cands[level]) {
      stats().iso_nodes.fetch_add(1, std::memory_order_relaxed);
      bool ok = true;
      for (int l = 0; l < level && ok; ++l)
        if (form_inner(gm, tgt[cand], chosen_vec[l]) != basis_gram[level][l]) ok = false;
      if (!ok) continue;
      chosen[level] = cand;
      chosen_vec[level] = tgt[cand];
      descend(level + 1);
      if (done) return;
    }
  }
};

struct PermHash {
  std::size_t operator()(const std::vector<int>& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

IsoSearchOutcome isometry_maps(const GramMatrix& gm, const std::vector<RVec>& src,
                               const std::vector<RVec>& tgt, bool first_only) {
  Search s(gm, src, tgt, first_only);
  if (!s.prepare()) {
    IsoSearchOutcome empty;
    empty.src_rank = s.out.src_rank;
    return empty;
  }
  if (s.basis.empty()) {
    // Only the zero vector on both sides: the identity on nothing.
    if (src.size() == 1 && tgt.size() == 1 && rvec_is_zero(src[0]) && rvec_is_zero(tgt[0])) {
      IsoMapping m;
      m.perm = {0};
      if (gm.d == 0) m.ambient_matrix = RMat{};
      s.out.maps.push_back(std::move(m));
    }
    return s.out;
  }
  s.descend(0);
  return s.out;
}

PermGroupSummary summarize_perm_group(const std::vector<std::vector<int>>& elements) {
  PermGroupSummary out;
  out.order = Int(static_cast<long>(elements.size()));
  if (elements.empty()) throw std::invalid_argument("empty permutation group");
  const std::size_t n = elements[0].size();
  std::vector<int> ident(n);
  for (std::size_t i = 0; i < n; ++i) ident[i] = static_cast<int>(i);

  std::unordered_set<std::vector<int>, PermHash> closure;
  closure.insert(ident);
  auto close_over = [&](const std::vector<std::vector<int>>& gens) {
    std::vector<std::vector<int>> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& a : frontier)
        for (const auto& g : gens) {
          auto p = compose(g, a);
          if (closure.insert(p).second) next.push_back(std::move(p));
        }
      frontier = std::move(next);
    }
  };
  for (const auto& e : elements) {
    if (closure.count(e)) continue;
    out.generators.push_back(e);
    close_over(out.generators);
  }
  return out;
}

}  // namespace delone
