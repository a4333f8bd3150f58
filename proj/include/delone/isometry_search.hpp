#pragma once

#include <optional>
#include <vector>

#include "delone/periodic_set.hpp"

namespace delone {

// One form-preserving linear map carrying the source vector set onto the target
// vector set. perm[i] is the target index of source vector i. ambient_matrix is
// present when the sets span the full space.
struct IsoMapping {
  std::vector<int> perm;
  std::optional<RMat> ambient_matrix;
};

struct IsoSearchOutcome {
  int src_rank = 0;
  std::vector<IsoMapping> maps;
};

// Backtracking over images of a greedy basis of `src`: candidates must match
// norms and pairwise inner products under `gm`, then the induced linear map must
// carry src onto tgt exactly (verified pointwise, no floating point anywhere).
// A distance-preserving center-fixing bijection between two clusters exists iff
// such a map exists, so this is the single engine behind cluster equivalence and
// cluster symmetry groups.
IsoSearchOutcome isometry_maps(const GramMatrix& gm, const std::vector<RVec>& src,
                               const std::vector<RVec>& tgt, bool first_only);

// Greedy generating subset of a permutation group given by its full element
// list; `order` is just elements.size() but is returned for convenience.
struct PermGroupSummary {
  Int order = 1;
  std::vector<std::vector<int>> generators;
};
PermGroupSummary summarize_perm_group(const std::vector<std::vector<int>>& elements);

}  // namespace delone
