#pragma once

#include <vector>

#include "delone/periodic_set.hpp"

namespace delone {

// The finite group of integer matrices U with U^T G U = G, i.e. linear
// isometries of the lattice fixing the origin. Columns are found by matching
// norms and pairwise inner products against the diagonal of G; any completion
// is automatically unimodular.
struct GramAutoGroup {
  Int order = 1;
  std::vector<IMat> elements;
  std::vector<IMat> generators;
};

GramAutoGroup gram_automorphisms(const GramMatrix& gm);

// Inner product of integer vectors under the rational form.
Rat iform_inner(const GramMatrix& gm, const IVec& a, const IVec& b);

IVec imat_apply(const IMat& m, const IVec& v);
IMat imat_mul(const IMat& a, const IMat& b);

}  // namespace delone
