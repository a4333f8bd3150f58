#pragma once

#include <optional>
#include <vector>

#include "delone/rational.hpp"

namespace delone {

using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;  // row-major
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

RMat rmat_identity(int n);
RMat rmat_mul(const RMat& a, const RMat& b);
RVec rmat_apply(const RMat& a, const RVec& x);
RMat rmat_transpose(const RMat& a);
RVec rvec_sub(const RVec& a, const RVec& b);
RVec rvec_add(const RVec& a, const RVec& b);
bool rvec_is_zero(const RVec& a);

int rank(RMat m);  // by value: eliminated in place
Rat det(RMat m);
// Solves square A x = b; nullopt when singular.
std::optional<RVec> solve(RMat a, RVec b);
// Throws std::invalid_argument when singular.
RMat inverse(const RMat& a);

// G = U^T D U with U unit upper triangular; throws unless G is symmetric positive
// definite. Used by the ball enumerator.
struct Ldl {
  std::vector<Rat> diag;
  RMat upper;
};
Ldl ldl_decompose(const RMat& g);

// Column-style Hermite normal form of the lattice spanned by the columns of m
// (d rows, any number of columns). Result: d x r lower-staircase basis, pivots
// positive, entries right of a pivot reduced into [0, pivot). Zero columns dropped.
IMat hnf_basis(IMat m);
bool hnf_is_identity(const IMat& h, int d);

// Diagonal of the Smith normal form (nonzero entries only).
std::vector<Int> snf_diagonal(IMat m);

Int det_bareiss(IMat m);  // integer determinant, fraction-free
// In-place variant for hot loops that reuse a scratch matrix.
Int det_bareiss_destructive(IMat& m);

}  // namespace delone
