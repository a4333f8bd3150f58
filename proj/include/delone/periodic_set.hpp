#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "delone/linalg.hpp"
#include "delone/rational.hpp"

namespace delone {

// Raised when an operation is only available below a dimension cap.
class unsupported_dimension_error : public std::runtime_error {
 public:
  explicit unsupported_dimension_error(const std::string& what) : std::runtime_error(what) {}
};

// Symmetric positive definite form in lattice coordinates, with the cached
// decompositions every consumer needs.
struct GramMatrix {
  int d = 0;
  RMat g;
  Ldl ldl;       // g = U^T diag U
  RMat inv;      // g^{-1}
  Int scale;     // least common denominator of entries
  IMat scaled;   // scale * g, integral

  explicit GramMatrix(RMat entries);

  const Rat& at(int i, int j) const { return g[i][j]; }
};

Rat form_value(const GramMatrix& gm, const RVec& x);            // x^T G x
Rat form_inner(const GramMatrix& gm, const RVec& x, const RVec& y);

// A point of the set: motif index plus integer lattice translation.
struct Site {
  int motif_index = 0;
  std::vector<long long> translation;
};

bool operator==(const Site& a, const Site& b);
bool operator!=(const Site& a, const Site& b);
// Lexicographic on (motif_index, translation); a plain container order.
bool site_less(const Site& a, const Site& b);
std::string site_str(const Site& s);

struct PeriodicSet {
  GramMatrix gram;
  std::vector<RVec> motif;                // rows in [0,1)^d, pairwise distinct
  std::optional<Rat> declared_R_sq;       // for dimensions beyond the exact cap

  PeriodicSet(GramMatrix gm, std::vector<RVec> motif_points,
              std::optional<Rat> declared_R = std::nullopt);

  int dim() const { return gram.d; }
  int motif_size() const { return static_cast<int>(motif.size()); }
  RVec position(const Site& s) const;
  Site origin(int motif_index) const;
};

// 2r = shortest inter-point distance, R = largest empty ball radius.
struct MetricParameters {
  Rat two_r_sq;
  Rat R_sq;
  bool R_exact = true;  // false when R_sq came from the declared value
};

}  // namespace delone
