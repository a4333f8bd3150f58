#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "delone/cluster.hpp"
#include "delone/metrics.hpp"
#include "delone/periodic_set.hpp"

namespace delone {

// A stated parameter (typically a declared covering radius) contradicts the
// geometry of the set.
class inconsistent_parameters_error : public std::runtime_error {
 public:
  explicit inconsistent_parameters_error(const std::string& what) : std::runtime_error(what) {}
};

// The same point set re-expressed over its full translation lattice: motif
// differences that translate the set onto itself are absorbed into the basis,
// shrinking the motif by the index of Z^d in that lattice. Coordinates change;
// all distances, clusters, and symmetry questions do not.
struct ReducedSet {
    PeriodicSet set;
    RMat basis;                  // columns: new lattice basis in old coordinates
    std::vector<int> motif_map;  // old motif index -> new motif index
    Int index = 1;               // how many old motif points merge into each new one
};
ReducedSet reduce_translations(const PeriodicSet& x);

// Number of congruence classes among the clusters of radius sqrt(rho_sq),
// with one motif index per class. Lattice translates of a motif point carry
// congruent clusters, so motif representatives cover every class.
struct NRhoReport {
    Rat rho_sq;
    int class_count = 1;
    std::vector<int> class_representatives;
};
NRhoReport n_rho(const PeriodicSet& x, const Rat& rho_sq);

// Radii where clusters can change: the squared site distances up to the cap.
std::vector<Rat> breakpoints(const PeriodicSet& x, const Rat& rho_sq_max);

enum class Method { TOWER, LOCAL_CRITERION, ORACLE };
enum class Verdict { REGULAR, NOT_REGULAR, INCONCLUSIVE };
const char* method_name(Method m);
const char* verdict_name(Verdict v);

struct RegularityVerdict {
    Method method = Method::ORACLE;
    Verdict verdict = Verdict::INCONCLUSIVE;
    // Re-checkable payload: radii, orders, counts, generators or separating
    // invariants, all as exact strings.
    std::map<std::string, std::string> certificate;
};

// One-directional certificate: if the set is 2R-isometric with a full-rank
// 2R-cluster of group order m, and additionally 2(omega(m)+2)R-isometric,
// it is a regular system. Inconclusive otherwise, never NOT_REGULAR.
RegularityVerdict tower_check(const PeriodicSet& x);

// Scans candidate radii rho0 in {0} union breakpoints. Certifies regularity
// when the set is (rho0+2R)-isometric and the cluster symmetry group at rho0
// equals the one at rho0+2R (tested as order equality, sound because the larger
// radius gives a subgroup and both are finite at rank >= d-1; lower-rank rho0
// values are skipped). Inconclusive if no candidate up to the cap certifies.
RegularityVerdict local_criterion_scan(const PeriodicSet& x, const Rat& rho_sq_max);

// Ground truth by explicit symmetry construction: candidate point parts are the
// automorphisms of the reduced Gram matrix, translation parts are matched on
// the reduced motif, and the verdict is transitivity of the assembled action on
// motif classes. Always decides.
RegularityVerdict oracle_is_regular(const PeriodicSet& x);

// Euclidean cluster-group orders at radii 2R, 4R, ..., 2KR and the number of
// strict decreases. Defined for regular sets only.
struct DropReport {
    Rat R_sq;
    std::vector<Int> orders;
    int drop_count = 0;
};
DropReport drop_sequence(const PeriodicSet& x, int K);

// One evaluated inequality: named values plus PASS / FAIL / NOT_APPLICABLE /
// NON_CERTIFIED / INFO.
struct BoundCheck {
    std::string name;
    std::map<std::string, std::string> values;
    std::string status;
};
struct BoundsReport {
    std::vector<BoundCheck> checks;
};
BoundsReport bounds_report(const PeriodicSet& x);

// Certified dyadic bounds on the binary logarithm (x > 0); the true value lies
// in [lo, hi].
void log2_interval(const Rat& x, int frac_bits, Rat& lo, Rat& hi);

}  // namespace delone
