#pragma once

#include <vector>

#include "delone/periodic_set.hpp"

namespace delone {

// The step graph on motif classes: an edge (from, to, shift) means every site
// (from, z) can hop to (to, z + shift) within one step of squared length t_sq.
// Finite because t bounds the shift vectors.
struct QEdge {
    int from = 0;
    int to = 0;
    std::vector<long long> shift;
};

struct QuotientGraph {
    Rat t_sq;
    std::vector<QEdge> edges;           // directed; both directions present
    std::vector<std::vector<int>> adj;  // node -> indices into edges
    std::vector<int> component;         // node -> component root (smallest node)
    std::vector<std::vector<long long>> potential;  // node -> shift from its root
};

QuotientGraph build_quotient_graph(const PeriodicSet& x, const Rat& t_sq);

// k-step reachability data. Bounded queries list the sites; the unbounded
// closure is the finite description (component, generated sublattice): the
// reachable set is the component's motif classes shifted by that sublattice.
struct ReachableSet {
    Site origin;
    Rat t_sq;
    bool bounded = true;
    int k = 0;
    std::vector<Site> sites;  // bounded only, sorted

    std::vector<int> component_motifs;
    IMat closure_hnf;             // columns: basis of denominator * closure lattice
    Int closure_denominator = 1;  // 1 when the closure is integral
    int rank = 0;
    bool translation_complete = false;  // integer cycle lattice equals Z^d
};

ReachableSet reachable_set(const PeriodicSet& x, int motif_index, const Rat& t_sq, int k);
ReachableSet reachability_closure(const PeriodicSet& x, int motif_index, const Rat& t_sq);

// The whole set is reachable from any point: one component and the cycle
// lattice is all of Z^d.
bool is_t_bonded(const PeriodicSet& x, const Rat& t_sq);

// Membership test for the family with step t = 2ar: the unbounded closure must
// be full-dimensional at every motif point.
struct FamilyMembershipReport {
    Rat a;
    Rat t_sq;
    std::vector<int> ranks;  // per motif index
    bool in_family = false;
    bool a_exceeds_R_over_r = false;  // then the closure is trivially everything
};
FamilyMembershipReport family_membership(const PeriodicSet& x, const Rat& a);

}  // namespace delone
