#pragma once

#include <map>
#include <string>
#include <vector>

#include "delone/periodic_set.hpp"

namespace delone {

// Generators for the standing test corpus.
PeriodicSet integer_lattice(int d);
PeriodicSet d_plus(int d);                     // Z^d with the half-diagonal coset
PeriodicSet hexagonal_lattice();
PeriodicSet two_orbit_shift(int d, const RVec& shift);  // motif {0, s/2, s}: two cluster classes
PeriodicSet layered(int d, const Rat& ratio);  // last basis vector stretched by ratio
PeriodicSet wallpaper_orbit(const std::string& group, const RVec& seed);  // p1 p2 p4 p4m p6

// A named instance with the facts the test suite re-derives.
struct CatalogEntry {
    std::string name;
    std::string summary;
    PeriodicSet set;
    std::map<std::string, std::string> expected;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* catalog_find(const std::string& name);
PeriodicSet catalog_make(const std::string& name);  // throws std::invalid_argument on unknown names
std::vector<std::string> catalog_names();

}  // namespace delone
