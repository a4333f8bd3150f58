#pragma once

#include <atomic>
#include <cstdint>

namespace delone {

// Work counters for the --profile flag. Informational only; nothing reads them
// for control flow, so relaxed atomics are fine.
struct Stats {
  std::atomic<std::uint64_t> enum_nodes{0};       // enumeration tree nodes visited
  std::atomic<std::uint64_t> enum_sites{0};       // sites emitted
  std::atomic<std::uint64_t> iso_nodes{0};        // isometry backtracking nodes
  std::atomic<std::uint64_t> insphere_calls{0};   // exact in-sphere predicates
  std::atomic<std::uint64_t> delaunay_cells{0};   // cells created

  void reset() {
    enum_nodes = 0;
    enum_sites = 0;
    iso_nodes = 0;
    insphere_calls = 0;
    delaunay_cells = 0;
  }
};

Stats& stats();

}  // namespace delone
