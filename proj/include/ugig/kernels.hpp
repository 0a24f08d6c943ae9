#pragma once

#include <optional>
#include <vector>

namespace ugig::kernels {

// Hot loops, each in a serial reference version and an OpenMP version.  The
// serial versions exist so tests can assert the parallel ones agree; callers
// in the library go through the unsuffixed wrappers, which pick the OpenMP
// variant.

// Shortest cycle length over an adjacency structure, std::nullopt if acyclic.
// One BFS per root; parallel version splits the roots across threads.
std::optional<int> girth_serial(const std::vector<std::vector<int>>& adj);
std::optional<int> girth_omp(const std::vector<std::vector<int>>& adj);
inline std::optional<int> girth(const std::vector<std::vector<int>>& adj) {
  return girth_omp(adj);
}

}  // namespace ugig::kernels
