#include "ugig/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <queue>

namespace ugig::kernels {

namespace {

// Shortest cycle through the BFS tree rooted at r.  Standard trick: the first
// non-tree edge seen between vertices u, w at depths d(u), d(w) closes a
// cycle of length d(u) + d(w) + 1; minimizing over all roots gives the girth
// of an unweighted graph.
int girth_from_root(const std::vector<std::vector<int>>& adj, int r,
                    std::vector<int>& dist, std::vector<int>& parent) {
  const int inf = std::numeric_limits<int>::max();
  std::fill(dist.begin(), dist.end(), -1);
  std::queue<int> q;
  dist[r] = 0;
  parent[r] = -1;
  q.push(r);
  int best = inf;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (w == parent[u]) continue;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        q.push(w);
      } else {
        best = std::min(best, dist[u] + dist[w] + 1);
      }
    }
  }
  return best;
}

// Vertices with parallel edges or self-loops never occur here (simple
// bipartite graphs), so girth_from_root is exact per root.

}  // namespace

std::optional<int> girth_serial(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  const int inf = std::numeric_limits<int>::max();
  int best = inf;
  std::vector<int> dist(n), parent(n);
  for (int r = 0; r < n; ++r) {
    best = std::min(best, girth_from_root(adj, r, dist, parent));
  }
  if (best == inf) return std::nullopt;
  return best;
}

std::optional<int> girth_omp(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  const int inf = std::numeric_limits<int>::max();
  int best = inf;
#pragma omp parallel
  {
    std::vector<int> dist(n), parent(n);
    int local = inf;
#pragma omp for schedule(dynamic, 8) nowait
    for (int r = 0; r < n; ++r) {
      local = std::min(local, girth_from_root(adj, r, dist, parent));
    }
#pragma omp critical
    best = std::min(best, local);
  }
  if (best == inf) return std::nullopt;
  return best;
}

}  // namespace ugig::kernels
