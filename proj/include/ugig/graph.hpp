#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ugig/error.hpp"

namespace ugig {

// Bipartite graph with two declared sides.  H vertices are the ones meant to
// be drawn as horizontal objects, V vertices as vertical ones; edges may only
// join opposite sides.  Labels are unique across both sides and the whole
// structure is kept in a canonical sorted form so that equality is plain
// member comparison.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Build from explicit sides.  Throws DuplicateLabel, UnknownVertex,
  // EdgeWithinPartition.  Duplicate edges collapse.
  static BipartiteGraph build(
      const std::vector<std::string>& h_side, const std::vector<std::string>& v_side,
      const std::vector<std::pair<std::string, std::string>>& edges);

  // Build with sides derived by 2-coloring: the smallest label of each
  // connected component goes to H.  Isolated vertices land in H.  Throws
  // OddCycle when the edge set is not bipartite.
  static BipartiteGraph from_edges(
      const std::vector<std::string>& vertices,
      const std::vector<std::pair<std::string, std::string>>& edges);

  size_t vertex_count() const { return labels_.size(); }
  size_t edge_count() const { return edge_count_; }
  const std::vector<std::string>& labels() const { return labels_; }  // sorted

  bool contains(const std::string& label) const { return index_of(label) >= 0; }
  bool is_h(const std::string& label) const;
  int index_of(const std::string& label) const;  // -1 when absent
  const std::string& label(int idx) const { return labels_[idx]; }
  bool is_h(int idx) const { return side_h_[idx]; }

  const std::vector<int>& neighbors(int idx) const { return adj_[idx]; }  // sorted
  bool has_edge(const std::string& a, const std::string& b) const;
  bool has_edge(int a, int b) const;
  int degree(int idx) const { return static_cast<int>(adj_[idx].size()); }

  std::vector<std::string> h_labels() const;  // sorted
  std::vector<std::string> v_labels() const;  // sorted
  // Edges as (h label, v label), sorted.
  std::vector<std::pair<std::string, std::string>> edges() const;

  // Strict equality: same labels, same sides, same edges.
  bool operator==(const BipartiteGraph& o) const;
  // Same vertex set and same edge set, ignoring which side each vertex is on.
  bool same_edges(const BipartiteGraph& o) const;

 private:
  std::vector<std::string> labels_;  // sorted, defines vertex indices
  std::vector<bool> side_h_;
  std::vector<std::vector<int>> adj_;  // sorted neighbor indices
  size_t edge_count_ = 0;

  friend BipartiteGraph make_graph_raw(std::vector<std::string>, std::vector<bool>,
                                       std::vector<std::pair<int, int>>);
};

bool is_connected(const BipartiteGraph& g);
bool is_tree(const BipartiteGraph& g);

// Length of a shortest cycle; std::nullopt when the graph is acyclic.
std::optional<int> girth(const BipartiteGraph& g);

// --- named generators ----------------------------------------------------
//
// All generators label vertices deterministically and derive the sides by
// 2-coloring as in from_edges.

// Cycle on `total` vertices (even, >= 4), labels "0".."total-1" around the
// cycle; even labels end up on the H side.
BipartiteGraph gen_cycle(int total);

// Star K_{1,k}: center "0" (H side), leaves "1".."k".
BipartiteGraph gen_star(int k);

// Rooted tree from a parent array: parent[i] == -1 exactly for the root,
// otherwise an index of another vertex.  Labels "0".."n-1".
BipartiteGraph gen_tree_from_parents(const std::vector<int>& parent);

// K_{3,3} on {a1,a2,a3} x {b1,b2,b3} with each matching edge a_i b_i replaced
// by a two-inner-vertex path a_i - p_i - q_i - b_i: 12 vertices, 18 edges.
BipartiteGraph gen_k33_plus_paths();

// Two 4-cycles (a1,c1,a2,c2) and (b1,d1,b2,d2) linked by the length-two
// paths a1-m1-b1 and a2-m2-b2: 10 vertices, 12 edges.
BipartiteGraph gen_s_graph();

// Tree family with fast-growing bounding boxes: t_family(2) is the star with
// 17 vertices; t_family(n) is a root with 16n+1 children, each child also
// adjacent to the root of a fresh copy of t_family(n-1).
BipartiteGraph t_family(int n);

}  // namespace ugig
