#include "ugig/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ugig/kernels.hpp"

namespace ugig {

namespace {

void check_labels_unique(const std::vector<std::string>& sorted) {
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) fail(ErrorCode::DuplicateLabel, sorted[i]);
  }
}

}  // namespace

BipartiteGraph make_graph_raw(std::vector<std::string> labels, std::vector<bool> side_h,
                              std::vector<std::pair<int, int>> edges) {
  BipartiteGraph g;
  g.labels_ = std::move(labels);
  g.side_h_ = std::move(side_h);
  g.adj_.assign(g.labels_.size(), {});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto& [a, b] : edges) {
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.edge_count_ = edges.size();
  return g;
}

BipartiteGraph BipartiteGraph::build(
    const std::vector<std::string>& h_side, const std::vector<std::string>& v_side,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::string> labels = h_side;
  labels.insert(labels.end(), v_side.begin(), v_side.end());
  std::sort(labels.begin(), labels.end());
  check_labels_unique(labels);

  std::map<std::string, int> idx;
  for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
  std::vector<bool> side(labels.size(), false);
  for (const auto& h : h_side) side[idx[h]] = true;

  std::vector<std::pair<int, int>> e;
  e.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) fail(ErrorCode::UnknownVertex, a);
    if (ib == idx.end()) fail(ErrorCode::UnknownVertex, b);
    if (side[ia->second] == side[ib->second])
      fail(ErrorCode::EdgeWithinPartition, a + " -- " + b);
    e.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
  }
  return make_graph_raw(std::move(labels), std::move(side), std::move(e));
}

BipartiteGraph BipartiteGraph::from_edges(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::string> labels = vertices;
  std::sort(labels.begin(), labels.end());
  check_labels_unique(labels);
  std::map<std::string, int> idx;
  for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> adj(labels.size());
  std::vector<std::pair<int, int>> e;
  for (const auto& [a, b] : edges) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) fail(ErrorCode::UnknownVertex, a);
    if (ib == idx.end()) fail(ErrorCode::UnknownVertex, b);
    if (ia->second == ib->second) fail(ErrorCode::EdgeWithinPartition, a + " -- " + a);
    adj[ia->second].push_back(ib->second);
    adj[ib->second].push_back(ia->second);
    e.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
  }

  // 2-color component by component; labels_ is sorted, so scanning indices in
  // order makes the smallest label of each component the H-colored seed.
  std::vector<int> color(labels.size(), -1);
  for (size_t s = 0; s < labels.size(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 1;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          fail(ErrorCode::OddCycle, labels[u] + " / " + labels[w]);
        }
      }
    }
  }
  std::vector<bool> side(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) side[i] = color[i] == 1;
  return make_graph_raw(std::move(labels), std::move(side), std::move(e));
}

int BipartiteGraph::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

bool BipartiteGraph::is_h(const std::string& label) const {
  int i = index_of(label);
  if (i < 0) fail(ErrorCode::UnknownVertex, label);
  return side_h_[i];
}

bool BipartiteGraph::has_edge(int a, int b) const {
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool BipartiteGraph::has_edge(const std::string& a, const std::string& b) const {
  int ia = index_of(a), ib = index_of(b);
  if (ia < 0) fail(ErrorCode::UnknownVertex, a);
  if (ib < 0) fail(ErrorCode::UnknownVertex, b);
  return has_edge(ia, ib);
}

std::vector<std::string> BipartiteGraph::h_labels() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < labels_.size(); ++i)
    if (side_h_[i]) out.push_back(labels_[i]);
  return out;
}

std::vector<std::string> BipartiteGraph::v_labels() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < labels_.size(); ++i)
    if (!side_h_[i]) out.push_back(labels_[i]);
  return out;
}

std::vector<std::pair<std::string, std::string>> BipartiteGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (!side_h_[i]) continue;
    for (int w : adj_[i]) out.emplace_back(labels_[i], labels_[w]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool BipartiteGraph::operator==(const BipartiteGraph& o) const {
  return labels_ == o.labels_ && side_h_ == o.side_h_ && adj_ == o.adj_;
}

bool BipartiteGraph::same_edges(const BipartiteGraph& o) const {
  return labels_ == o.labels_ && adj_ == o.adj_;
}

bool is_connected(const BipartiteGraph& g) {
  size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  size_t cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++cnt;
        q.push(w);
      }
    }
  }
  return cnt == n;
}

bool is_tree(const BipartiteGraph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::optional<int> girth(const BipartiteGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (size_t i = 0; i < g.vertex_count(); ++i) adj[i] = g.neighbors(static_cast<int>(i));
  return kernels::girth(adj);
}

BipartiteGraph gen_cycle(int total) {
  if (total < 4 || total % 2 != 0) fail(ErrorCode::BadParams, "cycle length must be even, >= 4");
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < total; ++i) vs.push_back(std::to_string(i));
  for (int i = 0; i < total; ++i) es.emplace_back(vs[i], vs[(i + 1) % total]);
  return BipartiteGraph::from_edges(vs, es);
}

BipartiteGraph gen_star(int k) {
  if (k < 1) fail(ErrorCode::BadParams, "star needs at least one leaf");
  std::vector<std::string> vs{"0"};
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i <= k; ++i) {
    vs.push_back(std::to_string(i));
    es.emplace_back("0", vs.back());
  }
  return BipartiteGraph::from_edges(vs, es);
}

BipartiteGraph gen_tree_from_parents(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  if (n == 0) fail(ErrorCode::BadParams, "empty parent array");
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    if (parent[i] == -1) {
      ++roots;
      continue;
    }
    if (parent[i] < 0 || parent[i] >= n || parent[i] == i)
      fail(ErrorCode::BadParams, "parent index out of range at " + std::to_string(i));
  }
  if (roots != 1) fail(ErrorCode::BadParams, "parent array must have exactly one root");
  // acyclicity: walking up from every vertex must reach the root
  for (int i = 0; i < n; ++i) {
    int steps = 0, u = i;
    while (parent[u] != -1) {
      u = parent[u];
      if (++steps > n) fail(ErrorCode::BadParams, "parent array contains a cycle");
    }
  }
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    if (parent[i] != -1) es.emplace_back(vs[i], vs[parent[i]]);
  return BipartiteGraph::from_edges(vs, es);
}

BipartiteGraph gen_k33_plus_paths() {
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i <= 3; ++i) {
    vs.push_back("a" + std::to_string(i));
    vs.push_back("b" + std::to_string(i));
    vs.push_back("p" + std::to_string(i));
    vs.push_back("q" + std::to_string(i));
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) es.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
  // the matching edges a_i b_i are subdivided twice each
  for (int i = 1; i <= 3; ++i) {
    std::string s = std::to_string(i);
    es.emplace_back("a" + s, "p" + s);
    es.emplace_back("p" + s, "q" + s);
    es.emplace_back("q" + s, "b" + s);
  }
  return BipartiteGraph::from_edges(vs, es);
}

BipartiteGraph gen_s_graph() {
  std::vector<std::string> vs = {"a1", "a2", "b1", "b2", "c1",
                                 "c2", "d1", "d2", "m1", "m2"};
  std::vector<std::pair<std::string, std::string>> es = {
      {"a1", "c1"}, {"a1", "c2"}, {"a2", "c1"}, {"a2", "c2"},  // first 4-cycle
      {"b1", "d1"}, {"b1", "d2"}, {"b2", "d1"}, {"b2", "d2"},  // second 4-cycle
      {"a1", "m1"}, {"m1", "b1"},                              // linking paths
      {"a2", "m2"}, {"m2", "b2"},
  };
  return BipartiteGraph::from_edges(vs, es);
}

namespace {

// Emits the subtree rooted at `root_label` into vs/es; `next` is the running
// label counter.
void t_family_rec(int n, const std::string& root_label, long long& next,
                  std::vector<std::string>& vs,
                  std::vector<std::pair<std::string, std::string>>& es) {
  if (n == 2) {
    for (int i = 0; i < 16; ++i) {
      std::string leaf = std::to_string(next++);
      vs.push_back(leaf);
      es.emplace_back(root_label, leaf);
    }
    return;
  }
  for (int i = 0; i < 16 * n + 1; ++i) {
    std::string child = std::to_string(next++);
    vs.push_back(child);
    es.emplace_back(root_label, child);
    std::string sub_root = std::to_string(next++);
    vs.push_back(sub_root);
    es.emplace_back(child, sub_root);
    t_family_rec(n - 1, sub_root, next, vs, es);
  }
}

}  // namespace

BipartiteGraph t_family(int n) {
  if (n < 2) fail(ErrorCode::BadParams, "t_family starts at 2");
  std::vector<std::string> vs{"0"};
  std::vector<std::pair<std::string, std::string>> es;
  long long next = 1;
  t_family_rec(n, "0", next, vs, es);
  return BipartiteGraph::from_edges(vs, es);
}

}  // namespace ugig
