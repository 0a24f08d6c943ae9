#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ugig/graph.hpp"

using namespace ugig;

TEST_CASE("build validates input") {
  CHECK_THROWS_AS(BipartiteGraph::build({"a", "a"}, {"b"}, {}), Error);
  CHECK_THROWS_AS(BipartiteGraph::build({"a"}, {"a"}, {}), Error);
  CHECK_THROWS_AS(BipartiteGraph::build({"a"}, {"b"}, {{"a", "c"}}), Error);
  CHECK_THROWS_AS(BipartiteGraph::build({"a", "c"}, {"b"}, {{"a", "c"}}), Error);

  auto g = BipartiteGraph::build({"h"}, {"v"}, {{"v", "h"}, {"h", "v"}});
  CHECK(g.edge_count() == 1);  // duplicates collapse, either endpoint order
  CHECK(g.has_edge("h", "v"));
  CHECK(g.is_h("h"));
  CHECK_FALSE(g.is_h("v"));
}

TEST_CASE("from_edges 2-colors with smallest label on H") {
  auto g = BipartiteGraph::from_edges({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK(g.is_h("x"));
  CHECK_FALSE(g.is_h("y"));
  CHECK(g.is_h("z"));
  CHECK_THROWS_AS(
      BipartiteGraph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
      Error);  // triangle
  // isolated vertices land on H
  auto h = BipartiteGraph::from_edges({"p", "q"}, {});
  CHECK(h.is_h("p"));
  CHECK(h.is_h("q"));
}

TEST_CASE("equality and same_edges") {
  auto a = BipartiteGraph::build({"h"}, {"v"}, {{"h", "v"}});
  auto b = BipartiteGraph::build({"h"}, {"v"}, {{"h", "v"}});
  auto c = BipartiteGraph::build({"v"}, {"h"}, {{"h", "v"}});  // sides swapped
  CHECK(a == b);
  CHECK(!(a == c));
  CHECK(a.same_edges(c));
}

TEST_CASE("cycle generator") {
  CHECK_THROWS_AS(gen_cycle(5), Error);
  CHECK_THROWS_AS(gen_cycle(2), Error);
  for (int n = 4; n <= 14; n += 2) {
    auto g = gen_cycle(n);
    CHECK(g.vertex_count() == static_cast<size_t>(n));
    CHECK(g.edge_count() == static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      CHECK(g.has_edge(std::to_string(i), std::to_string((i + 1) % n)));
      CHECK(g.degree(g.index_of(std::to_string(i))) == 2);
      CHECK(g.is_h(std::to_string(i)) == (i % 2 == 0));
    }
    CHECK(girth(g) == n);
    CHECK(is_connected(g));
    CHECK_FALSE(is_tree(g));
  }
}

TEST_CASE("star and parent-array trees") {
  auto s = gen_star(16);
  CHECK(s.vertex_count() == 17);
  CHECK(s.edge_count() == 16);
  CHECK(s.is_h("0"));
  CHECK(is_tree(s));
  CHECK_FALSE(girth(s).has_value());

  CHECK_THROWS_AS(gen_tree_from_parents({0}), Error);
  CHECK_THROWS_AS(gen_tree_from_parents({-1, -1}), Error);
  CHECK_THROWS_AS(gen_tree_from_parents({1, 0}), Error);  // 2-cycle via parents
  auto t = gen_tree_from_parents({-1, 0, 0, 1, 1, 2});
  CHECK(is_tree(t));
  CHECK(t.edge_count() == 5);
  CHECK(t.is_h("0"));
  CHECK_FALSE(t.is_h("1"));
  CHECK(t.is_h("3"));
}

TEST_CASE("k33_plus_paths shape") {
  auto g = gen_k33_plus_paths();
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 18);
  CHECK(girth(g) == 4);
  CHECK(is_connected(g));
  // a's and q's share a side, b's and p's the other
  CHECK(g.is_h("a1"));
  CHECK(g.is_h("q2"));
  CHECK_FALSE(g.is_h("b3"));
  CHECK_FALSE(g.is_h("p1"));
  CHECK_FALSE(g.has_edge("a1", "b1"));
  CHECK(g.has_edge("a1", "b2"));
  CHECK(g.has_edge("a2", "p2"));
  CHECK(g.has_edge("p2", "q2"));
  CHECK(g.has_edge("q2", "b2"));
}

TEST_CASE("s_graph shape") {
  auto g = gen_s_graph();
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 12);
  CHECK(girth(g) == 4);
  CHECK(is_connected(g));
  CHECK(g.is_h("a1"));
  CHECK(g.is_h("b2"));
  CHECK_FALSE(g.is_h("m1"));
  CHECK_FALSE(g.is_h("c2"));
  std::vector<int> degs;
  for (size_t i = 0; i < g.vertex_count(); ++i) degs.push_back(g.degree(static_cast<int>(i)));
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{2, 2, 2, 2, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("t_family sizes") {
  CHECK_THROWS_AS(t_family(1), Error);
  auto t2 = t_family(2);
  CHECK(t2 == gen_star(16));
  auto t3 = t_family(3);
  CHECK(t3.vertex_count() == 883);
  CHECK(is_tree(t3));
  auto t4 = t_family(4);
  CHECK(t4.vertex_count() == 57461);
  CHECK(t4.edge_count() == 57460);
  CHECK(t4.degree(t4.index_of("0")) == 65);
}

TEST_CASE("girth on assorted graphs") {
  // two 4-cycles joined by a path of length 2 (the s-graph skeleton) has girth 4
  auto g = BipartiteGraph::build({"h1", "h2"}, {"u", "w"},
                                 {{"h1", "u"}, {"h1", "w"}, {"h2", "u"}, {"h2", "w"}});
  CHECK(girth(g) == 4);
  auto k33 = BipartiteGraph::build(
      {"a1", "a2", "a3"}, {"b1", "b2", "b3"},
      {{"a1", "b1"}, {"a1", "b2"}, {"a1", "b3"}, {"a2", "b1"}, {"a2", "b2"},
       {"a2", "b3"}, {"a3", "b1"}, {"a3", "b2"}, {"a3", "b3"}});
  CHECK(girth(k33) == 4);
}
