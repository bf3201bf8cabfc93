#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "spingraph/graph.hpp"

using namespace spingraph;

TEST_CASE("graphs build with stable indices") {
  GraphSpec gs;
  gs.vertices = {"a", "b", "c"};
  gs.edges = {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "a"}};
  OrientedGraph g = build_graph(gs, true);
  CHECK(g.vertices.size() == 3);
  CHECK(g.edges.size() == 3);
  CHECK(g.vertex_index("b") == 1);
  CHECK(g.edge_index("e3") == 2);
  CHECK(g.edges[0].source == 0);
  CHECK(g.edges[0].target == 1);
  CHECK(g.connected);
}

TEST_CASE("invalid references name the offending id") {
  GraphSpec gs;
  gs.vertices = {"a"};
  gs.edges = {{"e1", "a", "zz"}};
  try {
    build_graph(gs, false);
    FAIL("expected a spec error");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("zz") != std::string::npos);
  }

  GraphSpec dup;
  dup.vertices = {"a", "a"};
  CHECK_THROWS_AS(build_graph(dup, false), SpecError);

  GraphSpec dupe;
  dupe.vertices = {"a", "b"};
  dupe.edges = {{"e", "a", "b"}, {"e", "b", "a"}};
  CHECK_THROWS_AS(build_graph(dupe, false), SpecError);
}

TEST_CASE("connectivity is detected") {
  GraphSpec gs;
  gs.vertices = {"a", "b", "c"};
  gs.edges = {{"e1", "a", "b"}};
  OrientedGraph g = build_graph(gs, false);
  CHECK(!g.connected);
  CHECK_THROWS_AS(build_graph(gs, true), SpecError);

  GraphSpec loop;
  loop.vertices = {"v"};
  loop.edges = {{"e", "v", "v"}};
  CHECK(build_graph(loop, true).connected);
}

TEST_CASE("stars collect incident edges with loops on both sides") {
  GraphSpec gs;
  gs.vertices = {"v", "w"};
  gs.edges = {{"l", "v", "v"}, {"e", "v", "w"}, {"f", "w", "v"}};
  OrientedGraph g = build_graph(gs, true);

  Star sv = star(g, 0);
  CHECK(sv.out_edges == std::vector<int>{0, 1});
  CHECK(sv.in_edges == std::vector<int>{0, 2});
  CHECK(sv.degree() == 4);

  Star sw = star(g, 1);
  CHECK(sw.out_edges == std::vector<int>{2});
  CHECK(sw.in_edges == std::vector<int>{1});
  CHECK(sw.degree() == 2);
}
