#include <doctest.h>

#include <sstream>

#include "tdc/canonical.hpp"
#include "tdc/explorer.hpp"
#include "tdc/graph.hpp"

using namespace tdc;

TEST_SUITE("graph") {

TEST_CASE("family generators have the expected order and size") {
  CHECK(path(1).order() == 1);
  CHECK(path(5).size() == 4);
  CHECK(cycle(6).size() == 6);
  CHECK(complete(5).size() == 10);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(star(4).order() == 5);
  CHECK(star(4).size() == 4);
  CHECK(friendship(3).order() == 7);
  CHECK(friendship(3).size() == 9);
  CHECK(book(3).order() == 8);
  CHECK(book(3).size() == 10);
  CHECK(complete_minus_edge(4).size() == 5);
  CHECK_FALSE(complete_minus_edge(4).adjacent(0, 1));
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("book is the product of a star with an edge") {
  for (int n = 1; n <= 4; ++n) CHECK(is_isomorphic(book(n), cartesian_product(star(n), path(2))));
}

TEST_CASE("neighbourhood corona size laws") {
  for (int n1 = 1; n1 <= 4; ++n1) {
    for (int n2 = 1; n2 <= 3; ++n2) {
      const Graph g1 = cycle(std::max(3, n1 + 2));
      const Graph g2 = path(n2);
      const Graph c = neighbourhood_corona(g1, g2);
      CHECK(c.order() == g1.order() * (1 + g2.order()));
      int deg_sum = 0;
      for (int v = 0; v < g1.order(); ++v) deg_sum += degree(g1, v);
      CHECK(c.size() == g1.size() + g1.order() * g2.size() + g2.order() * deg_sum);
    }
  }
  CHECK(is_isomorphic(neighbourhood_corona(path(2), complete(1)), path(4)));
  const Graph c = neighbourhood_corona(path(3), complete(2));
  CHECK(c.adjacent(1, corona_copy_vertex(path(3), complete(2), 0, 0)));
  CHECK_FALSE(c.adjacent(0, corona_copy_vertex(path(3), complete(2), 0, 0)));
}

TEST_CASE("r-gluing") {
  const std::vector<int> k4{0, 1, 2, 3};
  const std::vector<int> k5{0, 1, 2, 3};
  const std::vector<int> id{0, 1, 2, 3};
  CHECK(r_gluing(complete(4), complete(5), k4, k5, id) == complete(5));
  const Graph g = r_gluing(cycle(4), complete(3), 1);
  CHECK(g.order() == 6);
  CHECK(g.size() == 7);
  CHECK(is_isomorphic(r_gluing(path(3), path(3), std::vector<int>{0}, std::vector<int>{0}, std::vector<int>{0}),
                      path(5)));
  CHECK(r_gluing(path(2), path(3), 0).order() == 5);
  const std::vector<int> not_clique{0, 2};
  const std::vector<int> edge{0, 1};
  const std::vector<int> ident{0, 1};
  CHECK_THROWS_AS(r_gluing(cycle(4), path(2), not_clique, edge, ident), std::invalid_argument);
}

TEST_CASE("delete operations relabel in order") {
  const std::vector<int> removed{0};
  CHECK(delete_vertices(path(4), removed) == path(3));
  const std::vector<Edge> e{{1, 2}};
  const Graph g = delete_edges(path(4), e);
  CHECK(g.size() == 2);
  CHECK(has_isolated_vertex(delete_edges(path(3), std::vector<Edge>{{0, 1}})));
  CHECK(complement(complement(friendship(2))) == friendship(2));
}

TEST_CASE("graph6 known strings") {
  CHECK(write_graph6(path(2)) == "A_");
  CHECK(parse_graph6("A_") == path(2));
  CHECK(parse_graph6("D??").order() == 5);
  CHECK(parse_graph6("D??").size() == 0);
  CHECK(parse_graph6(">>graph6<<A_") == path(2));
  CHECK(write_graph6(complete(4)) == "C~");
  CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("A_x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("A "), std::invalid_argument);
}

TEST_CASE("graph6 round trip on connected graphs up to 7 vertices") {
  int total = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : isomorphism_classes(n)) {
      if (!is_connected(g)) continue;
      CHECK(parse_graph6(write_graph6(g)) == g);
      ++total;
    }
  }
  CHECK(total == 1 + 1 + 2 + 6 + 21 + 112 + 853);
  const Graph big = cycle(63);
  CHECK(parse_graph6(write_graph6(big)) == big);
  CHECK(write_graph6(big).front() == '~');
}

TEST_CASE("edge list round trip") {
  std::stringstream s;
  write_edge_list(s, friendship(2));
  CHECK(read_edge_list(s) == friendship(2));
  std::istringstream bad("3 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
}

TEST_CASE("canonical form is label invariant") {
  const Graph g = friendship(2);
  const std::vector<int> perm{4, 2, 0, 3, 1};
  CHECK(canonical_form(g).code == canonical_form(relabel(g, perm)).code);
  CHECK_FALSE(is_isomorphic(path(4), star(3)));
  CHECK(is_isomorphic(cycle(4), complete_bipartite(2, 2)));
}

}
