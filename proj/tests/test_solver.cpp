#include <doctest.h>

#include <algorithm>

#include "tdc/coloring.hpp"
#include "tdc/errors.hpp"
#include "tdc/explorer.hpp"
#include "tdc/solver.hpp"

using namespace tdc;

TEST_SUITE("solver") {

TEST_CASE("small known values") {
  CHECK(tdc_number(path(2)).value == 2);
  CHECK(tdc_number(path(3)).value == 2);
  CHECK(tdc_number(path(4)).value == 3);
  CHECK(tdc_number(cycle(3)).value == 3);
  CHECK(tdc_number(cycle(4)).value == 2);
  CHECK(tdc_number(complete(5)).value == 5);
  CHECK(tdc_number(star(6)).value == 2);
  CHECK(tdc_number(complete_bipartite(3, 3)).value == 2);
  CHECK(tdc_number(friendship(3)).value == 3);
}

TEST_CASE("witness is a TD-colouring with the reported number of classes") {
  for (const Graph& g : {cycle(10), path(11), friendship(4), book(4)}) {
    const TdcResult r = tdc_number(g);
    REQUIRE(r.exact());
    CHECK(r.witness->num_classes() == *r.value);
    CHECK(is_td_coloring(g, *r.witness));
    CHECK(r.lower_bound <= *r.value);
  }
}

TEST_CASE("undefined and capped instances") {
  CHECK_THROWS_AS(tdc_number(path(1)), UndefinedInstance);
  CHECK_THROWS_AS(tdc_number(Graph(0)), UndefinedInstance);
  CHECK_FALSE(tdc_value_if_defined(Graph(3)).has_value());
  SolverOptions small;
  small.max_order = 5;
  CHECK_THROWS_AS(tdc_number(path(6), small), CapExceeded);
  CHECK_THROWS_AS(tdc_brute_force(path(9)), CapExceeded);
}

TEST_CASE("decision is monotone in k") {
  const Graph g = cycle(8);
  const int value = *tdc_number(g).value;
  for (int k = 1; k <= g.order(); ++k) CHECK(tdc_decision(g, k).has_value() == (k >= value));
}

TEST_CASE("oracle agreement on every connected graph up to 6 vertices") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : isomorphism_classes(n)) {
      if (!is_connected(g)) continue;
      CHECK(*tdc_number(g).value == tdc_brute_force(g));
    }
  }
}

TEST_CASE("oracle agreement on seeded random graphs of order 8") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_connected_graph(8, 0.35, rng);
    CHECK(*tdc_number(g).value == tdc_brute_force(g));
  }
}

TEST_CASE("bounds bracket the value") {
  for (const Graph& g : {cycle(9), book(3), complete_minus_edge(5)}) {
    const int value = *tdc_number(g).value;
    CHECK(tdc_lower_bound(g) <= value);
    CHECK(tdc_upper_bound(g).value >= value);
    CHECK(is_td_coloring(g, tdc_upper_bound(g).witness));
  }
}

TEST_CASE("results are deterministic") {
  const TdcResult a = tdc_number(cycle(11));
  const TdcResult b = tdc_number(cycle(11));
  CHECK(std::ranges::equal(a.witness->colors(), b.witness->colors()));
  CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("an exhausted time budget reports unknown") {
  SolverOptions o;
  o.time_budget = std::chrono::milliseconds(0);
  const TdcResult r = tdc_number(neighbourhood_corona(friendship(2), cycle(4)), o);
  if (!r.exact()) {
    CHECK_FALSE(r.value.has_value());
    CHECK(r.lower_bound >= 1);
  }
}

}
