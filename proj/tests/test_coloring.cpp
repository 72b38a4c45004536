#include <doctest.h>

#include <sstream>

#include "tdc/coloring.hpp"
#include "tdc/errors.hpp"

using namespace tdc;

namespace {

std::vector<int> as_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_SUITE("coloring") {

TEST_CASE("coloring rejects gaps in the palette") {
  CHECK_THROWS_AS(Coloring({0, 2}), std::invalid_argument);
  CHECK(Coloring::normalized(std::vector<int>{5, 3, 5}).colors()[1] == 1);
  const Coloring f({0, 1, 0, 2});
  CHECK(f.num_classes() == 3);
  CHECK(f.color_class(0) == (bit(0) | bit(2)));
}

TEST_CASE("TD predicate on paths") {
  const Graph p4 = path(4);
  CHECK(is_td_coloring(p4, Coloring({0, 1, 2, 0})));
  CHECK_FALSE(is_td_coloring(p4, Coloring({0, 1, 0, 1})));
  CHECK_FALSE(is_proper(p4, Coloring({0, 0, 1, 2})));
  CHECK(dominated_class_of(p4, Coloring({0, 1, 2, 0}), 0) == 1);
  CHECK(td_status(Graph(2), Coloring({0, 1})) == TdStatus::undefined);
  CHECK_THROWS_AS(is_td_coloring(Graph(2), Coloring({0, 1})), UndefinedInstance);
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(Graph(3)).value == 1);
  CHECK(chromatic_number(cycle(5)).value == 3);
  CHECK(chromatic_number(cycle(6)).value == 2);
  CHECK(chromatic_number(complete(6)).value == 6);
  CHECK(chromatic_number(friendship(3)).value == 3);
  const Graph c7 = cycle(7);
  CHECK(is_proper(c7, chromatic_number(c7).witness));
}

TEST_CASE("total domination number") {
  CHECK(total_domination_number(path(2)).value == 2);
  CHECK(total_domination_number(path(6)).value == 4);
  CHECK(total_domination_number(cycle(5)).value == 3);
  CHECK(total_domination_number(star(5)).value == 2);
  CHECK(total_domination_number(complete(4)).value == 2);
  CHECK_THROWS_AS(total_domination_number(path(1)), UndefinedInstance);
}

TEST_CASE("coloring text format") {
  std::istringstream in("3\n0 0\n1 1\n2 2\n3 0\n");
  const Coloring f = read_coloring(in, 4);
  CHECK(as_vector(f.colors()) == std::vector<int>{0, 1, 2, 0});
  std::ostringstream out;
  write_coloring(out, f);
  std::istringstream back(out.str());
  CHECK(as_vector(read_coloring(back, 4).colors()) == as_vector(f.colors()));
  std::istringstream missing("2\n0 0\n");
  CHECK_THROWS_AS(read_coloring(missing, 2), std::invalid_argument);
}

}
