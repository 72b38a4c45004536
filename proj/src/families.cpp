#include "tdc/families.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "tdc/canonical.hpp"

namespace tdc {

namespace {

std::vector<int> split_args(std::string_view rest, std::string_view spec) {
  std::vector<int> args;
  while (!rest.empty()) {
    const std::size_t colon = rest.find(':');
    const std::string_view token = rest.substr(0, colon);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("graph spec '" + std::string(spec) + "': bad integer '" + std::string(token) + "'");
    }
    args.push_back(value);
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  return args;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"path", "cycle", "complete", "complete_bipartite", "star", "friendship", "book", "complete_minus_edge", "empty"};
}

Graph parse_graph_spec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) return parse_graph6(spec);
  const std::string_view name = spec.substr(0, colon);
  const std::vector<int> args = split_args(spec.substr(colon + 1), spec);
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw std::invalid_argument("graph spec '" + std::string(spec) + "': " + std::string(name) + " takes " +
                                  std::to_string(count) + " argument(s)");
    }
  };
  if (name == "complete_bipartite") {
    want(2);
    return complete_bipartite(args[0], args[1]);
  }
  want(1);
  const int n = args[0];
  if (name == "path") return path(n);
  if (name == "cycle") return cycle(n);
  if (name == "complete") return complete(n);
  if (name == "star") return star(n);
  if (name == "friendship") return friendship(n);
  if (name == "book") return book(n);
  if (name == "complete_minus_edge") return complete_minus_edge(n);
  if (name == "empty") return Graph(n);
  throw std::invalid_argument("graph spec '" + std::string(spec) + "': unknown family '" + std::string(name) + "'");
}

std::vector<NamedGraph> connected_family_pool(int max_order) {
  std::vector<std::string> specs;
  for (int n = 1; n <= max_order; ++n) specs.push_back("path:" + std::to_string(n));
  for (int n = 3; n <= max_order; ++n) specs.push_back("cycle:" + std::to_string(n));
  for (int n = 1; n <= max_order; ++n) specs.push_back("complete:" + std::to_string(n));
  for (int a = 1; a <= max_order; ++a)
    for (int b = a; a + b <= max_order; ++b) specs.push_back("complete_bipartite:" + std::to_string(a) + ":" + std::to_string(b));
  for (int n = 1; n + 1 <= max_order; ++n) specs.push_back("star:" + std::to_string(n));
  for (int n = 1; 2 * n + 1 <= max_order; ++n) specs.push_back("friendship:" + std::to_string(n));
  for (int n = 1; 2 * n + 2 <= max_order; ++n) specs.push_back("book:" + std::to_string(n));
  for (int n = 3; n <= max_order; ++n) specs.push_back("complete_minus_edge:" + std::to_string(n));

  std::vector<NamedGraph> pool;
  for (const std::string& spec : specs) {
    Graph g = parse_graph_spec(spec);
    if (!is_connected(g)) continue;
    bool seen = false;
    for (const NamedGraph& other : pool) seen = seen || is_isomorphic(other.graph, g);
    if (!seen) pool.push_back({spec, std::move(g)});
  }
  return pool;
}

}  // namespace tdc
