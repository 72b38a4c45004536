#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

/// A graph together with the text that rebuilds it: a family spec such as
/// "cycle:9" or "complete_bipartite:3:3", or a raw graph6 string.
struct NamedGraph {
  std::string spec;
  Graph graph;
};

/// Family spec grammar: name(:int)*. Known names: path, cycle, complete,
/// complete_bipartite (two args), star, friendship, book, complete_minus_edge,
/// empty. Anything without a ':' is decoded as graph6 (graph6 bytes never
/// include ':').
Graph parse_graph_spec(std::string_view spec);

std::vector<std::string> family_names();

/// Every connected family member with 1 <= order <= max_order, one spec per
/// isomorphism class (first spec in generation order wins).
std::vector<NamedGraph> connected_family_pool(int max_order);

}  // namespace tdc
