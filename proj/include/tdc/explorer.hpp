#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tdc/graph.hpp"
#include "tdc/perturbation.hpp"

namespace tdc {

inline constexpr int kMaxEnumerationOrder = 8;

enum class GraphFilter { any, connected, no_isolated_vertex };

/// Lazily yields graphs on n labelled vertices.
///
/// Without dedup, adjacency upper triangles are counted through in
/// lexicographic order of their graph6 bit strings, so each labelled graph
/// appears once. With dedup, one canonical representative per isomorphism
/// class is yielded, ordered by canonical code; classes are grown by adding a
/// vertex to every class of order n-1.
class GraphStream {
 public:
  GraphStream(int n, GraphFilter filter, bool dedup = false);

  std::optional<Graph> next();

  /// Drains the remaining stream.
  std::vector<Graph> collect();

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] bool dedup() const { return dedup_; }

 private:
  [[nodiscard]] bool accept(const Graph& g) const;

  int n_;
  GraphFilter filter_;
  bool dedup_;
  int bits_ = 0;
  std::vector<Edge> pairs_;
  std::uint64_t cursor_ = 0;
  std::vector<Graph> classes_;
  std::size_t class_cursor_ = 0;
};

GraphStream enumerate_graphs(int n, GraphFilter filter, bool dedup);

/// Canonical representatives of every isomorphism class of order n.
std::vector<Graph> isomorphism_classes(int n);

/// G(n, p): pairs in graph6 order, each kept when the next mt19937_64 draw,
/// scaled to [0, 1) by its top 53 bits, is below p.
Graph random_graph(int n, double p, std::uint64_t seed);
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// Draws from rng until a connected graph appears.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

enum class ScanPopulation { connected, no_isolated_vertex };

struct ConjectureFinding {
  std::string graph6;
  int order = 0;
  int min_degree = 0;
  int tdc = 0;
  std::optional<int> stability;
  DegenerateConvention convention = DegenerateConvention::undefined_counts_as_changed;
  ScanPopulation population = ScanPopulation::connected;
  /// "consistent" (stability in {1, 2}), "counterexample", or "undetermined"
  /// when no removal changes the value under the convention.
  std::string verdict;
};

/// Every graph of order 2..max_n in the population (up to isomorphism) that
/// has a vertex of degree one or two gets one finding.
std::vector<ConjectureFinding> conjecture_scan(int max_n, DegenerateConvention convention,
                                               ScanPopulation population = ScanPopulation::connected);

/// Recomputes a finding's verdict from its graph.
ConjectureFinding evaluate_conjecture(const Graph& g, DegenerateConvention convention, ScanPopulation population);

}  // namespace tdc
