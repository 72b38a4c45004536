#include "tdc/explorer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "tdc/canonical.hpp"
#include "tdc/errors.hpp"
#include "tdc/solver.hpp"

namespace tdc {

namespace {

void check_enumeration_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration order " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxEnumerationOrder) + "]");
  }
}

// Pair t of the graph6 column order (0,1), (0,2), (1,2), (0,3), ...
std::vector<Edge> pair_order(int n) {
  std::vector<Edge> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.push_back({u, v});
  return pairs;
}

}  // namespace

std::vector<Graph> isomorphism_classes(int n) {
  check_enumeration_order(n);
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    std::map<std::uint64_t, Graph> next;
    for (const Graph& g : level) {
      std::vector<VertexMask> base(g.adjacency().begin(), g.adjacency().end());
      base.push_back(0);
      const int fresh = order - 1;
      for (VertexMask nb = 0; nb < bit(fresh); ++nb) {
        std::vector<VertexMask> adj = base;
        adj[static_cast<std::size_t>(fresh)] = nb;
        for (VertexMask rest = nb; rest != 0; rest &= rest - 1) {
          adj[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(fresh);
        }
        const Graph h = Graph::from_adjacency(std::move(adj));
        const CanonicalForm cf = canonical_form(h);
        if (!next.contains(cf.code)) next.emplace(cf.code, relabel(h, cf.perm));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

GraphStream::GraphStream(int n, GraphFilter filter, bool dedup) : n_(n), filter_(filter), dedup_(dedup) {
  check_enumeration_order(n);
  bits_ = n * (n - 1) / 2;
  pairs_ = pair_order(n);
  if (dedup_) classes_ = isomorphism_classes(n);
}

bool GraphStream::accept(const Graph& g) const {
  switch (filter_) {
    case GraphFilter::any:
      return true;
    case GraphFilter::connected:
      return is_connected(g);
    case GraphFilter::no_isolated_vertex:
      return !has_isolated_vertex(g);
  }
  return false;
}

std::optional<Graph> GraphStream::next() {
  if (dedup_) {
    while (class_cursor_ < classes_.size()) {
      const Graph& g = classes_[class_cursor_++];
      if (accept(g)) return g;
    }
    return std::nullopt;
  }
  const std::uint64_t total = std::uint64_t{1} << bits_;
  while (cursor_ < total) {
    const std::uint64_t code = cursor_++;
    std::vector<VertexMask> adj(static_cast<std::size_t>(n_), 0);
    for (int t = 0; t < bits_; ++t) {
      if ((code >> (bits_ - 1 - t)) & 1) {
        const Edge& e = pairs_[static_cast<std::size_t>(t)];
        adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
        adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
      }
    }
    Graph g = Graph::from_adjacency(std::move(adj));
    if (accept(g)) return g;
  }
  return std::nullopt;
}

std::vector<Graph> GraphStream::collect() {
  std::vector<Graph> out;
  while (auto g = next()) out.push_back(std::move(*g));
  return out;
}

GraphStream enumerate_graphs(int n, GraphFilter filter, bool dedup) { return GraphStream(n, filter, dedup); }

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p must lie in [0, 1]");
  EdgeSet edges;
  for (const Edge& e : pair_order(n)) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p) edges.push_back(e);
  }
  return Graph::from_edges(n, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_graph(n, p, rng);
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  if (n > 1 && p <= 0.0) throw std::invalid_argument("random_connected_graph: p must be positive");
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

ConjectureFinding evaluate_conjecture(const Graph& g, DegenerateConvention convention, ScanPopulation population) {
  ConjectureFinding f;
  f.graph6 = write_graph6(g);
  f.order = g.order();
  f.min_degree = min_degree(g);
  f.convention = convention;
  f.population = population;
  const PerturbationResult st = stability(g, convention);
  f.tdc = st.base_value;
  f.stability = st.value;
  if (!st.value) {
    f.verdict = "undetermined";
  } else {
    f.verdict = (*st.value == 1 || *st.value == 2) ? "consistent" : "counterexample";
  }
  return f;
}

std::vector<ConjectureFinding> conjecture_scan(int max_n, DegenerateConvention convention, ScanPopulation population) {
  if (max_n > kMaxEnumerationOrder) {
    throw CapExceeded("conjecture_scan: max_n " + std::to_string(max_n) + " exceeds " +
                      std::to_string(kMaxEnumerationOrder));
  }
  std::vector<ConjectureFinding> out;
  const GraphFilter filter =
      population == ScanPopulation::connected ? GraphFilter::connected : GraphFilter::no_isolated_vertex;
  for (int n = 2; n <= max_n; ++n) {
    GraphStream stream(n, filter, true);
    while (auto g = stream.next()) {
      if (has_isolated_vertex(*g)) continue;
      bool low_degree = false;
      for (int v = 0; v < g->order(); ++v) low_degree |= (g->degree(v) == 1 || g->degree(v) == 2);
      if (!low_degree) continue;
      out.push_back(evaluate_conjecture(*g, convention, population));
    }
  }
  return out;
}

}  // namespace tdc
