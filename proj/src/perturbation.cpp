#include "tdc/perturbation.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tdc/coloring.hpp"
#include "tdc/errors.hpp"

namespace tdc {

std::string_view to_string(DegenerateConvention c) {
  return c == DegenerateConvention::undefined_counts_as_changed ? "undefined_counts_as_changed" : "skip_undefined";
}

DegenerateConvention parse_convention(std::string_view text) {
  if (text == "changed" || text == "undefined_counts_as_changed") {
    return DegenerateConvention::undefined_counts_as_changed;
  }
  if (text == "skip" || text == "skip_undefined") return DegenerateConvention::skip_undefined;
  throw std::invalid_argument("unknown convention '" + std::string(text) + "'");
}

std::string_view to_string(PerturbationKind k) {
  return k == PerturbationKind::stability ? "stability" : "bondage";
}

bool counts_as_change(int base, std::optional<int> after, DegenerateConvention convention) {
  if (!after) return convention == DegenerateConvention::undefined_counts_as_changed;
  return *after != base;
}

namespace {

// Remainders repeat a lot across a sweep (especially for symmetric graphs).
class ValueCache {
 public:
  explicit ValueCache(const SolverOptions& solver) : solver_(solver) {}

  std::optional<int> operator()(const Graph& g) {
    std::vector<VertexMask> key(g.adjacency().begin(), g.adjacency().end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const std::optional<int> value = tdc_value_if_defined(g, solver_);
    memo_.emplace(std::move(key), value);
    return value;
  }

 private:
  SolverOptions solver_;
  std::map<std::vector<VertexMask>, std::optional<int>> memo_;
};

void check_caps(const Graph& g, const PerturbationCaps& caps) {
  if (g.order() > caps.max_order) {
    throw CapExceeded("perturbation sweep: order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(caps.max_order));
  }
  if (g.size() > caps.max_edges) {
    throw CapExceeded("perturbation sweep: " + std::to_string(g.size()) + " edges exceed cap " +
                      std::to_string(caps.max_edges));
  }
}

int base_value(const Graph& g, ValueCache& cache) {
  const std::optional<int> base = cache(g);
  if (!base) throw UndefinedInstance("base TDC-number undefined: graph is empty or has an isolated vertex");
  return *base;
}

// Visits every removal of the given size in lexicographic order; stops when
// visit returns true.
template <typename Visit>
bool for_each_removal(const Graph& g, PerturbationKind kind, int size, const EdgeSet& all_edges, Visit&& visit) {
  const int universe = kind == PerturbationKind::stability ? g.order() : static_cast<int>(all_edges.size());
  if (size > universe) return false;
  std::vector<int> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  do {
    TraceRow row;
    Graph after;
    if (kind == PerturbationKind::stability) {
      row.vertices = idx;
      after = delete_vertices(g, row.vertices);
    } else {
      for (int i : idx) row.edges.push_back(all_edges[static_cast<std::size_t>(i)]);
      after = delete_edges(g, row.edges);
    }
    if (visit(std::move(row), after)) return true;
  } while (next_combination(idx, universe));
  return false;
}

PerturbationResult sweep(const Graph& g, PerturbationKind kind, DegenerateConvention convention,
                         const PerturbationCaps& caps, const SolverOptions& solver) {
  check_caps(g, caps);
  ValueCache cache(solver);
  PerturbationResult out;
  out.kind = kind;
  out.convention = convention;
  out.base_value = base_value(g, cache);

  const EdgeSet all_edges = g.edges();
  const int universe = kind == PerturbationKind::stability ? g.order() : static_cast<int>(all_edges.size());
  for (int size = 1; size <= universe && !out.value; ++size) {
    for_each_removal(g, kind, size, all_edges, [&](TraceRow row, const Graph& after) {
      row.after_value = cache(after);
      const bool changed = counts_as_change(out.base_value, row.after_value, convention);
      if (changed) {
        out.value = size;
        out.witness_vertices = row.vertices;
        out.witness_edges = row.edges;
        out.after_value = row.after_value;
      }
      out.sweep.push_back(std::move(row));
      return changed;
    });
  }
  return out;
}

}  // namespace

PerturbationResult stability(const Graph& g, DegenerateConvention convention, const PerturbationCaps& caps,
                             const SolverOptions& solver) {
  return sweep(g, PerturbationKind::stability, convention, caps, solver);
}

PerturbationResult bondage(const Graph& g, DegenerateConvention convention, const PerturbationCaps& caps,
                           const SolverOptions& solver) {
  return sweep(g, PerturbationKind::bondage, convention, caps, solver);
}

std::vector<TraceRow> perturbation_trace(const Graph& g, PerturbationKind kind, int max_size,
                                         const PerturbationCaps& caps, const SolverOptions& solver) {
  check_caps(g, caps);
  ValueCache cache(solver);
  base_value(g, cache);
  const EdgeSet all_edges = g.edges();
  std::vector<TraceRow> rows;
  for (int size = 1; size <= max_size; ++size) {
    for_each_removal(g, kind, size, all_edges, [&](TraceRow row, const Graph& after) {
      row.after_value = cache(after);
      rows.push_back(std::move(row));
      return false;
    });
  }
  return rows;
}

}  // namespace tdc
