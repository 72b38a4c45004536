#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tdc/graph.hpp"
#include "tdc/solver.hpp"

namespace tdc {

/// How a removal that leaves χ_d^t undefined (empty graph or an isolated
/// vertex) is scored.
enum class DegenerateConvention {
  undefined_counts_as_changed,
  skip_undefined,
};

std::string_view to_string(DegenerateConvention c);
/// Accepts "changed" / "undefined_counts_as_changed" and "skip" / "skip_undefined".
DegenerateConvention parse_convention(std::string_view text);

enum class PerturbationKind { stability, bondage };

std::string_view to_string(PerturbationKind k);

struct PerturbationCaps {
  int max_order = 12;
  int max_edges = 24;
};

struct TraceRow {
  /// Removed vertices (stability) or edges (bondage); the other is empty.
  VertexSet vertices;
  EdgeSet edges;
  /// χ_d^t after removal, nullopt when undefined.
  std::optional<int> after_value;
};

struct PerturbationResult {
  PerturbationKind kind = PerturbationKind::stability;
  DegenerateConvention convention = DegenerateConvention::undefined_counts_as_changed;
  int base_value = 0;
  /// Minimum removal size; absent when no subset changes the TDC-number.
  std::optional<int> value;
  VertexSet witness_vertices;
  EdgeSet witness_edges;
  /// χ_d^t after removing the witness (nullopt = undefined).
  std::optional<int> after_value;
  /// Every subset examined, in sweep order, ending at the witness.
  std::vector<TraceRow> sweep;
};

/// Minimum number of vertices whose removal changes χ_d^t. Subsets are swept
/// by increasing size, lexicographically within a size; the first one that
/// changes the value under `convention` is the witness.
///
/// Throws UndefinedInstance when χ_d^t(g) is undefined and CapExceeded when g
/// is larger than `caps`.
PerturbationResult stability(const Graph& g,
                             DegenerateConvention convention = DegenerateConvention::undefined_counts_as_changed,
                             const PerturbationCaps& caps = {}, const SolverOptions& solver = {});

/// Same sweep over edge subsets; vertex count is preserved.
PerturbationResult bondage(const Graph& g,
                           DegenerateConvention convention = DegenerateConvention::undefined_counts_as_changed,
                           const PerturbationCaps& caps = {}, const SolverOptions& solver = {});

/// Every removal of size 1..max_size with its post-removal χ_d^t.
std::vector<TraceRow> perturbation_trace(const Graph& g, PerturbationKind kind, int max_size,
                                         const PerturbationCaps& caps = {}, const SolverOptions& solver = {});

/// True when a removal leaving `after` counts as a change of `base`.
bool counts_as_change(int base, std::optional<int> after, DegenerateConvention convention);

}  // namespace tdc
