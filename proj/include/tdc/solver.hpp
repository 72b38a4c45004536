#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"

namespace tdc {

/// Default cap on the order of graphs handed to the exact solver.
inline constexpr int kDefaultMaxOrder = 32;

/// Brute-force oracle limit.
inline constexpr int kBruteForceMaxOrder = 8;

struct SolverOptions {
  int max_order = kDefaultMaxOrder;
  /// Wall-clock budget per solve; unlimited when absent.
  std::optional<std::chrono::milliseconds> time_budget;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::chrono::microseconds elapsed{0};
};

enum class SolveStatus { exact, unknown };

struct DecisionResult {
  SolveStatus status = SolveStatus::exact;
  /// Present iff a TD-colouring with at most k classes was found.
  std::optional<Coloring> witness;
  SearchStats stats;
};

struct TdcResult {
  SolveStatus status = SolveStatus::exact;
  /// Both present iff status == exact.
  std::optional<int> value;
  std::optional<Coloring> witness;
  int lower_bound = 0;
  SearchStats stats;

  [[nodiscard]] bool exact() const { return status == SolveStatus::exact; }
};

/// Decides whether g has a TD-colouring with at most k classes.
///
/// Vertices are coloured in descending-degree order (ties by id) with
/// restricted-growth colours, so each set partition is visited once. A branch
/// is cut when some vertex can no longer be totally dominated: every class is
/// already impure for it (holds a non-neighbour), or all its neighbours are
/// coloured and none of its pure classes is nonempty.
///
/// Throws UndefinedInstance for empty graphs or graphs with isolated
/// vertices, CapExceeded when order() > options.max_order.
DecisionResult tdc_decide(const Graph& g, int k, const SolverOptions& options = {});

/// Exhaustive convenience form of tdc_decide.
std::optional<Coloring> tdc_decision(const Graph& g, int k);

/// χ_d^t(g): ascending k from tdc_lower_bound until the first feasible k.
TdcResult tdc_number(const Graph& g, const SolverOptions& options = {});

/// χ_d^t(g), or nullopt when it is undefined (empty graph or isolated vertex).
/// Throws std::runtime_error if the budget expires.
std::optional<int> tdc_value_if_defined(const Graph& g, const SolverOptions& options = {});

/// max(χ(g), γ_t(g)).
int tdc_lower_bound(const Graph& g);

struct UpperBound {
  int value = 0;
  Coloring witness;
};

/// Best of: all vertices distinct, and a γ_t-set in singleton classes with
/// the rest of an optimal proper colouring.
UpperBound tdc_upper_bound(const Graph& g);

/// Oracle: minimum over every set partition of V (restricted-growth strings
/// in vertex-id order, no pruning) of the class count of TD-colourings.
/// Shares no code with tdc_decide. Requires order() <= kBruteForceMaxOrder.
int tdc_brute_force(const Graph& g);

}  // namespace tdc
