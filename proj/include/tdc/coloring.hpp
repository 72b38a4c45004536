#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

/// Total map vertex -> colour in 0..k-1 with every class nonempty.
class Coloring {
 public:
  Coloring() = default;

  /// Throws std::invalid_argument if a colour is negative or the used colours
  /// are not exactly 0..max.
  explicit Coloring(std::vector<int> colors);

  /// Renumbers arbitrary non-negative colours to 0..k-1 by first occurrence.
  static Coloring normalized(std::span<const int> colors);

  [[nodiscard]] int order() const { return static_cast<int>(colors_.size()); }
  [[nodiscard]] int num_classes() const { return k_; }
  [[nodiscard]] int color(int v) const { return colors_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] std::span<const int> colors() const { return colors_; }

  /// Members of class c as a mask.
  [[nodiscard]] VertexMask color_class(int c) const;
  [[nodiscard]] std::vector<VertexMask> classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int k_ = 0;
};

/// Per-vertex colour class each vertex totally dominates (absent if none).
using TdWitnessTable = std::vector<std::optional<int>>;

enum class TdStatus { td_coloring, not_td_coloring, undefined };

bool is_proper(const Graph& g, const Coloring& f);

/// Smallest colour whose whole class lies in N(v).
std::optional<int> dominated_class_of(const Graph& g, const Coloring& f, int v);

TdWitnessTable td_witness_table(const Graph& g, const Coloring& f);

/// Three-way check; undefined when g is empty or has an isolated vertex.
TdStatus td_status(const Graph& g, const Coloring& f);

/// Throws UndefinedInstance when g has an isolated vertex or no vertices.
bool is_td_coloring(const Graph& g, const Coloring& f);

struct ChromaticResult {
  int value = 0;
  Coloring witness;
};

/// Exact chromatic number by branch and bound (greedy clique lower bound).
ChromaticResult chromatic_number(const Graph& g);

struct TotalDominationResult {
  int value = 0;
  VertexSet witness;
};

/// Exact γ_t by subset search in increasing size, lexicographic within a size.
/// Throws UndefinedInstance on isolated vertices.
TotalDominationResult total_domination_number(const Graph& g);

/// "k" on the first line, then n lines "v c".
Coloring read_coloring(std::istream& in, int order);
void write_coloring(std::ostream& out, const Coloring& f);

/// Advances idx (strictly increasing, values < n) to the next combination in
/// lexicographic order; returns false after the last one.
bool next_combination(std::vector<int>& idx, int n);

}  // namespace tdc
