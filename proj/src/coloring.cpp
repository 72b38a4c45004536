#include "tdc/coloring.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tdc/errors.hpp"

namespace tdc {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  int max = -1;
  for (int c : colors_) {
    if (c < 0) throw std::invalid_argument("coloring: negative colour");
    max = std::max(max, c);
  }
  k_ = max + 1;
  std::vector<char> used(static_cast<std::size_t>(k_), 0);
  for (int c : colors_) used[static_cast<std::size_t>(c)] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    throw std::invalid_argument("coloring: colour classes must be nonempty (colours 0..k-1 all used)");
  }
}

Coloring Coloring::normalized(std::span<const int> colors) {
  std::vector<int> remap;
  std::vector<int> out;
  out.reserve(colors.size());
  int next = 0;
  for (int c : colors) {
    if (c < 0) throw std::invalid_argument("coloring: negative colour");
    if (static_cast<std::size_t>(c) >= remap.size()) remap.resize(static_cast<std::size_t>(c) + 1, -1);
    int& slot = remap[static_cast<std::size_t>(c)];
    if (slot < 0) slot = next++;
    out.push_back(slot);
  }
  return Coloring(std::move(out));
}

VertexMask Coloring::color_class(int c) const {
  VertexMask m = 0;
  for (int v = 0; v < order(); ++v)
    if (color(v) == c) m |= bit(v);
  return m;
}

std::vector<VertexMask> Coloring::classes() const {
  std::vector<VertexMask> out(static_cast<std::size_t>(k_), 0);
  for (int v = 0; v < order(); ++v) out[static_cast<std::size_t>(color(v))] |= bit(v);
  return out;
}

namespace {

void check_domain(const Graph& g, const Coloring& f) {
  if (f.order() != g.order()) {
    throw std::invalid_argument("coloring covers " + std::to_string(f.order()) +
                                " vertices but graph has " + std::to_string(g.order()));
  }
}

std::vector<int> by_degree_desc(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& f) {
  check_domain(g, f);
  for (const Edge& e : g.edges()) {
    if (f.color(e.u) == f.color(e.v)) return false;
  }
  return true;
}

std::optional<int> dominated_class_of(const Graph& g, const Coloring& f, int v) {
  check_domain(g, f);
  const auto classes = f.classes();
  const VertexMask nb = g.neighbors(v);
  for (int c = 0; c < f.num_classes(); ++c) {
    const VertexMask cls = classes[static_cast<std::size_t>(c)];
    if (cls != 0 && (cls & ~nb) == 0) return c;
  }
  return std::nullopt;
}

TdWitnessTable td_witness_table(const Graph& g, const Coloring& f) {
  TdWitnessTable table;
  for (int v = 0; v < g.order(); ++v) table.push_back(dominated_class_of(g, f, v));
  return table;
}

TdStatus td_status(const Graph& g, const Coloring& f) {
  check_domain(g, f);
  if (g.empty() || has_isolated_vertex(g)) return TdStatus::undefined;
  if (!is_proper(g, f)) return TdStatus::not_td_coloring;
  for (int v = 0; v < g.order(); ++v) {
    if (!dominated_class_of(g, f, v)) return TdStatus::not_td_coloring;
  }
  return TdStatus::td_coloring;
}

bool is_td_coloring(const Graph& g, const Coloring& f) {
  const TdStatus s = td_status(g, f);
  if (s == TdStatus::undefined) {
    throw UndefinedInstance("total dominator colouring undefined: graph is empty or has an isolated vertex");
  }
  return s == TdStatus::td_coloring;
}

// Chromatic number ---------------------------------------------------------

namespace {

class ProperSearch {
 public:
  ProperSearch(const Graph& g, std::vector<int> order, int k)
      : g_(g), order_(std::move(order)), k_(k), color_(static_cast<std::size_t>(g.order()), -1),
        members_(static_cast<std::size_t>(k), 0) {}

  bool run(std::size_t i, int used) {
    if (i == order_.size()) return true;
    const int v = order_[i];
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if ((members_[static_cast<std::size_t>(c)] & g_.neighbors(v)) != 0) continue;
      color_[static_cast<std::size_t>(v)] = c;
      members_[static_cast<std::size_t>(c)] |= bit(v);
      if (run(i + 1, std::max(used, c + 1))) return true;
      members_[static_cast<std::size_t>(c)] &= ~bit(v);
    }
    color_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  [[nodiscard]] const std::vector<int>& colors() const { return color_; }

 private:
  const Graph& g_;
  std::vector<int> order_;
  int k_;
  std::vector<int> color_;
  std::vector<VertexMask> members_;
};

int greedy_clique(const Graph& g, const std::vector<int>& order) {
  int best = 0;
  for (int start : order) {
    VertexMask candidates = g.neighbors(start);
    int size = 1;
    for (int v : order) {
      if ((candidates & bit(v)) != 0) {
        ++size;
        candidates &= g.neighbors(v);
      }
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g) {
  if (g.empty()) return {0, Coloring{}};
  const std::vector<int> order = by_degree_desc(g);

  // greedy upper bound
  std::vector<int> greedy(static_cast<std::size_t>(g.order()), -1);
  int upper = 0;
  for (int v : order) {
    VertexMask taken = 0;
    for (VertexMask rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
      const int c = greedy[static_cast<std::size_t>(std::countr_zero(rest))];
      if (c >= 0) taken |= bit(c);
    }
    const int c = std::countr_one(taken);
    greedy[static_cast<std::size_t>(v)] = c;
    upper = std::max(upper, c + 1);
  }

  for (int k = greedy_clique(g, order); k < upper; ++k) {
    ProperSearch search(g, order, k);
    if (search.run(0, 0)) return {k, Coloring::normalized(search.colors())};
  }
  return {upper, Coloring::normalized(greedy)};
}

// Total domination ---------------------------------------------------------

bool next_combination(std::vector<int>& idx, int n) {
  const int r = static_cast<int>(idx.size());
  int i = r - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

TotalDominationResult total_domination_number(const Graph& g) {
  if (g.empty() || has_isolated_vertex(g)) {
    throw UndefinedInstance("total domination number undefined: graph is empty or has an isolated vertex");
  }
  const int n = g.order();
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    do {
      VertexMask covered = 0;
      for (int v : idx) covered |= g.neighbors(v);
      if (covered == g.vertices()) return {size, idx};
    } while (next_combination(idx, n));
  }
  // unreachable: V itself totally dominates a graph without isolated vertices
  throw std::logic_error("total_domination_number: no dominating set found");
}

// Text format --------------------------------------------------------------

Coloring read_coloring(std::istream& in, int order) {
  int k = 0;
  if (!(in >> k) || k < 0) throw std::invalid_argument("coloring file: expected class count k");
  std::vector<int> colors(static_cast<std::size_t>(order), -1);
  for (int i = 0; i < order; ++i) {
    int v = 0;
    int c = 0;
    if (!(in >> v >> c)) throw std::invalid_argument("coloring file: expected " + std::to_string(order) + " lines \"v c\"");
    if (v < 0 || v >= order) throw std::invalid_argument("coloring file: vertex " + std::to_string(v) + " out of range");
    if (c < 0 || c >= k) throw std::invalid_argument("coloring file: colour " + std::to_string(c) + " outside 0..k-1");
    if (colors[static_cast<std::size_t>(v)] >= 0) throw std::invalid_argument("coloring file: vertex " + std::to_string(v) + " listed twice");
    colors[static_cast<std::size_t>(v)] = c;
  }
  Coloring f(std::move(colors));
  if (f.num_classes() != k) throw std::invalid_argument("coloring file: k does not match the colours used");
  return f;
}

void write_coloring(std::ostream& out, const Coloring& f) {
  out << f.num_classes() << '\n';
  for (int v = 0; v < f.order(); ++v) out << v << ' ' << f.color(v) << '\n';
}

}  // namespace tdc
