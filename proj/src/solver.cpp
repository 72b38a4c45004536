#include "tdc/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

using Clock = std::chrono::steady_clock;

void require_defined(const Graph& g) {
  if (g.empty()) throw UndefinedInstance("TDC-number undefined for the empty graph");
  if (has_isolated_vertex(g)) throw UndefinedInstance("TDC-number undefined: graph has an isolated vertex");
}

void require_cap(const Graph& g, int max_order) {
  if (g.order() > max_order) {
    throw CapExceeded("graph order " + std::to_string(g.order()) + " exceeds solver cap " +
                      std::to_string(max_order));
  }
}

class TdSearch {
 public:
  TdSearch(const Graph& g, int k, std::optional<Clock::time_point> deadline)
      : g_(g), n_(g.order()), k_(k), deadline_(deadline), color_(static_cast<std::size_t>(n_), -1),
        members_(static_cast<std::size_t>(k), 0), uncolored_(g.vertices()) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  bool run() { return k_ >= 1 && descend(0, 0); }

  [[nodiscard]] bool timed_out() const { return timed_out_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<int>& colors() const { return color_; }

 private:
  // A class holding a non-neighbour of v can never dominate v again.
  [[nodiscard]] bool all_dominatable(int used) const {
    const bool empty_slot = used < k_;
    for (int v = 0; v < n_; ++v) {
      const VertexMask nb = g_.neighbors(v);
      bool pure_nonempty = false;
      for (int c = 0; c < used; ++c) {
        if ((members_[static_cast<std::size_t>(c)] & ~nb) == 0) {
          pure_nonempty = true;
          break;
        }
      }
      if (pure_nonempty) continue;
      // only a fresh class filled by a still-uncoloured neighbour can help
      if (!empty_slot || (nb & uncolored_) == 0) return false;
    }
    return true;
  }

  bool descend(std::size_t i, int used) {
    ++nodes_;
    if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_) timed_out_ = true;
    if (timed_out_) return false;
    if (i == order_.size()) return true;

    const int v = order_[i];
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      VertexMask& cls = members_[static_cast<std::size_t>(c)];
      if ((cls & g_.neighbors(v)) != 0) continue;
      cls |= bit(v);
      uncolored_ &= ~bit(v);
      color_[static_cast<std::size_t>(v)] = c;
      const int next_used = std::max(used, c + 1);
      if (all_dominatable(next_used) && descend(i + 1, next_used)) return true;
      cls &= ~bit(v);
      uncolored_ |= bit(v);
      color_[static_cast<std::size_t>(v)] = -1;
      if (timed_out_) return false;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::optional<Clock::time_point> deadline_;
  std::vector<int> order_;
  std::vector<int> color_;
  std::vector<VertexMask> members_;
  VertexMask uncolored_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

DecisionResult decide_until(const Graph& g, int k, std::optional<Clock::time_point> deadline) {
  const auto start = Clock::now();
  TdSearch search(g, k, deadline);
  DecisionResult out;
  const bool found = search.run();
  out.stats.nodes = search.nodes();
  out.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  if (found) {
    out.witness = Coloring::normalized(search.colors());
  } else if (search.timed_out()) {
    out.status = SolveStatus::unknown;
  }
  return out;
}

}  // namespace

DecisionResult tdc_decide(const Graph& g, int k, const SolverOptions& options) {
  require_defined(g);
  require_cap(g, options.max_order);
  if (k < 1) throw std::invalid_argument("tdc_decide: k must be >= 1");
  std::optional<Clock::time_point> deadline;
  if (options.time_budget) deadline = Clock::now() + *options.time_budget;
  return decide_until(g, k, deadline);
}

std::optional<Coloring> tdc_decision(const Graph& g, int k) { return tdc_decide(g, k).witness; }

int tdc_lower_bound(const Graph& g) {
  require_defined(g);
  return std::max(chromatic_number(g).value, total_domination_number(g).value);
}

UpperBound tdc_upper_bound(const Graph& g) {
  require_defined(g);
  const int n = g.order();
  std::vector<int> distinct(static_cast<std::size_t>(n));
  std::iota(distinct.begin(), distinct.end(), 0);
  UpperBound best{n, Coloring(distinct)};

  // γ_t-set vertices as singletons, everything else from an optimal proper colouring
  const TotalDominationResult dom = total_domination_number(g);
  const ChromaticResult chi = chromatic_number(g);
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v : dom.witness) colors[static_cast<std::size_t>(v)] = next++;
  for (int v = 0; v < n; ++v) {
    if (colors[static_cast<std::size_t>(v)] < 0) colors[static_cast<std::size_t>(v)] = next + chi.witness.color(v);
  }
  Coloring combined = Coloring::normalized(colors);
  if (combined.num_classes() < best.value) best = {combined.num_classes(), std::move(combined)};
  return best;
}

TdcResult tdc_number(const Graph& g, const SolverOptions& options) {
  require_defined(g);
  require_cap(g, options.max_order);
  const auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (options.time_budget) deadline = start + *options.time_budget;

  TdcResult out;
  out.lower_bound = tdc_lower_bound(g);
  UpperBound upper = tdc_upper_bound(g);
  for (int k = out.lower_bound; k < upper.value; ++k) {
    DecisionResult d = decide_until(g, k, deadline);
    out.stats.nodes += d.stats.nodes;
    if (d.status == SolveStatus::unknown) {
      out.status = SolveStatus::unknown;
      break;
    }
    if (d.witness) {
      out.value = d.witness->num_classes();
      out.witness = std::move(d.witness);
      break;
    }
  }
  if (out.status == SolveStatus::exact && !out.value) {
    out.value = upper.value;
    out.witness = std::move(upper.witness);
  }
  out.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return out;
}

std::optional<int> tdc_value_if_defined(const Graph& g, const SolverOptions& options) {
  if (g.empty() || has_isolated_vertex(g)) return std::nullopt;
  TdcResult r = tdc_number(g, options);
  if (!r.exact()) throw std::runtime_error("TDC solve exceeded its time budget");
  return r.value;
}

// Brute-force oracle -------------------------------------------------------

int tdc_brute_force(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw CapExceeded("tdc_brute_force supports at most " + std::to_string(kBruteForceMaxOrder) + " vertices");
  }
  require_defined(g);

  bool adj[kBruteForceMaxOrder][kBruteForceMaxOrder] = {};
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) adj[u][v] = g.adjacent(u, v);

  auto is_td = [&](const int* part, int k) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj[u][v] && part[u] == part[v]) return false;
    for (int v = 0; v < n; ++v) {
      bool dominated = false;
      for (int c = 0; c < k && !dominated; ++c) {
        bool inside = true;
        for (int u = 0; u < n; ++u)
          if (part[u] == c && !adj[v][u]) inside = false;
        dominated = inside;
      }
      if (!dominated) return false;
    }
    return true;
  };

  // restricted growth strings: part[0] = 0, part[i] <= 1 + max(part[0..i-1])
  int part[kBruteForceMaxOrder] = {};
  int prefix_max[kBruteForceMaxOrder] = {};
  int best = n + 1;
  for (;;) {
    const int k = prefix_max[n - 1] + 1;
    if (k < best && is_td(part, k)) best = k;
    int i = n - 1;
    while (i > 0 && part[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++part[i];
    prefix_max[i] = std::max(prefix_max[i - 1], part[i]);
    for (int j = i + 1; j < n; ++j) {
      part[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  return best;
}

}  // namespace tdc
