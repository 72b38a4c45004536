#include "tdc/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace tdc {

namespace {

// Colour refinement until the partition is stable. Colours are ranks of
// signatures, so they depend only on the isomorphism type.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  int classes = 1;
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (VertexMask rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
        nb.push_back(color[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [key, value] : rank) value = r++;
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
    if (r == classes) return color;
    classes = r;
  }
}

struct Search {
  const Graph& g;
  int n;
  int total_bits;
  std::vector<VertexMask> cell_at;  // allowed vertices per position
  std::vector<int> placed;
  std::uint64_t best = 0;
  bool have_best = false;
  std::vector<int> best_placed;

  void run(int pos, VertexMask used, std::uint64_t code) {
    if (pos == n) {
      if (!have_best || code < best) {
        best = code;
        have_best = true;
        best_placed = placed;
      }
      return;
    }
    const int prefix_bits = pos * (pos + 1) / 2;
    for (VertexMask rest = cell_at[static_cast<std::size_t>(pos)] & ~used; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      std::uint64_t next = code;
      for (int i = 0; i < pos; ++i) {
        if (g.adjacent(placed[static_cast<std::size_t>(i)], v)) {
          const int offset = pos * (pos - 1) / 2 + i;
          next |= std::uint64_t{1} << (total_bits - 1 - offset);
        }
      }
      if (have_best && prefix_bits > 0) {
        const int shift = total_bits - prefix_bits;
        if ((next >> shift) > (best >> shift)) continue;
      }
      placed[static_cast<std::size_t>(pos)] = v;
      run(pos + 1, used | bit(v), next);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical_form: order " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxCanonicalOrder));
  }
  const std::vector<int> color = refine_colors(g);
  std::vector<int> by_color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_color[static_cast<std::size_t>(v)] = v;
  std::stable_sort(by_color.begin(), by_color.end(), [&](int a, int b) {
    return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
  });

  Search s{g, n, n * (n - 1) / 2, {}, std::vector<int>(static_cast<std::size_t>(n), -1), 0, false, {}};
  s.cell_at.resize(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) {
    const int c = color[static_cast<std::size_t>(by_color[static_cast<std::size_t>(pos)])];
    VertexMask cell = 0;
    for (int v = 0; v < n; ++v)
      if (color[static_cast<std::size_t>(v)] == c) cell |= bit(v);
    s.cell_at[static_cast<std::size_t>(pos)] = cell;
  }
  s.run(0, 0, 0);

  CanonicalForm out;
  out.order = n;
  out.code = s.best;
  out.perm.assign(static_cast<std::size_t>(n), 0);
  for (int pos = 0; pos < n; ++pos) {
    out.perm[static_cast<std::size_t>(s.best_placed[static_cast<std::size_t>(pos)])] = pos;
  }
  return out;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).perm); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace tdc
