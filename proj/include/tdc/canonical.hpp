#pragma once

#include <cstdint>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

/// Largest order accepted by the permutation-based canonical form. The code
/// packs the upper triangle into 64 bits, so 11 is the hard ceiling.
inline constexpr int kMaxCanonicalOrder = 11;

struct CanonicalForm {
  int order = 0;
  /// Upper triangle in graph6 column order, first pair in the top bit.
  std::uint64_t code = 0;
  /// perm[v] is the position of original vertex v in the canonical labeling.
  std::vector<int> perm;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.order == b.order && a.code == b.code;
  }
};

/// Minimum upper-triangle code over every labeling that orders vertices by an
/// isomorphism-invariant refinement (degree, then neighbour degree multiset).
/// Throws std::invalid_argument when order() > kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace tdc
