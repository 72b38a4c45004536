#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tdc {

/// Bit i set means vertex i is a member.
using VertexMask = std::uint64_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

struct Edge {
  int u = 0;
  int v = 0;

  /// Same edge with u < v.
  [[nodiscard]] Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of normalized edges.
using EdgeSet = std::vector<Edge>;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

inline constexpr VertexMask low_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

/// Immutable finite simple graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitmask per vertex, which caps the order at
/// kMaxVertices. Every constructor validates symmetry, irreflexivity and
/// range, so a Graph value always satisfies those invariants.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Builds from an edge list. Duplicate edges collapse; loops and
  /// out-of-range endpoints throw std::invalid_argument.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Builds from per-vertex neighbor masks; throws if they are not symmetric
  /// and loop-free.
  static Graph from_adjacency(std::vector<VertexMask> adjacency);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int size() const;
  [[nodiscard]] bool empty() const { return n_ == 0; }

  [[nodiscard]] VertexMask vertices() const { return low_mask(n_); }
  [[nodiscard]] VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] bool adjacent(int u, int v) const { return (neighbors(u) & bit(v)) != 0; }
  [[nodiscard]] int degree(int v) const;

  /// Normalized edges in lexicographic order.
  [[nodiscard]] EdgeSet edges() const;

  [[nodiscard]] std::span<const VertexMask> adjacency() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> adj_;
};

// Predicates ---------------------------------------------------------------

bool has_isolated_vertex(const Graph& g);
bool is_connected(const Graph& g);
int degree(const Graph& g, int v);
int min_degree(const Graph& g);
bool is_clique(const Graph& g, VertexMask set);
bool is_independent(const Graph& g, VertexMask set);

VertexMask to_mask(const Graph& g, std::span<const int> set);
VertexSet to_vertex_set(VertexMask mask);

// Families -----------------------------------------------------------------
//
// Labelings:
//   path, cycle: consecutive vertices 0-1-2-...
//   complete_bipartite(a, b): sides {0..a-1} and {a..a+b-1}
//   star(n): center 0, leaves 1..n
//   friendship(n): center 0, triangle i on {0, 2i-1, 2i}
//   book(n): spine 0-1, page i on {0, 1, 2i+1, 2i} with 0~2i and 1~2i+1
//   complete_minus_edge(n): K_n without the edge (0, 1)

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int n);
Graph friendship(int n);
Graph book(int n);
Graph complete_minus_edge(int n);

// Operations ---------------------------------------------------------------

/// Vertex (u, v) of the product gets id u * order(h) + v.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Neighbourhood corona: G1 keeps ids 0..n1-1, copy i of G2 occupies
/// [n1 + i*n2, n1 + (i+1)*n2) and every vertex in it is joined to N_G1(i).
Graph neighbourhood_corona(const Graph& g1, const Graph& g2);

/// Id of vertex x of copy i inside neighbourhood_corona(g1, g2).
int corona_copy_vertex(const Graph& g1, const Graph& g2, int copy, int x);

/// r-gluing. clique2[identification[i]] is identified with clique1[i].
/// G1 keeps ids 0..n1-1; the remaining G2 vertices follow in increasing order.
Graph r_gluing(const Graph& g1, const Graph& g2, std::span<const int> clique1,
               std::span<const int> clique2, std::span<const int> identification);

/// r-gluing on the lexicographically first r-cliques with identity identification.
Graph r_gluing(const Graph& g1, const Graph& g2, int r);

/// All r-cliques, each sorted, in lexicographic order.
std::vector<VertexSet> find_cliques_of_size(const Graph& g, int r);

int clique_number(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Removes the vertices and compacts survivors keeping their relative order.
Graph delete_vertices(const Graph& g, std::span<const int> removed);
Graph delete_vertices(const Graph& g, VertexMask removed);

/// Removes edges that must exist in g; vertex count is preserved.
Graph delete_edges(const Graph& g, std::span<const Edge> removed);

/// Applies perm (old id -> new id).
Graph relabel(const Graph& g, std::span<const int> perm);

// Text formats -------------------------------------------------------------

/// Decodes one graph6 string (optional ">>graph6<<" header, no newline).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// "n m" followed by m lines "u v", 0-indexed.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace tdc
