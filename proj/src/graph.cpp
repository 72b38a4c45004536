#include "tdc/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tdc {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                std::to_string(Graph::kMaxVertices) + "]");
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(g.order()));
  }
}

void require_min(std::string_view family, int n, int min) {
  if (n < min) {
    throw std::invalid_argument(std::string(family) + " requires n >= " + std::to_string(min) +
                                ", got " + std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range for order " + std::to_string(n));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    }
    g.adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    g.adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexMask> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  check_order(n);
  const VertexMask all = low_mask(n);
  for (int v = 0; v < n; ++v) {
    const VertexMask nb = adjacency[static_cast<std::size_t>(v)];
    if ((nb & ~all) != 0) throw std::invalid_argument("neighbor id out of range");
    if ((nb & bit(v)) != 0) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    for (VertexMask rest = nb; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if ((adjacency[static_cast<std::size_t>(u)] & bit(v)) == 0) {
        throw std::invalid_argument("adjacency not symmetric");
      }
    }
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(adjacency);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (VertexMask m : adj_) twice += popcount(m);
  return twice / 2;
}

int Graph::degree(int v) const { return popcount(neighbors(v)); }

EdgeSet Graph::edges() const {
  EdgeSet out;
  for (int u = 0; u < n_; ++u) {
    for (VertexMask rest = neighbors(u) & ~low_mask(u + 1); rest != 0; rest &= rest - 1) {
      out.push_back({u, std::countr_zero(rest)});
    }
  }
  return out;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) == 0) return true;
  }
  return false;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexMask seen = bit(0);
  VertexMask frontier = bit(0);
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.neighbors(std::countr_zero(rest));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

int degree(const Graph& g, int v) {
  check_vertex(g, v);
  return g.degree(v);
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_clique(const Graph& g, VertexMask set) {
  for (VertexMask rest = set; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((set & ~bit(v) & ~g.neighbors(v)) != 0) return false;
  }
  return true;
}

bool is_independent(const Graph& g, VertexMask set) {
  for (VertexMask rest = set; rest != 0; rest &= rest - 1) {
    if ((g.neighbors(std::countr_zero(rest)) & set) != 0) return false;
  }
  return true;
}

VertexMask to_mask(const Graph& g, std::span<const int> set) {
  VertexMask m = 0;
  for (int v : set) {
    check_vertex(g, v);
    m |= bit(v);
  }
  return m;
}

VertexSet to_vertex_set(VertexMask mask) {
  VertexSet out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

Graph path(int n) {
  require_min("path", n, 1);
  EdgeSet e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  require_min("cycle", n, 3);
  EdgeSet e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  require_min("complete", n, 1);
  EdgeSet e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  require_min("complete_bipartite", std::min(a, b), 1);
  EdgeSet e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph::from_edges(a + b, e);
}

Graph star(int n) {
  require_min("star", n, 1);
  return complete_bipartite(1, n);
}

Graph friendship(int n) {
  require_min("friendship", n, 1);
  EdgeSet e;
  for (int i = 1; i <= n; ++i) {
    e.push_back({0, 2 * i - 1});
    e.push_back({0, 2 * i});
    e.push_back({2 * i - 1, 2 * i});
  }
  return Graph::from_edges(2 * n + 1, e);
}

Graph book(int n) {
  require_min("book", n, 1);
  EdgeSet e{{0, 1}};
  for (int i = 1; i <= n; ++i) {
    e.push_back({0, 2 * i});
    e.push_back({1, 2 * i + 1});
    e.push_back({2 * i, 2 * i + 1});
  }
  return Graph::from_edges(2 * n + 2, e);
}

Graph complete_minus_edge(int n) {
  require_min("complete_minus_edge", n, 2);
  EdgeSet e{{0, 1}};
  return delete_edges(complete(n), e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty()) throw std::invalid_argument("cartesian_product: empty factor");
  const int n1 = g.order();
  const int n2 = h.order();
  check_order(n1 * n2);
  EdgeSet e;
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < n2; ++v) {
      for (int w = v + 1; w < n2; ++w)
        if (h.adjacent(v, w)) e.push_back({u * n2 + v, u * n2 + w});
      for (int x = u + 1; x < n1; ++x)
        if (g.adjacent(u, x)) e.push_back({u * n2 + v, x * n2 + v});
    }
  }
  return Graph::from_edges(n1 * n2, e);
}

int corona_copy_vertex(const Graph& g1, const Graph& g2, int copy, int x) {
  return g1.order() + copy * g2.order() + x;
}

Graph neighbourhood_corona(const Graph& g1, const Graph& g2) {
  if (g1.empty() || g2.empty()) throw std::invalid_argument("neighbourhood_corona: empty operand");
  const int n1 = g1.order();
  const int n2 = g2.order();
  const long total = static_cast<long>(n1) * (1 + n2);
  if (total > Graph::kMaxVertices) {
    throw std::invalid_argument("neighbourhood_corona: result order " + std::to_string(total) +
                                " exceeds " + std::to_string(Graph::kMaxVertices));
  }
  EdgeSet e = g1.edges();
  const EdgeSet inner = g2.edges();
  for (int i = 0; i < n1; ++i) {
    for (const Edge& f : inner) {
      e.push_back({corona_copy_vertex(g1, g2, i, f.u), corona_copy_vertex(g1, g2, i, f.v)});
    }
    for (int x = 0; x < n2; ++x) {
      const int cv = corona_copy_vertex(g1, g2, i, x);
      for (VertexMask rest = g1.neighbors(i); rest != 0; rest &= rest - 1) {
        e.push_back({cv, std::countr_zero(rest)});
      }
    }
  }
  return Graph::from_edges(static_cast<int>(total), e);
}

Graph r_gluing(const Graph& g1, const Graph& g2, std::span<const int> clique1,
               std::span<const int> clique2, std::span<const int> identification) {
  const std::size_t r = clique1.size();
  if (clique2.size() != r || identification.size() != r) {
    throw std::invalid_argument("r_gluing: clique sizes and identification must agree");
  }
  if (static_cast<int>(r) > g1.order() || static_cast<int>(r) > g2.order()) {
    throw std::invalid_argument("r_gluing: r exceeds an operand's order");
  }
  const VertexMask m1 = to_mask(g1, clique1);
  const VertexMask m2 = to_mask(g2, clique2);
  if (static_cast<std::size_t>(popcount(m1)) != r || static_cast<std::size_t>(popcount(m2)) != r) {
    throw std::invalid_argument("r_gluing: clique contains repeated vertices");
  }
  if (!is_clique(g1, m1) || !is_clique(g2, m2)) {
    throw std::invalid_argument("r_gluing: chosen vertex sets are not cliques");
  }
  std::vector<int> seen(r, 0);
  for (int idx : identification) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= r || seen[static_cast<std::size_t>(idx)]++) {
      throw std::invalid_argument("r_gluing: identification is not a bijection");
    }
  }

  const int n1 = g1.order();
  std::vector<int> map2(static_cast<std::size_t>(g2.order()), -1);
  for (std::size_t i = 0; i < r; ++i) {
    map2[static_cast<std::size_t>(clique2[static_cast<std::size_t>(identification[i])])] = clique1[i];
  }
  int next = n1;
  for (int& id : map2) {
    if (id < 0) id = next++;
  }
  check_order(next);
  EdgeSet e = g1.edges();
  for (const Edge& f : g2.edges()) {
    e.push_back({map2[static_cast<std::size_t>(f.u)], map2[static_cast<std::size_t>(f.v)]});
  }
  return Graph::from_edges(next, e);
}

Graph r_gluing(const Graph& g1, const Graph& g2, int r) {
  const auto c1 = find_cliques_of_size(g1, r);
  const auto c2 = find_cliques_of_size(g2, r);
  if (c1.empty() || c2.empty()) {
    throw std::invalid_argument("r_gluing: no " + std::to_string(r) + "-clique in an operand");
  }
  std::vector<int> ident(static_cast<std::size_t>(r));
  std::iota(ident.begin(), ident.end(), 0);
  return r_gluing(g1, g2, c1.front(), c2.front(), ident);
}

namespace {

void extend_cliques(const Graph& g, int r, VertexSet& current, VertexMask candidates,
                    std::vector<VertexSet>& out) {
  if (static_cast<int>(current.size()) == r) {
    out.push_back(current);
    return;
  }
  for (VertexMask rest = candidates; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    current.push_back(v);
    // only larger ids keep the output sorted and duplicate-free
    extend_cliques(g, r, current, candidates & g.neighbors(v) & ~low_mask(v + 1), out);
    current.pop_back();
  }
}

}  // namespace

std::vector<VertexSet> find_cliques_of_size(const Graph& g, int r) {
  if (r < 0) throw std::invalid_argument("find_cliques_of_size: negative r");
  std::vector<VertexSet> out;
  VertexSet current;
  if (r <= g.order()) extend_cliques(g, r, current, g.vertices(), out);
  return out;
}

int clique_number(const Graph& g) {
  int r = 0;
  while (r < g.order() && !find_cliques_of_size(g, r + 1).empty()) ++r;
  return r;
}

Graph complement(const Graph& g) {
  std::vector<VertexMask> adj(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    adj[static_cast<std::size_t>(v)] = g.vertices() & ~g.neighbors(v) & ~bit(v);
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  check_order(n1 + g2.order());
  EdgeSet e = g1.edges();
  for (const Edge& f : g2.edges()) e.push_back({f.u + n1, f.v + n1});
  return Graph::from_edges(n1 + g2.order(), e);
}

Graph delete_vertices(const Graph& g, VertexMask removed) {
  if ((removed & ~g.vertices()) != 0) throw std::invalid_argument("delete_vertices: vertex out of range");
  std::vector<int> id(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((removed & bit(v)) == 0) id[static_cast<std::size_t>(v)] = next++;
  }
  EdgeSet e;
  for (const Edge& f : g.edges()) {
    const int a = id[static_cast<std::size_t>(f.u)];
    const int b = id[static_cast<std::size_t>(f.v)];
    if (a >= 0 && b >= 0) e.push_back({a, b});
  }
  return Graph::from_edges(next, e);
}

Graph delete_vertices(const Graph& g, std::span<const int> removed) {
  return delete_vertices(g, to_mask(g, removed));
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<VertexMask> adj(g.adjacency().begin(), g.adjacency().end());
  for (const Edge& e : removed) {
    check_vertex(g, e.u);
    check_vertex(g, e.v);
    if (!g.adjacent(e.u, e.v)) {
      throw std::invalid_argument("delete_edges: (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") is not an edge");
    }
    adj[static_cast<std::size_t>(e.u)] &= ~bit(e.v);
    adj[static_cast<std::size_t>(e.v)] &= ~bit(e.u);
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: size mismatch");
  EdgeSet e;
  for (const Edge& f : g.edges()) {
    e.push_back({perm[static_cast<std::size_t>(f.u)], perm[static_cast<std::size_t>(f.v)]});
  }
  return Graph::from_edges(g.order(), e);
}

// graph6 -------------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= text.size()) throw std::invalid_argument("graph6: truncated input");
    const int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) {
      throw std::invalid_argument("graph6: byte " + std::to_string(c) + " outside 63..126");
    }
    return c - 63;
  };

  long n = 0;
  if (text[0] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      for (int i = 0; i < 6; ++i) n = (n << 6) | take();
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | take();
    }
  } else {
    n = take();
  }
  if (n > Graph::kMaxVertices) {
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds supported maximum");
  }

  const long bits = n * (n - 1) / 2;
  const long body = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != body) {
    throw std::invalid_argument(static_cast<long>(text.size() - pos) < body
                                    ? "graph6: truncated bit body"
                                    : "graph6: trailing bytes after bit body");
  }
  std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
  int word = 0;
  int left = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (left == 0) {
        word = take();
        left = 6;
      }
      --left;
      if ((word >> left) & 1) {
        adj[static_cast<std::size_t>(u)] |= bit(v);
        adj[static_cast<std::size_t>(v)] |= bit(u);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int word = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (word << (6 - filled))));
  return out;
}

Graph read_edge_list(std::istream& in) {
  long n = -1;
  long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw std::invalid_argument("edge list: expected header \"n m\"");
  }
  if (n > Graph::kMaxVertices) throw std::invalid_argument("edge list: order exceeds supported maximum");
  EdgeSet e;
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge list: endpoint out of range on edge " + std::to_string(i));
    }
    e.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph::from_edges(static_cast<int>(n), e);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const EdgeSet e = g.edges();
  out << g.order() << ' ' << e.size() << '\n';
  for (const Edge& f : e) out << f.u << ' ' << f.v << '\n';
}

}  // namespace tdc
