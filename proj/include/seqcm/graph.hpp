#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace seqcm {

/// Vertex subsets are bitmasks; bit i set means vertex i is a member.
using VertexMask = std::uint32_t;

/// Maximum number of vertices a Graph may have (one bit per vertex).
inline constexpr int kMaxVertices = 32;

struct Edge {
  int u = 0;  // always u < v
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v), sorted and deduplicated, so two
/// Graph values compare equal iff they are the same labeled graph.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on out-of-range endpoints, self-loops, or
  /// n outside [0, kMaxVertices].
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  VertexMask all_vertices() const;

  /// Position of edge {u,v} in edges(), or -1 when absent.
  int edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
};

struct InducedSubgraph {
  Graph graph;
  /// original_vertex[i] is the vertex of the ambient graph that became i.
  std::vector<int> original_vertex;
};

/// Restriction of g to the vertex set w, relabeled 0..|w|-1 in ascending
/// order of original index.
InducedSubgraph induced_subgraph(const Graph& g, VertexMask w);

/// Every chordless cycle of length >= min_len, each reported once.
///
/// A cycle is listed starting from its smallest vertex, oriented so that the
/// second vertex is smaller than the last one.
std::vector<std::vector<int>> chordless_cycles(const Graph& g, int min_len);

/// True iff every chordless cycle has length 3 or 5.
bool is_woodroofe(const Graph& g);

/// True iff every connected component is a clique.
///
/// Computed twice (component cliques and absence of an induced P3); throws
/// std::logic_error if the two routes disagree.
bool is_disjoint_union_complete(const Graph& g);

bool components_are_cliques(const Graph& g);

/// Vertex set of an induced path on three vertices, if one exists.
std::vector<int> find_induced_p3(const Graph& g);

/// Largest n accepted by canonical_form.
inline constexpr int kMaxCanonicalVertices = 9;

/// Lexicographically smallest adjacency bitstring over all relabelings.
///
/// The string is "<n>:" followed by one '0'/'1' per vertex pair, pairs taken
/// column by column of the upper triangle: (0,1),(0,2),(1,2),(0,3),...
/// Two graphs have equal forms iff they are isomorphic.
std::string canonical_form(const Graph& g);

/// One representative per isomorphism class of graphs on n <= 7 vertices.
std::vector<Graph> enumerate_graphs(int n);

/// Minimal vertex covers, as complements of maximal independent sets,
/// sorted by mask value.
std::vector<VertexMask> minimal_vertex_covers(const Graph& g);
std::vector<VertexMask> maximal_independent_sets(const Graph& g);
bool is_very_well_covered(const Graph& g);

/// C_t with a pendant vertex on every cycle vertex. Cycle vertex x_i
/// (1-based) is index i-1; its pendant y_i is index t+i-1.
Graph suspension_of_cycle(int t);

/// Two pentagons x1..x5 and y1..y5 joined by the edge x1y1. x_i is index
/// i-1 and y_i is index 4+i.
Graph build_two_pentagon_h();

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);

/// Positive integer weights on the edges of a graph, stored in the order of
/// Graph::edges().
class WeightFunction {
 public:
  WeightFunction() = default;
  /// Throws std::invalid_argument if the sizes differ or a weight is 0.
  WeightFunction(const Graph& g, std::vector<std::uint32_t> weights);

  static WeightFunction constant(const Graph& g, std::uint32_t value);

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& values() const { return weights_; }
  std::uint32_t operator[](std::size_t edge_pos) const { return weights_[edge_pos]; }
  /// Throws std::out_of_range if {u,v} is not an edge.
  std::uint32_t at(int u, int v) const;

  /// True iff the domain is exactly E(g).
  bool matches(const Graph& g) const { return edges_ == g.edges(); }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> weights_;
};

std::vector<int> mask_to_vector(VertexMask m);
VertexMask vector_to_mask(const std::vector<int>& vs);

}  // namespace seqcm
