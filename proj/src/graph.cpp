#include "seqcm/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace seqcm {

namespace {

inline VertexMask bit(int v) { return VertexMask{1} << v; }

// Vertices with index strictly greater than s.
inline VertexMask above(int s) { return s + 1 >= kMaxVertices ? 0 : ~(bit(s + 1) - 1); }

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n), adj_(n, 0) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  }
  for (auto [a, b] : edge_list) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                  "} has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

VertexMask Graph::all_vertices() const {
  return n_ == kMaxVertices ? ~VertexMask{0} : (bit(n_) - 1);
}

int Graph::edge_index(int u, int v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, VertexMask w) {
  if ((w & ~g.all_vertices()) != 0) {
    throw std::invalid_argument("vertex set exceeds the graph's vertex range");
  }
  InducedSubgraph out;
  out.original_vertex = mask_to_vector(w);
  std::vector<int> relabel(g.num_vertices(), -1);
  for (std::size_t i = 0; i < out.original_vertex.size(); ++i) {
    relabel[out.original_vertex[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> kept;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) kept.emplace_back(relabel[e.u], relabel[e.v]);
  }
  out.graph = Graph(static_cast<int>(out.original_vertex.size()), kept);
  return out;
}

std::vector<std::vector<int>> chordless_cycles(const Graph& g, int min_len) {
  if (min_len < 3) throw std::invalid_argument("min_len must be at least 3");
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;

  // path[0] is the anchor s (the smallest vertex of the cycle); the path
  // s, p1, ..., pk is induced and no p_i with i >= 2 is adjacent to s.
  std::function<void(VertexMask, VertexMask)> extend = [&](VertexMask on_path,
                                                           VertexMask blocked) {
    const int s = path.front();
    const int last = path.back();
    VertexMask candidates = g.neighbors(last) & ~on_path & ~blocked;
    candidates &= above(s);
    for (VertexMask c = candidates; c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      if (g.adjacent(v, s) && path.size() >= 2) {
        // Closing edge. Report each cycle once: second vertex < last vertex.
        if (path[1] < v && static_cast<int>(path.size()) + 1 >= min_len) {
          std::vector<int> cyc = path;
          cyc.push_back(v);
          cycles.push_back(std::move(cyc));
        }
        continue;
      }
      if (g.adjacent(v, s)) continue;
      path.push_back(v);
      // Neighbours of every vertex except the new endpoint become unusable.
      extend(on_path | bit(v), blocked | g.neighbors(last));
      path.pop_back();
    }
  };

  for (int s = 0; s < g.num_vertices(); ++s) {
    for (VertexMask c = g.neighbors(s) & above(s); c != 0; c &= c - 1) {
      const int p1 = std::countr_zero(c);
      path = {s, p1};
      // s's neighbours stay available: touching s closes the cycle.
      extend(bit(s) | bit(p1), 0);
    }
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return cycles;
}

bool is_woodroofe(const Graph& g) {
  for (const auto& cyc : chordless_cycles(g, 4)) {
    if (cyc.size() != 5) return false;
  }
  return true;
}

bool components_are_cliques(const Graph& g) {
  VertexMask seen = 0;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (seen & bit(s)) continue;
    VertexMask comp = bit(s);
    VertexMask frontier = bit(s);
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const VertexMask fresh = g.neighbors(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    for (VertexMask c = comp; c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      if ((g.neighbors(v) | bit(v)) != comp) return false;
    }
  }
  return true;
}

std::vector<int> find_induced_p3(const Graph& g) {
  // Middle vertex m with two non-adjacent neighbours.
  for (int m = 0; m < g.num_vertices(); ++m) {
    const auto nb = mask_to_vector(g.neighbors(m));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.adjacent(nb[i], nb[j])) return {nb[i], m, nb[j]};
      }
    }
  }
  return {};
}

bool is_disjoint_union_complete(const Graph& g) {
  const bool by_components = components_are_cliques(g);
  const bool by_p3 = find_induced_p3(g).empty();
  if (by_components != by_p3) {
    throw std::logic_error("clique-component test and induced-P3 test disagree");
  }
  return by_components;
}

namespace {

// Branch and bound over vertex orderings. Bits are emitted column by column,
// so after fixing the images of positions 0..j every bit of columns <= j is
// known and can be compared against the best string found so far.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.num_vertices()) {
    total_bits_ = n_ * (n_ - 1) / 2;
    order_.assign(n_, -1);
  }

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    best_ = ~std::uint64_t{0};
    search(0, 0, 0, 0);
    return best_;
  }

  int total_bits() const { return total_bits_; }

 private:
  // pos: next position to fill; used: vertices already placed; value: bits
  // emitted so far (in final position); emitted: count of bits emitted.
  void search(int pos, VertexMask used, std::uint64_t value, int emitted) {
    if (pos == n_) {
      best_ = std::min(best_, value);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used & bit(v)) continue;
      std::uint64_t next = value;
      int k = emitted;
      for (int i = 0; i < pos; ++i, ++k) {
        if (g_.adjacent(order_[i], v)) next |= std::uint64_t{1} << (total_bits_ - 1 - k);
      }
      if (prefix(next, k) > prefix(best_, k)) continue;
      order_[pos] = v;
      search(pos + 1, used | bit(v), next, k);
    }
  }

  std::uint64_t prefix(std::uint64_t value, int k) const {
    if (k == 0) return 0;
    const int drop = total_bits_ - k;
    return value >> drop;
  }

  const Graph& g_;
  int n_;
  int total_bits_ = 0;
  std::vector<int> order_;
  std::uint64_t best_ = 0;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxCanonicalVertices) {
    throw std::invalid_argument("canonical_form supports at most " +
                                std::to_string(kMaxCanonicalVertices) + " vertices, got " +
                                std::to_string(n));
  }
  CanonicalSearch search(g);
  const std::uint64_t best = search.run();
  std::string out = std::to_string(n) + ":";
  for (int k = 0; k < search.total_bits(); ++k) {
    out.push_back(((best >> (search.total_bits() - 1 - k)) & 1u) ? '1' : '0');
  }
  return out;
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > 7) throw std::invalid_argument("enumerate_graphs supports 0 <= n <= 7");
  if (n == 0) return {Graph(0, {})};
  // Every graph on n vertices is, after deleting its last vertex, isomorphic
  // to a representative on n-1 vertices; extending representatives by every
  // neighbourhood of a new vertex therefore reaches every class.
  std::vector<Graph> prev = enumerate_graphs(n - 1);
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> found;
  const int newv = n - 1;
  for (const Graph& base : prev) {
    std::vector<std::pair<int, int>> base_edges;
    for (const Edge& e : base.edges()) base_edges.emplace_back(e.u, e.v);
    for (VertexMask nb = 0; nb < (VertexMask{1} << newv); ++nb) {
      auto edges = base_edges;
      for (VertexMask c = nb; c != 0; c &= c - 1) edges.emplace_back(std::countr_zero(c), newv);
      Graph g(n, edges);
      std::string form = canonical_form(g);
      if (seen.insert(form).second) found.emplace_back(std::move(form), std::move(g));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second.num_edges() != b.second.num_edges()) {
      return a.second.num_edges() < b.second.num_edges();
    }
    return a.first < b.first;
  });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [form, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<VertexMask> maximal_independent_sets(const Graph& g) {
  // Bron-Kerbosch with pivoting on the complement graph.
  std::vector<VertexMask> out;
  const VertexMask all = g.all_vertices();
  auto non_nb = [&](int v) { return all & ~g.neighbors(v) & ~bit(v); };
  std::function<void(VertexMask, VertexMask, VertexMask)> bk = [&](VertexMask r, VertexMask p,
                                                                   VertexMask x) {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    const int pivot = std::countr_zero(p | x);
    for (VertexMask c = p & ~non_nb(pivot); c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      bk(r | bit(v), p & non_nb(v), x & non_nb(v));
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  bk(0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexMask> minimal_vertex_covers(const Graph& g) {
  std::vector<VertexMask> out;
  for (VertexMask s : maximal_independent_sets(g)) out.push_back(g.all_vertices() & ~s);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_very_well_covered(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0 || n % 2 != 0) return false;
  for (VertexMask c : minimal_vertex_covers(g)) {
    if (std::popcount(c) * 2 != n) return false;
  }
  return true;
}

Graph suspension_of_cycle(int t) {
  if (t < 3) throw std::invalid_argument("suspension_of_cycle needs t >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < t; ++i) {
    edges.emplace_back(i, (i + 1) % t);
    edges.emplace_back(i, t + i);
  }
  return Graph(2 * t, edges);
}

Graph build_two_pentagon_h() {
  std::vector<std::pair<int, int>> edges;
  for (int base : {0, 5}) {
    for (int i = 0; i < 5; ++i) edges.emplace_back(base + i, base + (i + 1) % 5);
  }
  edges.emplace_back(0, 5);
  return Graph(10, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

WeightFunction::WeightFunction(const Graph& g, std::vector<std::uint32_t> weights)
    : edges_(g.edges()), weights_(std::move(weights)) {
  if (weights_.size() != edges_.size()) {
    throw std::invalid_argument("weight count " + std::to_string(weights_.size()) +
                                " does not match edge count " + std::to_string(edges_.size()));
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] == 0) {
      throw std::invalid_argument("edge {" + std::to_string(edges_[i].u) + "," +
                                  std::to_string(edges_[i].v) + "} has weight 0");
    }
  }
}

WeightFunction WeightFunction::constant(const Graph& g, std::uint32_t value) {
  return WeightFunction(g, std::vector<std::uint32_t>(g.num_edges(), value));
}

std::uint32_t WeightFunction::at(int u, int v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) {
    throw std::out_of_range("no weight for {" + std::to_string(u) + "," + std::to_string(v) +
                            "}");
  }
  return weights_[it - edges_.begin()];
}

std::vector<int> mask_to_vector(VertexMask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

VertexMask vector_to_mask(const std::vector<int>& vs) {
  VertexMask m = 0;
  for (int v : vs) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex index out of range");
    m |= bit(v);
  }
  return m;
}

}  // namespace seqcm
