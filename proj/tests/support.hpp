#pragma once

// Independent brute-force oracles and the shared test corpus.

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "seqcm/complex.hpp"
#include "seqcm/graph.hpp"
#include "seqcm/monomial.hpp"

namespace seqcm {

inline void PrintTo(const MonomialIdeal& i, std::ostream* os) { *os << i.to_string(); }
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << m.to_string(); }
inline void PrintTo(const Graph& g, std::ostream* os) {
  *os << "n=" << g.num_vertices() << " {";
  for (const Edge& e : g.edges()) *os << " " << e.u << "-" << e.v;
  *os << " }";
}
inline void PrintTo(const SimplicialComplex& c, std::ostream* os) { *os << c.dump(); }

}  // namespace seqcm

namespace seqcm::testing {

inline bool bit_set(std::uint32_t m, int i) { return (m >> i) & 1u; }

// Every labeled graph on n vertices, one per edge subset.
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((s >> i) & 1u) edges.push_back(pairs[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

// Sorted edge list of g after relabeling v -> perm[v].
inline std::vector<std::pair<int, int>> relabel_edges(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) {
    out.emplace_back(std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Isomorphism class count by orbit dedup over all permutations.
inline std::size_t brute_class_count(int n) {
  std::set<std::vector<std::pair<int, int>>> seen;
  std::size_t classes = 0;
  for (const Graph& g : all_labeled_graphs(n)) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (seen.count(relabel_edges(g, perm))) continue;
    ++classes;
    do {
      seen.insert(relabel_edges(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return classes;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> perm(a.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> target;
  for (const Edge& e : b.edges()) target.emplace_back(e.u, e.v);
  do {
    if (relabel_edges(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// A vertex set spans a chordless cycle iff it has at least 4 vertices, every
// member has exactly two neighbours inside it, and it is connected.
inline bool spans_chordless_cycle(const Graph& g, VertexMask s) {
  if (std::popcount(s) < 4) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (bit_set(s, v) && std::popcount(g.neighbors(v) & s) != 2) return false;
  }
  VertexMask reached = s & (~s + 1);
  while (true) {
    VertexMask next = reached;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (bit_set(reached, v)) next |= g.neighbors(v) & s;
    if (next == reached) break;
    reached = next;
  }
  return reached == s;
}

inline std::vector<VertexMask> brute_chordless_cycle_sets(const Graph& g) {
  std::vector<VertexMask> out;
  for (VertexMask s = 0; s < (VertexMask{1} << g.num_vertices()); ++s)
    if (spans_chordless_cycle(g, s)) out.push_back(s);
  return out;
}

inline bool brute_woodroofe(const Graph& g) {
  for (VertexMask s : brute_chordless_cycle_sets(g))
    if (std::popcount(s) != 5) return false;
  return true;
}

// Faces of the Stanley-Reisner complex: subsets containing no generator support.
inline std::vector<FaceMask> brute_faces(int n, const std::vector<VarMask>& gens) {
  std::vector<FaceMask> out;
  for (FaceMask f = 0; f < (FaceMask{1} << n); ++f) {
    bool ok = true;
    for (VarMask g : gens) ok = ok && (g & ~f) != 0;
    if (ok) out.push_back(f);
  }
  return out;
}

inline std::vector<FaceMask> all_faces(const SimplicialComplex& c) {
  std::vector<FaceMask> out;
  for (FaceMask f = 0; f < (FaceMask{1} << c.ambient()); ++f)
    if (c.contains(f)) out.push_back(f);
  return out;
}

// Membership of x^a in I straight from the definition.
inline bool brute_contains(const MonomialIdeal& ideal, const std::vector<Exponent>& a) {
  if (ideal.is_unit()) return true;
  for (const Monomial& g : ideal.generators()) {
    bool divides = true;
    for (int i = 0; i < ideal.num_vars(); ++i) divides = divides && g[i] <= a[i];
    if (divides) return true;
  }
  return false;
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, int n, int facets) {
  std::uniform_int_distribution<FaceMask> pick(0, (FaceMask{1} << n) - 1);
  std::vector<FaceMask> fs;
  for (int i = 0; i < facets; ++i) fs.push_back(pick(rng));
  return SimplicialComplex(n, fs);
}

// Complexes used by the homology sanity checks: spheres, independence
// complexes of every graph class up to six vertices, and random complexes.
inline long long euler_from_faces(const SimplicialComplex& c) {
  long long chi = 0, sign = 1;
  for (std::size_t f : c.f_vector()) {  // f_vector()[d + 1] counts d-faces
    chi += sign * static_cast<long long>(f);
    sign = -sign;
  }
  return chi;  // includes the empty face with sign +1, i.e. the reduced characteristic negated
}

inline long long euler_from_betti(const BettiVector& b) {
  long long chi = 0, sign = 1;
  for (std::size_t r : b.ranks) {
    chi += sign * static_cast<long long>(r);
    sign = -sign;
  }
  return chi;
}

inline std::vector<SimplicialComplex> complex_corpus() {
  std::vector<SimplicialComplex> out;
  for (int n = 1; n <= 6; ++n) {
    out.push_back(SimplicialComplex::simplex_boundary(n));
    out.push_back(SimplicialComplex::simplex(n));
  }
  out.push_back(SimplicialComplex::empty_face(3));
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) out.push_back(independence_complex(g));
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) out.push_back(random_complex(rng, 3 + i % 6, 1 + i % 7));
  return out;
}

// Monomial ideals for the implication-lattice checks: weighted edge ideals of
// every graph class up to four vertices with weights in {1,2}, every class
// on five and six vertices unweighted, weighted pentagons, and the
// suspension examples.
inline std::vector<MonomialIdeal> ideal_corpus() {
  std::vector<MonomialIdeal> out;
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (g.num_edges() == 0) continue;
      const int m = g.num_edges();
      for (std::uint32_t s = 0; s < (1u << m); ++s) {
        std::vector<std::uint32_t> w(m);
        for (int i = 0; i < m; ++i) w[i] = 1 + ((s >> i) & 1u);
        out.push_back(weighted_edge_ideal(g, WeightFunction(g, w)));
      }
    }
  }
  for (int n = 5; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n))
      if (g.num_edges() > 0) out.push_back(edge_ideal(g));
  const Graph c5 = cycle_graph(5);
  for (std::uint32_t s = 0; s < 243; ++s) {
    std::vector<std::uint32_t> w(5);
    std::uint32_t x = s;
    for (int i = 0; i < 5; ++i, x /= 3) w[i] = 1 + x % 3;
    out.push_back(weighted_edge_ideal(c5, WeightFunction(c5, w)));
  }
  for (int t : {4, 6}) {
    const Graph g = suspension_of_cycle(t);
    std::vector<std::uint32_t> w;
    for (const Edge& e : g.edges()) w.push_back(e.v < t ? 2 : 1);
    out.push_back(edge_ideal(g));
    out.push_back(weighted_edge_ideal(g, WeightFunction(g, w)));
  }
  return out;
}

}  // namespace seqcm::testing
