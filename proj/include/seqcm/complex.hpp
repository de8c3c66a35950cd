#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqcm/graph.hpp"
#include "seqcm/monomial.hpp"

namespace seqcm {

using FaceMask = std::uint32_t;

inline constexpr int kMaxComplexVertices = 20;

/// Abstract simplicial complex on the vertex range 0..n-1, kept as its list
/// of facets (inclusion-maximal faces).
///
/// The void complex (no faces) and the complex {∅} are different objects: the
/// first has no facets and is flagged void, the second has the single facet 0.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps the inclusion-maximal members of `faces`. An empty list gives the
  /// void complex.
  SimplicialComplex(int n, std::vector<FaceMask> faces);

  static SimplicialComplex void_complex(int n);
  /// The complex {∅}.
  static SimplicialComplex empty_face(int n);
  static SimplicialComplex simplex(int n);
  /// Boundary of the simplex on vertices 0..n-1 (the sphere S^{n-2}).
  static SimplicialComplex simplex_boundary(int n);

  int ambient() const { return n_; }
  bool is_void() const { return facets_.empty(); }
  const std::vector<FaceMask>& facets() const { return facets_; }
  /// Largest facet size minus one; -1 for {∅}. Throws for the void complex.
  int dimension() const;
  bool contains(FaceMask face) const;
  bool is_pure() const;
  /// Vertices that occur in some face.
  FaceMask vertex_support() const;

  /// faces[d + 1] lists the d-faces, each list in lexicographic order of the
  /// sorted vertex tuples.
  std::vector<std::vector<FaceMask>> faces_by_dimension() const;
  std::vector<std::size_t> f_vector() const;

  /// Same complex with the used vertices renamed 0..k-1 in increasing order.
  SimplicialComplex compacted() const;
  /// Applies a vertex relabeling: vertex v becomes perm[v].
  SimplicialComplex relabeled(const std::vector<int>& perm) const;

  /// One facet per line, by size then lexicographically, vertices space
  /// separated. {∅} prints as "{}" and the void complex as nothing.
  std::string dump() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<FaceMask> facets_;  // sorted ascending
};

/// Lexicographic order of the sorted vertex tuples of two faces of equal size.
inline bool face_lex_less(FaceMask a, FaceMask b) {
  const FaceMask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

/// Faces are the supports of squarefree monomials outside the ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);
SimplicialComplex independence_complex(const Graph& g);

/// lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}. Throws if σ is not a face.
SimplicialComplex link(const SimplicialComplex& complex, FaceMask sigma);

/// Subcomplex generated by the faces of dimension exactly i, -1 <= i <= dim.
SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int i);

/// Coefficient field: characteristic 0 means the rationals.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {0}; }
  /// Throws std::invalid_argument unless p is a prime <= 2^31.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return characteristic == 0; }
  std::string to_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Reduced homology ranks for degrees -1..dim.
struct BettiVector {
  std::vector<std::size_t> ranks;  // ranks[i + 1] = rank H̃_i

  std::size_t at(int degree) const {
    const int k = degree + 1;
    return (k < 0 || k >= static_cast<int>(ranks.size())) ? 0 : ranks[k];
  }
  bool acyclic_below(int degree) const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Exact reduced homology ranks from the boundary matrices. Over the
/// rationals ranks come from fraction-free integer elimination; over F_p
/// from elimination mod p. Throws for the void complex.
BettiVector reduced_betti(const SimplicialComplex& complex, FieldSpec field);

/// Rank of a sparse integer matrix given by columns of (row, value) pairs.
std::size_t matrix_rank(std::vector<std::vector<std::pair<int, std::int64_t>>> columns,
                        FieldSpec field);

}  // namespace seqcm
