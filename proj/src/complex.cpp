#include "seqcm/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace seqcm {

namespace {

void require_vertex_range(int n) {
  if (n < 0 || n > kMaxComplexVertices) {
    throw std::invalid_argument("simplicial complexes support at most " +
                                std::to_string(kMaxComplexVertices) + " vertices, got " +
                                std::to_string(n));
  }
}

FaceMask full_mask(int n) { return n >= 32 ? ~FaceMask{0} : (FaceMask{1} << n) - 1; }

std::vector<FaceMask> maximal_faces(std::vector<FaceMask> faces) {
  std::sort(faces.begin(), faces.end(), [](FaceMask a, FaceMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<FaceMask> kept;
  for (FaceMask f : faces) {
    bool covered = false;
    for (FaceMask k : kept) {
      if ((f & k) == f) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Calls fn on every k-element subset of `set`.
template <typename Fn>
void for_each_subset_of_size(FaceMask set, int k, Fn&& fn) {
  const auto elems = mask_to_vector(set);
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    FaceMask s = 0;
    for (int i : idx) s |= FaceMask{1} << elems[i];
    fn(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<FaceMask> faces) : n_(n) {
  require_vertex_range(n);
  for (FaceMask f : faces) {
    if ((f & ~full_mask(n)) != 0) throw std::invalid_argument("face exceeds vertex range");
  }
  facets_ = maximal_faces(std::move(faces));
}

SimplicialComplex SimplicialComplex::void_complex(int n) { return SimplicialComplex(n, {}); }

SimplicialComplex SimplicialComplex::empty_face(int n) { return SimplicialComplex(n, {0}); }

SimplicialComplex SimplicialComplex::simplex(int n) {
  return SimplicialComplex(n, {full_mask(n)});
}

SimplicialComplex SimplicialComplex::simplex_boundary(int n) {
  std::vector<FaceMask> faces;
  for (int v = 0; v < n; ++v) faces.push_back(full_mask(n) & ~(FaceMask{1} << v));
  return SimplicialComplex(n, faces);
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw std::logic_error("the void complex has no dimension");
  int best = 0;
  for (FaceMask f : facets_) best = std::max(best, std::popcount(f));
  return best - 1;
}

bool SimplicialComplex::contains(FaceMask face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](FaceMask f) { return (face & f) == face; });
}

bool SimplicialComplex::is_pure() const {
  if (is_void()) return true;
  const int k = std::popcount(facets_.front());
  return std::all_of(facets_.begin(), facets_.end(),
                     [k](FaceMask f) { return std::popcount(f) == k; });
}

FaceMask SimplicialComplex::vertex_support() const {
  FaceMask s = 0;
  for (FaceMask f : facets_) s |= f;
  return s;
}

std::vector<std::vector<FaceMask>> SimplicialComplex::faces_by_dimension() const {
  if (is_void()) return {};
  std::vector<FaceMask> all;
  for (FaceMask f : facets_) {
    // Submask enumeration, including f itself and the empty face.
    for (FaceMask s = f;; s = (s - 1) & f) {
      all.push_back(s);
      if (s == 0) break;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<std::vector<FaceMask>> out(dimension() + 2);
  for (FaceMask s : all) out[std::popcount(s)].push_back(s);
  for (auto& layer : out) std::sort(layer.begin(), layer.end(), face_lex_less);
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& layer : faces_by_dimension()) out.push_back(layer.size());
  return out;
}

SimplicialComplex SimplicialComplex::compacted() const {
  const auto used = mask_to_vector(vertex_support());
  std::vector<int> perm(n_, -1);
  for (std::size_t i = 0; i < used.size(); ++i) perm[used[i]] = static_cast<int>(i);
  SimplicialComplex out;
  out.n_ = static_cast<int>(used.size());
  for (FaceMask f : facets_) {
    FaceMask g = 0;
    for (FaceMask c = f; c != 0; c &= c - 1) g |= FaceMask{1} << perm[std::countr_zero(c)];
    out.facets_.push_back(g);
  }
  std::sort(out.facets_.begin(), out.facets_.end());
  return out;
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size");
  std::vector<FaceMask> faces;
  for (FaceMask f : facets_) {
    FaceMask g = 0;
    for (FaceMask c = f; c != 0; c &= c - 1) g |= FaceMask{1} << perm[std::countr_zero(c)];
    faces.push_back(g);
  }
  return SimplicialComplex(n_, faces);
}

std::string SimplicialComplex::dump() const {
  std::vector<FaceMask> sorted = facets_;
  std::sort(sorted.begin(), sorted.end(), [](FaceMask a, FaceMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : face_lex_less(a, b);
  });
  std::string out;
  for (FaceMask f : sorted) {
    if (f == 0) {
      out += "{}\n";
      continue;
    }
    bool first = true;
    for (int v : mask_to_vector(f)) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  require_vertex_range(n);
  if (!ideal.is_proper()) throw std::invalid_argument("Stanley-Reisner complex of the unit ideal");
  if (!ideal.is_squarefree()) {
    throw std::invalid_argument("Stanley-Reisner complex needs a squarefree ideal, got " +
                                ideal.to_string());
  }
  // Facets are the complements of the minimal primes.
  std::vector<FaceMask> facets;
  for (VarMask p : minimal_primes(ideal)) facets.push_back(full_mask(n) & ~p);
  return SimplicialComplex(n, facets);
}

SimplicialComplex independence_complex(const Graph& g) {
  return stanley_reisner_complex(edge_ideal(g));
}

SimplicialComplex link(const SimplicialComplex& complex, FaceMask sigma) {
  std::vector<FaceMask> faces;
  for (FaceMask f : complex.facets()) {
    if ((f & sigma) == sigma) faces.push_back(f & ~sigma);
  }
  if (faces.empty()) throw std::invalid_argument("link of a set that is not a face");
  return SimplicialComplex(complex.ambient(), faces);
}

SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int i) {
  const int dim = complex.dimension();
  if (i < -1 || i > dim) {
    throw std::invalid_argument("skeleton dimension " + std::to_string(i) + " outside [-1, " +
                                std::to_string(dim) + "]");
  }
  std::vector<FaceMask> faces;
  for (FaceMask f : complex.facets()) {
    for_each_subset_of_size(f, i + 1, [&](FaceMask s) { faces.push_back(s); });
  }
  return SimplicialComplex(complex.ambient(), faces);
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p > (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("field characteristic must be a prime <= 2^31, got " +
                                std::to_string(p));
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  return {static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

bool BettiVector::acyclic_below(int degree) const {
  for (int i = -1; i < degree; ++i) {
    if (at(i) != 0) return false;
  }
  return true;
}

}  // namespace seqcm
