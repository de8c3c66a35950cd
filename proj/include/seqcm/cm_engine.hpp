#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqcm/complex.hpp"
#include "seqcm/monomial.hpp"

namespace seqcm {

/// H̃_degree(lk face) is nonzero although degree < dim lk face.
struct ReisnerWitness {
  FaceMask face = 0;
  int degree = 0;
  friend bool operator==(const ReisnerWitness&, const ReisnerWitness&) = default;
};

struct ComplexVerdict {
  bool holds = true;
  /// Set when a Reisner condition fails (for a skeleton failure, the failure
  /// inside that skeleton).
  std::optional<ReisnerWitness> reisner;
  /// Set when the pure skeleton of this dimension is not Cohen-Macaulay.
  std::optional<int> skeleton;
};

/// Reisner's criterion: every link (including lk ∅ = Δ) has vanishing reduced
/// homology below its dimension. Faces are visited by size, then
/// lexicographically; the first violation is returned.
ComplexVerdict is_cm_complex(const SimplicialComplex& complex, FieldSpec field);

/// Duval's criterion: every pure i-skeleton, -1 <= i <= dim, is
/// Cohen-Macaulay. Skeletons are checked in increasing i.
ComplexVerdict is_scm_complex(const SimplicialComplex& complex, FieldSpec field);

/// A monomial u not in I whose radical sqrt(I : u) fails the property.
struct RadicalWitness {
  Monomial u;
  MonomialIdeal radical;
  ComplexVerdict detail;
  /// Set for CM when the radical is Cohen-Macaulay but dim S/sqrt(I : u)
  /// falls below dim S/I; holds the smaller dimension.
  std::optional<int> dimension_drop;
};

struct CMReport {
  bool is_cm = false;
  bool is_scm = false;
  bool unmixed = false;
  int dim = 0;
  FieldSpec field;
  std::optional<RadicalWitness> cm_witness;
  std::optional<RadicalWitness> scm_witness;
  /// Set when the cross-field run (over F_2) disagreed with `field`.
  bool field_sensitive = false;
  /// Number of distinct associated radicals inspected.
  std::size_t radicals_checked = 0;
};

/// Memo of complex verdicts keyed by the canonical form of a squarefree ideal
/// (ring size plus sorted generator supports) and the field. Safe for
/// concurrent insert-or-get; concurrent inserts of one key carry identical
/// values, so the last writer wins harmlessly.
class VerdictCache {
 public:
  struct Entry {
    ComplexVerdict cm;
    ComplexVerdict scm;
  };

  std::optional<Entry> find(const std::vector<std::uint32_t>& key) const;
  void insert(const std::vector<std::uint32_t>& key, const Entry& entry);
  std::size_t size() const;
  void clear();

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
  };
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<std::uint32_t>, Entry, KeyHash> map_;
};

struct EngineOptions {
  FieldSpec field = FieldSpec::rationals();
  /// Also decide every radical over F_2 and flag disagreements.
  bool cross_field = false;
};

/// Decides CM and seqCM for monomial ideals through their associated
/// radicals: I is (sequentially) Cohen-Macaulay iff sqrt(I : u) is for every
/// monomial u outside I.
class CMEngine {
 public:
  explicit CMEngine(EngineOptions options = {});

  /// Full report: both verdicts, unmixedness, dimension and witnesses.
  /// S/I is CM iff every sqrt(I : u) is CM of dimension dim S/I, and seqCM
  /// iff every sqrt(I : u) is seqCM. The scan visits radicals in discovery
  /// order and stops once both verdicts are negative.
  CMReport analyze(const MonomialIdeal& ideal) const;
  CMReport is_cm_ideal(const MonomialIdeal& ideal) const { return analyze(ideal); }
  CMReport is_scm_ideal(const MonomialIdeal& ideal) const { return analyze(ideal); }

  /// Verdicts for one squarefree ideal, via its Stanley-Reisner complex.
  VerdictCache::Entry squarefree_verdicts(const MonomialIdeal& squarefree) const;

  const EngineOptions& options() const { return options_; }
  VerdictCache& cache() const { return *cache_; }

 private:
  VerdictCache::Entry decide(const MonomialIdeal& squarefree, FieldSpec field) const;

  EngineOptions options_;
  std::shared_ptr<VerdictCache> cache_;
};

/// Largest polarized ring accepted by the polarization oracle.
inline constexpr int kMaxPolarizedVariables = 20;

/// Decide via the Stanley-Reisner complex of the polarization. Throws
/// std::invalid_argument when the polarized ring exceeds 20 variables.
bool is_cm_via_polarization(const MonomialIdeal& ideal, FieldSpec field);
bool is_scm_via_polarization(const MonomialIdeal& ideal, FieldSpec field);

}  // namespace seqcm
