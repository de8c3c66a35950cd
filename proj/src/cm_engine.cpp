#include "seqcm/cm_engine.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace seqcm {

namespace {

// Links are memoized after compaction, so links that differ only by unused
// vertices share one homology computation.
using LinkKey = std::vector<FaceMask>;

std::optional<int> first_homology_below_dim(const SimplicialComplex& lk, FieldSpec field) {
  const int d = lk.dimension();
  if (d <= 0) return std::nullopt;  // only H̃_{-1} matters, and lk has a vertex
  const BettiVector betti = reduced_betti(lk, field);
  for (int i = -1; i < d; ++i) {
    if (betti.at(i) != 0) return i;
  }
  return std::nullopt;
}

LinkKey link_key(const SimplicialComplex& compact) {
  LinkKey key = compact.facets();
  key.push_back(static_cast<FaceMask>(compact.ambient()));
  return key;
}

}  // namespace

ComplexVerdict is_cm_complex(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.is_void()) throw std::invalid_argument("Cohen-Macaulayness of the void complex");
  std::map<LinkKey, std::optional<int>> memo;
  const auto faces = complex.faces_by_dimension();
  for (const auto& layer : faces) {
    for (FaceMask sigma : layer) {
      const SimplicialComplex lk = link(complex, sigma).compacted();
      if (lk.dimension() <= 0) continue;
      const LinkKey key = link_key(lk);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, first_homology_below_dim(lk, field)).first;
      if (it->second) return {false, ReisnerWitness{sigma, *it->second}, std::nullopt};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

ComplexVerdict is_scm_complex(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.is_void()) throw std::invalid_argument("sequential Cohen-Macaulayness of the void complex");
  const int dim = complex.dimension();
  // The pure (-1)-skeleton is {∅}, Cohen-Macaulay by convention.
  for (int i = 0; i <= dim; ++i) {
    const ComplexVerdict v = is_cm_complex(pure_skeleton(complex, i), field);
    if (!v.holds) return {false, v.reisner, i};
  }
  return {true, std::nullopt, std::nullopt};
}

std::optional<VerdictCache::Entry> VerdictCache::find(const std::vector<std::uint32_t>& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void VerdictCache::insert(const std::vector<std::uint32_t>& key, const Entry& entry) {
  std::unique_lock lock(mutex_);
  map_.insert_or_assign(key, entry);
}

std::size_t VerdictCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void VerdictCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
}

std::size_t VerdictCache::KeyHash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ull;
  for (std::uint32_t x : v) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

CMEngine::CMEngine(EngineOptions options)
    : options_(options), cache_(std::make_shared<VerdictCache>()) {}

VerdictCache::Entry CMEngine::decide(const MonomialIdeal& squarefree, FieldSpec field) const {
  std::vector<std::uint32_t> key = squarefree.squarefree_masks();
  key.push_back(static_cast<std::uint32_t>(squarefree.num_vars()));
  key.push_back(field.characteristic);
  if (auto hit = cache_->find(key)) return *hit;
  const SimplicialComplex complex = stanley_reisner_complex(squarefree);
  VerdictCache::Entry entry{is_cm_complex(complex, field), is_scm_complex(complex, field)};
  cache_->insert(key, entry);
  return entry;
}

VerdictCache::Entry CMEngine::squarefree_verdicts(const MonomialIdeal& squarefree) const {
  return decide(squarefree, options_.field);
}

CMReport CMEngine::analyze(const MonomialIdeal& ideal) const {
  if (!ideal.is_proper()) throw std::invalid_argument("CM analysis needs a proper ideal");
  CMReport report;
  report.field = options_.field;
  report.is_cm = true;
  report.is_scm = true;
  const FieldSpec f2 = FieldSpec::prime(2);
  const bool cross = options_.cross_field && options_.field != f2;
  bool cm_f2 = true, scm_f2 = true;
  report.dim = krull_dim(ideal);

  for (const AssociatedRadical& r : enumerate_associated_radicals(ideal)) {
    ++report.radicals_checked;
    const VerdictCache::Entry v = decide(r.radical, options_.field);
    // A CM radical of lower dimension still forces depth S/I < dim S/I.
    const int radical_dim = krull_dim(r.radical);
    const bool full_dim = radical_dim == report.dim;
    if (report.is_cm && !(v.cm.holds && full_dim)) {
      report.is_cm = false;
      report.cm_witness = RadicalWitness{r.witness, r.radical, v.cm, std::nullopt};
      if (v.cm.holds) report.cm_witness->dimension_drop = radical_dim;
    }
    if (report.is_scm && !v.scm.holds) {
      report.is_scm = false;
      report.scm_witness = RadicalWitness{r.witness, r.radical, v.scm, std::nullopt};
    }
    if (cross) {
      const VerdictCache::Entry w = decide(r.radical, f2);
      cm_f2 = cm_f2 && w.cm.holds && full_dim;
      scm_f2 = scm_f2 && w.scm.holds;
    } else if (!report.is_cm && !report.is_scm) {
      break;
    }
  }
  if (cross) report.field_sensitive = (cm_f2 != report.is_cm) || (scm_f2 != report.is_scm);
  report.unmixed = is_unmixed(ideal);
  return report;
}

namespace {

SimplicialComplex polarized_complex(const MonomialIdeal& ideal) {
  const Polarization pol = polarize(ideal);
  if (pol.ideal.num_vars() > kMaxPolarizedVariables) {
    throw std::invalid_argument("polarization needs " + std::to_string(pol.ideal.num_vars()) +
                                " variables, more than " +
                                std::to_string(kMaxPolarizedVariables));
  }
  return stanley_reisner_complex(pol.ideal);
}

}  // namespace

bool is_cm_via_polarization(const MonomialIdeal& ideal, FieldSpec field) {
  return is_cm_complex(polarized_complex(ideal), field).holds;
}

bool is_scm_via_polarization(const MonomialIdeal& ideal, FieldSpec field) {
  return is_scm_complex(polarized_complex(ideal), field).holds;
}

}  // namespace seqcm
