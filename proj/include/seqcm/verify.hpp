#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqcm/cm_engine.hpp"
#include "seqcm/graph.hpp"

namespace seqcm {

struct Counterexample {
  Graph graph;
  std::optional<WeightFunction> weights;
  std::string detail;
};

struct VerificationOutcome {
  std::string name;
  bool passed = true;
  std::size_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};
  std::size_t field_sensitive_cases = 0;
  std::uint64_t seed = 0;
  /// Extra run facts (ordered key/value pairs), e.g. weightings scanned.
  std::vector<std::pair<std::string, std::string>> notes;

  void fail(Counterexample c) {
    counterexamples.push_back(std::move(c));
    passed = false;
  }
};

struct VerifyOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  FieldSpec field = FieldSpec::rationals();
  /// Re-decide over F_2 and count disagreements as field-sensitive.
  bool cross_field = false;
  /// Largest weight in certification scans.
  unsigned wmax = 2;
  /// Woodroofe graphs on six vertices with more edges than this are checked
  /// on the witness_weight family (one weighting per vertex subset) instead
  /// of every weighting.
  int exhaustive_edge_limit = 9;
};

/// Thrown when an instance would exceed a scan budget.
class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Weight 2 on edges with both ends in W, 1 elsewhere. Colon by the product
/// of W's variables turns I(G_w) into I(G[W]) + (variables) + I(G[W']) for
/// some W' disjoint from W.
WeightFunction witness_weight(const Graph& g, VertexMask w);

/// Calls fn on every weighting in {1..wmax}^E, all-ones first, the first
/// edge varying fastest. Stops early when fn returns false. Throws
/// BudgetExceeded if there are more than `budget` weightings.
template <typename Fn>
void for_each_weighting(const Graph& g, unsigned wmax, std::size_t budget, Fn&& fn);

struct AllWeightsResult {
  /// The structural classifier's answer.
  bool structural = false;
  /// Whether the exhaustive scan ran.
  bool certified = false;
  /// Exhaustive verdict; equals `structural` unless the claim is violated.
  bool scan_verdict = false;
  std::size_t weightings_checked = 0;
  std::size_t field_sensitive = 0;
  /// A weighting whose ideal fails the property, when structural is false
  /// or the scan found one.
  std::optional<WeightFunction> certificate;
  /// The certificate's ideal was decided and does fail the property.
  bool certificate_confirmed = false;
  bool agrees() const {
    if (certified) return scan_verdict == structural;
    return structural || certificate_confirmed;
  }
};

inline constexpr std::size_t kDefaultWeightBudget = std::size_t{1} << 16;

/// CM for every weighting iff G is a disjoint union of cliques. With
/// `certify`, every weighting in {1..wmax}^E is decided and the first failing
/// one becomes the certificate; without it, a negative answer is certified by
/// the witness weighting on an induced P3.
AllWeightsResult cm_for_all_weights(const Graph& g, const CMEngine& engine, unsigned wmax,
                                    bool certify, std::size_t budget = kDefaultWeightBudget);

/// seqCM for every weighting iff G is a Woodroofe graph. Same certificate
/// rules, with the witness weighting placed on a chordless cycle whose length
/// is neither 3 nor 5.
AllWeightsResult scm_for_all_weights(const Graph& g, const CMEngine& engine, unsigned wmax,
                                     bool certify, std::size_t budget = kDefaultWeightBudget);

enum class Orientation { kClockwise, kBoth };

/// Vertices v of the pentagon 0-1-2-3-4-0 from which the five edge weights
/// read a, b, c, d, a with a <= b >= c <= d >= a. Clockwise from v means
/// the edges {v,v+1}, {v+1,v+2}, ..., {v+4,v}.
std::vector<int> pentagon_balancing_vertices(const WeightFunction& w,
                                             Orientation orientation = Orientation::kBoth);

/// Closed-form Cohen-Macaulay test for a weighted pentagon: a balancing
/// vertex exists. Throws std::invalid_argument unless w lives on C_5.
bool pentagon_balancing_cm(const WeightFunction& w, Orientation orientation = Orientation::kBoth);

/// Closed-form Cohen-Macaulay test for the two-pentagon graph H:
///  (1) w(x1y1) <= the four other weights at x1 and y1,
///  (2) both weighted pentagons are Cohen-Macaulay,
///  (3) each pentagon has a balancing vertex among {x1,x3,x4} (resp. y's).
bool two_pentagon_cm_conditions(const WeightFunction& w);

/// Restriction of a weighting of g to an induced subgraph of g.
WeightFunction restrict_weights(const Graph& g, const WeightFunction& w,
                                const InducedSubgraph& sub);

/// Classes on exactly n vertices: disjoint union of cliques iff CM for all
/// weightings. n <= 5 scans every {1..wmax} weighting; n = 6 uses witness
/// weightings for negatives and scans positives.
VerificationOutcome verify_cm_all_weights(int n, const VerifyOptions& options);

/// Classes on exactly n vertices: Woodroofe iff seqCM for all weightings.
VerificationOutcome verify_scm_all_weights(int n, const VerifyOptions& options);

/// Every weighting of C_5 in {1..wmax}^5: balancing formula vs homology.
VerificationOutcome verify_pentagon_criterion(unsigned wmax, const VerifyOptions& options);

/// All 2048 {1,2}-weightings of H: closed-form conditions vs homology.
VerificationOutcome verify_two_pentagon_criterion(const VerifyOptions& options);

/// Random Woodroofe graphs (3 <= n <= 7) with weights in {1,2,3}:
/// unmixed iff CM.
VerificationOutcome verify_unmixed_iff_cm(std::size_t sample, const VerifyOptions& options);

/// Suspension of C_t with weight omega on cycle edges: CM unweighted, very
/// well-covered, not seqCM weighted, and the explicit witness radical.
VerificationOutcome verify_suspension_counterexample(int t, unsigned omega,
                                                     const VerifyOptions& options);

/// Random monomial ideals with polarized rings of at most 20 variables: the
/// associated-radical verdicts agree with the polarization verdicts.
VerificationOutcome verify_polarization_oracle(std::size_t sample, const VerifyOptions& options);

/// Random monomial ideal drawn for the polarization cross-check.
MonomialIdeal random_monomial_ideal(std::uint64_t seed);

// ---------------------------------------------------------------------------

template <typename Fn>
void for_each_weighting(const Graph& g, unsigned wmax, std::size_t budget, Fn&& fn) {
  const int m = g.num_edges();
  double total = 1;
  for (int i = 0; i < m; ++i) total *= wmax;
  if (total > static_cast<double>(budget)) {
    throw BudgetExceeded("weight scan of " + std::to_string(static_cast<std::size_t>(total)) +
                         " weightings exceeds budget " + std::to_string(budget));
  }
  std::vector<std::uint32_t> w(m, 1);
  while (true) {
    if (!fn(WeightFunction(g, w))) return;
    int i = 0;
    while (i < m && w[i] == wmax) w[i++] = 1;
    if (i == m) return;
    ++w[i];
  }
}

}  // namespace seqcm
