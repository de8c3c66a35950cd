// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "seqcm/verify.hpp"
#include "support.hpp"

using namespace seqcm;
using namespace seqcm::testing;

namespace {

struct Result {
  bool passed = false;
  std::string summary;
};

std::string note(const VerificationOutcome& o, const std::string& key) {
  for (const auto& [k, v] : o.notes)
    if (k == key) return v;
  return "?";
}

Result from(const VerificationOutcome& o, std::string summary) {
  return {o.passed, o.name + ": " + std::to_string(o.instances_checked) + " instances, " +
                        std::to_string(o.counterexamples.size()) + " counterexamples" +
                        (summary.empty() ? "" : ", " + summary)};
}

VerifyOptions options() {
  VerifyOptions opts;
  opts.jobs = std::max(1u, std::thread::hardware_concurrency());
  opts.seed = 1;
  return opts;
}

Result classes_cm() {
  std::size_t classes = 0;
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    const VerificationOutcome o = verify_cm_all_weights(n, options());
    ok = ok && o.passed;
    classes += o.instances_checked;
  }
  ok = ok && classes == 52;
  return {ok, "CM for all weightings, n = 1..5: " + std::to_string(classes) + " classes"};
}

Result classes_scm() {
  const VerificationOutcome five = verify_scm_all_weights(5, options());
  const VerificationOutcome six = verify_scm_all_weights(6, options());
  return {five.passed && six.passed && five.instances_checked == 34 && six.instances_checked == 156,
          "seqCM for all weightings: n = 5 " + std::to_string(five.instances_checked) +
              " classes, n = 6 " + std::to_string(six.instances_checked) + " classes"};
}

Result pentagon() {
  VerifyOptions opts = options();
  const VerificationOutcome o = verify_pentagon_criterion(3, opts);
  Result r = from(o, note(o, "cm_weightings") + " CM, clockwise-only sufficient: " +
                         note(o, "clockwise_only_sufficient"));
  r.passed = r.passed && o.instances_checked == 243;
  return r;
}

Result two_pentagons() {
  const VerificationOutcome o = verify_two_pentagon_criterion(options());
  Result r = from(o, note(o, "cm_weightings") + " CM");
  r.passed = r.passed && o.instances_checked == 2048;
  return r;
}

Result suspension() {
  const VerificationOutcome four = verify_suspension_counterexample(4, 2, options());
  const VerificationOutcome six = verify_suspension_counterexample(6, 2, options());
  return {four.passed && six.passed, "suspensions t = 4, 6: witness radicals " +
                                         note(four, "witness_radical") + " and " +
                                         note(six, "witness_radical")};
}

Result unmixed() {
  const VerificationOutcome o = verify_unmixed_iff_cm(200, options());
  return from(o, note(o, "cm_instances") + " CM, " + note(o, "unmixed_instances") + " unmixed");
}

Result oracle() {
  const VerificationOutcome o = verify_polarization_oracle(500, options());
  Result r = from(o, "");
  r.passed = r.passed && o.instances_checked >= 500;
  return r;
}

Result homology() {
  std::size_t failures = 0, checked = 0;
  for (int k = 0; k <= 3; ++k) {
    const BettiVector b = reduced_betti(SimplicialComplex::simplex_boundary(k + 2), FieldSpec::rationals());
    for (int i = -1; i <= k; ++i) failures += b.at(i) != (i == k ? 1u : 0u);
  }
  std::mt19937_64 rng(37);
  for (const SimplicialComplex& c : complex_corpus()) {
    ++checked;
    const BettiVector b = reduced_betti(c, FieldSpec::rationals());
    failures += euler_from_faces(c) != euler_from_betti(b);
    std::vector<int> perm(c.ambient());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    failures += reduced_betti(c.relabeled(perm), FieldSpec::rationals()) != b;
  }
  return {failures == 0, "spheres k <= 3, " + std::to_string(checked) +
                             " corpus complexes, " + std::to_string(failures) + " failures"};
}

Result lattice() {
  const CMEngine engine;
  std::size_t violations = 0, checked = 0;
  for (const MonomialIdeal& i : ideal_corpus()) {
    ++checked;
    const CMReport r = engine.analyze(i);
    violations += r.is_cm && !r.is_scm;
    violations += r.is_cm && !r.unmixed;
    violations += r.is_scm && r.unmixed && !r.is_cm;
  }
  return {violations == 0, std::to_string(checked) + " corpus ideals, " +
                               std::to_string(violations) + " violations"};
}

}  // namespace

int main() {
  const std::vector<std::function<Result()>> criteria = {
      classes_cm, classes_scm, pentagon, two_pentagons, suspension,
      unmixed,    oracle,      homology, lattice};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[k]();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s (%.1f s)\n", k + 1, r.passed ? "PASS" : "FAIL",
                r.summary.c_str(), secs);
    std::fflush(stdout);
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
