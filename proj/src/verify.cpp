#include "seqcm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace seqcm {

namespace {

using Clock = std::chrono::steady_clock;

// Runs fn(i) for i in [0, count) on `jobs` threads; results keep index order
// so aggregation does not depend on scheduling.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

CMEngine make_engine(const VerifyOptions& options) {
  return CMEngine(EngineOptions{options.field, options.cross_field});
}

struct InstanceResult {
  std::optional<Counterexample> counterexample;
  std::size_t weightings = 0;
  std::size_t field_sensitive = 0;
};

void collect(VerificationOutcome& outcome, std::vector<InstanceResult>& results,
             std::size_t* weightings = nullptr) {
  std::size_t total = 0;
  for (auto& r : results) {
    ++outcome.instances_checked;
    total += r.weightings;
    outcome.field_sensitive_cases += r.field_sensitive;
    if (r.counterexample) outcome.fail(std::move(*r.counterexample));
  }
  if (weightings) *weightings = total;
}

void finish(VerificationOutcome& outcome, Clock::time_point start) {
  outcome.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

VertexMask bad_cycle_mask(const Graph& g) {
  for (const auto& cyc : chordless_cycles(g, 4)) {
    if (cyc.size() != 5) return vector_to_mask(cyc);
  }
  return 0;
}

std::string weights_to_string(const WeightFunction& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.values().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.values()[i]);
  }
  return out + "]";
}

// Shared shape of the two all-weights classifiers.
template <typename Verdict>
AllWeightsResult all_weights(const Graph& g, const CMEngine& engine, unsigned wmax, bool certify,
                             std::size_t budget, bool structural, VertexMask witness_set,
                             Verdict verdict) {
  if (wmax < 2) throw std::invalid_argument("wmax must be at least 2");
  AllWeightsResult res;
  res.structural = structural;
  if (certify) {
    res.certified = true;
    res.scan_verdict = true;
    for_each_weighting(g, wmax, budget, [&](const WeightFunction& w) {
      ++res.weightings_checked;
      const CMReport rep = engine.analyze(weighted_edge_ideal(g, w));
      if (rep.field_sensitive) ++res.field_sensitive;
      if (!verdict(rep)) {
        res.scan_verdict = false;
        res.certificate = w;
        return false;
      }
      return true;
    });
  } else if (!structural) {
    WeightFunction w = witness_weight(g, witness_set);
    ++res.weightings_checked;
    const CMReport rep = engine.analyze(weighted_edge_ideal(g, w));
    if (rep.field_sensitive) ++res.field_sensitive;
    res.certificate_confirmed = !verdict(rep);
    res.certificate = std::move(w);
  }
  if (res.certified && !res.scan_verdict) res.certificate_confirmed = true;
  return res;
}

}  // namespace

WeightFunction witness_weight(const Graph& g, VertexMask w) {
  if ((w & ~g.all_vertices()) != 0) throw std::invalid_argument("W exceeds the vertex range");
  std::vector<std::uint32_t> weights;
  for (const Edge& e : g.edges()) {
    const bool inside = ((w >> e.u) & 1u) && ((w >> e.v) & 1u);
    weights.push_back(inside ? 2 : 1);
  }
  return WeightFunction(g, weights);
}

AllWeightsResult cm_for_all_weights(const Graph& g, const CMEngine& engine, unsigned wmax,
                                    bool certify, std::size_t budget) {
  const bool structural = is_disjoint_union_complete(g);
  const VertexMask p3 = structural ? 0 : vector_to_mask(find_induced_p3(g));
  return all_weights(g, engine, wmax, certify, budget, structural, p3,
                     [](const CMReport& r) { return r.is_cm; });
}

AllWeightsResult scm_for_all_weights(const Graph& g, const CMEngine& engine, unsigned wmax,
                                     bool certify, std::size_t budget) {
  const bool structural = is_woodroofe(g);
  const VertexMask cycle = structural ? 0 : bad_cycle_mask(g);
  return all_weights(g, engine, wmax, certify, budget, structural, cycle,
                     [](const CMReport& r) { return r.is_scm; });
}

std::vector<int> pentagon_balancing_vertices(const WeightFunction& w, Orientation orientation) {
  if (!w.matches(cycle_graph(5))) {
    throw std::invalid_argument("balancing vertices are defined for weightings of C_5");
  }
  // e[i] is the weight of the edge {i, i+1 mod 5}.
  std::uint32_t e[5];
  for (int i = 0; i < 5; ++i) e[i] = w.at(i, (i + 1) % 5);
  auto chain = [](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d,
                  std::uint32_t last) { return a == last && a <= b && b >= c && c <= d && d >= a; };
  std::vector<int> out;
  for (int v = 0; v < 5; ++v) {
    const bool cw = chain(e[v], e[(v + 1) % 5], e[(v + 2) % 5], e[(v + 3) % 5], e[(v + 4) % 5]);
    const bool ccw = chain(e[(v + 4) % 5], e[(v + 3) % 5], e[(v + 2) % 5], e[(v + 1) % 5], e[v]);
    if (cw || (orientation == Orientation::kBoth && ccw)) out.push_back(v);
  }
  return out;
}

bool pentagon_balancing_cm(const WeightFunction& w, Orientation orientation) {
  return !pentagon_balancing_vertices(w, orientation).empty();
}

WeightFunction restrict_weights(const Graph& g, const WeightFunction& w,
                                const InducedSubgraph& sub) {
  if (!w.matches(g)) throw std::invalid_argument("weight function is not defined on E(G)");
  std::vector<std::uint32_t> values;
  for (const Edge& e : sub.graph.edges()) {
    values.push_back(w.at(sub.original_vertex[e.u], sub.original_vertex[e.v]));
  }
  return WeightFunction(sub.graph, values);
}

bool two_pentagon_cm_conditions(const WeightFunction& w) {
  const Graph h = build_two_pentagon_h();
  if (!w.matches(h)) throw std::invalid_argument("weighting is not defined on the graph H");
  const std::uint32_t bridge = w.at(0, 5);
  const bool cond1 = bridge <= std::min({w.at(0, 1), w.at(0, 4), w.at(5, 6), w.at(5, 9)});

  const WeightFunction wx = restrict_weights(h, w, induced_subgraph(h, 0x01f));
  const WeightFunction wy = restrict_weights(h, w, induced_subgraph(h, 0x3e0));
  const bool cond2 = pentagon_balancing_cm(wx) && pentagon_balancing_cm(wy);

  // Pentagon positions 0, 2, 3 are x1, x3, x4 (and y1, y3, y4).
  auto allowed = [](const std::vector<int>& vs) {
    return std::any_of(vs.begin(), vs.end(), [](int v) { return v == 0 || v == 2 || v == 3; });
  };
  const bool cond3 =
      allowed(pentagon_balancing_vertices(wx)) && allowed(pentagon_balancing_vertices(wy));
  return cond1 && cond2 && cond3;
}

VerificationOutcome verify_cm_all_weights(int n, const VerifyOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 6) throw BudgetExceeded("CM verification is limited to n <= 6");
  const auto start = Clock::now();
  VerificationOutcome outcome;
  outcome.name = "thm-cm";
  outcome.seed = options.seed;
  const CMEngine engine = make_engine(options);
  const auto classes = enumerate_graphs(n);
  const bool exhaustive = n <= 5;

  auto results = parallel_map<InstanceResult>(classes.size(), options.jobs, [&](std::size_t i) {
    const Graph& g = classes[i];
    InstanceResult r;
    // Negatives at n = 6 rely on the witness weighting; positives are scanned.
    const bool structural = is_disjoint_union_complete(g);
    const AllWeightsResult a = cm_for_all_weights(g, engine, options.wmax, exhaustive || structural);
    r.weightings = a.weightings_checked;
    r.field_sensitive = a.field_sensitive;
    if (!a.agrees()) {
      std::string detail = std::string("disjoint union of cliques: ") +
                           (a.structural ? "true" : "false") + "; weighted verdict disagrees";
      if (a.certificate) detail += "; weights " + weights_to_string(*a.certificate);
      r.counterexample = Counterexample{g, a.certificate, detail};
    }
    return r;
  });
  std::size_t weightings = 0;
  collect(outcome, results, &weightings);
  outcome.notes.emplace_back("vertices", std::to_string(n));
  outcome.notes.emplace_back("mode", exhaustive ? "exhaustive" : "witness");
  outcome.notes.emplace_back("weightings_checked", std::to_string(weightings));
  finish(outcome, start);
  return outcome;
}

VerificationOutcome verify_scm_all_weights(int n, const VerifyOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 6) throw BudgetExceeded("seqCM verification is limited to n <= 6");
  const auto start = Clock::now();
  VerificationOutcome outcome;
  outcome.name = "thm-scm";
  outcome.seed = options.seed;
  const CMEngine engine = make_engine(options);
  const auto classes = enumerate_graphs(n);
  const bool exhaustive = n <= 5;
  std::atomic<std::size_t> family_checked{0};

  auto results = parallel_map<InstanceResult>(classes.size(), options.jobs, [&](std::size_t i) {
    const Graph& g = classes[i];
    InstanceResult r;
    const bool woodroofe = is_woodroofe(g);
    if (exhaustive || !woodroofe || g.num_edges() <= options.exhaustive_edge_limit) {
      const AllWeightsResult a =
          scm_for_all_weights(g, engine, options.wmax, exhaustive || woodroofe);
      r.weightings = a.weightings_checked;
      r.field_sensitive = a.field_sensitive;
      if (!a.agrees()) {
        std::string detail = std::string("woodroofe: ") + (a.structural ? "true" : "false") +
                             "; weighted verdict disagrees";
        if (a.certificate) detail += "; weights " + weights_to_string(*a.certificate);
        r.counterexample = Counterexample{g, a.certificate, detail};
      }
      return r;
    }
    // Dense Woodroofe graph: one witness weighting per vertex subset.
    ++family_checked;
    for (VertexMask w = 0; w <= g.all_vertices(); ++w) {
      const WeightFunction wf = witness_weight(g, w);
      ++r.weightings;
      const CMReport rep = engine.analyze(weighted_edge_ideal(g, wf));
      if (rep.field_sensitive) ++r.field_sensitive;
      if (!rep.is_scm) {
        r.counterexample =
            Counterexample{g, wf, "woodroofe: true; witness weighting " + weights_to_string(wf) +
                                      " is not sequentially Cohen-Macaulay"};
        break;
      }
    }
    return r;
  });
  std::size_t weightings = 0;
  collect(outcome, results, &weightings);
  outcome.notes.emplace_back("vertices", std::to_string(n));
  outcome.notes.emplace_back("mode", exhaustive ? "exhaustive" : "witness");
  outcome.notes.emplace_back("weightings_checked", std::to_string(weightings));
  if (!exhaustive) {
    outcome.notes.emplace_back("woodroofe_checked_on_witness_family",
                               std::to_string(family_checked.load()));
  }
  finish(outcome, start);
  return outcome;
}

VerificationOutcome verify_pentagon_criterion(unsigned wmax, const VerifyOptions& options) {
  if (wmax < 1) throw std::invalid_argument("wmax must be positive");
  if (wmax > 3) throw BudgetExceeded("pentagon verification is limited to wmax <= 3");
  const auto start = Clock::now();
  VerificationOutcome outcome;
  outcome.name = "c5";
  outcome.seed = options.seed;
  const CMEngine engine = make_engine(options);
  const Graph c5 = cycle_graph(5);
  std::vector<WeightFunction> weightings;
  for_each_weighting(c5, wmax, kDefaultWeightBudget, [&](const WeightFunction& w) {
    weightings.push_back(w);
    return true;
  });
  std::atomic<std::size_t> clockwise_disagreements{0};
  std::atomic<std::size_t> cm_count{0};
  auto results = parallel_map<InstanceResult>(weightings.size(), options.jobs, [&](std::size_t i) {
    const WeightFunction& w = weightings[i];
    InstanceResult r;
    r.weightings = 1;
    const CMReport rep = engine.analyze(weighted_edge_ideal(c5, w));
    r.field_sensitive = rep.field_sensitive ? 1 : 0;
    if (rep.is_cm) ++cm_count;
    const bool formula = pentagon_balancing_cm(w, Orientation::kBoth);
    if (pentagon_balancing_cm(w, Orientation::kClockwise) != rep.is_cm) ++clockwise_disagreements;
    if (formula != rep.is_cm) {
      r.counterexample = Counterexample{
          c5, w,
          std::string("balancing formula says ") + (formula ? "CM" : "not CM") +
              ", homology says " + (rep.is_cm ? "CM" : "not CM")};
    }
    return r;
  });
  collect(outcome, results);
  outcome.notes.emplace_back("wmax", std::to_string(wmax));
  outcome.notes.emplace_back("cm_weightings", std::to_string(cm_count.load()));
  outcome.notes.emplace_back("clockwise_only_disagreements",
                             std::to_string(clockwise_disagreements.load()));
  outcome.notes.emplace_back("clockwise_only_sufficient",
                             clockwise_disagreements.load() == 0 ? "true" : "false");
  finish(outcome, start);
  return outcome;
}

VerificationOutcome verify_two_pentagon_criterion(const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationOutcome outcome;
  outcome.name = "prop-h";
  outcome.seed = options.seed;
  const CMEngine engine = make_engine(options);
  const Graph h = build_two_pentagon_h();
  std::vector<WeightFunction> weightings;
  for_each_weighting(h, 2, kDefaultWeightBudget, [&](const WeightFunction& w) {
    weightings.push_back(w);
    return true;
  });
  std::atomic<std::size_t> cm_count{0};
  auto results = parallel_map<InstanceResult>(weightings.size(), options.jobs, [&](std::size_t i) {
    const WeightFunction& w = weightings[i];
    InstanceResult r;
    r.weightings = 1;
    const CMReport rep = engine.analyze(weighted_edge_ideal(h, w));
    r.field_sensitive = rep.field_sensitive ? 1 : 0;
    if (rep.is_cm) ++cm_count;
    const bool formula = two_pentagon_cm_conditions(w);
    if (formula != rep.is_cm) {
      r.counterexample = Counterexample{
          h, w,
          std::string("conditions say ") + (formula ? "CM" : "not CM") + ", homology says " +
              (rep.is_cm ? "CM" : "not CM")};
    }
    return r;
  });
  collect(outcome, results);
  outcome.notes.emplace_back("cm_weightings", std::to_string(cm_count.load()));
  outcome.notes.emplace_back("memoized_radicals", std::to_string(engine.cache().size()));
  finish(outcome, start);
  return outcome;
}

namespace {

struct WeightedSample {
  Graph graph;
  WeightFunction weights;
};

WeightedSample random_woodroofe_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(3, 7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (true) {
    const int n = size(rng);
    const double p = 0.25 + 0.6 * unit(rng);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (unit(rng) < p) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (g.num_edges() == 0 || !is_woodroofe(g)) continue;
    std::uniform_int_distribution<std::uint32_t> weight(1, 3);
    std::vector<std::uint32_t> w(g.num_edges());
    if (unit(rng) < 0.25) {
      std::fill(w.begin(), w.end(), weight(rng));  // constant weighting
    } else {
      for (auto& x : w) x = weight(rng);
    }
    return {g, WeightFunction(g, w)};
  }
}

}  // namespace

VerificationOutcome verify_unmixed_iff_cm(std::size_t sample, const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationOutcome outcome;
  outcome.name = "cor31";
  outcome.seed = options.seed;
  const CMEngine engine = make_engine(options);
  std::atomic<std::size_t> cm_count{0}, unmixed_count{0};
  auto results = parallel_map<InstanceResult>(sample, options.jobs, [&](std::size_t i) {
    const WeightedSample s = random_woodroofe_instance(splitmix(options.seed * 1000003 + i));
    InstanceResult r;
    r.weightings = 1;
    const CMReport rep = engine.analyze(weighted_edge_ideal(s.graph, s.weights));
    r.field_sensitive = rep.field_sensitive ? 1 : 0;
    if (rep.is_cm) ++cm_count;
    if (rep.unmixed) ++unmixed_count;
    if (rep.unmixed != rep.is_cm) {
      r.counterexample = Counterexample{
          s.graph, s.weights,
          std::string("unmixed: ") + (rep.unmixed ? "true" : "false") +
              ", CM: " + (rep.is_cm ? "true" : "false")};
    }
    return r;
  });
  collect(outcome, results);
  outcome.notes.emplace_back("cm_instances", std::to_string(cm_count.load()));
  outcome.notes.emplace_back("unmixed_instances", std::to_string(unmixed_count.load()));
  finish(outcome, start);
  return outcome;
}

VerificationOutcome verify_suspension_counterexample(int t, unsigned omega,
                                                     const VerifyOptions& options) {
  if (t == 3 || t == 5) {
    throw std::invalid_argument("t = " + std::to_string(t) +
                                " gives a Woodroofe graph, not a counterexample");
  }
  if (t < 3) throw std::invalid_argument("t must be at least 3");
  if (t > 7) throw BudgetExceeded("suspension verification is limited to t <= 7");
  if (omega < 2) throw std::invalid_argument("omega must be at least 2");
  const auto start = Clock::now();
  VerificationOutcome outcome;
  outcome.name = "terai";
  outcome.seed = options.seed;
  outcome.instances_checked = 1;
  const CMEngine engine = make_engine(options);

  const Graph g = suspension_of_cycle(t);
  std::vector<std::uint32_t> values;
  for (const Edge& e : g.edges()) values.push_back(e.v < t ? omega : 1);
  const WeightFunction w(g, values);

  const CMReport plain = engine.analyze(edge_ideal(g));
  if (!plain.is_cm) outcome.fail({g, std::nullopt, "unweighted edge ideal is not CM"});
  if (!is_very_well_covered(g)) outcome.fail({g, std::nullopt, "graph is not very well-covered"});

  const MonomialIdeal weighted = weighted_edge_ideal(g, w);
  const CMReport rep = engine.analyze(weighted);
  outcome.field_sensitive_cases = (plain.field_sensitive ? 1 : 0) + (rep.field_sensitive ? 1 : 0);
  if (rep.is_scm) outcome.fail({g, w, "weighted edge ideal is sequentially CM"});

  std::vector<Exponent> exps(2 * t, 0);
  for (int i = 0; i < t; ++i) exps[i] = omega - 1;
  const Monomial u(exps);
  const MonomialIdeal colon = radical_colon(weighted, u);
  std::vector<VarMask> expected;
  for (int i = 0; i < t; ++i) {
    expected.push_back((VarMask{1} << i) | (VarMask{1} << ((i + 1) % t)));
    expected.push_back(VarMask{1} << (t + i));
  }
  const MonomialIdeal target = MonomialIdeal::from_masks(2 * t, expected);
  if (colon != target) {
    outcome.fail({g, w, "radical colon " + colon.to_string() + " differs from " + target.to_string()});
  }
  const bool target_scm = engine.squarefree_verdicts(target).scm.holds;
  if (target_scm) outcome.fail({g, w, "cycle-plus-pendant-variables radical is sequentially CM"});

  outcome.notes.emplace_back("t", std::to_string(t));
  outcome.notes.emplace_back("omega", std::to_string(omega));
  outcome.notes.emplace_back("witness_monomial", u.to_string());
  outcome.notes.emplace_back("witness_radical", colon.to_string());
  if (rep.scm_witness) {
    outcome.notes.emplace_back("engine_witness_monomial", rep.scm_witness->u.to_string());
    outcome.notes.emplace_back("engine_witness_radical", rep.scm_witness->radical.to_string());
  }
  finish(outcome, start);
  return outcome;
}

MonomialIdeal random_monomial_ideal(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const int r = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<Monomial> gens;
    for (int j = 0; j < r; ++j) {
      const int s = std::uniform_int_distribution<int>(1, std::min(3, n))(rng);
      std::vector<int> vars(n);
      for (int i = 0; i < n; ++i) vars[i] = i;
      std::shuffle(vars.begin(), vars.end(), rng);
      std::vector<Exponent> e(n, 0);
      for (int k = 0; k < s; ++k) e[vars[k]] = std::uniform_int_distribution<Exponent>(1, 3)(rng);
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal ideal(n, std::move(gens));
    Exponent width = 0;
    for (Exponent d : exponent_bound(ideal)) width += d;
    if (width <= static_cast<Exponent>(kMaxPolarizedVariables)) return ideal;
  }
}

VerificationOutcome verify_polarization_oracle(std::size_t sample, const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationOutcome outcome;
  outcome.name = "oracle";
  outcome.seed = options.seed;
  const CMEngine engine = make_engine(options);
  std::atomic<std::size_t> cm_count{0}, scm_count{0};
  auto results = parallel_map<InstanceResult>(sample, options.jobs, [&](std::size_t i) {
    const MonomialIdeal ideal = random_monomial_ideal(splitmix(options.seed * 7919 + i));
    InstanceResult r;
    const CMReport rep = engine.analyze(ideal);
    r.field_sensitive = rep.field_sensitive ? 1 : 0;
    const bool cm = is_cm_via_polarization(ideal, options.field);
    const bool scm = is_scm_via_polarization(ideal, options.field);
    if (rep.is_cm) ++cm_count;
    if (rep.is_scm) ++scm_count;
    if (cm != rep.is_cm || scm != rep.is_scm) {
      r.counterexample = Counterexample{
          Graph(), std::nullopt,
          ideal.to_string() + ": radicals say CM=" + std::to_string(rep.is_cm) +
              " seqCM=" + std::to_string(rep.is_scm) + ", polarization says CM=" +
              std::to_string(cm) + " seqCM=" + std::to_string(scm)};
    }
    return r;
  });
  collect(outcome, results);
  outcome.notes.emplace_back("cm_instances", std::to_string(cm_count.load()));
  outcome.notes.emplace_back("scm_instances", std::to_string(scm_count.load()));
  finish(outcome, start);
  return outcome;
}

}  // namespace seqcm
