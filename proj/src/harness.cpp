#include "qcldpc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcldpc/serialize.hpp"

namespace qcldpc {

using nlohmann::json;

uint32_t ExperimentConfig::resolved_v0() const {
  if (v0 != 0) return v0;
  uint32_t lg = 0;
  while ((1u << lg) < ell) ++lg;
  uint32_t n = std::max(8u, 2 * lg);
  if (n % 2) ++n;
  return n;
}

uint32_t ExperimentConfig::resolved_threads() const {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void ExperimentConfig::validate() const {
  if (mode != "hgp" && mode != "lp") throw std::invalid_argument("config: mode must be hgp or lp");
  if (mode == "lp" && (ell < 2 || (ell & (ell - 1)) != 0))
    throw std::invalid_argument("config: lp mode needs ell a power of two");
  if (ell < 2) throw std::invalid_argument("config: ell must be >= 2");
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (sides != "z" && sides != "x" && sides != "both")
    throw std::invalid_argument("config: sides must be z, x or both");
  if (hgp_variant != "deterministic" && hgp_variant != "randomized")
    throw std::invalid_argument("config: hgp_variant must be deterministic or randomized");
  if (a_decoder != "flip" && a_decoder != "repsolve")
    throw std::invalid_argument("config: a_decoder must be flip or repsolve");
  if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("config: eps must be in (0, 1/2]");
  if (!(failure_delta > 0.0 && failure_delta < 1.0))
    throw std::invalid_argument("config: failure_delta must be in (0,1)");
}

json config_to_json(const ExperimentConfig& cfg) {
  json j{{"mode", cfg.mode},
         {"ell", cfg.ell},
         {"v0", cfg.v0},
         {"delta", cfg.delta},
         {"gamma_inner", cfg.gamma_inner},
         {"d_min", cfg.d_min},
         {"lambda_target", cfg.lambda_target},
         {"lift_retries", cfg.lift_retries},
         {"inner_tries", cfg.inner_tries},
         {"eps", cfg.eps},
         {"failure_delta", cfg.failure_delta},
         {"error_weights", cfg.error_weights},
         {"trials", cfg.trials},
         {"seed", cfg.seed},
         {"threads", cfg.threads},
         {"sides", cfg.sides},
         {"hgp_variant", cfg.hgp_variant},
         {"a_decoder", cfg.a_decoder},
         {"materialize_limit", cfg.materialize_limit},
         {"replay_file", cfg.replay_file}};
  if (cfg.base_graph) j["base_graph"] = base_graph_to_json(*cfg.base_graph);
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig cfg;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("mode", cfg.mode);
  get("ell", cfg.ell);
  get("v0", cfg.v0);
  get("delta", cfg.delta);
  get("gamma_inner", cfg.gamma_inner);
  get("d_min", cfg.d_min);
  get("lambda_target", cfg.lambda_target);
  get("lift_retries", cfg.lift_retries);
  get("inner_tries", cfg.inner_tries);
  get("eps", cfg.eps);
  get("failure_delta", cfg.failure_delta);
  get("error_weights", cfg.error_weights);
  get("trials", cfg.trials);
  get("seed", cfg.seed);
  get("threads", cfg.threads);
  get("sides", cfg.sides);
  get("hgp_variant", cfg.hgp_variant);
  get("a_decoder", cfg.a_decoder);
  get("materialize_limit", cfg.materialize_limit);
  get("replay_file", cfg.replay_file);
  if (j.contains("base_graph")) cfg.base_graph = base_graph_from_json(j.at("base_graph"));
  return cfg;
}

namespace {

// The repsolve decoder pair is valid only when the expander factor is
// itself a repetition complex: ring rank 1x1 with entry 1+X or its
// conjugate. Returns whether the entry is the conjugated orientation.
bool repsolve_orientation(const TannerCode& tanner) {
  const RingMatrix& rm = *tanner.complex.ring_boundary;
  if (rm.rows() != 1 || rm.cols() != 1)
    throw std::invalid_argument("a_decoder=repsolve needs a 1x1 repetition-shaped factor");
  const RingElement& f = rm.at(0, 0);
  const uint32_t ell = rm.modulus();
  if (f == RingElement::one_plus_x(ell)) return false;
  if (f == RingElement::one_plus_x(ell).conjugate()) return true;
  throw std::invalid_argument("a_decoder=repsolve needs boundary 1+X or 1+X^(ell-1)");
}

}  // namespace

size_t CodeBundle::c1_dim() const {
  // The lifted product reuses the A spaces; the hypergraph product
  // tensors every F2 dimension with the repetition length.
  const size_t base = tanner->dim_a0() + tanner->dim_a1();
  return is_lp() ? base : base * config.ell;
}

size_t CodeBundle::syndrome_dim(char side) const {
  const size_t base = side == 'z' ? tanner->dim_a0() : tanner->dim_a1();
  return is_lp() ? base : base * config.ell;
}

uint64_t CodeBundle::gamma_for_side(char side) const {
  return side == 'z' ? gamma_chain(tanner->inner.delta) : gamma_cochain(tanner->inner.delta);
}

uint32_t CodeBundle::gate_weight_limit(char side) const {
  if (config.a_decoder == "repsolve") return coset_gate_limit();
  if (is_lp()) {
    // The proven radius is typically 0 at this scale; configured weights
    // are the declared contract for the amplified decoder.
    uint32_t top = 0;
    for (uint32_t w : config.error_weights) top = std::max(top, w);
    return top;
  }
  const RadiusReport& r = side == 'z' ? radius_z : radius_x;
  return static_cast<uint32_t>(r.e);
}

uint32_t CodeBundle::coset_gate_limit() const {
  if (oracle && oracle->status == DistanceStatus::ok && oracle->d >= 1)
    return static_cast<uint32_t>((oracle->d - 1) / 2);
  return 0;
}

BitVec CodeBundle::boundary(char side, const BitVec& c) const {
  if (c.size() != c1_dim()) throw std::invalid_argument("boundary: vector must live in C1");
  const uint32_t ell = config.ell;
  // Row counts of the two C1 blocks in the flat (h, i) layout.
  const uint32_t n0 = is_lp() ? tanner->ring_rank_a0() : uint32_t(tanner->dim_a0());
  const uint32_t n1 = is_lp() ? tanner->ring_rank_a1() : uint32_t(tanner->dim_a1());

  const size_t first_dim = size_t(n0) * ell;
  BitVec x(first_dim), y(size_t(n1) * ell);
  c.for_each_set([&](size_t i) {
    if (i < first_dim)
      x.set(i, true);
    else
      y.set(i - first_dim, true);
  });

  if (side == 'z') {
    // d1 (x, y) = (1+X) x + dA y
    BitVec out = x ^ shift_flat(x, n0, ell, 1);
    if (is_lp()) {
      ModuleElement ym = ModuleElement::from_bits(y, n1, ell);
      out ^= apply(*tanner->complex.ring_boundary, ym).bits();
    } else {
      out ^= tensor_cols_apply(tanner->complex.boundary, y, ell);
    }
    return out;
  }
  // delta1 (x, y) = dA^dagger x + (1+X^{-1}) y
  BitVec out = y ^ shift_flat(y, n1, ell, -1);
  if (is_lp()) {
    ModuleElement xm = ModuleElement::from_bits(x, n0, ell);
    out ^= apply(tanner->complex.ring_boundary->conj_transpose(), xm).bits();
  } else {
    out ^= tensor_cols_apply(tanner->complex.boundary.transposed(), x, ell);
  }
  return out;
}

DecodeOutcome CodeBundle::decode(char side, const BitVec& syndrome, Rng& rng,
                                 unsigned inner_threads) const {
  if (is_lp()) {
    const LpSide& s = side == 'z' ? lp_z : lp_x;
    return lp_decode(s, syndrome, config.eps, config.failure_delta, rng, inner_threads);
  }
  const HgpSide& s = side == 'z' ? hgp_z : hgp_x;
  if (config.hgp_variant == "randomized")
    return hgp_decode_randomized(s, syndrome, config.failure_delta, rng);
  return hgp_decode_deterministic(s, syndrome);
}

namespace {

// Everything derived from a fixed lift and inner code; shared by the
// seeded build and the bundle loader.
CodeBundle assemble_bundle(const ExperimentConfig& cfg, const LiftedGraph& lift,
                           const InnerCode& inner, double lambda, uint32_t attempts) {
  CodeBundle b;
  b.config = cfg;
  b.lambda = lambda;
  b.lift_attempts = attempts;
  b.tanner = std::make_shared<const TannerCode>(build_tanner_complex(lift, inner));

  if (b.lambda > 0.0 && b.lambda < 1.0)
    b.budgets = error_budgets(b.tanner->num_vertices(), cfg.delta, b.lambda);
  else
    b.budgets = ErrorBudgets{};  // degenerate spectrum: all contracts vacuous

  // Decode sides.
  const auto tanner_ptr = b.tanner;
  if (cfg.a_decoder == "repsolve") {
    const bool conj = repsolve_orientation(*b.tanner);
    if (cfg.mode == "hgp") {
      b.hgp_z = HgpSide{b.tanner->complex.boundary, cfg.ell, make_rep_decoder(cfg.ell, conj),
                        false};
      b.hgp_x = HgpSide{b.tanner->complex.boundary.transposed(), cfg.ell,
                        make_rep_decoder(cfg.ell, !conj), true};
    } else {
      const uint32_t n1 = b.tanner->ring_rank_a1();
      auto star = make_rep_decoder(cfg.ell, !conj);
      b.lp_z = LpSide{*b.tanner->complex.ring_boundary, make_rep_decoder(cfg.ell, conj), false};
      b.lp_x = LpSide{ring_scale(RingElement::monomial(1, cfg.ell),
                                 b.tanner->complex.ring_boundary->conj_transpose()),
                      [star, n1, ell = cfg.ell](const BitVec& s) {
                        return star(shift_flat(s, n1, ell, -1));
                      },
                      true};
    }
  } else {
    auto chain_dec = [tanner_ptr](const BitVec& s) { return nsdec_chain(*tanner_ptr, s); };
    auto cochain_dec = [tanner_ptr](const BitVec& s) { return nsdec_cochain(*tanner_ptr, s); };
    if (cfg.mode == "hgp") {
      b.hgp_z = HgpSide{b.tanner->complex.boundary, cfg.ell, chain_dec, false};
      b.hgp_x = HgpSide{b.tanner->complex.boundary.transposed(), cfg.ell, cochain_dec, true};
    } else {
      const uint32_t n1 = b.tanner->ring_rank_a1();
      b.lp_z = LpSide{*b.tanner->complex.ring_boundary, chain_dec, false};
      b.lp_x = LpSide{ring_scale(RingElement::monomial(1, cfg.ell),
                                 b.tanner->complex.ring_boundary->conj_transpose()),
                      [cochain_dec, n1, ell = cfg.ell](const BitVec& s) {
                        return cochain_dec(shift_flat(s, n1, ell, -1));
                      },
                      true};
    }
  }

  // Parameters. k comes from the two-factor homology formula for the
  // hypergraph product and from the materialized ranks for the lifted
  // product; both routes are exact.
  ChainComplex2 rep = repetition_complex(cfg.ell);
  b.params.n = b.c1_dim();
  const size_t w_tanner =
      std::max(b.tanner->complex.boundary.max_row_weight(),
               b.tanner->complex.boundary.max_col_weight());
  b.w_factor = w_tanner;
  b.params.locality = w_tanner + 2;  // repetition factor adds two per row/column

  if (b.c1_dim() <= cfg.materialize_limit) {
    b.complex = cfg.mode == "hgp" ? hypergraph_product(b.tanner->complex, rep)
                                  : lifted_product(b.tanner->complex, rep);
    CodeParams p = code_params(*b.complex);
    b.params = p;
    const size_t kz = b.complex->dim_c1() - rank(b.complex->d1);
    const size_t kx = b.complex->dim_c1() - rank(b.complex->d2.transposed());
    if (kz <= 22 && kx <= 22) b.oracle = distance_oracle(*b.complex);
    b.d2_solver = std::make_shared<const LinearSolver>(b.complex->d2);
    b.d1t_solver = std::make_shared<const LinearSolver>(b.complex->d1.transposed());
  } else {
    b.params.k = kunneth_h1(b.tanner->complex, rep);
  }

  // Proven-style radii with the flip-decoder slopes; meaningless for the
  // repsolve pair, which is gated on oracle distance instead.
  if (cfg.a_decoder == "flip") {
    std::optional<uint64_t> d;
    if (b.oracle && b.oracle->status == DistanceStatus::ok) d = b.oracle->d;
    // On the X side the classical decoder sees cochain syndromes, so the
    // budget roles swap to (e^1, e^0) with the cochain slope.
    if (cfg.mode == "hgp") {
      b.radius_z = hgp_radius(b.budgets.chain_syndrome, b.budgets.chain_code, cfg.ell,
                              gamma_chain(cfg.delta), w_tanner, d);
      b.radius_x = hgp_radius(b.budgets.cochain_syndrome, b.budgets.cochain_code, cfg.ell,
                              gamma_cochain(cfg.delta), w_tanner, d);
    } else {
      b.radius_z = lp_radius(b.budgets.chain_syndrome, b.budgets.chain_code, cfg.ell,
                             gamma_chain(cfg.delta), w_tanner, cfg.eps, d);
      b.radius_x = lp_radius(b.budgets.cochain_syndrome, b.budgets.cochain_code, cfg.ell,
                             gamma_cochain(cfg.delta), w_tanner, cfg.eps, d);
    }
  }
  return b;
}

}  // namespace

CodeBundle build_bundle(const ExperimentConfig& cfg) {
  cfg.validate();

  // Draw order off the master seed: inner code first, then one base
  // graph (plus labels) per lift attempt, keeping the best expansion.
  Rng rng = make_rng(cfg.seed);
  InnerCode inner = find_inner_code(cfg.delta, cfg.gamma_inner, cfg.d_min, rng, cfg.inner_tries);

  const uint32_t attempts = cfg.base_graph ? 1 : std::max(1u, cfg.lift_retries);
  double best_lambda = 2.0;
  LiftedGraph best_lift;
  uint32_t used = 0;
  for (uint32_t a = 0; a < attempts; ++a) {
    BaseGraph base = cfg.base_graph
                         ? *cfg.base_graph
                         : random_base_graph(cfg.resolved_v0(), cfg.delta, cfg.ell, rng);
    LiftedGraph lift = lift_graph(base, cfg.ell);
    const double lam = spectral_expansion(lift);
    if (lam < best_lambda) {
      best_lambda = lam;
      best_lift = lift;
      used = a + 1;
    }
    if (lam <= cfg.lambda_target) break;
  }
  return assemble_bundle(cfg, best_lift, inner, best_lambda, used);
}

json bundle_to_json(const CodeBundle& b) {
  json j{{"format_version", kFormatVersion},
         {"kind", "code_bundle"},
         {"config", config_to_json(b.config)},
         {"base_graph", base_graph_to_json(b.tanner->graph.base)},
         {"inner_code", inner_code_to_json(b.tanner->inner)},
         {"lambda", b.lambda},
         {"lift_attempts", b.lift_attempts},
         {"tanner_complex", complex2_to_json(b.tanner->complex)}};
  return j;
}

CodeBundle bundle_from_json(const json& j) {
  if (j.at("format_version").get<int>() != kFormatVersion)
    throw std::invalid_argument("bundle: unsupported format version");
  ExperimentConfig cfg = config_from_json(j.at("config"));
  cfg.validate();
  BaseGraph base = base_graph_from_json(j.at("base_graph"));
  InnerCode inner = inner_code_from_json(j.at("inner_code"));

  LiftedGraph lift = lift_graph(base, cfg.ell);
  const double lambda = spectral_expansion(lift);

  CodeBundle out = assemble_bundle(cfg, lift, inner,
                                   j.value("lambda", lambda),
                                   j.value("lift_attempts", 1u));
  // Rebuild rather than trust: the stored complex must match bit-exactly.
  ChainComplex2 stored = complex2_from_json(j.at("tanner_complex"));
  if (stored.boundary != out.tanner->complex.boundary ||
      !(stored.ring_boundary && *stored.ring_boundary == *out.tanner->complex.ring_boundary))
    throw std::invalid_argument("bundle: stored complex does not match rebuild");
  if (std::abs(lambda - out.lambda) > 1e-9)
    throw std::invalid_argument("bundle: stored lambda does not match recomputed expansion");
  return out;
}

BitVec sample_adversarial_error(size_t n, size_t weight, Rng& rng) {
  if (weight > n) throw std::invalid_argument("sample_adversarial_error: weight > length");
  BitVec v(n);
  // Floyd's sampling: exactly `weight` distinct positions.
  for (size_t j = n - weight; j < n; ++j) {
    const size_t t = size_t(rng_below(rng, j + 1));
    if (v.get(t))
      v.set(j, true);
    else
      v.set(t, true);
  }
  return v;
}

namespace {

uint64_t now_us() {
  return uint64_t(std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now().time_since_epoch())
                      .count());
}

}  // namespace

TrialRecord run_trial(const CodeBundle& bundle, char side, uint32_t weight, uint64_t trial_id,
                      uint64_t seed, const BitVec* explicit_error) {
  TrialRecord rec;
  rec.trial_id = trial_id;
  rec.side = side;
  rec.seed = seed;
  rec.replay = explicit_error != nullptr;

  Rng rng = make_rng(seed);

  uint64_t t0 = now_us();
  const BitVec error = explicit_error
                           ? *explicit_error
                           : sample_adversarial_error(bundle.c1_dim(), weight, rng);
  rec.error_weight = static_cast<uint32_t>(error.weight());
  uint64_t t1 = now_us();
  rec.sample_us = t1 - t0;

  const BitVec syndrome = bundle.boundary(side, error);
  uint64_t t2 = now_us();
  rec.syndrome_us = t2 - t1;

  const DecodeOutcome outcome = bundle.decode(side, syndrome, rng);
  uint64_t t3 = now_us();
  rec.decode_us = t3 - t2;

  rec.ok = outcome.ok();
  if (rec.ok) {
    rec.output_weight = outcome.weight;
    rec.syndrome_ok = bundle.boundary(side, outcome.estimate) == syndrome;

    const uint64_t g = bundle.gamma_for_side(side);
    rec.weight_bound_ok =
        outcome.weight <= ((bundle.w_factor + 2) * g + 1) * uint64_t(rec.error_weight);

    const auto& solver = side == 'z' ? bundle.d2_solver : bundle.d1t_solver;
    if (solver) {
      auto witness = solver->solve(error ^ outcome.estimate);
      rec.coset = witness.has_value();
      if (witness) rec.witness = witness->support();
    }
  }
  rec.check_us = now_us() - t3;
  return rec;
}

json trial_to_json(const TrialRecord& r) {
  json j{{"trial", r.trial_id},
         {"side", std::string(1, r.side)},
         {"replay", r.replay},
         {"weight", r.error_weight},
         {"status", r.ok ? "ok" : "fail"},
         {"output_weight", r.ok ? json(r.output_weight) : json(nullptr)},
         {"syndrome_ok", r.ok ? json(r.syndrome_ok) : json(nullptr)},
         {"coset", r.coset ? json(*r.coset) : json(nullptr)},
         {"witness", r.coset && *r.coset ? json(r.witness) : json(nullptr)},
         {"seed", r.seed}};
  return j;
}

SweepResult run_sweep(const CodeBundle& bundle, std::ostream* trials_jsonl,
                      std::ostream* summary_csv, std::ostream* timings_jsonl) {
  const ExperimentConfig& cfg = bundle.config;

  struct Task {
    char side;
    uint32_t weight;
    std::optional<BitVec> replay_error;
  };
  std::vector<Task> tasks;
  std::vector<char> side_list;
  if (cfg.sides == "z" || cfg.sides == "both") side_list.push_back('z');
  if (cfg.sides == "x" || cfg.sides == "both") side_list.push_back('x');
  for (char side : side_list)
    for (uint32_t w : cfg.error_weights)
      for (uint32_t t = 0; t < cfg.trials; ++t) tasks.push_back({side, w, std::nullopt});

  if (!cfg.replay_file.empty()) {
    std::ifstream in(cfg.replay_file);
    if (!in) throw std::runtime_error("run_sweep: cannot open replay file " + cfg.replay_file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j = json::parse(line);
      BitVec err(bundle.c1_dim());
      for (const auto& i : j.at("support")) err.set(i.get<size_t>(), true);
      const std::string s = j.value("side", "z");
      tasks.push_back({s == "x" ? 'x' : 'z', uint32_t(err.weight()), std::move(err)});
    }
  }

  SweepResult result;
  result.records.resize(tasks.size());
  auto worker = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      const Task& t = tasks[i];
      result.records[i] =
          run_trial(bundle, t.side, t.weight, i, child_seed(cfg.seed, i),
                    t.replay_error ? &*t.replay_error : nullptr);
    }
  };
  const unsigned nt = std::min<size_t>(cfg.resolved_threads(), tasks.size());
  if (nt <= 1) {
    worker(0, tasks.size());
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
      pool.emplace_back(worker, tasks.size() * t / nt, tasks.size() * (t + 1) / nt);
    for (auto& th : pool) th.join();
  }

  // Gates.
  const uint32_t coset_limit = bundle.coset_gate_limit();
  for (const auto& r : result.records) {
    if (r.replay) {
      if (r.ok && !r.syndrome_ok) {
        result.gates_passed = false;
        result.gate_failures.push_back("replay trial " + std::to_string(r.trial_id) +
                                       ": estimate does not reproduce the syndrome");
      }
      continue;
    }
    const uint32_t limit = bundle.gate_weight_limit(r.side);
    if (r.ok && !r.syndrome_ok) {
      result.gates_passed = false;
      result.gate_failures.push_back("trial " + std::to_string(r.trial_id) +
                                     ": estimate does not reproduce the syndrome");
    }
    if (r.error_weight <= limit) {
      if (!r.ok) {
        result.gates_passed = false;
        result.gate_failures.push_back("trial " + std::to_string(r.trial_id) +
                                       ": decoder failed within the admissible radius");
      } else if (cfg.a_decoder == "flip" && cfg.mode == "hgp" &&
                 cfg.hgp_variant == "deterministic" && !r.weight_bound_ok) {
        result.gates_passed = false;
        result.gate_failures.push_back("trial " + std::to_string(r.trial_id) +
                                       ": output weight bound violated");
      }
    }
    if (r.ok && r.coset && r.error_weight <= coset_limit && !*r.coset) {
      result.gates_passed = false;
      result.gate_failures.push_back("trial " + std::to_string(r.trial_id) +
                                     ": coset check failed within half distance");
    }
  }

  if (trials_jsonl)
    for (const auto& r : result.records) (*trials_jsonl) << trial_to_json(r).dump() << "\n";

  if (timings_jsonl)
    for (const auto& r : result.records)
      (*timings_jsonl) << json{{"trial", r.trial_id},
                               {"sample_us", r.sample_us},
                               {"syndrome_us", r.syndrome_us},
                               {"decode_us", r.decode_us},
                               {"check_us", r.check_us}}
                              .dump()
                       << "\n";

  if (summary_csv) {
    std::ostream& out = *summary_csv;
    out << "# n=" << bundle.params.n << " k=" << bundle.params.k
        << " locality=" << bundle.params.locality << " lambda=" << bundle.lambda;
    if (bundle.oracle && bundle.oracle->status == DistanceStatus::ok)
      out << " d=" << bundle.oracle->d;
    out << " e0=" << bundle.budgets.chain_syndrome << " e1=" << bundle.budgets.chain_code
        << " e1_co=" << bundle.budgets.cochain_syndrome
        << " e0_co=" << bundle.budgets.cochain_code << " radius_z=" << bundle.radius_z.e
        << " radius_x=" << bundle.radius_x.e << "\n";
    out << "side,weight,trials,ok,coset_checked,coset_true,success_rate,mean_output_weight,"
           "mean_decode_us\n";
    std::map<std::pair<char, uint32_t>, std::vector<const TrialRecord*>> groups;
    for (const auto& r : result.records)
      if (!r.replay) groups[{r.side, r.error_weight}].push_back(&r);
    for (const auto& [key, recs] : groups) {
      size_t ok = 0, coset_checked = 0, coset_true = 0;
      double sum_w = 0, sum_us = 0;
      for (const auto* r : recs) {
        ok += r->ok;
        if (r->coset) {
          ++coset_checked;
          coset_true += *r->coset;
        }
        sum_w += double(r->output_weight);
        sum_us += double(r->decode_us);
      }
      out << key.first << "," << key.second << "," << recs.size() << "," << ok << ","
          << coset_checked << "," << coset_true << "," << double(ok) / double(recs.size()) << ","
          << sum_w / double(recs.size()) << "," << sum_us / double(recs.size()) << "\n";
    }
  }
  return result;
}

}  // namespace qcldpc
