// Integration gate: one line per criterion, nonzero exit on any failure.
//
// Criterion 4 is attempted twice. The literal inner-code tuple
// (delta=14, gamma=3, d_min=3) is mathematically unsatisfiable: a 3x14
// full-rank check matrix has 14 columns drawn from 7 nonzero 3-bit
// patterns, so two columns collide and the kernel contains a weight-2
// word (equivalently, no [14,11,3] binary code exists by the Hamming
// bound). That line reports FAIL by design. The same contracts are then
// verified in full on the nearest satisfiable tuple (gamma=4, the
// ceiling of delta/4), which criteria 5-7 also build on.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qcldpc/harness.hpp"
#include "qcldpc/serialize.hpp"

using namespace qcldpc;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

unsigned hw_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

BitVec random_weight(size_t n, size_t w, Rng& rng) { return sample_adversarial_error(n, w, rng); }

RingElement random_ring(uint32_t ell, Rng& rng) {
  RingElement f(ell);
  for (uint32_t k = 0; k < ell; ++k)
    if (rng_bit(rng)) f.set(k, true);
  return f;
}

BitMat random_mat(size_t r, size_t c, Rng& rng) {
  BitMat m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (rng_bit(rng)) m.set(i, j, true);
  return m;
}

ChainComplex2 random_ring_complex2(uint32_t r, uint32_t c, uint32_t ell, Rng& rng) {
  RingMatrix m(r, c, ell);
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = 0; j < c; ++j) m.at(i, j) = random_ring(ell, rng);
  ChainComplex2 a;
  a.boundary = m.expand_to_f2();
  a.ring_boundary = std::move(m);
  return a;
}

ExperimentConfig tanner_config(const char* mode, uint32_t ell, uint32_t gamma, uint32_t d_min) {
  ExperimentConfig cfg;
  cfg.mode = mode;
  cfg.ell = ell;
  cfg.v0 = 8;
  cfg.delta = 14;
  cfg.gamma_inner = gamma;
  cfg.d_min = d_min;
  cfg.seed = 2024;
  cfg.threads = hw_threads();
  return cfg;
}

ExperimentConfig toric_config(uint32_t ell) {
  ExperimentConfig cfg;
  cfg.mode = "hgp";
  cfg.ell = ell;
  cfg.delta = 2;
  cfg.gamma_inner = 1;
  cfg.d_min = 2;
  cfg.a_decoder = "repsolve";
  cfg.seed = 31;
  cfg.threads = hw_threads();
  BaseGraph loop;
  loop.v0 = 1;
  loop.delta = 2;
  loop.ell = ell;
  loop.edges.push_back({0, 0, ell - 1, 0, 1});
  cfg.base_graph = loop;
  return cfg;
}

// ---------------------------------------------------------------------------
// 1. Minimum-weight (1+X)-factor solver against exhaustive search.
// ---------------------------------------------------------------------------
Result criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  size_t cases = 0;
  for (uint32_t ell = 1; ell <= 10; ++ell) {
    const uint32_t mask = (1u << ell) - 1;
    for (uint32_t z = 0; z <= mask; ++z) {
      ++cases;
      RingElement zeta(ell);
      for (uint32_t k = 0; k < ell; ++k)
        if ((z >> k) & 1) zeta.set(k, true);

      std::optional<uint32_t> brute;
      for (uint32_t chi = 0; chi <= mask; ++chi) {
        const uint32_t rot = ell == 1 ? chi : (((chi << 1) | (chi >> (ell - 1))) & mask);
        const uint32_t prod = ell == 1 ? 0 : (chi ^ rot);
        if (prod == z) {
          const uint32_t w = uint32_t(__builtin_popcount(chi));
          if (!brute || w < *brute) brute = w;
        }
        if (chi == mask) break;
      }

      auto got = repetition_factor_solve(zeta);
      if (got.has_value() != brute.has_value())
        return {false, "FAIL set differs at ell=" + std::to_string(ell)};
      if (got) {
        if (uint32_t(got->weight()) != *brute)
          return {false, "minimum weight differs at ell=" + std::to_string(ell)};
        if (ring_mul(RingElement::one_plus_x(ell), *got) != zeta)
          return {false, "returned element is not a solution"};
      }
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << cases << " cases (ell 1..10), identical FAIL set and minima, " << dt << " s";
  return {dt < 5.0, os.str()};
}

// ---------------------------------------------------------------------------
// 2. Product validity and the two-route dimension computation.
// ---------------------------------------------------------------------------
Result criterion2() {
  Rng rng = make_rng(202);
  for (int t = 0; t < 100; ++t) {
    ChainComplex2 a, b;
    a.boundary = random_mat(1 + rng_below(rng, 5), 1 + rng_below(rng, 5), rng);
    b.boundary = random_mat(1 + rng_below(rng, 5), 1 + rng_below(rng, 5), rng);
    ChainComplex3 c = hypergraph_product(a, b);
    if (!mat_mul(c.d1, c.d2).is_zero()) return {false, "HGP d1 d2 != 0"};
  }
  for (int t = 0; t < 100; ++t) {
    const uint32_t ell = 2u << rng_below(rng, 3);
    ChainComplex2 a = random_ring_complex2(1 + uint32_t(rng_below(rng, 3)),
                                           1 + uint32_t(rng_below(rng, 3)), ell, rng);
    ChainComplex2 b = random_ring_complex2(1, 1, ell, rng);
    ChainComplex3 c = lifted_product(a, b);
    if (!mat_mul(c.d1, c.d2).is_zero()) return {false, "LP d1 d2 != 0"};
    if (!ring_mat_mul(*c.ring_d1, *c.ring_d2).is_zero()) return {false, "LP ring d1 d2 != 0"};
  }
  for (int t = 0; t < 50; ++t) {
    ChainComplex2 a, b;
    a.boundary = random_mat(1 + rng_below(rng, 5), 1 + rng_below(rng, 5), rng);
    b.boundary = random_mat(1 + rng_below(rng, 5), 1 + rng_below(rng, 5), rng);
    ChainComplex3 c = hypergraph_product(a, b);
    if (code_params(c).k != kunneth_h1(a, b))
      return {false, "rank-based k disagrees with the two-factor formula"};
  }
  return {true, "100 HGP + 100 LP compositions zero; 50 dimension agreements"};
}

// ---------------------------------------------------------------------------
// 3. Toric sanity at ell = 3, 4.
// ---------------------------------------------------------------------------
Result criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  for (uint32_t ell : {3u, 4u}) {
    ChainComplex2 rep = repetition_complex(ell);
    ChainComplex3 toric = hypergraph_product(rep, rep);
    CodeParams p = code_params(toric);
    DistanceResult d = distance_oracle(toric);
    if (p.n != 2 * ell * ell || p.k != 2 || d.status != DistanceStatus::ok || d.d != ell) {
      std::ostringstream os;
      os << "ell=" << ell << ": got n=" << p.n << " k=" << p.k << " d=" << d.d;
      return {false, os.str()};
    }
  }
  const double dt = seconds_since(t0);
  return {dt < 30.0, "n = 2 ell^2, k = 2, d = ell at ell = 3, 4; " + std::to_string(dt) + " s"};
}

// ---------------------------------------------------------------------------
// 4. Noisy-syndrome contracts.
// ---------------------------------------------------------------------------
Result criterion4_literal() {
  Rng rng = make_rng(204);
  try {
    find_inner_code(14, 3, 3, rng, 100000);
  } catch (const std::exception& e) {
    return {false,
            std::string("inner code (14,3,3) infeasible as predicted: 14 columns over 7 "
                        "nonzero 3-bit patterns collide (no [14,11,3] code); ") +
                e.what()};
  }
  return {false, "unexpected: sampler accepted a (14,3,3) inner code"};
}

Result criterion4_substance(const CodeBundle& bundle) {
  const auto t0 = std::chrono::steady_clock::now();
  const TannerCode& code = *bundle.tanner;
  const ErrorBudgets& budgets = bundle.budgets;
  Rng rng = make_rng(214);

  const uint64_t g_chain = gamma_chain(code.inner.delta);
  const uint64_t g_cochain = gamma_cochain(code.inner.delta);
  const BitMat cobound = code.complex.boundary.transposed();

  size_t exact_checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const size_t w0 = rng_below(rng, budgets.chain_syndrome + 1);
    const size_t w1 = rng_below(rng, budgets.chain_code + 1);
    BitVec a0 = random_weight(code.dim_a0(), w0, rng);
    BitVec a1 = random_weight(code.dim_a1(), w1, rng);
    BitVec est = nsdec_chain(code, a0 ^ mat_vec(code.complex.boundary, a1));
    if ((est ^ a1).weight() > g_chain * w0)
      return {false, "chain contract violated at trial " + std::to_string(t)};
    if (w0 == 0) {
      ++exact_checked;
      if (est != a1) return {false, "chain exact recovery failed at trial " + std::to_string(t)};
    }
  }
  for (int t = 0; t < 1000; ++t) {
    const size_t w1 = rng_below(rng, budgets.cochain_syndrome + 1);
    const size_t w0 = rng_below(rng, budgets.cochain_code + 1);
    BitVec a1 = random_weight(code.dim_a1(), w1, rng);
    BitVec a0 = random_weight(code.dim_a0(), w0, rng);
    BitVec est = nsdec_cochain(code, a1 ^ mat_vec(cobound, a0));
    if ((est ^ a0).weight() > g_cochain * w1)
      return {false, "cochain contract violated at trial " + std::to_string(t)};
    if (w1 == 0) {
      ++exact_checked;
      if (est != a0)
        return {false, "cochain exact recovery failed at trial " + std::to_string(t)};
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "gamma=4 build: 2000 admissible pairs, zero violations of the 2*Delta / 4*Delta "
     << "slopes, " << exact_checked << " exact-recovery cases, lambda=" << bundle.lambda
     << ", e0=" << budgets.chain_syndrome << " e1=" << budgets.chain_code
     << " e1*=" << budgets.cochain_syndrome << " e0*=" << budgets.cochain_code << ", " << dt
     << " s";
  return {dt < 60.0, os.str()};
}

// ---------------------------------------------------------------------------
// 5. Deterministic hypergraph-product decoder.
// ---------------------------------------------------------------------------
Result criterion5(const ExperimentConfig& base_cfg) {
  std::ostringstream os;
  for (char side : {'z', 'x'}) {
    ExperimentConfig cfg = base_cfg;
    cfg.trials = 500;
    cfg.sides = std::string(1, side);
    cfg.hgp_variant = "deterministic";
    CodeBundle b = build_bundle(cfg);
    const uint32_t radius = b.gate_weight_limit(side);
    if (radius == 0) return {false, "admissible radius is zero"};
    std::vector<uint32_t> weights;
    for (uint32_t w = 0; w <= radius; ++w) weights.push_back(w);
    CodeBundle run = b;
    run.config.error_weights = weights;
    SweepResult res = run_sweep(run, nullptr, nullptr, nullptr);
    if (!res.gates_passed) return {false, res.gate_failures.front()};
    os << side << ": 500 trials x " << weights.size() << " weights to radius " << radius
       << " clean; ";
  }

  // Coset correctness where the distance oracle applies: the toric
  // instance, both sides, every error within half distance.
  ExperimentConfig tcfg = toric_config(4);
  tcfg.trials = 500;
  tcfg.error_weights = {0, 1};
  CodeBundle toric = build_bundle(tcfg);
  SweepResult tres = run_sweep(toric, nullptr, nullptr, nullptr);
  if (!tres.gates_passed) return {false, "toric coset gate: " + tres.gate_failures.front()};
  size_t coset_true = 0;
  for (const auto& r : tres.records)
    if (r.coset && *r.coset) ++coset_true;
  std::ostringstream os2;
  os2 << os.str() << "toric d=4 coset passes " << coset_true << "/" << tres.records.size();
  return {true, os2.str()};
}

// ---------------------------------------------------------------------------
// 6. Randomized hypergraph-product decoder at failure budget 2^-10.
// ---------------------------------------------------------------------------
Result criterion6(const ExperimentConfig& base_cfg) {
  std::ostringstream os;
  for (char side : {'z', 'x'}) {
    ExperimentConfig cfg = base_cfg;
    cfg.trials = 500;
    cfg.sides = std::string(1, side);
    cfg.hgp_variant = "randomized";
    cfg.failure_delta = 1.0 / 1024.0;
    CodeBundle b = build_bundle(cfg);
    const uint32_t radius = b.gate_weight_limit(side);
    std::vector<uint32_t> weights;
    for (uint32_t w = 0; w <= radius; ++w) weights.push_back(w);
    CodeBundle run = b;
    run.config.error_weights = weights;
    SweepResult res = run_sweep(run, nullptr, nullptr, nullptr);
    size_t fails = 0;
    for (const auto& r : res.records)
      if (!r.ok) ++fails;
    if (!res.gates_passed || fails != 0)
      return {false, "observed " + std::to_string(fails) + " failures on side " + side};
    os << side << ": 0/" << res.records.size() << " failures (K=10); ";
  }
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 7. Lifted-product weak decoder and its amplification.
// ---------------------------------------------------------------------------
Result criterion7() {
  std::ostringstream os;
  const double eps = 0.5;
  const double fdelta = 1.0 / 1024.0;

  for (uint32_t ell : {32u, 64u}) {
    ExperimentConfig cfg = tanner_config("lp", ell, 4, 3);
    CodeBundle b = build_bundle(cfg);
    const LpSide& side = b.lp_z;
    const uint64_t gamma = gamma_chain(14);

    uint32_t eta = 0;
    while ((1u << eta) < ell) ++eta;
    const double p_bound = std::pow(1.0 - eps, double(eta));
    const double sigma = std::sqrt(p_bound * (1.0 - p_bound) / 200.0);

    size_t successes = 0;
    Rng rng = make_rng(700 + ell);
    for (int t = 0; t < 200; ++t) {
      BitVec c = random_weight(b.c1_dim(), 2, rng);
      BitVec syn = b.boundary('z', c);
      Rng dec_rng = make_rng(child_seed(cfg.seed, 5000 + t));
      DecodeOutcome out = weak_dec(side, syn, dec_rng);
      if (out.ok() && b.boundary('z', out.estimate) == syn &&
          out.weight <= (2.0 * double(b.w_factor + 2) * double(gamma) / eps + 1.0) * 2.0)
        ++successes;
    }
    const double rate = double(successes) / 200.0;
    if (rate < p_bound - 3.0 * sigma) {
      std::ostringstream err;
      err << "weak rate " << rate << " below bound " << (p_bound - 3.0 * sigma) << " at ell "
          << ell;
      return {false, err.str()};
    }
    os << "ell=" << ell << ": weak rate " << rate << " vs bound " << p_bound << "-3s; ";

    const uint64_t reps = lp_repeat_count(ell, eps, fdelta);
    if (double(reps) > lp_repeat_bound(ell, eps, fdelta))
      return {false, "repeat count exceeds its ceiling at ell " + std::to_string(ell)};

    if (ell == 32) {
      size_t fails = 0;
      Rng rng2 = make_rng(777);
      for (int t = 0; t < 200; ++t) {
        BitVec c = random_weight(b.c1_dim(), 2, rng2);
        BitVec syn = b.boundary('z', c);
        Rng dec_rng = make_rng(child_seed(cfg.seed, 9000 + t));
        DecodeOutcome out = lp_decode(side, syn, eps, fdelta, dec_rng, hw_threads());
        if (!out.ok() || b.boundary('z', out.estimate) != syn) ++fails;
      }
      if (fails != 0)
        return {false, std::to_string(fails) + " amplified failures over 200 trials"};
      os << "amplified K=" << reps << " (bound " << lp_repeat_bound(ell, eps, fdelta)
         << "): 0/200 failures; ";
    }
  }
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 8. Algebraic identities.
// ---------------------------------------------------------------------------
Result criterion8(const CodeBundle& bundle) {
  Rng rng = make_rng(208);
  for (int t = 0; t < 1000; ++t) {
    const uint32_t ell = 2 + uint32_t(rng_below(rng, 40));
    const uint32_t k = uint32_t(rng_below(rng, ell + 1));
    RingElement x = random_ring(ell, rng);
    RingElement lhs =
        ring_mul(prefix_multiplier(k, ell), ring_mul(RingElement::one_plus_x(ell), x));
    RingElement xk(ell);
    xk.set(0, true);
    xk.set(k % ell, !xk.get(k % ell));
    if (lhs != ring_mul(xk, x)) return {false, "prefix identity failed"};
  }

  for (int t = 0; t < 200; ++t) {
    const uint32_t ell = 8u << rng_below(rng, 3);
    const uint32_t n = 1 + uint32_t(rng_below(rng, 3));
    const uint32_t tw = 2u << rng_below(rng, 3);
    ModuleElement y = ModuleElement::from_bits(random_weight(size_t(n) * ell, 4, rng), n, ell);
    ModuleElement u =
        ModuleElement::from_bits(random_weight(size_t(n) * ell, rng_below(rng, 5), rng), n, ell);
    ModuleElement v =
        ModuleElement::from_bits(random_weight(size_t(n) * ell, rng_below(rng, 4), rng), n, ell);
    ModuleElement ytilde = y;
    ytilde += u;
    ytilde += u.shifted(1);
    ytilde += v;
    const size_t delta1 = u.weight();
    size_t delta2 = 0;
    {
      ModuleElement prefix(n, ell), term = v;
      for (uint32_t i = 1; i <= tw; ++i) {
        prefix += term;
        term = term.shifted(1);
        delta2 = std::max(delta2, prefix.weight());
      }
    }
    ModuleElement diff = ytilde;
    diff += y;
    ModuleElement prefix(n, ell), term = diff;
    for (uint32_t i = 1; i <= 2 * ell; ++i) {
      prefix += term;
      term = term.shifted(1);
      if (prefix.weight() > 2 * delta1 + ((i + tw - 1) / tw) * delta2)
        return {false, "approximate-compatibility prefix bound failed"};
    }
  }

  const LiftedGraph& g = bundle.tanner->graph;
  const double lambda = bundle.lambda;
  const uint32_t nv = g.num_vertices();
  for (int t = 0; t < 100; ++t) {
    const size_t size = 1 + rng_below(rng, nv);
    std::vector<uint32_t> s;
    BitVec mark(nv);
    while (s.size() < size) {
      const uint32_t v = uint32_t(rng_below(rng, nv));
      if (!mark.get(v)) {
        mark.set(v, true);
        s.push_back(v);
      }
    }
    const double bound = (lambda + double(s.size()) / nv) * double(g.delta()) * double(s.size());
    if (double(mixing_count(g, s)) > bound + 1e-9) return {false, "mixing inequality failed"};
  }
  return {true, "1000 prefix identities; 200 prefix bounds; 100 mixing checks"};
}

// ---------------------------------------------------------------------------
// 9. Determinism: byte-identical bundle and trial streams.
// ---------------------------------------------------------------------------
Result criterion9() {
  for (int variant = 0; variant < 2; ++variant) {
    ExperimentConfig cfg = variant == 0 ? toric_config(4) : tanner_config("lp", 8, 4, 3);
    if (variant == 1) cfg.v0 = 4;
    cfg.trials = 25;
    cfg.error_weights = {0, 1};

    CodeBundle b1 = build_bundle(cfg);
    CodeBundle b2 = build_bundle(cfg);
    if (bundle_to_json(b1).dump() != bundle_to_json(b2).dump())
      return {false, "bundle bytes differ between builds"};

    std::ostringstream t1, t2;
    CodeBundle b1threads = b1;
    b1threads.config.threads = 1;
    run_sweep(b1threads, &t1, nullptr, nullptr);
    CodeBundle b2threads = b2;
    b2threads.config.threads = hw_threads();
    run_sweep(b2threads, &t2, nullptr, nullptr);
    if (t1.str() != t2.str()) return {false, "trial streams differ between runs"};
  }
  return {true, "bundle and trial bytes identical across rebuilds and thread counts"};
}

// ---------------------------------------------------------------------------
// 10. Runtime shape, report-only.
// ---------------------------------------------------------------------------
Result criterion10() {
  std::ostringstream os;
  std::vector<double> per_edge;
  for (uint32_t ell : {16u, 32u, 64u, 128u}) {
    ExperimentConfig cfg = tanner_config("hgp", ell, 4, 3);
    cfg.lift_retries = 2;
    CodeBundle b = build_bundle(cfg);
    const TannerCode& code = *b.tanner;
    Rng rng = make_rng(210);
    std::vector<BitVec> syndromes;
    for (int t = 0; t < 40; ++t) {
      BitVec a1 = random_weight(code.dim_a1(), 2, rng);
      syndromes.push_back(mat_vec(code.complex.boundary, a1));
    }
    const auto t0 = std::chrono::steady_clock::now();
    for (int rep = 0; rep < 5; ++rep)
      for (const auto& s : syndromes) (void)nsdec_chain(code, s);
    const double dt = seconds_since(t0) / (5.0 * 40.0);
    per_edge.push_back(dt / double(code.num_edges()));
    os << "ell=" << ell << ": " << dt * 1e6 << " us/flip-decode; ";
  }
  double lo = per_edge[0], hi = per_edge[0];
  for (double v : per_edge) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  os << "time/|E| band x" << (hi / lo) << "; ";

  // One weak-decoder doubling against the ell (n ell + T) model, which
  // predicts roughly a factor of four.
  double weak_time[2] = {0, 0};
  int idx = 0;
  for (uint32_t ell : {32u, 64u}) {
    ExperimentConfig cfg = tanner_config("lp", ell, 4, 3);
    cfg.lift_retries = 2;
    CodeBundle b = build_bundle(cfg);
    Rng rng = make_rng(211);
    const auto t0 = std::chrono::steady_clock::now();
    for (int t = 0; t < 20; ++t) {
      BitVec c = random_weight(b.c1_dim(), 2, rng);
      BitVec syn = b.boundary('z', c);
      Rng dec_rng = make_rng(child_seed(17, t));
      (void)weak_dec(b.lp_z, syn, dec_rng);
    }
    weak_time[idx++] = seconds_since(t0) / 20.0;
  }
  os << "weak decode ell 32->64 factor " << (weak_time[1] / weak_time[0]) << " (model ~4)";
  return {true, os.str()};  // report-only, never gates
}

}  // namespace

int main() {
  struct Line {
    std::string name;
    Result result;
  };
  std::vector<Line> lines;
  auto run = [&](const std::string& name, Result r) {
    lines.push_back({name, std::move(r)});
    const Line& l = lines.back();
    std::printf("CRITERION %s: %s -- %s\n", l.name.c_str(), l.result.pass ? "PASS" : "FAIL",
                l.result.detail.c_str());
    std::fflush(stdout);
  };

  run("1 (factor solver vs exhaustive)", criterion1());
  run("2 (product validity + dimension)", criterion2());
  run("3 (toric sanity)", criterion3());
  run("4a (noisy-syndrome build, literal gamma=3)", criterion4_literal());

  ExperimentConfig cfg4 = tanner_config("hgp", 32, 4, 3);
  CodeBundle bundle4 = build_bundle(cfg4);
  run("4b (noisy-syndrome contracts, gamma=4)", criterion4_substance(bundle4));
  run("5 (deterministic HGP decoder)", criterion5(cfg4));
  run("6 (randomized HGP decoder)", criterion6(cfg4));
  run("7 (LP weak + amplified decoder)", criterion7());
  run("8 (algebraic identities)", criterion8(bundle4));
  run("9 (determinism)", criterion9());
  run("10 (runtime shape, report-only)", criterion10());

  size_t passed = 0;
  for (const auto& l : lines) passed += l.result.pass;
  std::printf("SUMMARY: %zu/%zu criteria passed\n", passed, lines.size());
  if (passed != lines.size())
    std::printf("NOTE: criterion 4a exercises an unsatisfiable inner-code tuple and fails by "
                "construction; see its output line.\n");
  return passed == lines.size() ? 0 : 1;
}
