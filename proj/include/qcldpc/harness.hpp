#pragma once

#include <json.hpp>

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcldpc/chain.hpp"
#include "qcldpc/flip.hpp"
#include "qcldpc/product.hpp"
#include "qcldpc/tanner.hpp"

namespace qcldpc {

struct ExperimentConfig {
  std::string mode = "hgp";  // hgp | lp
  uint32_t ell = 16;
  uint32_t v0 = 0;  // 0 derives max(8, 2 ceil(lg ell)), an even count
  uint32_t delta = 14;
  uint32_t gamma_inner = 4;
  uint32_t d_min = 3;
  double lambda_target = 0.35;
  uint32_t lift_retries = 5;
  uint64_t inner_tries = 100000;
  double eps = 0.5;
  double failure_delta = 0.0009765625;  // 2^-10
  std::vector<uint32_t> error_weights{0, 1, 2};
  uint32_t trials = 100;
  uint64_t seed = 1;
  uint32_t threads = 0;  // 0 = hardware concurrency
  std::string sides = "both";  // z | x | both
  std::string hgp_variant = "deterministic";  // deterministic | randomized
  std::string a_decoder = "flip";  // flip | repsolve
  size_t materialize_limit = 6144;
  std::optional<BaseGraph> base_graph;  // explicit base graph override
  std::string replay_file;

  uint32_t resolved_v0() const;
  uint32_t resolved_threads() const;
  void validate() const;
};

nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const nlohmann::json& j);

// Built code plus everything trials need: the Tanner factor, measured
// expansion, budgets, decode sides, and (when small enough) the dense
// product complex with its coset solvers and oracle distance.
struct CodeBundle {
  ExperimentConfig config;
  std::shared_ptr<const TannerCode> tanner;
  double lambda = 0.0;
  uint32_t lift_attempts = 0;
  ErrorBudgets budgets;
  CodeParams params;
  size_t w_factor = 0;  // locality of the expander factor
  RadiusReport radius_z, radius_x;
  std::optional<ChainComplex3> complex;
  std::optional<DistanceResult> oracle;
  std::shared_ptr<const LinearSolver> d2_solver;   // Z-side coset witness
  std::shared_ptr<const LinearSolver> d1t_solver;  // X-side coset witness

  HgpSide hgp_z, hgp_x;
  LpSide lp_z, lp_x;

  bool is_lp() const { return config.mode == "lp"; }
  size_t c1_dim() const;
  size_t syndrome_dim(char side) const;
  BitVec boundary(char side, const BitVec& c1_vec) const;
  uint64_t gamma_for_side(char side) const;
  // Weights at or below this gate ok-status and the weight bound.
  uint32_t gate_weight_limit(char side) const;
  // Weights at or below this additionally gate coset correctness.
  uint32_t coset_gate_limit() const;

  DecodeOutcome decode(char side, const BitVec& syndrome, Rng& rng,
                       unsigned inner_threads = 1) const;
};

CodeBundle build_bundle(const ExperimentConfig& cfg);

nlohmann::json bundle_to_json(const CodeBundle& bundle);
// Rebuilds every derived structure from the stored graph and inner code
// and cross-checks the stored ring boundary bit-exactly.
CodeBundle bundle_from_json(const nlohmann::json& j);

// Uniformly random support of exactly the given weight.
BitVec sample_adversarial_error(size_t n, size_t weight, Rng& rng);

struct TrialRecord {
  uint64_t trial_id = 0;
  char side = 'z';
  bool replay = false;
  uint32_t error_weight = 0;
  bool ok = false;
  size_t output_weight = 0;
  bool syndrome_ok = false;          // re-verified boundary match
  bool weight_bound_ok = true;       // |est| <= ((w+2) gamma + 1) |err|
  std::optional<bool> coset;         // set when a coset solver exists
  std::vector<uint32_t> witness;     // support of z with d2 z = err + est
  uint64_t seed = 0;
  // Wall-clock stages (monotonic), reported outside the deterministic
  // trial stream so identical seeds reproduce identical bytes.
  uint64_t sample_us = 0, syndrome_us = 0, decode_us = 0, check_us = 0;
};

TrialRecord run_trial(const CodeBundle& bundle, char side, uint32_t weight, uint64_t trial_id,
                      uint64_t seed, const BitVec* explicit_error = nullptr);

nlohmann::json trial_to_json(const TrialRecord& r);

struct SweepResult {
  std::vector<TrialRecord> records;
  bool gates_passed = true;
  std::vector<std::string> gate_failures;
};

// Runs trials x weights x sides (plus replay entries), writes JSON-lines
// trials, a CSV summary and optional per-trial timings. The JSONL stream
// is byte-identical across reruns of one config+seed; timings are not.
SweepResult run_sweep(const CodeBundle& bundle, std::ostream* trials_jsonl,
                      std::ostream* summary_csv, std::ostream* timings_jsonl);

}  // namespace qcldpc
