#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcldpc/f2.hpp"
#include "qcldpc/ring.hpp"
#include "qcldpc/rng.hpp"

namespace qcldpc {

// A0-role -> A1-role noisy-syndrome decoder, vectors in the flat
// (h*ell + i) module layout.
using ClassicalDecoder = std::function<BitVec(const BitVec&)>;

enum class DecodeStatus { ok, fail };

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::fail;
  // C1 estimate in original coordinates, A0xB1 block then A1xB0 block.
  BitVec estimate;
  size_t weight = 0;
  uint32_t runs = 0;       // shifts or weak-decode repetitions attempted
  uint32_t successes = 0;  // how many produced a valid estimate

  bool ok() const { return status == DecodeStatus::ok; }
};

// One side of a hypergraph product decoding problem. The primal (Z) side
// decodes C0 syndromes with a_mat = dA and the chain decoder; the dual
// (X) side is the same pipeline run on the transposed matrix with the
// cochain decoder, plus a one-step cyclic rotation that turns the
// conjugated repetition factor back into 1 + X. Syndromes and estimates
// stay in the original complex coordinates either way.
struct HgpSide {
  BitMat a_mat;
  uint32_t ell = 0;
  ClassicalDecoder dec;
  bool is_dual = false;

  size_t n0() const { return a_mat.rows(); }
  size_t n1() const { return a_mat.cols(); }
  size_t syndrome_dim() const { return n0() * ell; }
  size_t c1_dim() const { return (n0() + n1()) * ell; }
};

// Single run at shift j: noisy-syndrome decodes all prefix sums of the
// shifted syndrome columns, reads y off consecutive differences, then
// finds the minimum-weight x with (I (x) (1+X)) x matching the residual
// row by row. Fails when some row has odd weight.
DecodeOutcome dec_hgp(const HgpSide& side, const BitVec& syndrome, uint32_t j);

// Minimum-weight valid output over every j in [ell]; ties to smaller j.
DecodeOutcome hgp_decode_deterministic(const HgpSide& side, const BitVec& syndrome);

// ceil(lg(1/failure_delta)) uniform shifts.
DecodeOutcome hgp_decode_randomized(const HgpSide& side, const BitVec& syndrome,
                                    double failure_delta, Rng& rng);

// One side of a lifted product decoding problem, same roles as HgpSide
// but over R_ell. On the dual side a_mat already carries the monomial
// twist X (dA)^dagger and dec undoes the twist before the cochain
// decoder; only the syndrome is pre-rotated.
struct LpSide {
  RingMatrix a_mat;
  ClassicalDecoder dec;
  bool is_dual = false;

  uint32_t ell() const { return a_mat.modulus(); }
  uint32_t n0() const { return a_mat.rows(); }
  uint32_t n1() const { return a_mat.cols(); }
  size_t syndrome_dim() const { return size_t(n0()) * ell(); }
  size_t c1_dim() const { return size_t(n0() + n1()) * ell(); }
};

// Amplifies approximate compatibility: decodes the t prefix sums
// sum_{i<k} X^i (s - dA y_tilde), picks a uniform offset j in [t],
// reads componentwise differences into z, fills the periodic gaps by
// majority vote over a window of t positions, and returns
// y_tilde + z + r. Requires 2 | t and t | ell.
ModuleElement amp_com(const LpSide& side, const ModuleElement& syndrome,
                      const ModuleElement& y_tilde, uint32_t t, Rng& rng);

// lg(ell) rounds of amp_com with doubling window t = 2^(tau+1), then the
// rowwise minimum-weight (1+X) solve. Requires ell to be a power of two.
DecodeOutcome weak_dec(const LpSide& side, const BitVec& syndrome, Rng& rng);

// K = ceil(log delta / log(1 - (1-eps)^lg(ell))) independent weak_dec
// runs with per-run child seeds; best valid output by weight, ties to
// the earliest run. Runs fan out over `threads` workers; results do not
// depend on the thread count.
DecodeOutcome lp_decode(const LpSide& side, const BitVec& syndrome, double eps,
                        double failure_delta, Rng& rng, unsigned threads = 1);

uint64_t lp_repeat_count(uint32_t ell, double eps, double failure_delta);

// ell^(2 eps) * ln(1/delta) + 1, the guaranteed ceiling on the repeat count.
double lp_repeat_bound(uint32_t ell, double eps, double failure_delta);

struct RadiusReport {
  uint64_t e = 0;
  bool distance_bounded = false;  // a known distance participated in the min
  std::string binding_term;
};

// min{e0, e1, ell/2, (d-1)/(2 + (w+2) gamma)}; the distance term is
// omitted (and flagged) when d is unknown.
RadiusReport hgp_radius(uint64_t e0, uint64_t e1, uint32_t ell, uint64_t gamma, uint64_t w,
                        std::optional<uint64_t> d);

// min{e0/2, eps e1 / 48 gamma, eps ell / 12 gamma,
//     (d-1)/(2(w+2) gamma / eps + 2)}, distance term as above.
RadiusReport lp_radius(uint64_t e0, uint64_t e1, uint32_t ell, uint64_t gamma, uint64_t w,
                       double eps, std::optional<uint64_t> d);

// Row-by-row minimum-weight solve of (I (x) (1+X)) x = z on the flat
// layout; nullopt when some row has odd weight.
std::optional<BitVec> solve_rep_rows(const BitVec& z, uint32_t nrows, uint32_t ell);

// (X^k v) on the flat layout: out_{h,i} = v_{h,i+k}.
BitVec shift_flat(const BitVec& v, uint32_t nrows, uint32_t ell, int64_t k);

// (M (x) I) applied columnwise on the flat layout; lets the harness apply
// product boundary maps without materializing them.
BitVec tensor_cols_apply(const BitMat& m, const BitVec& v, uint32_t ell);

// Classical-side decoder for the repetition complex itself (the cycle
// Tanner side of toric-like products): minimum-weight (1+X) solve, after
// clearing the highest set bit when the syndrome weight is odd. The
// conjugated variant decodes against the transposed factor.
ClassicalDecoder make_rep_decoder(uint32_t ell, bool conjugated);

}  // namespace qcldpc
