#pragma once

#include <cstdint>

#include "qcldpc/f2.hpp"
#include "qcldpc/tanner.hpp"

namespace qcldpc {

// Noisy-syndrome decoder for the Tanner chain complex. Starts each local
// view at a minimum-weight preimage of its syndrome, then greedily applies
// single-vertex kernel-word updates while the edge-mismatch weight
// strictly drops; matched edges are read out, unmatched edges report 0.
// D(0) = 0 and the potential |m(x)| <= |E| strictly decreases, so the
// loop always terminates.
BitVec nsdec_chain(const TannerCode& code, const BitVec& syndrome);

// Noisy-syndrome decoder for the cochain complex. x starts at 0; while
// some single-vertex update over the 2^Gamma local patterns strictly
// reduces the residual weight |s - delta(x)|, the first improving
// candidate in a fixed scan order is applied.
BitVec nsdec_cochain(const TannerCode& code, const BitVec& syndrome);

// Admissible error weights for the noisy-syndrome contracts, floors of
// lambda|V|/(2(Delta+1)), lambda|V|/(4(Delta+1)), lambda|V|/2 and
// lambda|V|/(2(Delta+1)) respectively.
struct ErrorBudgets {
  uint64_t chain_syndrome = 0;    // e0: syndrome errors in A0
  uint64_t chain_code = 0;        // e1: code errors in A1
  uint64_t cochain_syndrome = 0;  // e^1: syndrome errors in A^1 = F2^E
  uint64_t cochain_code = 0;      // e^0: code errors in A^0
};

ErrorBudgets error_budgets(uint64_t num_vertices, uint32_t delta, double lambda);

// Contract slopes gamma = 2*Delta (chain) and 4*Delta (cochain).
inline uint64_t gamma_chain(uint32_t delta) { return 2ull * delta; }
inline uint64_t gamma_cochain(uint32_t delta) { return 4ull * delta; }

}  // namespace qcldpc
