#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qcldpc/f2.hpp"
#include "qcldpc/ring.hpp"

namespace qcldpc {

// Based 2-term complex C1 -> C0; the associated classical code is
// ker(boundary). When a ring form is present its F2 expansion must equal
// the boundary, which validate() enforces.
struct ChainComplex2 {
  BitMat boundary;
  std::optional<RingMatrix> ring_boundary;

  size_t dim_c1() const { return boundary.cols(); }
  size_t dim_c0() const { return boundary.rows(); }
  void validate() const;
};

// Coboundary complex: transpose, conjugate-transpose of the ring form.
ChainComplex2 cochain2(const ChainComplex2& a);

// B0 = B1 = R_ell with boundary 1 + X; associated code is the length-ell
// repetition code. Requires ell >= 2.
ChainComplex2 repetition_complex(uint32_t ell);

// Based 3-term complex C2 -d2-> C1 -d1-> C0 with d1 d2 = 0, checked at
// construction. Ring forms are carried when both factors had them.
struct ChainComplex3 {
  BitMat d2;
  BitMat d1;
  std::optional<RingMatrix> ring_d2;
  std::optional<RingMatrix> ring_d1;

  size_t dim_c2() const { return d2.cols(); }
  size_t dim_c1() const { return d1.cols(); }
  size_t dim_c0() const { return d1.rows(); }
  void validate() const;
};

// C1 = A0 (x) B1 direct-sum A1 (x) B0, with the A0 (x) B1 block first to
// match the (x, y) error tuple order used by the product decoders.
ChainComplex3 hypergraph_product(const ChainComplex2& a, const ChainComplex2& b);

// Same block shape with tensors over R_ell; both factors must carry ring
// forms with equal modulus.
ChainComplex3 lifted_product(const ChainComplex2& a, const ChainComplex2& b);

struct CodeParams {
  size_t n = 0;
  size_t k = 0;
  std::optional<size_t> d;  // filled only when an oracle ran
  size_t locality = 0;
};

// n, k by rank arithmetic and locality by row/column weights; d is left
// unset (see distance_oracle).
CodeParams code_params(const ChainComplex3& c);

// dim H1(A (x) B) by the two-factor homology formula, for cross-checking
// the rank computation on products.
size_t kunneth_h1(const ChainComplex2& a, const ChainComplex2& b);

enum class DistanceStatus { ok, no_logicals, budget_exceeded };

struct DistanceResult {
  DistanceStatus status = DistanceStatus::no_logicals;
  size_t d = 0;
};

// Exact distance by enumerating all cycles and cocycles and discarding
// boundaries via membership tests. Enumeration runs only when both
// kernel dimensions are at most max_kernel_dim (default 2^22 vectors).
DistanceResult distance_oracle(const ChainComplex3& c, size_t max_kernel_dim = 22);

// Minimum weight of a nonzero vector in ker(boundary) for tiny factors;
// nullopt when the code is trivial. Enumeration bound as above.
std::optional<size_t> classical_distance(const ChainComplex2& a, size_t max_kernel_dim = 22);

// True iff c_hat - c lies in im d2 (Z side).
bool coset_check(const ChainComplex3& c, const BitVec& cvec, const BitVec& c_hat);

// Witness z with d2 z = c + c_hat, when it exists.
std::optional<BitVec> coset_witness(const ChainComplex3& c, const BitVec& cvec,
                                    const BitVec& c_hat);

// X-side variants: membership in im d1^T.
bool coset_check_dual(const ChainComplex3& c, const BitVec& cvec, const BitVec& c_hat);
std::optional<BitVec> coset_witness_dual(const ChainComplex3& c, const BitVec& cvec,
                                         const BitVec& c_hat);

// True iff every nonzero c with |c| <= alpha * dim C1 has |d1 c| >= beta |c|.
// Throws when the number of candidate vectors exceeds the budget.
bool expansion_check(const ChainComplex2& a, double alpha, double beta,
                     uint64_t budget = uint64_t{1} << 24);

}  // namespace qcldpc
