#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcldpc/f2.hpp"

namespace qcldpc {

// Element of R_ell = F2[X]/(X^ell - 1); coeffs bit k is the coefficient
// of X^k. Multiplication indices reduce mod ell.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(uint32_t ell) : ell_(ell), c_(ell) {}

  static RingElement zero(uint32_t ell) { return RingElement(ell); }
  static RingElement one(uint32_t ell) { return monomial(0, ell); }
  static RingElement monomial(uint32_t k, uint32_t ell);
  // 1 + X, the repetition boundary factor.
  static RingElement one_plus_x(uint32_t ell);

  uint32_t modulus() const { return ell_; }
  bool get(uint32_t k) const { return c_.get(k % ell_); }
  void set(uint32_t k, bool b) { c_.set(k % ell_, b); }
  size_t weight() const { return c_.weight(); }
  bool is_zero() const { return c_.is_zero(); }
  const BitVec& coeffs() const { return c_; }

  RingElement& operator+=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) {
    a += b;
    return a;
  }
  bool operator==(const RingElement& o) const { return ell_ == o.ell_ && c_ == o.c_; }
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  // f(X)* = f(X^{ell-1}): coefficient of X^k moves to X^{-k mod ell}.
  RingElement conjugate() const;

 private:
  uint32_t ell_ = 0;
  BitVec c_;
};

// Cyclic convolution over F2.
RingElement ring_mul(const RingElement& f, const RingElement& g);

// Sum_{i in [k]} X^i; k = 0 gives 0.
RingElement prefix_multiplier(uint32_t k, uint32_t ell);

// Minimum-weight chi with (1+X) chi = zeta, or nullopt when zeta has odd
// weight (no solution). The two candidates chi_0 in {0,1} are scanned;
// they are complementary, so the lighter one is kept, ties going to the
// chi_0 = 0 candidate.
std::optional<RingElement> repetition_factor_solve(const RingElement& zeta);

// Element of the free module R_ell^n. Component (h, i) is the
// coefficient of basis element alpha_h X^{-i}, flat bit h*ell + i, so
// that (X^k a)_{h,i} = a_{h,i+k}. Hamming weights, flat F2 vectors and
// circulant expansions all use this layout.
class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(uint32_t rank, uint32_t ell) : ell_(ell), rank_(rank), bits_(size_t(rank) * ell) {}

  static ModuleElement from_bits(BitVec bits, uint32_t rank, uint32_t ell);

  uint32_t modulus() const { return ell_; }
  uint32_t rank() const { return rank_; }

  bool get(uint32_t h, int64_t i) const { return bits_.get(flat(h, i)); }
  void set(uint32_t h, int64_t i, bool b) { bits_.set(flat(h, i), b); }
  void flip(uint32_t h, int64_t i) { bits_.flip(flat(h, i)); }

  size_t weight() const { return bits_.weight(); }
  bool is_zero() const { return bits_.is_zero(); }
  const BitVec& bits() const { return bits_; }

  ModuleElement& operator+=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) {
    a += b;
    return a;
  }
  bool operator==(const ModuleElement& o) const {
    return ell_ == o.ell_ && rank_ == o.rank_ && bits_ == o.bits_;
  }

  // X^k action: out_{h,i} = this_{h,i+k}.
  ModuleElement shifted(int64_t k) const;

  // Componentwise action of a ring element: (f a)_{h,i} = sum_k f_k a_{h,i+k}.
  ModuleElement acted_by(const RingElement& f) const;

  // Row h as a ring element: ring coefficient of X^k is component (h, -k).
  RingElement row_as_ring(uint32_t h) const;
  void set_row_from_ring(uint32_t h, const RingElement& f);

 private:
  size_t flat(uint32_t h, int64_t i) const {
    int64_t m = i % int64_t(ell_);
    if (m < 0) m += ell_;
    return size_t(h) * ell_ + size_t(m);
  }
  uint32_t ell_ = 0, rank_ = 0;
  BitVec bits_;
};

// Matrix over R_ell, row-major grid of ring elements. Expansion to F2
// replaces each entry f by the ell x ell block B[i][j] = f_{(j-i) mod ell},
// consistent with the module layout above; the conjugate transpose then
// expands to the plain F2 transpose.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(uint32_t rows, uint32_t cols, uint32_t ell);

  static RingMatrix identity(uint32_t n, uint32_t ell);

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  uint32_t modulus() const { return ell_; }

  const RingElement& at(uint32_t r, uint32_t c) const { return e_[size_t(r) * cols_ + c]; }
  RingElement& at(uint32_t r, uint32_t c) { return e_[size_t(r) * cols_ + c]; }

  RingMatrix conj_transpose() const;
  BitMat expand_to_f2() const;
  bool is_zero() const;

  bool operator==(const RingMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ell_ == o.ell_ && e_ == o.e_;
  }

 private:
  uint32_t rows_ = 0, cols_ = 0, ell_ = 0;
  std::vector<RingElement> e_;
};

RingMatrix ring_mat_mul(const RingMatrix& a, const RingMatrix& b);
RingMatrix ring_kron(const RingMatrix& a, const RingMatrix& b);

// Entrywise scalar multiplication f * M.
RingMatrix ring_scale(const RingElement& f, const RingMatrix& m);

// Module-matrix application; equals expand_to_f2 followed by mat_vec.
ModuleElement apply(const RingMatrix& m, const ModuleElement& a);

}  // namespace qcldpc
