#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qcldpc {

// Dense bit-packed vector over F2. Addition is XOR, so v + v = 0.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t len) : len_(len), w_((len + 63) / 64, 0) {}

  // Parses "10110..."; position i in the string is bit i.
  static BitVec from_string(std::string_view bits);

  size_t size() const { return len_; }

  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool b) {
    const uint64_t m = uint64_t{1} << (i & 63);
    if (b)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  size_t weight() const;
  bool any() const;
  bool is_zero() const { return !any(); }

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitVec& o) const { return len_ == o.len_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  std::span<const uint64_t> words() const { return w_; }
  std::span<uint64_t> words() { return w_; }

  std::vector<uint32_t> support() const;

  template <class F>
  void for_each_set(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        f(wi * 64 + static_cast<size_t>(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

 private:
  size_t len_ = 0;
  std::vector<uint64_t> w_;
};

// Dense bit-packed matrix over F2, packed row-major. Boundary and
// coboundary maps live here; decoder inner loops use adjacency lists
// held elsewhere, so dense rows with word-level XOR are the right
// trade at desk scale. Inputs to rank/solve/kernel are never mutated.
class BitMat {
 public:
  BitMat() = default;
  BitMat(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

  static BitMat identity(size_t n);
  // Rows given as bit strings, e.g. {"110", "011"}.
  static BitMat from_rows(const std::vector<std::string_view>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  bool get(size_t r, size_t c) const { return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1; }
  void set(size_t r, size_t c, bool b) {
    const uint64_t m = uint64_t{1} << (c & 63);
    if (b)
      w_[r * wpr_ + (c >> 6)] |= m;
    else
      w_[r * wpr_ + (c >> 6)] &= ~m;
  }
  void flip(size_t r, size_t c) { w_[r * wpr_ + (c >> 6)] ^= uint64_t{1} << (c & 63); }

  std::span<const uint64_t> row(size_t r) const { return {w_.data() + r * wpr_, wpr_}; }
  std::span<uint64_t> row(size_t r) { return {w_.data() + r * wpr_, wpr_}; }
  void xor_row(size_t dst, size_t src);

  BitVec row_vec(size_t r) const;
  size_t row_weight(size_t r) const;
  size_t col_weight(size_t c) const;
  size_t max_row_weight() const;
  size_t max_col_weight() const;

  BitMat transposed() const;
  bool is_zero() const;

  bool operator==(const BitMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
  }
  bool operator!=(const BitMat& o) const { return !(*this == o); }

 private:
  size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> w_;
};

// r-th output bit is the parity of (row r AND v). cols(m) must equal len(v).
BitVec mat_vec(const BitMat& m, const BitVec& v);

BitMat mat_mul(const BitMat& a, const BitMat& b);

// Kronecker product; index (i,k) of the row side maps to i*rows(b)+k,
// matching the (outer, inner) flattening used for R_ell expansions.
BitMat kron(const BitMat& a, const BitMat& b);

BitMat hstack(const BitMat& a, const BitMat& b);
BitMat vstack(const BitMat& a, const BitMat& b);

size_t rank(const BitMat& m);

// Any solution x of Mx = b, or nullopt if inconsistent. Gaussian
// elimination over F2 with partial pivoting on a working copy.
std::optional<BitVec> solve(const BitMat& m, const BitVec& b);

// cols(m) - rank(m) independent vectors spanning the nullspace.
std::vector<BitVec> kernel_basis(const BitMat& m);

// Precomputed elimination of a fixed M for repeated solves; callers
// reuse boundary maps across thousands of trials.
class LinearSolver {
 public:
  explicit LinearSolver(const BitMat& m);

  size_t rank() const { return rank_; }
  std::optional<BitVec> solve(const BitVec& b) const;
  bool consistent(const BitVec& b) const;

 private:
  size_t rows_, cols_, rank_;
  BitMat rref_;                    // U * M in reduced row-echelon form
  BitMat transform_;               // U, the accumulated row operations
  std::vector<uint32_t> pivot_col_;  // pivot column of each pivot row
};

}  // namespace qcldpc
