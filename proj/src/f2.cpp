#include "qcldpc/f2.hpp"

#include <bit>
#include <stdexcept>

namespace qcldpc {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("BitVec::from_string expects only 0/1");
  }
  return v;
}

size_t BitVec::weight() const {
  size_t n = 0;
  for (uint64_t w : w_) n += std::popcount(w);
  return n;
}

bool BitVec::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (len_ != o.len_) throw std::invalid_argument("BitVec xor: length mismatch");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

std::vector<uint32_t> BitVec::support() const {
  std::vector<uint32_t> s;
  for_each_set([&](size_t i) { s.push_back(static_cast<uint32_t>(i)); });
  return s;
}

BitMat BitMat::identity(size_t n) {
  BitMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMat BitMat::from_rows(const std::vector<std::string_view>& rows) {
  if (rows.empty()) return BitMat();
  BitMat m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw std::invalid_argument("BitMat::from_rows expects equal-length rows");
    for (size_t c = 0; c < m.cols_; ++c)
      if (rows[r][c] == '1') m.set(r, c, true);
  }
  return m;
}

void BitMat::xor_row(size_t dst, size_t src) {
  uint64_t* d = w_.data() + dst * wpr_;
  const uint64_t* s = w_.data() + src * wpr_;
  for (size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

BitVec BitMat::row_vec(size_t r) const {
  BitVec v(cols_);
  auto dst = v.words();
  auto src = row(r);
  for (size_t i = 0; i < wpr_; ++i) dst[i] = src[i];
  return v;
}

size_t BitMat::row_weight(size_t r) const {
  size_t n = 0;
  for (uint64_t w : row(r)) n += std::popcount(w);
  return n;
}

size_t BitMat::col_weight(size_t c) const {
  size_t n = 0;
  for (size_t r = 0; r < rows_; ++r) n += get(r, c);
  return n;
}

size_t BitMat::max_row_weight() const {
  size_t best = 0;
  for (size_t r = 0; r < rows_; ++r) best = std::max(best, row_weight(r));
  return best;
}

size_t BitMat::max_col_weight() const {
  std::vector<size_t> cw(cols_, 0);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) cw[c] += get(r, c);
  size_t best = 0;
  for (size_t c = 0; c < cols_; ++c) best = std::max(best, cw[c]);
  return best;
}

BitMat BitMat::transposed() const {
  BitMat t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    uint64_t const* src = w_.data() + r * wpr_;
    for (size_t wi = 0; wi < wpr_; ++wi) {
      uint64_t w = src[wi];
      while (w) {
        const size_t c = wi * 64 + static_cast<size_t>(__builtin_ctzll(w));
        t.set(c, r, true);
        w &= w - 1;
      }
    }
  }
  return t;
}

bool BitMat::is_zero() const {
  for (uint64_t w : w_)
    if (w) return false;
  return true;
}

BitVec mat_vec(const BitMat& m, const BitVec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  BitVec out(m.rows());
  auto vw = v.words();
  for (size_t r = 0; r < m.rows(); ++r) {
    auto rw = m.row(r);
    uint64_t acc = 0;
    for (size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & vw[i];
    if (std::popcount(acc) & 1) out.set(r, true);
  }
  return out;
}

BitMat mat_mul(const BitMat& a, const BitMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  BitMat out(a.rows(), b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    auto ar = a.row(r);
    for (size_t wi = 0; wi < ar.size(); ++wi) {
      uint64_t w = ar[wi];
      while (w) {
        const size_t k = wi * 64 + static_cast<size_t>(__builtin_ctzll(w));
        uint64_t* dst = out.row(r).data();
        auto brow = b.row(k);
        for (size_t i = 0; i < brow.size(); ++i) dst[i] ^= brow[i];
        w &= w - 1;
      }
    }
  }
  return out;
}

BitMat kron(const BitMat& a, const BitMat& b) {
  BitMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t ar = 0; ar < a.rows(); ++ar)
    for (size_t ac = 0; ac < a.cols(); ++ac) {
      if (!a.get(ar, ac)) continue;
      for (size_t br = 0; br < b.rows(); ++br) {
        auto brow = b.row(br);
        uint64_t* dst = out.row(ar * b.rows() + br).data();
        const size_t base = ac * b.cols();
        for (size_t wi = 0; wi < brow.size(); ++wi) {
          uint64_t w = brow[wi];
          while (w) {
            const size_t c = base + wi * 64 + static_cast<size_t>(__builtin_ctzll(w));
            dst[c >> 6] ^= uint64_t{1} << (c & 63);
            w &= w - 1;
          }
        }
      }
    }
  return out;
}

BitMat hstack(const BitMat& a, const BitMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  BitMat out(a.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r, c, true);
    for (size_t c = 0; c < b.cols(); ++c)
      if (b.get(r, c)) out.set(r, a.cols() + c, true);
  }
  return out;
}

BitMat vstack(const BitMat& a, const BitMat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  BitMat out(a.rows() + b.rows(), a.cols());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r, c, true);
  for (size_t r = 0; r < b.rows(); ++r)
    for (size_t c = 0; c < b.cols(); ++c)
      if (b.get(r, c)) out.set(a.rows() + r, c, true);
  return out;
}

namespace {

// Row echelon on a working copy; returns pivot (row, col) pairs.
std::vector<std::pair<size_t, size_t>> echelonize(BitMat& m) {
  std::vector<std::pair<size_t, size_t>> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t pr = r;
    while (pr < m.rows() && !m.get(pr, c)) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (size_t i = 0; i < (m.cols() + 63) / 64; ++i)
        std::swap(m.row(r)[i], m.row(pr)[i]);
    for (size_t rr = r + 1; rr < m.rows(); ++rr)
      if (m.get(rr, c)) m.xor_row(rr, r);
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t rank(const BitMat& m) {
  BitMat work = m;
  return echelonize(work).size();
}

std::optional<BitVec> solve(const BitMat& m, const BitVec& b) {
  if (m.rows() != b.size()) throw std::invalid_argument("solve: rhs length mismatch");
  LinearSolver s(m);
  return s.solve(b);
}

std::vector<BitVec> kernel_basis(const BitMat& m) {
  BitMat work = m;
  auto pivots = echelonize(work);
  // Back-substitute to reduced form so each free column reads off directly.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [pr, pc] = *it;
    for (size_t r = 0; r < pr; ++r)
      if (work.get(r, pc)) work.xor_row(r, pr);
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto [pr, pc] : pivots) is_pivot[pc] = true;

  std::vector<BitVec> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVec v(m.cols());
    v.set(f, true);
    for (auto [pr, pc] : pivots)
      if (work.get(pr, f)) v.set(pc, true);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolver::LinearSolver(const BitMat& m)
    : rows_(m.rows()), cols_(m.cols()), rref_(m), transform_(BitMat::identity(m.rows())) {
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t pr = r;
    while (pr < rows_ && !rref_.get(pr, c)) ++pr;
    if (pr == rows_) continue;
    if (pr != r) {
      for (size_t i = 0; i < (cols_ + 63) / 64; ++i) std::swap(rref_.row(r)[i], rref_.row(pr)[i]);
      for (size_t i = 0; i < (rows_ + 63) / 64; ++i)
        std::swap(transform_.row(r)[i], transform_.row(pr)[i]);
    }
    for (size_t rr = 0; rr < rows_; ++rr) {
      if (rr != r && rref_.get(rr, c)) {
        rref_.xor_row(rr, r);
        transform_.xor_row(rr, r);
      }
    }
    pivot_col_.push_back(static_cast<uint32_t>(c));
    ++r;
  }
  rank_ = pivot_col_.size();
}

std::optional<BitVec> LinearSolver::solve(const BitVec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("LinearSolver::solve: rhs length mismatch");
  BitVec u = mat_vec(transform_, b);
  for (size_t r = rank_; r < rows_; ++r)
    if (u.get(r)) return std::nullopt;
  BitVec x(cols_);
  for (size_t r = 0; r < rank_; ++r)
    if (u.get(r)) x.set(pivot_col_[r], true);
  return x;
}

bool LinearSolver::consistent(const BitVec& b) const {
  BitVec u = mat_vec(transform_, b);
  for (size_t r = rank_; r < rows_; ++r)
    if (u.get(r)) return false;
  return true;
}

}  // namespace qcldpc
