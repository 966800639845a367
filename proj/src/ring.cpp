#include "qcldpc/ring.hpp"

#include <stdexcept>

namespace qcldpc {

RingElement RingElement::monomial(uint32_t k, uint32_t ell) {
  if (ell == 0) throw std::invalid_argument("RingElement: modulus must be positive");
  RingElement f(ell);
  f.set(k % ell, true);
  return f;
}

RingElement RingElement::one_plus_x(uint32_t ell) {
  RingElement f(ell);
  f.set(0, true);
  f.set(1 % ell, !f.get(1 % ell));  // ell = 1 collapses 1 + X to 0
  return f;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  if (ell_ != o.ell_) throw std::invalid_argument("RingElement add: modulus mismatch");
  c_ ^= o.c_;
  return *this;
}

RingElement RingElement::conjugate() const {
  RingElement out(ell_);
  for (uint32_t k = 0; k < ell_; ++k)
    if (c_.get(k)) out.set((ell_ - k) % ell_, true);
  return out;
}

RingElement ring_mul(const RingElement& f, const RingElement& g) {
  if (f.modulus() != g.modulus()) throw std::invalid_argument("ring_mul: modulus mismatch");
  const uint32_t ell = f.modulus();
  RingElement out(ell);
  for (uint32_t a = 0; a < ell; ++a) {
    if (!f.get(a)) continue;
    for (uint32_t b = 0; b < ell; ++b)
      if (g.get(b)) out.set((a + b) % ell, !out.get((a + b) % ell));
  }
  return out;
}

RingElement prefix_multiplier(uint32_t k, uint32_t ell) {
  if (k > ell) throw std::invalid_argument("prefix_multiplier: k must be <= ell");
  RingElement out(ell);
  for (uint32_t i = 0; i < k; ++i) out.set(i % ell, !out.get(i % ell));
  return out;
}

std::optional<RingElement> repetition_factor_solve(const RingElement& zeta) {
  const uint32_t ell = zeta.modulus();
  if (zeta.weight() % 2 != 0) return std::nullopt;
  if (ell == 1) return RingElement::zero(1);  // 1+X = 0 here, zeta = 0 forced

  // chi_i = chi_0 + sum_{k=1..i} zeta_k; the chi_0 = 1 candidate is the
  // complement, so compare weights and keep the lighter, tie to chi_0 = 0.
  RingElement chi(ell);
  bool acc = false;
  for (uint32_t i = 1; i < ell; ++i) {
    acc ^= zeta.get(i);
    chi.set(i, acc);
  }
  const size_t w0 = chi.weight();
  if (2 * w0 > ell) {
    RingElement comp(ell);
    for (uint32_t i = 0; i < ell; ++i) comp.set(i, !chi.get(i));
    return comp;
  }
  return chi;
}

ModuleElement ModuleElement::from_bits(BitVec bits, uint32_t rank, uint32_t ell) {
  if (bits.size() != size_t(rank) * ell)
    throw std::invalid_argument("ModuleElement::from_bits: size mismatch");
  ModuleElement a(rank, ell);
  a.bits_ = std::move(bits);
  return a;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (ell_ != o.ell_ || rank_ != o.rank_)
    throw std::invalid_argument("ModuleElement add: shape mismatch");
  bits_ ^= o.bits_;
  return *this;
}

ModuleElement ModuleElement::shifted(int64_t k) const {
  ModuleElement out(rank_, ell_);
  for (uint32_t h = 0; h < rank_; ++h)
    for (uint32_t i = 0; i < ell_; ++i)
      if (get(h, int64_t(i) + k)) out.set(h, i, true);
  return out;
}

ModuleElement ModuleElement::acted_by(const RingElement& f) const {
  if (f.modulus() != ell_) throw std::invalid_argument("acted_by: modulus mismatch");
  ModuleElement out(rank_, ell_);
  for (uint32_t k = 0; k < ell_; ++k)
    if (f.get(k)) out += shifted(k);
  return out;
}

RingElement ModuleElement::row_as_ring(uint32_t h) const {
  RingElement f(ell_);
  for (uint32_t i = 0; i < ell_; ++i)
    if (get(h, i)) f.set((ell_ - i) % ell_, true);
  return f;
}

void ModuleElement::set_row_from_ring(uint32_t h, const RingElement& f) {
  if (f.modulus() != ell_) throw std::invalid_argument("set_row_from_ring: modulus mismatch");
  for (uint32_t i = 0; i < ell_; ++i) set(h, i, f.get((ell_ - i) % ell_));
}

RingMatrix::RingMatrix(uint32_t rows, uint32_t cols, uint32_t ell)
    : rows_(rows), cols_(cols), ell_(ell), e_(size_t(rows) * cols, RingElement(ell)) {}

RingMatrix RingMatrix::identity(uint32_t n, uint32_t ell) {
  RingMatrix m(n, n, ell);
  for (uint32_t i = 0; i < n; ++i) m.at(i, i) = RingElement::one(ell);
  return m;
}

RingMatrix RingMatrix::conj_transpose() const {
  RingMatrix t(cols_, rows_, ell_);
  for (uint32_t r = 0; r < rows_; ++r)
    for (uint32_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c).conjugate();
  return t;
}

BitMat RingMatrix::expand_to_f2() const {
  BitMat out(size_t(rows_) * ell_, size_t(cols_) * ell_);
  for (uint32_t r = 0; r < rows_; ++r)
    for (uint32_t c = 0; c < cols_; ++c) {
      const RingElement& f = at(r, c);
      for (uint32_t k = 0; k < ell_; ++k) {
        if (!f.get(k)) continue;
        for (uint32_t i = 0; i < ell_; ++i)
          out.flip(size_t(r) * ell_ + i, size_t(c) * ell_ + (i + k) % ell_);
      }
    }
  return out;
}

bool RingMatrix::is_zero() const {
  for (const auto& f : e_)
    if (!f.is_zero()) return false;
  return true;
}

RingMatrix ring_mat_mul(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols() != b.rows() || a.modulus() != b.modulus())
    throw std::invalid_argument("ring_mat_mul: shape or modulus mismatch");
  RingMatrix out(a.rows(), b.cols(), a.modulus());
  for (uint32_t r = 0; r < a.rows(); ++r)
    for (uint32_t c = 0; c < b.cols(); ++c) {
      RingElement acc(a.modulus());
      for (uint32_t k = 0; k < a.cols(); ++k) acc += ring_mul(a.at(r, k), b.at(k, c));
      out.at(r, c) = acc;
    }
  return out;
}

RingMatrix ring_kron(const RingMatrix& a, const RingMatrix& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("ring_kron: modulus mismatch");
  RingMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.modulus());
  for (uint32_t ar = 0; ar < a.rows(); ++ar)
    for (uint32_t ac = 0; ac < a.cols(); ++ac)
      for (uint32_t br = 0; br < b.rows(); ++br)
        for (uint32_t bc = 0; bc < b.cols(); ++bc)
          out.at(ar * b.rows() + br, ac * b.cols() + bc) = ring_mul(a.at(ar, ac), b.at(br, bc));
  return out;
}

RingMatrix ring_scale(const RingElement& f, const RingMatrix& m) {
  if (f.modulus() != m.modulus()) throw std::invalid_argument("ring_scale: modulus mismatch");
  RingMatrix out(m.rows(), m.cols(), m.modulus());
  for (uint32_t r = 0; r < m.rows(); ++r)
    for (uint32_t c = 0; c < m.cols(); ++c) out.at(r, c) = ring_mul(f, m.at(r, c));
  return out;
}

ModuleElement apply(const RingMatrix& m, const ModuleElement& a) {
  if (m.cols() != a.rank() || m.modulus() != a.modulus())
    throw std::invalid_argument("apply: shape or modulus mismatch");
  const uint32_t ell = m.modulus();
  ModuleElement out(m.rows(), ell);
  for (uint32_t c = 0; c < m.cols(); ++c) {
    // Row c of the input drives every output row through entry (r, c).
    for (uint32_t r = 0; r < m.rows(); ++r) {
      const RingElement& f = m.at(r, c);
      if (f.is_zero()) continue;
      for (uint32_t k = 0; k < ell; ++k) {
        if (!f.get(k)) continue;
        for (uint32_t i = 0; i < ell; ++i)
          if (a.get(c, int64_t(i) + k)) out.flip(r, i);
      }
    }
  }
  return out;
}

}  // namespace qcldpc
