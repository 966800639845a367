#include "qcldpc/chain.hpp"

#include <limits>
#include <stdexcept>

namespace qcldpc {

void ChainComplex2::validate() const {
  if (ring_boundary && ring_boundary->expand_to_f2() != boundary)
    throw std::logic_error("ChainComplex2: ring form does not expand to the F2 boundary");
}

ChainComplex2 cochain2(const ChainComplex2& a) {
  ChainComplex2 out;
  out.boundary = a.boundary.transposed();
  if (a.ring_boundary) out.ring_boundary = a.ring_boundary->conj_transpose();
  return out;
}

ChainComplex2 repetition_complex(uint32_t ell) {
  if (ell < 2) throw std::invalid_argument("repetition_complex: ell must be >= 2");
  RingMatrix rb(1, 1, ell);
  rb.at(0, 0) = RingElement::one_plus_x(ell);
  ChainComplex2 out;
  out.boundary = rb.expand_to_f2();
  out.ring_boundary = std::move(rb);
  return out;
}

void ChainComplex3::validate() const {
  if (d1.cols() != d2.rows()) throw std::logic_error("ChainComplex3: d1/d2 dimension mismatch");
  if (!mat_mul(d1, d2).is_zero())
    throw std::logic_error("ChainComplex3: d1 d2 != 0");
  if (ring_d1 && ring_d1->expand_to_f2() != d1)
    throw std::logic_error("ChainComplex3: ring d1 does not expand to d1");
  if (ring_d2 && ring_d2->expand_to_f2() != d2)
    throw std::logic_error("ChainComplex3: ring d2 does not expand to d2");
  if (ring_d1 && ring_d2 && !ring_mat_mul(*ring_d1, *ring_d2).is_zero())
    throw std::logic_error("ChainComplex3: ring d1 d2 != 0");
}

ChainComplex3 hypergraph_product(const ChainComplex2& a, const ChainComplex2& b) {
  const size_t n1a = a.dim_c1(), n0a = a.dim_c0();
  const size_t n1b = b.dim_c1(), n0b = b.dim_c0();
  ChainComplex3 out;
  out.d2 = vstack(kron(a.boundary, BitMat::identity(n1b)),
                  kron(BitMat::identity(n1a), b.boundary));
  out.d1 = hstack(kron(BitMat::identity(n0a), b.boundary),
                  kron(a.boundary, BitMat::identity(n0b)));
  out.validate();
  return out;
}

ChainComplex3 lifted_product(const ChainComplex2& a, const ChainComplex2& b) {
  if (!a.ring_boundary || !b.ring_boundary)
    throw std::invalid_argument("lifted_product: both factors need ring forms");
  const RingMatrix& da = *a.ring_boundary;
  const RingMatrix& db = *b.ring_boundary;
  if (da.modulus() != db.modulus())
    throw std::invalid_argument("lifted_product: modulus mismatch");
  const uint32_t ell = da.modulus();
  ChainComplex3 out;
  RingMatrix rd2_top = ring_kron(da, RingMatrix::identity(db.cols(), ell));
  RingMatrix rd2_bot = ring_kron(RingMatrix::identity(da.cols(), ell), db);
  RingMatrix rd2(rd2_top.rows() + rd2_bot.rows(), rd2_top.cols(), ell);
  for (uint32_t r = 0; r < rd2_top.rows(); ++r)
    for (uint32_t c = 0; c < rd2_top.cols(); ++c) rd2.at(r, c) = rd2_top.at(r, c);
  for (uint32_t r = 0; r < rd2_bot.rows(); ++r)
    for (uint32_t c = 0; c < rd2_bot.cols(); ++c) rd2.at(rd2_top.rows() + r, c) = rd2_bot.at(r, c);

  RingMatrix rd1_left = ring_kron(RingMatrix::identity(da.rows(), ell), db);
  RingMatrix rd1_right = ring_kron(da, RingMatrix::identity(db.rows(), ell));
  RingMatrix rd1(rd1_left.rows(), rd1_left.cols() + rd1_right.cols(), ell);
  for (uint32_t r = 0; r < rd1_left.rows(); ++r) {
    for (uint32_t c = 0; c < rd1_left.cols(); ++c) rd1.at(r, c) = rd1_left.at(r, c);
    for (uint32_t c = 0; c < rd1_right.cols(); ++c)
      rd1.at(r, rd1_left.cols() + c) = rd1_right.at(r, c);
  }

  out.d2 = rd2.expand_to_f2();
  out.d1 = rd1.expand_to_f2();
  out.ring_d2 = std::move(rd2);
  out.ring_d1 = std::move(rd1);
  out.validate();
  return out;
}

CodeParams code_params(const ChainComplex3& c) {
  CodeParams p;
  p.n = c.dim_c1();
  p.k = p.n - rank(c.d1) - rank(c.d2);
  p.locality = std::max(std::max(c.d1.max_row_weight(), c.d1.max_col_weight()),
                        std::max(c.d2.max_row_weight(), c.d2.max_col_weight()));
  return p;
}

size_t kunneth_h1(const ChainComplex2& a, const ChainComplex2& b) {
  const size_t ra = rank(a.boundary), rb = rank(b.boundary);
  const size_t h1a = a.dim_c1() - ra, h0a = a.dim_c0() - ra;
  const size_t h1b = b.dim_c1() - rb, h0b = b.dim_c0() - rb;
  return h1a * h0b + h0a * h1b;
}

namespace {

// Min weight over nonzero vectors of span(basis) that fail the image
// membership test; nullopt when every nonzero cycle is a boundary.
// Gray-code walk touching one basis vector per step.
std::optional<size_t> min_weight_outside_image(const std::vector<BitVec>& basis,
                                               const LinearSolver& image) {
  if (basis.empty()) return std::nullopt;
  const size_t kdim = basis.size();
  BitVec cur(basis[0].size());
  std::optional<size_t> best;
  const uint64_t total = uint64_t{1} << kdim;
  for (uint64_t step = 1; step < total; ++step) {
    cur ^= basis[static_cast<size_t>(__builtin_ctzll(step))];
    const size_t w = cur.weight();
    if (best && w >= *best) continue;
    if (!image.consistent(cur)) best = w;
  }
  return best;
}

}  // namespace

DistanceResult distance_oracle(const ChainComplex3& c, size_t max_kernel_dim) {
  const size_t kz = c.dim_c1() - rank(c.d1);
  const size_t kx = c.dim_c1() - rank(c.d2.transposed());
  if (kz > max_kernel_dim || kx > max_kernel_dim)
    throw std::invalid_argument("distance_oracle: kernel enumeration budget exceeded");

  CodeParams p = code_params(c);
  if (p.k == 0) return {DistanceStatus::no_logicals, 0};

  // Z side: cycles of d1 minus boundaries im d2.
  LinearSolver im_d2(c.d2);
  auto z_best = min_weight_outside_image(kernel_basis(c.d1), im_d2);
  // X side: cocycles (ker d2^T) minus coboundaries (im d1^T).
  LinearSolver im_d1t(c.d1.transposed());
  auto x_best = min_weight_outside_image(kernel_basis(c.d2.transposed()), im_d1t);

  size_t d = std::numeric_limits<size_t>::max();
  if (z_best) d = std::min(d, *z_best);
  if (x_best) d = std::min(d, *x_best);
  if (d == std::numeric_limits<size_t>::max()) return {DistanceStatus::no_logicals, 0};
  return {DistanceStatus::ok, d};
}

std::optional<size_t> classical_distance(const ChainComplex2& a, size_t max_kernel_dim) {
  auto basis = kernel_basis(a.boundary);
  if (basis.empty()) return std::nullopt;
  if (basis.size() > max_kernel_dim)
    throw std::invalid_argument("classical_distance: kernel enumeration budget exceeded");
  BitVec cur(a.dim_c1());
  size_t best = std::numeric_limits<size_t>::max();
  const uint64_t total = uint64_t{1} << basis.size();
  for (uint64_t step = 1; step < total; ++step) {
    cur ^= basis[static_cast<size_t>(__builtin_ctzll(step))];
    best = std::min(best, cur.weight());
  }
  return best;
}

bool coset_check(const ChainComplex3& c, const BitVec& cvec, const BitVec& c_hat) {
  return coset_witness(c, cvec, c_hat).has_value();
}

std::optional<BitVec> coset_witness(const ChainComplex3& c, const BitVec& cvec,
                                    const BitVec& c_hat) {
  if (cvec.size() != c.dim_c1() || c_hat.size() != c.dim_c1())
    throw std::invalid_argument("coset_witness: vectors must live in C1");
  return solve(c.d2, cvec ^ c_hat);
}

bool coset_check_dual(const ChainComplex3& c, const BitVec& cvec, const BitVec& c_hat) {
  return coset_witness_dual(c, cvec, c_hat).has_value();
}

std::optional<BitVec> coset_witness_dual(const ChainComplex3& c, const BitVec& cvec,
                                         const BitVec& c_hat) {
  if (cvec.size() != c.dim_c1() || c_hat.size() != c.dim_c1())
    throw std::invalid_argument("coset_witness_dual: vectors must live in C1");
  return solve(c.d1.transposed(), cvec ^ c_hat);
}

bool expansion_check(const ChainComplex2& a, double alpha, double beta, uint64_t budget) {
  const size_t n1 = a.dim_c1();
  const size_t wmax = static_cast<size_t>(alpha * double(n1));
  if (beta <= 0.0) return true;

  // Count candidates before enumerating.
  long double count = 0, binom = 1;
  for (size_t w = 1; w <= wmax; ++w) {
    binom = binom * (long double)(n1 - w + 1) / (long double)w;
    count += binom;
    if (count > (long double)budget)
      throw std::invalid_argument("expansion_check: enumeration budget exceeded");
  }

  std::vector<size_t> idx;
  BitVec c(n1);
  for (size_t w = 1; w <= wmax; ++w) {
    idx.assign(w, 0);
    for (size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      for (size_t i : idx) c.set(i, true);
      if (mat_vec(a.boundary, c).weight() < beta * double(w)) return false;
      for (size_t i : idx) c.set(i, false);
      // next combination
      size_t i = w;
      while (i > 0) {
        --i;
        if (idx[i] != i + n1 - w) {
          ++idx[i];
          for (size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
  }
  return true;
}

}  // namespace qcldpc
