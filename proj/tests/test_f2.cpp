#include <doctest.h>

#include "qcldpc/f2.hpp"
#include "qcldpc/rng.hpp"

using namespace qcldpc;

namespace {

BitVec random_vec(size_t n, Rng& rng) {
  BitVec v(n);
  for (size_t i = 0; i < n; ++i)
    if (rng_bit(rng)) v.set(i, true);
  return v;
}

BitMat random_mat(size_t r, size_t c, Rng& rng) {
  BitMat m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (rng_bit(rng)) m.set(i, j, true);
  return m;
}

// Unpacked reference for mat_vec, kept independent of the word-level path.
BitVec naive_mat_vec(const BitMat& m, const BitVec& v) {
  BitVec out(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    int acc = 0;
    for (size_t c = 0; c < m.cols(); ++c) acc ^= int(m.get(r, c) && v.get(c));
    out.set(r, acc != 0);
  }
  return out;
}

}  // namespace

TEST_CASE("weight basics") {
  CHECK(BitVec(8).weight() == 0);
  CHECK(BitVec::from_string("10110000").weight() == 3);

  Rng rng = make_rng(1);
  for (int t = 0; t < 20; ++t) {
    BitVec v = random_vec(100, rng);
    CHECK((v ^ v).weight() == 0);
  }
}

TEST_CASE("weight triangle inequality") {
  Rng rng = make_rng(2);
  for (int t = 0; t < 100; ++t) {
    BitVec u = random_vec(80, rng), v = random_vec(80, rng);
    CHECK((u ^ v).weight() <= u.weight() + v.weight());
  }
}

TEST_CASE("mat_vec identity, zero and oracle-checked instance") {
  Rng rng = make_rng(3);
  BitVec v = random_vec(4, rng);
  CHECK(mat_vec(BitMat::identity(4), v) == v);
  CHECK(mat_vec(BitMat(3, 4), v) == BitVec(3));

  BitMat m = BitMat::from_rows({"110", "011"});
  BitVec x = BitVec::from_string("111");
  CHECK(mat_vec(m, x) == naive_mat_vec(m, x));
  CHECK(mat_vec(m, x) == BitVec::from_string("00"));  // both rows hit two set bits

  CHECK_THROWS(mat_vec(m, BitVec(4)));
}

TEST_CASE("mat_vec agrees with naive oracle on random instances") {
  Rng rng = make_rng(4);
  for (int t = 0; t < 1000; ++t) {
    const size_t r = 1 + rng_below(rng, 64), c = 1 + rng_below(rng, 64);
    BitMat m = random_mat(r, c, rng);
    BitVec v = random_vec(c, rng);
    CHECK(mat_vec(m, v) == naive_mat_vec(m, v));
  }
}

TEST_CASE("solve identity, inconsistent and random consistent systems") {
  Rng rng = make_rng(5);
  BitVec b = random_vec(6, rng);
  CHECK(*solve(BitMat::identity(6), b) == b);

  BitVec nz(3);
  nz.set(1, true);
  CHECK(!solve(BitMat(3, 5), nz).has_value());
  CHECK(solve(BitMat(3, 5), BitVec(3)).has_value());

  for (int t = 0; t < 50; ++t) {
    BitMat m = random_mat(10, 14, rng);
    BitVec x0 = random_vec(14, rng);
    BitVec rhs = mat_vec(m, x0);
    auto x = solve(m, rhs);
    REQUIRE(x.has_value());
    CHECK(mat_vec(m, *x) == rhs);
  }
}

TEST_CASE("rank basics") {
  CHECK(rank(BitMat::identity(5)) == 5);
  CHECK(rank(BitMat(4, 7)) == 0);
  BitMat m = BitMat::from_rows({"1011", "1011"});
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel basis basics") {
  CHECK(kernel_basis(BitMat::identity(3)).empty());
  CHECK(kernel_basis(BitMat(2, 3)).size() == 3);

  auto basis = kernel_basis(BitMat::from_rows({"11"}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == BitVec::from_string("11"));
}

TEST_CASE("rank plus kernel dimension equals columns") {
  Rng rng = make_rng(6);
  for (int t = 0; t < 100; ++t) {
    const size_t r = 1 + rng_below(rng, 20), c = 1 + rng_below(rng, 20);
    BitMat m = random_mat(r, c, rng);
    auto basis = kernel_basis(m);
    CHECK(rank(m) + basis.size() == c);
    for (const auto& v : basis) CHECK(mat_vec(m, v).is_zero());
  }
}

TEST_CASE("LinearSolver matches one-shot solve and yields witnesses") {
  Rng rng = make_rng(7);
  for (int t = 0; t < 30; ++t) {
    BitMat m = random_mat(12, 9, rng);
    LinearSolver solver(m);
    CHECK(solver.rank() == rank(m));
    for (int k = 0; k < 10; ++k) {
      BitVec b = random_vec(12, rng);
      auto x1 = solver.solve(b);
      auto x2 = solve(m, b);
      CHECK(x1.has_value() == x2.has_value());
      CHECK(solver.consistent(b) == x1.has_value());
      if (x1) CHECK(mat_vec(m, *x1) == b);
    }
  }
}

TEST_CASE("transpose and kron agree with direct indexing") {
  Rng rng = make_rng(8);
  BitMat a = random_mat(5, 7, rng);
  BitMat t = a.transposed();
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c) CHECK(a.get(r, c) == t.get(c, r));

  BitMat b = random_mat(3, 2, rng);
  BitMat k = kron(a, b);
  REQUIRE(k.rows() == 15);
  REQUIRE(k.cols() == 14);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 7; ++j)
      for (size_t p = 0; p < 3; ++p)
        for (size_t q = 0; q < 2; ++q)
          CHECK(k.get(i * 3 + p, j * 2 + q) == (a.get(i, j) && b.get(p, q)));
}

TEST_CASE("mat_mul matches naive triple loop") {
  Rng rng = make_rng(9);
  for (int t = 0; t < 20; ++t) {
    BitMat a = random_mat(6, 8, rng), b = random_mat(8, 5, rng);
    BitMat ab = mat_mul(a, b);
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = 0; j < 5; ++j) {
        int acc = 0;
        for (size_t k = 0; k < 8; ++k) acc ^= int(a.get(i, k) && b.get(k, j));
        CHECK(ab.get(i, j) == (acc != 0));
      }
  }
}
