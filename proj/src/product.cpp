#include "qcldpc/product.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace qcldpc {

namespace {

BitVec get_col(const BitVec& v, uint32_t nrows, uint32_t ell, uint32_t i) {
  BitVec col(nrows);
  for (uint32_t h = 0; h < nrows; ++h)
    if (v.get(size_t(h) * ell + i)) col.set(h, true);
  return col;
}

void xor_col(BitVec& v, uint32_t ell, uint32_t i, const BitVec& col) {
  for (uint32_t h = 0; h < col.size(); ++h)
    if (col.get(h)) v.flip(size_t(h) * ell + i);
}


// (I (x) (1+X)) x on the flat layout: out_{h,i} = x_{h,i} + x_{h,i+1}.
BitVec rep_apply(const BitVec& x, uint32_t nrows, uint32_t ell) {
  BitVec out(x.size());
  for (uint32_t h = 0; h < nrows; ++h)
    for (uint32_t i = 0; i < ell; ++i) {
      const bool b = x.get(size_t(h) * ell + i) ^ x.get(size_t(h) * ell + (i + 1) % ell);
      if (b) out.set(size_t(h) * ell + i, true);
    }
  return out;
}

BitVec concat(const BitVec& a, const BitVec& b) {
  BitVec out(a.size() + b.size());
  a.for_each_set([&](size_t i) { out.set(i, true); });
  b.for_each_set([&](size_t i) { out.set(a.size() + i, true); });
  return out;
}

}  // namespace

BitVec tensor_cols_apply(const BitMat& m, const BitVec& v, uint32_t ell) {
  if (v.size() != m.cols() * ell)
    throw std::invalid_argument("tensor_cols_apply: size mismatch");
  BitVec out(m.rows() * ell);
  for (uint32_t i = 0; i < ell; ++i)
    xor_col(out, ell, i, mat_vec(m, get_col(v, uint32_t(m.cols()), ell, i)));
  return out;
}

BitVec shift_flat(const BitVec& v, uint32_t nrows, uint32_t ell, int64_t k) {
  BitVec out(v.size());
  int64_t m = k % int64_t(ell);
  if (m < 0) m += ell;
  for (uint32_t h = 0; h < nrows; ++h)
    for (uint32_t i = 0; i < ell; ++i)
      if (v.get(size_t(h) * ell + (i + uint32_t(m)) % ell)) out.set(size_t(h) * ell + i, true);
  return out;
}

std::optional<BitVec> solve_rep_rows(const BitVec& z, uint32_t nrows, uint32_t ell) {
  if (z.size() != size_t(nrows) * ell)
    throw std::invalid_argument("solve_rep_rows: size mismatch");
  ModuleElement zm = ModuleElement::from_bits(z, nrows, ell);
  ModuleElement xm(nrows, ell);
  for (uint32_t h = 0; h < nrows; ++h) {
    auto chi = repetition_factor_solve(zm.row_as_ring(h));
    if (!chi) return std::nullopt;
    xm.set_row_from_ring(h, *chi);
  }
  return xm.bits();
}

DecodeOutcome dec_hgp(const HgpSide& side, const BitVec& syndrome, uint32_t j) {
  if (syndrome.size() != side.syndrome_dim())
    throw std::invalid_argument("dec_hgp: syndrome dimension mismatch");
  const uint32_t ell = side.ell;
  const uint32_t n0 = uint32_t(side.n0()), n1 = uint32_t(side.n1());

  // Dual side: rotate so the conjugated repetition factor reads as 1+X.
  const BitVec s = side.is_dual ? shift_flat(syndrome, n0, ell, 1) : syndrome;

  // Prefix sums of the shifted columns through the classical decoder.
  // The k = 0 term is D(0) = 0 and is hardwired.
  std::vector<BitVec> atilde(ell + 1);
  atilde[0] = BitVec(n1);
  BitVec prefix(n0);
  for (uint32_t k = 1; k <= ell; ++k) {
    prefix ^= get_col(s, n0, ell, (j + k - 1) % ell);
    atilde[k] = side.dec(prefix);
  }

  BitVec y(size_t(n1) * ell);
  for (uint32_t k = 0; k < ell; ++k)
    xor_col(y, ell, (j + k) % ell, atilde[k + 1] ^ atilde[k]);

  const BitVec z = s ^ tensor_cols_apply(side.a_mat, y, ell);
  auto x = solve_rep_rows(z, n0, ell);

  DecodeOutcome out;
  out.runs = 1;
  if (!x) return out;

  // Re-verify the instance equation before reporting ok.
  BitVec check = rep_apply(*x, n0, ell);
  check ^= z;
  if (check.any()) return out;

  out.status = DecodeStatus::ok;
  out.successes = 1;
  if (side.is_dual)
    out.estimate = concat(shift_flat(y, n1, ell, -1), *x);
  else
    out.estimate = concat(*x, y);
  out.weight = out.estimate.weight();
  return out;
}

namespace {

DecodeOutcome best_of(std::vector<DecodeOutcome> outcomes) {
  DecodeOutcome best;
  uint32_t runs = 0, successes = 0;
  for (auto& o : outcomes) {
    runs += o.runs;
    successes += o.successes;
    if (o.ok() && (!best.ok() || o.weight < best.weight)) best = std::move(o);
  }
  best.runs = runs;
  best.successes = successes;
  return best;
}

}  // namespace

DecodeOutcome hgp_decode_deterministic(const HgpSide& side, const BitVec& syndrome) {
  std::vector<DecodeOutcome> all;
  all.reserve(side.ell);
  for (uint32_t j = 0; j < side.ell; ++j) all.push_back(dec_hgp(side, syndrome, j));
  return best_of(std::move(all));
}

DecodeOutcome hgp_decode_randomized(const HgpSide& side, const BitVec& syndrome,
                                    double failure_delta, Rng& rng) {
  if (!(failure_delta > 0.0 && failure_delta < 1.0))
    throw std::invalid_argument("hgp_decode_randomized: failure probability must be in (0,1)");
  const uint32_t reps = uint32_t(std::ceil(std::log2(1.0 / failure_delta)));
  std::vector<DecodeOutcome> all;
  all.reserve(reps);
  for (uint32_t k = 0; k < reps; ++k)
    all.push_back(dec_hgp(side, syndrome, uint32_t(rng_below(rng, side.ell))));
  return best_of(std::move(all));
}

ModuleElement amp_com(const LpSide& side, const ModuleElement& syndrome,
                      const ModuleElement& y_tilde, uint32_t t, Rng& rng) {
  const uint32_t ell = side.ell();
  const uint32_t n1 = side.n1();
  if (t < 2 || t % 2 != 0 || ell % t != 0)
    throw std::invalid_argument("amp_com: need 2 | t and t | ell");
  if (syndrome.rank() != side.n0() || y_tilde.rank() != n1)
    throw std::invalid_argument("amp_com: shape mismatch");

  const ModuleElement residual = syndrome + apply(side.a_mat, y_tilde);

  // atilde[k] approximates the k-step prefix sum of X^i-shifts of the
  // remaining error, for 1 <= k <= t.
  std::vector<ModuleElement> atilde(t + 1);
  ModuleElement prefix(side.n0(), ell);
  ModuleElement term = residual;
  for (uint32_t k = 1; k <= t; ++k) {
    prefix += term;  // adds X^{k-1} residual
    atilde[k] = ModuleElement::from_bits(side.dec(prefix.bits()), n1, ell);
    term = term.shifted(1);
  }

  const uint32_t j = uint32_t(rng_below(rng, t));

  ModuleElement z(n1, ell);
  for (uint32_t h = 0; h < n1; ++h)
    for (uint32_t m = 0; m < ell / t; ++m)
      for (uint32_t i = 1; i < t; ++i) {
        const int64_t pos = int64_t(j) + int64_t(m) * t;
        const bool bit = atilde[i + 1].get(h, pos) ^ atilde[i].get(h, pos);
        if (bit) z.flip(h, pos + i);
      }

  // b = atilde[t] - sum_{i in [t]} X^i z
  ModuleElement b = atilde[t];
  {
    ModuleElement zshift = z;
    for (uint32_t i = 0; i < t; ++i) {
      b += zshift;
      zshift = zshift.shifted(1);
    }
  }

  ModuleElement r(n1, ell);
  for (uint32_t h = 0; h < n1; ++h)
    for (uint32_t m = 0; m < ell / t; ++m) {
      const int64_t pos = int64_t(j) + int64_t(m) * t;
      uint32_t ones = 0;
      for (uint32_t k = 0; k < t; ++k)
        if (b.get(h, pos - int64_t(k))) ++ones;
      if (ones * 2 > t) r.set(h, pos, true);  // ties resolve to 0
    }

  ModuleElement out = y_tilde;
  out += z;
  out += r;
  return out;
}

DecodeOutcome weak_dec(const LpSide& side, const BitVec& syndrome, Rng& rng) {
  if (syndrome.size() != side.syndrome_dim())
    throw std::invalid_argument("weak_dec: syndrome dimension mismatch");
  const uint32_t ell = side.ell();
  if (ell < 2 || (ell & (ell - 1)) != 0)
    throw std::invalid_argument("weak_dec: ell must be a power of two, >= 2");
  uint32_t eta = 0;
  while ((1u << eta) < ell) ++eta;

  const BitVec s_bits = side.is_dual ? shift_flat(syndrome, side.n0(), ell, 1) : syndrome;
  const ModuleElement s = ModuleElement::from_bits(s_bits, side.n0(), ell);

  ModuleElement y(side.n1(), ell);
  for (uint32_t tau = 0; tau < eta; ++tau) y = amp_com(side, s, y, 1u << (tau + 1), rng);

  DecodeOutcome out;
  out.runs = 1;
  const ModuleElement z = s + apply(side.a_mat, y);
  auto x = solve_rep_rows(z.bits(), side.n0(), ell);
  if (!x) return out;

  // Re-verify the instance equation before reporting ok.
  BitVec check = rep_apply(*x, side.n0(), ell);
  check ^= z.bits();
  if (check.any()) return out;

  out.status = DecodeStatus::ok;
  out.successes = 1;
  // Dual side: first block is the y-role (A0) estimate, second the
  // x-role (A1); the monomial twist lives in a_mat, not the outputs.
  out.estimate = side.is_dual ? concat(y.bits(), *x) : concat(*x, y.bits());
  out.weight = out.estimate.weight();
  return out;
}

uint64_t lp_repeat_count(uint32_t ell, double eps, double failure_delta) {
  uint32_t eta = 0;
  while ((1u << eta) < ell) ++eta;
  const double p = std::pow(1.0 - eps, double(eta));
  return uint64_t(std::ceil(std::log(failure_delta) / std::log(1.0 - p)));
}

double lp_repeat_bound(uint32_t ell, double eps, double failure_delta) {
  return std::pow(double(ell), 2.0 * eps) * std::log(1.0 / failure_delta) + 1.0;
}

DecodeOutcome lp_decode(const LpSide& side, const BitVec& syndrome, double eps,
                        double failure_delta, Rng& rng, unsigned threads) {
  if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("lp_decode: eps must be in (0, 1/2]");
  if (!(failure_delta > 0.0 && failure_delta < 1.0))
    throw std::invalid_argument("lp_decode: failure probability must be in (0,1)");
  const uint64_t reps = lp_repeat_count(side.ell(), eps, failure_delta);

  std::vector<uint64_t> seeds(reps);
  for (auto& s : seeds) s = rng();

  std::vector<DecodeOutcome> all(reps);
  auto worker = [&](uint64_t lo, uint64_t hi) {
    for (uint64_t k = lo; k < hi; ++k) {
      Rng child = make_rng(seeds[k]);
      all[k] = weak_dec(side, syndrome, child);
    }
  };
  if (threads <= 1 || reps < 2) {
    worker(0, reps);
  } else {
    const unsigned nt = std::min<uint64_t>(threads, reps);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) {
      const uint64_t lo = reps * t / nt, hi = reps * (t + 1) / nt;
      pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return best_of(std::move(all));
}

ClassicalDecoder make_rep_decoder(uint32_t ell, bool conjugated) {
  auto negate_index = [ell](const BitVec& v) {
    BitVec out(ell);
    for (uint32_t i = 0; i < ell; ++i)
      if (v.get((ell - i) % ell)) out.set(i, true);
    return out;
  };
  return [ell, conjugated, negate_index](const BitVec& sigma_in) -> BitVec {
    BitVec sigma = conjugated ? negate_index(sigma_in) : sigma_in;
    if (sigma.weight() % 2 != 0) {
      for (uint32_t i = ell; i-- > 0;) {
        if (sigma.get(i)) {
          sigma.set(i, false);
          break;
        }
      }
    }
    BitVec out = *solve_rep_rows(sigma, 1, ell);
    return conjugated ? negate_index(out) : out;
  };
}

RadiusReport hgp_radius(uint64_t e0, uint64_t e1, uint32_t ell, uint64_t gamma, uint64_t w,
                        std::optional<uint64_t> d) {
  RadiusReport rep;
  rep.e = e0;
  rep.binding_term = "e0";
  if (e1 < rep.e) rep.e = e1, rep.binding_term = "e1";
  if (ell / 2 < rep.e) rep.e = ell / 2, rep.binding_term = "ell/2";
  if (d) {
    rep.distance_bounded = true;
    const uint64_t dd = (*d - 1) / (2 + (w + 2) * gamma);
    if (dd < rep.e) rep.e = dd, rep.binding_term = "distance";
  }
  return rep;
}

RadiusReport lp_radius(uint64_t e0, uint64_t e1, uint32_t ell, uint64_t gamma, uint64_t w,
                       double eps, std::optional<uint64_t> d) {
  RadiusReport rep;
  double best = double(e0) / 2.0;
  rep.binding_term = "e0/2";
  const double t1 = eps * double(e1) / (48.0 * double(gamma));
  if (t1 < best) best = t1, rep.binding_term = "eps*e1/48gamma";
  const double t2 = eps * double(ell) / (12.0 * double(gamma));
  if (t2 < best) best = t2, rep.binding_term = "eps*ell/12gamma";
  if (d) {
    rep.distance_bounded = true;
    const double t3 = (double(*d) - 1.0) / (2.0 * double(w + 2) * double(gamma) / eps + 2.0);
    if (t3 < best) best = t3, rep.binding_term = "distance";
  }
  rep.e = uint64_t(std::floor(best));
  return rep;
}

}  // namespace qcldpc
