#include "qcldpc/tanner.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcldpc {

void BaseGraph::validate() const {
  std::vector<uint32_t> degree(v0, 0);
  std::vector<std::vector<bool>> port_used(v0, std::vector<bool>(delta, false));
  for (const auto& e : edges) {
    if (e.u >= v0 || e.v >= v0) throw std::logic_error("BaseGraph: vertex out of range");
    if (e.label >= ell) throw std::logic_error("BaseGraph: label out of range");
    if (e.port_u >= delta || e.port_v >= delta)
      throw std::logic_error("BaseGraph: port out of range");
    degree[e.u]++;
    degree[e.v]++;
    if (port_used[e.u][e.port_u]) throw std::logic_error("BaseGraph: duplicate port");
    port_used[e.u][e.port_u] = true;
    if (port_used[e.v][e.port_v]) throw std::logic_error("BaseGraph: duplicate port");
    port_used[e.v][e.port_v] = true;
  }
  for (uint32_t v = 0; v < v0; ++v)
    if (degree[v] != delta) throw std::logic_error("BaseGraph: not regular");
}

BaseGraph random_base_graph(uint32_t v0, uint32_t delta, uint32_t ell, Rng& rng) {
  if (v0 == 0 || delta < 2) throw std::invalid_argument("random_base_graph: need v0 >= 1, delta >= 2");
  if ((uint64_t(v0) * delta) % 2 != 0)
    throw std::invalid_argument("random_base_graph: v0 * delta must be even");
  if (delta % 2 != 0 && v0 % 2 != 0)
    throw std::invalid_argument("random_base_graph: infeasible regularity");

  BaseGraph g;
  g.v0 = v0;
  g.delta = delta;
  g.ell = ell;
  std::vector<uint32_t> next_port(v0, 0);
  auto take_port = [&](uint32_t v) { return next_port[v]++; };
  auto add_edge = [&](uint32_t u, uint32_t v) {
    BaseGraph::Edge e;
    e.u = u;
    e.v = v;
    e.label = static_cast<uint32_t>(rng_below(rng, ell));
    e.port_u = take_port(u);
    e.port_v = take_port(v);
    g.edges.push_back(e);
  };

  std::vector<uint32_t> perm(v0);
  std::iota(perm.begin(), perm.end(), 0);
  auto shuffle = [&]() {
    for (size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[rng_below(rng, i)]);
  };

  if (delta % 2 == 0) {
    // Each 2-factor is one random cyclic tour over all vertices.
    for (uint32_t f = 0; f < delta / 2; ++f) {
      shuffle();
      for (uint32_t i = 0; i < v0; ++i) add_edge(perm[i], perm[(i + 1) % v0]);
    }
  } else {
    for (uint32_t f = 0; f < delta; ++f) {
      shuffle();
      for (uint32_t i = 0; i + 1 < v0; i += 2) add_edge(perm[i], perm[i + 1]);
    }
  }
  g.validate();
  return g;
}

LiftedGraph lift_graph(const BaseGraph& base, uint32_t ell) {
  for (const auto& e : base.edges)
    if (e.label >= ell) throw std::invalid_argument("lift_graph: label outside Z/ell");
  LiftedGraph g;
  g.base = base;
  g.base.ell = ell;
  g.ell = ell;
  return g;
}

uint64_t mixing_count(const LiftedGraph& g, const std::vector<uint32_t>& s) {
  std::vector<bool> in_s(g.num_vertices(), false);
  for (uint32_t v : s) in_s[v] = true;
  uint64_t w = 0;
  for (uint32_t e = 0; e < g.num_edges(); ++e) {
    const uint32_t u = g.edge_u(e), v = g.edge_v(e);
    if (in_s[u] && in_s[v]) w += 2;  // both endpoint slots, loops included
  }
  return w;
}

double spectral_expansion(const LiftedGraph& g, size_t max_vertices) {
  const size_t n = g.num_vertices();
  if (n > max_vertices)
    throw std::invalid_argument("spectral_expansion: dense eigensolve budget exceeded");
  if (n == 1) return 0.0;
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (uint32_t e = 0; e < g.num_edges(); ++e) {
    const uint32_t u = g.edge_u(e), v = g.edge_v(e);
    if (u == v) {
      adj(u, u) += 2.0;
    } else {
      adj(u, v) += 1.0;
      adj(v, u) += 1.0;
    }
  }
  adj /= double(g.delta());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adj, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  return std::max(std::abs(ev(0)), std::abs(ev(n - 2)));
}

namespace {

// Row-reduction over uint32 rows; returns the rank and, when requested,
// a kernel basis as delta-bit words.
uint32_t reduce_rows(std::vector<uint32_t> work, uint32_t delta,
                     std::vector<uint32_t>* kernel_out) {
  const uint32_t gamma = static_cast<uint32_t>(work.size());
  std::vector<int> pivot_of_row;
  uint32_t r = 0;
  for (int c = int(delta) - 1; c >= 0 && r < gamma; --c) {
    uint32_t pr = r;
    while (pr < gamma && !((work[pr] >> c) & 1)) ++pr;
    if (pr == gamma) continue;
    std::swap(work[r], work[pr]);
    for (uint32_t rr = 0; rr < gamma; ++rr)
      if (rr != r && ((work[rr] >> c) & 1)) work[rr] ^= work[r];
    pivot_of_row.push_back(c);
    ++r;
  }
  if (kernel_out) {
    std::vector<bool> is_pivot(delta, false);
    for (int c : pivot_of_row) is_pivot[c] = true;
    for (uint32_t f = 0; f < delta; ++f) {
      if (is_pivot[f]) continue;
      uint32_t v = uint32_t(1) << f;
      for (uint32_t rr = 0; rr < r; ++rr)
        if ((work[rr] >> f) & 1) v |= uint32_t(1) << pivot_of_row[rr];
      kernel_out->push_back(v);
    }
  }
  return r;
}

}  // namespace

InnerCode inner_code_from_z(const BitMat& z, uint32_t d_min) {
  const uint32_t gamma = static_cast<uint32_t>(z.rows());
  const uint32_t delta = static_cast<uint32_t>(z.cols());
  if (delta > 20) throw std::invalid_argument("inner_code_from_z: delta must be <= 20");
  if (gamma == 0 || gamma > delta) throw std::invalid_argument("inner_code_from_z: bad shape");

  std::vector<uint32_t> rows(gamma, 0);
  for (uint32_t g = 0; g < gamma; ++g)
    for (uint32_t c = 0; c < delta; ++c)
      if (z.get(g, c)) rows[g] |= uint32_t(1) << c;

  if (reduce_rows(rows, delta, nullptr) != gamma)
    throw std::invalid_argument("inner_code_from_z: Z is not full rank");

  // Dual code im Z^T, exhaustively.
  std::vector<uint32_t> dual(uint32_t(1) << gamma, 0);
  for (uint32_t y = 1; y < dual.size(); ++y) {
    uint32_t p = 0;
    for (uint32_t g = 0; g < gamma; ++g)
      if ((y >> g) & 1) p ^= rows[g];
    dual[y] = p;
    if (uint32_t(__builtin_popcount(p)) < d_min)
      throw std::invalid_argument("inner_code_from_z: dual distance below d_min");
  }

  // Kernel code, exhaustively via a Gray walk over the nullspace basis.
  std::vector<uint32_t> kbasis;
  reduce_rows(rows, delta, &kbasis);
  std::vector<uint32_t> kernel(uint64_t(1) << kbasis.size(), 0);
  uint32_t cur = 0;
  for (uint64_t step = 1; step < kernel.size(); ++step) {
    cur ^= kbasis[static_cast<size_t>(__builtin_ctzll(step))];
    kernel[step] = cur;
    if (uint32_t(__builtin_popcount(cur)) < d_min)
      throw std::invalid_argument("inner_code_from_z: kernel distance below d_min");
  }

  InnerCode code;
  code.delta = delta;
  code.gamma = gamma;
  code.d_inner = d_min;
  code.row_masks = std::move(rows);
  code.dual_words = std::move(dual);
  code.z = z;

  std::sort(kernel.begin(), kernel.end(), [](uint32_t a, uint32_t b) {
    const int wa = __builtin_popcount(a), wb = __builtin_popcount(b);
    return wa != wb ? wa < wb : a < b;
  });
  code.kernel_words = std::move(kernel);

  // Minimum-weight preimage per syndrome, ties to the smaller word.
  code.min_preimage.assign(uint32_t(1) << gamma, 0);
  std::vector<int> best_w(uint32_t(1) << gamma, -1);
  for (uint32_t x = 0; x < (uint32_t(1) << delta); ++x) {
    const uint32_t s = code.syndrome_of(x);
    const int w = __builtin_popcount(x);
    if (best_w[s] < 0 || w < best_w[s]) {
      best_w[s] = w;
      code.min_preimage[s] = x;
    }
  }
  for (uint32_t s = 0; s < code.min_preimage.size(); ++s)
    if (best_w[s] < 0 || code.syndrome_of(code.min_preimage[s]) != s)
      throw std::logic_error("inner_code_from_z: preimage table inconsistent");
  return code;
}

InnerCode find_inner_code(uint32_t delta, uint32_t gamma, uint32_t d_min, Rng& rng,
                          uint64_t max_tries) {
  if (delta > 20) throw std::invalid_argument("find_inner_code: delta must be <= 20");
  if (gamma == 0 || gamma > delta) throw std::invalid_argument("find_inner_code: bad gamma");

  const uint32_t mask = (1u << delta) - 1;
  std::vector<uint32_t> rows(gamma);

  for (uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    for (uint32_t g = 0; g < gamma; ++g) rows[g] = static_cast<uint32_t>(rng()) & mask;
    if (reduce_rows(rows, delta, nullptr) != gamma) continue;

    // Cheap filters before the full rebuild: dual then kernel distance.
    bool ok = true;
    for (uint32_t y = 1; ok && y < (uint32_t(1) << gamma); ++y) {
      uint32_t p = 0;
      for (uint32_t g = 0; g < gamma; ++g)
        if ((y >> g) & 1) p ^= rows[g];
      if (uint32_t(__builtin_popcount(p)) < d_min) ok = false;
    }
    if (!ok) continue;
    std::vector<uint32_t> kbasis;
    reduce_rows(rows, delta, &kbasis);
    uint32_t cur = 0;
    for (uint64_t step = 1; ok && step < (uint64_t(1) << kbasis.size()); ++step) {
      cur ^= kbasis[static_cast<size_t>(__builtin_ctzll(step))];
      if (uint32_t(__builtin_popcount(cur)) < d_min) ok = false;
    }
    if (!ok) continue;

    BitMat zmat(gamma, delta);
    for (uint32_t g = 0; g < gamma; ++g)
      for (uint32_t c = 0; c < delta; ++c)
        if ((rows[g] >> c) & 1) zmat.set(g, c, true);
    return inner_code_from_z(zmat, d_min);
  }
  throw std::runtime_error("find_inner_code: max_tries exhausted; parameters appear infeasible");
}

TannerCode build_tanner_complex(const LiftedGraph& g, const InnerCode& inner) {
  if (g.delta() != inner.delta)
    throw std::invalid_argument("build_tanner_complex: graph degree != inner code length");
  const uint32_t ell = g.ell;
  const uint32_t v0 = g.base.v0;
  const uint32_t gamma = inner.gamma;
  const uint32_t n_edges0 = static_cast<uint32_t>(g.base.edges.size());

  // Ring form first: entry ((w,g), e0) collects Z[g][port] with the lift
  // label as a monomial twist on the far endpoint.
  RingMatrix ring(v0 * gamma, n_edges0, ell);
  for (uint32_t j = 0; j < n_edges0; ++j) {
    const auto& e = g.base.edges[j];
    for (uint32_t gg = 0; gg < gamma; ++gg) {
      if (inner.z.get(gg, e.port_u)) {
        RingElement& f = ring.at(e.u * gamma + gg, j);
        f.set(0, !f.get(0));
      }
      if (inner.z.get(gg, e.port_v)) {
        RingElement& f = ring.at(e.v * gamma + gg, j);
        const uint32_t k = (ell - e.label % ell) % ell;
        f.set(k, !f.get(k));
      }
    }
  }

  // Direct F2 boundary from the lifted graph, checked against the ring
  // expansion entry-exact.
  BitMat boundary(size_t(v0) * gamma * ell, size_t(n_edges0) * ell);
  for (uint32_t e = 0; e < g.num_edges(); ++e) {
    const uint32_t j = e / ell;
    const auto& be = g.base.edges[j];
    const uint32_t u = g.edge_u(e), v = g.edge_v(e);
    for (uint32_t gg = 0; gg < gamma; ++gg) {
      if (inner.z.get(gg, be.port_u)) {
        const uint32_t w = u / ell, i = u % ell;
        boundary.flip(size_t(w * gamma + gg) * ell + i, e);
      }
      if (inner.z.get(gg, be.port_v)) {
        const uint32_t w = v / ell, i = v % ell;
        boundary.flip(size_t(w * gamma + gg) * ell + i, e);
      }
    }
  }
  if (ring.expand_to_f2() != boundary)
    throw std::logic_error("build_tanner_complex: ring form disagrees with direct boundary");

  TannerCode code;
  code.graph = g;
  code.inner = inner;
  code.complex.boundary = std::move(boundary);
  code.complex.ring_boundary = std::move(ring);

  code.edge_refs.resize(g.num_edges());
  for (uint32_t e = 0; e < g.num_edges(); ++e)
    code.edge_refs[e] = {g.edge_u(e), g.edge_v(e), uint8_t(g.edge_port_u(e)),
                         uint8_t(g.edge_port_v(e))};

  code.incident_edge.assign(size_t(g.num_vertices()) * inner.delta, UINT32_MAX);
  code.loop_mask.assign(g.num_vertices(), 0);
  code.loop_partner.assign(size_t(g.num_vertices()) * inner.delta, 0);
  for (uint32_t p = 0; p < inner.delta; ++p)
    for (uint32_t v = 0; v < g.num_vertices(); ++v)
      code.loop_partner[size_t(v) * inner.delta + p] = static_cast<uint8_t>(p);
  for (uint32_t e = 0; e < g.num_edges(); ++e) {
    const uint32_t u = g.edge_u(e), v = g.edge_v(e);
    const uint32_t pu = g.edge_port_u(e), pv = g.edge_port_v(e);
    code.incident_edge[size_t(u) * inner.delta + pu] = e;
    code.incident_edge[size_t(v) * inner.delta + pv] = e;
    if (u == v) {
      code.loop_mask[u] |= (1u << pu) | (1u << pv);
      code.loop_partner[size_t(u) * inner.delta + pu] = static_cast<uint8_t>(pv);
      code.loop_partner[size_t(u) * inner.delta + pv] = static_cast<uint8_t>(pu);
    }
  }
  for (uint32_t slot : code.incident_edge)
    if (slot == UINT32_MAX) throw std::logic_error("build_tanner_complex: port table incomplete");
  return code;
}

}  // namespace qcldpc
