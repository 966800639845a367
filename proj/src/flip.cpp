#include "qcldpc/flip.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qcldpc {

namespace {

// Scratch shared by both decoders: per-vertex local masks over ports plus
// a queue of vertices whose neighborhood changed since the last scan.
struct WorkList {
  std::vector<uint32_t> queue;
  std::vector<bool> queued;

  explicit WorkList(uint32_t n) : queued(n, false) { queue.reserve(n); }

  void push(uint32_t v) {
    if (!queued[v]) {
      queued[v] = true;
      queue.push_back(v);
    }
  }
  bool empty() const { return queue.empty(); }
  uint32_t pop() {
    const uint32_t v = queue.back();
    queue.pop_back();
    queued[v] = false;
    return v;
  }
};

// Change in total mismatch or residual weight if the ports in `toggles`
// are flipped at vertex v. Self-loop edges appear at two ports of v and
// toggle only when exactly one of the pair is in the mask, which the
// cheap popcount formula gets wrong; this walks the ports explicitly.
int toggle_gain_with_loops(const TannerCode& code, uint32_t v, uint32_t toggles,
                           uint32_t local_state) {
  const uint32_t delta = code.inner.delta;
  int gain = 0;
  uint32_t seen = 0;
  uint32_t bits = toggles;
  while (bits) {
    const uint32_t p = uint32_t(__builtin_ctz(bits));
    bits &= bits - 1;
    if ((seen >> p) & 1) continue;
    const uint32_t q = code.loop_partner[size_t(v) * delta + p];
    bool flips = true;
    if (q != p) {
      flips = (((toggles >> p) ^ (toggles >> q)) & 1) != 0;
      seen |= (1u << p) | (1u << q);
    }
    if (flips) gain += ((local_state >> p) & 1) ? -1 : 1;
  }
  return gain;
}

}  // namespace

BitVec nsdec_chain(const TannerCode& code, const BitVec& syndrome) {
  if (syndrome.size() != code.dim_a0())
    throw std::invalid_argument("nsdec_chain: syndrome must live in A0");
  const uint32_t ell = code.graph.ell;
  const uint32_t gamma = code.inner.gamma;
  const uint32_t delta = code.inner.delta;
  const uint32_t nv = code.num_vertices();

  // Local views, initialized to min-weight preimages of the per-vertex
  // syndromes. Vertex (w, i) reads checks (w*Gamma+g)*ell + i.
  std::vector<uint32_t> x(nv, 0);
  for (uint32_t v = 0; v < nv; ++v) {
    const uint32_t w = v / ell, i = v % ell;
    uint32_t s = 0;
    for (uint32_t g = 0; g < gamma; ++g)
      if (syndrome.get(size_t(w * gamma + g) * ell + i)) s |= 1u << g;
    x[v] = code.inner.min_preimage[s];
  }

  // Mismatch per edge, mirrored as a port mask per vertex.
  std::vector<uint32_t> mloc(nv, 0);
  const uint32_t ne = code.num_edges();
  for (uint32_t e = 0; e < ne; ++e) {
    const auto& er = code.edge_refs[e];
    const bool mismatch = (((x[er.u] >> er.pu) ^ (x[er.v] >> er.pv)) & 1) != 0;
    if (mismatch) {
      mloc[er.u] ^= 1u << er.pu;
      mloc[er.v] ^= 1u << er.pv;
    }
  }

  WorkList wl(nv);
  for (uint32_t v = 0; v < nv; ++v)
    if (mloc[v]) wl.push(v);

  const auto& kwords = code.inner.kernel_words;
  while (!wl.empty()) {
    const uint32_t v = wl.pop();
    const uint32_t m = mloc[v];
    if (!m) continue;
    const uint32_t lmask = code.loop_mask[v];
    for (uint32_t y : kwords) {
      if (y == 0) continue;
      int gain;
      if ((y & lmask) == 0)
        gain = __builtin_popcount(y) - 2 * __builtin_popcount(y & m);
      else
        gain = toggle_gain_with_loops(code, v, y, m);
      if (gain >= 0) continue;
      // Apply the first strictly improving kernel word at v.
      x[v] ^= y;
      uint32_t bits = y;
      while (bits) {
        const uint32_t p = uint32_t(__builtin_ctz(bits));
        bits &= bits - 1;
        const uint32_t e = code.incident_edge[size_t(v) * delta + p];
        const auto& er = code.edge_refs[e];
        mloc[er.u] ^= 1u << er.pu;
        mloc[er.v] ^= 1u << er.pv;
        wl.push(er.u);
        wl.push(er.v);
      }
      wl.push(v);
      break;
    }
  }

  BitVec out(code.dim_a1());
  for (uint32_t e = 0; e < ne; ++e) {
    const auto& er = code.edge_refs[e];
    if (((mloc[er.u] >> er.pu) & 1) == 0 && ((x[er.u] >> er.pu) & 1)) out.set(e, true);
  }
  return out;
}

BitVec nsdec_cochain(const TannerCode& code, const BitVec& syndrome) {
  if (syndrome.size() != code.dim_a1())
    throw std::invalid_argument("nsdec_cochain: syndrome must live in A1");
  const uint32_t ell = code.graph.ell;
  const uint32_t gamma = code.inner.gamma;
  const uint32_t delta = code.inner.delta;
  const uint32_t nv = code.num_vertices();
  const uint32_t ne = code.num_edges();

  std::vector<uint32_t> x(nv, 0);  // Gamma-bit value per vertex

  // Residual s - delta(x) as a port mask per vertex; x = 0 initially.
  std::vector<uint32_t> rloc(nv, 0);
  for (uint32_t e = 0; e < ne; ++e) {
    if (!syndrome.get(e)) continue;
    const auto& er = code.edge_refs[e];
    rloc[er.u] ^= 1u << er.pu;
    rloc[er.v] ^= 1u << er.pv;
  }

  WorkList wl(nv);
  for (uint32_t v = 0; v < nv; ++v)
    if (rloc[v]) wl.push(v);

  const auto& dual = code.inner.dual_words;
  const uint32_t npat = 1u << gamma;
  while (!wl.empty()) {
    const uint32_t v = wl.pop();
    const uint32_t r = rloc[v];
    if (!r) continue;
    const uint32_t lmask = code.loop_mask[v];
    for (uint32_t y = 1; y < npat; ++y) {
      const uint32_t d = dual[y];
      int gain;
      if ((d & lmask) == 0)
        gain = __builtin_popcount(d) - 2 * __builtin_popcount(d & r);
      else
        gain = toggle_gain_with_loops(code, v, d, r);
      if (gain >= 0) continue;
      x[v] ^= y;
      uint32_t bits = d;
      while (bits) {
        const uint32_t p = uint32_t(__builtin_ctz(bits));
        bits &= bits - 1;
        const uint32_t e = code.incident_edge[size_t(v) * delta + p];
        const auto& er = code.edge_refs[e];
        rloc[er.u] ^= 1u << er.pu;
        rloc[er.v] ^= 1u << er.pv;
        wl.push(er.u);
        wl.push(er.v);
      }
      wl.push(v);
      break;
    }
  }

  BitVec out(code.dim_a0());
  for (uint32_t v = 0; v < nv; ++v) {
    if (!x[v]) continue;
    const uint32_t w = v / ell, i = v % ell;
    for (uint32_t g = 0; g < gamma; ++g)
      if ((x[v] >> g) & 1) out.set(size_t(w * gamma + g) * ell + i, true);
  }
  return out;
}

ErrorBudgets error_budgets(uint64_t num_vertices, uint32_t delta, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("error_budgets: lambda must lie in (0,1)");
  ErrorBudgets b;
  const double lv = lambda * double(num_vertices);
  b.chain_syndrome = uint64_t(std::floor(lv / (2.0 * (delta + 1))));
  b.chain_code = uint64_t(std::floor(lv / (4.0 * (delta + 1))));
  b.cochain_syndrome = uint64_t(std::floor(lv / 2.0));
  b.cochain_code = uint64_t(std::floor(lv / (2.0 * (delta + 1))));
  return b;
}

}  // namespace qcldpc
