#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qcldpc/chain.hpp"
#include "qcldpc/rng.hpp"

namespace qcldpc {

// Delta-regular base multigraph with oriented labels in Z/ell and a port
// in [Delta] at each edge endpoint. Stored orientation carries L(u,v);
// the reverse direction is implicitly -L(u,v). Loops and parallel edges
// are allowed; ports stay injective per endpoint.
struct BaseGraph {
  uint32_t v0 = 0;
  uint32_t delta = 0;
  uint32_t ell = 1;  // label modulus

  struct Edge {
    uint32_t u, v;
    uint32_t label;   // L(u, v) in Z/ell
    uint32_t port_u;  // port of this edge at u
    uint32_t port_v;  // port at v
  };
  std::vector<Edge> edges;

  void validate() const;
};

// Union of Delta/2 random cyclic 2-factors (Delta even), or Delta random
// perfect matchings (v0 even) when Delta is odd. Uniform labels, ports
// assigned injectively per vertex. Fixed seed gives an identical graph.
BaseGraph random_base_graph(uint32_t v0, uint32_t delta, uint32_t ell, Rng& rng);

// Vertex set V0 x Z/ell; base edge {u,v} with label L lifts to
// {(u,i), (v,i+L)} for every layer i. Ports are inherited from the base.
struct LiftedGraph {
  BaseGraph base;
  uint32_t ell = 1;

  uint32_t num_vertices() const { return base.v0 * ell; }
  uint32_t num_edges() const { return static_cast<uint32_t>(base.edges.size()) * ell; }
  uint32_t delta() const { return base.delta; }

  // Lifted edge (e0, i) has id e0*ell + i.
  uint32_t edge_u(uint32_t e) const {
    return base.edges[e / ell].u * ell + e % ell;
  }
  uint32_t edge_v(uint32_t e) const {
    const auto& b = base.edges[e / ell];
    return b.v * ell + (e % ell + b.label) % ell;
  }
  uint32_t edge_port_u(uint32_t e) const { return base.edges[e / ell].port_u; }
  uint32_t edge_port_v(uint32_t e) const { return base.edges[e / ell].port_v; }
};

LiftedGraph lift_graph(const BaseGraph& base, uint32_t ell);

// Edge multiplicity counts between vertex sets, loops counting twice on
// the diagonal so that W(v, V) = Delta.
uint64_t mixing_count(const LiftedGraph& g, const std::vector<uint32_t>& s);

// Second largest absolute eigenvalue of the normalized adjacency matrix.
// Dense symmetric eigensolve; refuses graphs above max_vertices.
double spectral_expansion(const LiftedGraph& g, size_t max_vertices = 4096);

// Full-rank Gamma x Delta check matrix Z whose kernel and dual row space
// both have verified minimum distance >= d_inner, plus the lookup tables
// the flip decoders need. Local views are Delta-bit words, so Delta <= 20.
struct InnerCode {
  uint32_t delta = 0;
  uint32_t gamma = 0;
  uint32_t d_inner = 0;
  BitMat z;

  std::vector<uint32_t> row_masks;     // Z rows as Delta-bit masks
  std::vector<uint32_t> dual_words;    // Z^T y for y in [2^gamma]
  std::vector<uint32_t> kernel_words;  // all of ker Z, sorted by (weight, value)
  std::vector<uint32_t> min_preimage;  // syndrome -> min-weight preimage

  uint32_t syndrome_of(uint32_t x) const {
    uint32_t s = 0;
    for (uint32_t g = 0; g < gamma; ++g)
      s |= uint32_t(__builtin_popcount(row_masks[g] & x) & 1) << g;
    return s;
  }
};

// Rejection-samples full-rank Z until both ker Z and im Z^T have minimum
// distance >= d_min, verifying both exhaustively. Throws after max_tries
// samples (parameters beyond what the dimensions admit).
InnerCode find_inner_code(uint32_t delta, uint32_t gamma, uint32_t d_min, Rng& rng,
                          uint64_t max_tries);

// Builds the decoder tables for an explicit check matrix, verifying full
// rank and both code distances exhaustively. Throws when Z fails.
InnerCode inner_code_from_z(const BitMat& z, uint32_t d_min);

// The 2-term Tanner complex of a lifted graph with an inner code:
// A1 = F2^E, A0 = F2^(V x [Gamma]), boundary (I (x) Z) M, where M routes
// each edge to its two endpoint ports. Carries the R_ell ring form
// induced by the lift. Check ((w,g), i) has flat index (w*Gamma+g)*ell+i;
// edge (e0, i) has flat index e0*ell+i.
struct TannerCode {
  LiftedGraph graph;
  InnerCode inner;
  ChainComplex2 complex;

  // Port-indexed incidence: incident_edge[v*Delta + p] is the edge id at
  // port p of vertex v.
  std::vector<uint32_t> incident_edge;

  // Flat endpoint table; the decoders avoid the modular arithmetic in
  // LiftedGraph's accessors on their hot paths.
  struct EdgeRef {
    uint32_t u, v;
    uint8_t pu, pv;
  };
  std::vector<EdgeRef> edge_refs;

  // Lifted self-loops (base loops whose label is 0 mod ell) occupy two
  // ports of one vertex; the decoders need to know to count such an edge
  // once. loop_mask[v] holds the ports of v that belong to self-loops,
  // loop_partner[v*Delta + p] the matching port (p itself otherwise).
  std::vector<uint32_t> loop_mask;
  std::vector<uint8_t> loop_partner;

  uint32_t num_vertices() const { return graph.num_vertices(); }
  uint32_t num_edges() const { return graph.num_edges(); }
  size_t dim_a0() const { return complex.dim_c0(); }
  size_t dim_a1() const { return complex.dim_c1(); }
  uint32_t ring_rank_a0() const { return graph.base.v0 * inner.gamma; }
  uint32_t ring_rank_a1() const { return static_cast<uint32_t>(graph.base.edges.size()); }
};

TannerCode build_tanner_complex(const LiftedGraph& g, const InnerCode& inner);

}  // namespace qcldpc
