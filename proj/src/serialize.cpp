#include "qcldpc/serialize.hpp"

#include <stdexcept>

namespace qcldpc {

using nlohmann::json;

json ring_matrix_to_json(const RingMatrix& m) {
  json entries = json::array();
  for (uint32_t r = 0; r < m.rows(); ++r)
    for (uint32_t c = 0; c < m.cols(); ++c) {
      const RingElement& f = m.at(r, c);
      if (f.is_zero()) continue;
      json exps = json::array();
      for (uint32_t k = 0; k < m.modulus(); ++k)
        if (f.get(k)) exps.push_back(k);
      entries.push_back(json::array({r, c, exps}));
    }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"ell", m.modulus()}, {"entries", entries}};
}

RingMatrix ring_matrix_from_json(const json& j) {
  RingMatrix m(j.at("rows").get<uint32_t>(), j.at("cols").get<uint32_t>(),
               j.at("ell").get<uint32_t>());
  for (const auto& e : j.at("entries")) {
    const uint32_t r = e.at(0).get<uint32_t>(), c = e.at(1).get<uint32_t>();
    RingElement f(m.modulus());
    for (const auto& k : e.at(2)) f.set(k.get<uint32_t>(), true);
    m.at(r, c) = f;
  }
  return m;
}

json bitmat_to_json(const BitMat& m) {
  json ones = json::array();
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) ones.push_back(json::array({r, c}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"ones", ones}};
}

BitMat bitmat_from_json(const json& j) {
  BitMat m(j.at("rows").get<size_t>(), j.at("cols").get<size_t>());
  for (const auto& e : j.at("ones")) m.set(e.at(0).get<size_t>(), e.at(1).get<size_t>(), true);
  return m;
}

json complex2_to_json(const ChainComplex2& c) {
  json j{{"format_version", kFormatVersion}, {"terms", 2}};
  if (c.ring_boundary)
    j["ring_boundary"] = ring_matrix_to_json(*c.ring_boundary);
  else
    j["boundary"] = bitmat_to_json(c.boundary);
  return j;
}

ChainComplex2 complex2_from_json(const json& j) {
  ChainComplex2 c;
  if (j.contains("ring_boundary")) {
    c.ring_boundary = ring_matrix_from_json(j.at("ring_boundary"));
    c.boundary = c.ring_boundary->expand_to_f2();
  } else {
    c.boundary = bitmat_from_json(j.at("boundary"));
  }
  c.validate();
  return c;
}

json complex3_to_json(const ChainComplex3& c) {
  json j{{"format_version", kFormatVersion}, {"terms", 3}};
  if (c.ring_d1 && c.ring_d2) {
    j["ring_d1"] = ring_matrix_to_json(*c.ring_d1);
    j["ring_d2"] = ring_matrix_to_json(*c.ring_d2);
  } else {
    j["d1"] = bitmat_to_json(c.d1);
    j["d2"] = bitmat_to_json(c.d2);
  }
  return j;
}

ChainComplex3 complex3_from_json(const json& j) {
  ChainComplex3 c;
  if (j.contains("ring_d1")) {
    c.ring_d1 = ring_matrix_from_json(j.at("ring_d1"));
    c.ring_d2 = ring_matrix_from_json(j.at("ring_d2"));
    c.d1 = c.ring_d1->expand_to_f2();
    c.d2 = c.ring_d2->expand_to_f2();
  } else {
    c.d1 = bitmat_from_json(j.at("d1"));
    c.d2 = bitmat_from_json(j.at("d2"));
  }
  c.validate();
  return c;
}

json base_graph_to_json(const BaseGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json::array({e.u, e.v, e.label, e.port_u, e.port_v}));
  return json{{"v0", g.v0}, {"delta", g.delta}, {"ell", g.ell}, {"edges", edges}};
}

BaseGraph base_graph_from_json(const json& j) {
  BaseGraph g;
  g.v0 = j.at("v0").get<uint32_t>();
  g.delta = j.at("delta").get<uint32_t>();
  g.ell = j.at("ell").get<uint32_t>();
  for (const auto& e : j.at("edges")) {
    BaseGraph::Edge edge;
    edge.u = e.at(0).get<uint32_t>();
    edge.v = e.at(1).get<uint32_t>();
    edge.label = e.at(2).get<uint32_t>();
    edge.port_u = e.at(3).get<uint32_t>();
    edge.port_v = e.at(4).get<uint32_t>();
    g.edges.push_back(edge);
  }
  g.validate();
  return g;
}

json inner_code_to_json(const InnerCode& c) {
  json rows = json::array();
  for (uint32_t g = 0; g < c.gamma; ++g) rows.push_back(c.row_masks[g]);
  return json{{"delta", c.delta}, {"gamma", c.gamma}, {"d_inner", c.d_inner}, {"z_rows", rows}};
}

InnerCode inner_code_from_json(const json& j) {
  const uint32_t delta = j.at("delta").get<uint32_t>();
  const uint32_t gamma = j.at("gamma").get<uint32_t>();
  BitMat z(gamma, delta);
  const auto& rows = j.at("z_rows");
  if (rows.size() != gamma) throw std::invalid_argument("inner code: row count mismatch");
  for (uint32_t g = 0; g < gamma; ++g) {
    const uint32_t mask = rows[g].get<uint32_t>();
    for (uint32_t c = 0; c < delta; ++c)
      if ((mask >> c) & 1) z.set(g, c, true);
  }
  return inner_code_from_z(z, j.at("d_inner").get<uint32_t>());
}

}  // namespace qcldpc
