#pragma once

#include <json.hpp>

#include "qcldpc/chain.hpp"
#include "qcldpc/tanner.hpp"

namespace qcldpc {

// JSON forms used by the code-bundle file and the CLI. Every document
// carries format_version; ring matrices are stored as coefficient-index
// lists [row, col, [exponents...]]. Round-trips are bit-exact.
inline constexpr int kFormatVersion = 1;

nlohmann::json ring_matrix_to_json(const RingMatrix& m);
RingMatrix ring_matrix_from_json(const nlohmann::json& j);

nlohmann::json bitmat_to_json(const BitMat& m);
BitMat bitmat_from_json(const nlohmann::json& j);

nlohmann::json complex2_to_json(const ChainComplex2& c);
ChainComplex2 complex2_from_json(const nlohmann::json& j);

nlohmann::json complex3_to_json(const ChainComplex3& c);
ChainComplex3 complex3_from_json(const nlohmann::json& j);

nlohmann::json base_graph_to_json(const BaseGraph& g);
BaseGraph base_graph_from_json(const nlohmann::json& j);

nlohmann::json inner_code_to_json(const InnerCode& c);
// Rebuilds the lookup tables from Z and re-verifies both code distances.
InnerCode inner_code_from_json(const nlohmann::json& j);

}  // namespace qcldpc
