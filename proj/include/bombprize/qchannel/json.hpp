#pragma once

#include <json.hpp>

#include "bombprize/qchannel/channel.hpp"

namespace bombprize::qchannel {

// Channel schema, "kind" selects the constructor:
//   {"kind":"unot"}
//   {"kind":"pauli","p":[pI,pX,pY,pZ]}
//   {"kind":"cq","basis":[[re,im]x4],"sigma0":[[re,im]x4],"sigma1":[[re,im]x4]}
//   {"kind":"not_mixture","components":[{"w":..,"basis":[[re,im]x4]},...]}
//   {"kind":"kraus","ops":[[[re,im]x4],...]}
// Kets are listed psi0 then psi1 (two complex entries each); matrices are
// row-major. Throws std::invalid_argument on malformed input.

QuantumChannel channel_from_json(const nlohmann::json& j);
nlohmann::json cmatrix_to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);

}  // namespace bombprize::qchannel
