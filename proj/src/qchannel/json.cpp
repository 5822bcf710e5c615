#include "bombprize/qchannel/json.hpp"

#include <stdexcept>

namespace bombprize::qchannel {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("channel json: complex entries must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

BasisPair basis_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("channel json: basis must list 4 complex entries");
  CMatrix k0(2, 1), k1(2, 1);
  k0(0, 0) = complex_from_json(j[0]);
  k0(1, 0) = complex_from_json(j[1]);
  k1(0, 0) = complex_from_json(j[2]);
  k1(1, 0) = complex_from_json(j[3]);
  return {k0, k1};
}

}  // namespace

CMatrix cmatrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows * cols)
    throw std::invalid_argument("channel json: matrix entry count mismatch");
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i * cols + c]);
  return m;
}

json cmatrix_to_json(const CMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.push_back({m(i, c).real(), m(i, c).imag()});
  return out;
}

QuantumChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("channel json: missing \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "unot") return unot();
  if (kind == "pauli") {
    if (!j.contains("p") || !j["p"].is_array() || j["p"].size() != 4)
      throw std::invalid_argument("channel json: pauli needs \"p\" with 4 weights");
    PauliParams p{j["p"][0].get<double>(), j["p"][1].get<double>(), j["p"][2].get<double>(),
                  j["p"][3].get<double>()};
    return pauli(p);
  }
  if (kind == "cq") {
    CQChannel c;
    c.basis = basis_from_json(j.at("basis"));
    c.sigma0 = cmatrix_from_json(j.at("sigma0"), 2, 2);
    c.sigma1 = cmatrix_from_json(j.at("sigma1"), 2, 2);
    return cq(c);
  }
  if (kind == "not_mixture") {
    if (!j.contains("components") || !j["components"].is_array())
      throw std::invalid_argument("channel json: not_mixture needs \"components\"");
    NotMixture m;
    for (const auto& cj : j["components"]) {
      NotMixture::Component c;
      c.weight = cj.at("w").get<double>();
      c.basis = basis_from_json(cj.at("basis"));
      m.components.push_back(std::move(c));
    }
    return not_mixture(m);
  }
  if (kind == "kraus") {
    if (!j.contains("ops") || !j["ops"].is_array() || j["ops"].empty())
      throw std::invalid_argument("channel json: kraus needs \"ops\"");
    std::vector<CMatrix> ops;
    for (const auto& oj : j["ops"]) ops.push_back(cmatrix_from_json(oj, 2, 2));
    return QuantumChannel(std::move(ops));
  }
  throw std::invalid_argument("channel json: unknown kind \"" + kind + "\"");
}

}  // namespace bombprize::qchannel
