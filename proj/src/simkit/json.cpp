#include "bombprize/simkit/json.hpp"

#include <stdexcept>

#include "bombprize/qchannel/json.hpp"

namespace bombprize::simkit {

using nlohmann::json;

CQMixture cq_mixture_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw std::invalid_argument("cq mixture json: missing \"components\"");
  CQMixture m;
  for (const auto& cj : j["components"]) {
    CQMixture::Component c;
    c.weight = cj.at("w").get<double>();
    json cq_json = cj;
    cq_json["kind"] = "cq";
    // reuse the channel schema for validation, then keep the pieces
    (void)qchannel::channel_from_json(cq_json);
    const auto& basis = cj.at("basis");
    c.cq.basis.ket0 = qchannel::cmatrix_from_json({basis[0], basis[1]}, 2, 1);
    c.cq.basis.ket1 = qchannel::cmatrix_from_json({basis[2], basis[3]}, 2, 1);
    c.cq.sigma0 = qchannel::cmatrix_from_json(cj.at("sigma0"), 2, 2);
    c.cq.sigma1 = qchannel::cmatrix_from_json(cj.at("sigma1"), 2, 2);
    m.components.push_back(std::move(c));
  }
  m.validate();
  return m;
}

json cq_mixture_to_json(const CQMixture& m) {
  json components = json::array();
  for (const auto& c : m.components) {
    json basis = json::array();
    for (const auto* ket : {&c.cq.basis.ket0, &c.cq.basis.ket1})
      for (std::size_t i = 0; i < 2; ++i)
        basis.push_back({(*ket)(i, 0).real(), (*ket)(i, 0).imag()});
    components.push_back({{"w", c.weight},
                          {"basis", basis},
                          {"sigma0", qchannel::cmatrix_to_json(c.cq.sigma0)},
                          {"sigma1", qchannel::cmatrix_to_json(c.cq.sigma1)}});
  }
  return {{"components", components}};
}

}  // namespace bombprize::simkit
