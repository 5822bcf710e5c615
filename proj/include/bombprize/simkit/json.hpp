#pragma once

#include <json.hpp>

#include "bombprize/simkit/protocols.hpp"

namespace bombprize::simkit {

// {"components":[{"w":0.5,"basis":[[re,im]x4],"sigma0":[[re,im]x4],
//                 "sigma1":[[re,im]x4]}, ...]}
CQMixture cq_mixture_from_json(const nlohmann::json& j);
nlohmann::json cq_mixture_to_json(const CQMixture& m);

}  // namespace bombprize::simkit
