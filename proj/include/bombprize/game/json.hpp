#pragma once

#include <json.hpp>

#include "bombprize/game/game.hpp"

namespace bombprize::game {

// {"p":[{"b":1,"x":2,"y":[p1,p2,p3,p4]}, ...]} over the 12 valid configs.
nlohmann::json distribution_to_json(const GameDistribution& d);
GameDistribution distribution_from_json(const nlohmann::json& j);

// {"pi":[{"b":1,"x":2,"w":"1/12"}, ...]}; weights are rational strings or
// plain numbers (numbers are snapped to a nearby small fraction).
nlohmann::json prior_to_json(const Prior& p);
Prior prior_from_json(const nlohmann::json& j);

}  // namespace bombprize::game
