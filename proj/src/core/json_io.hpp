#pragma once

#include <json.hpp>

#include "affgr.hpp"
#include "bz.hpp"
#include "hive.hpp"
#include "khive.hpp"

namespace hivemv {

// Serialization for the core objects.  Writers emit values in the canonical
// orders; readers accept entries in any order but demand a complete,
// duplicate-free labelling.  All readers throw std::invalid_argument on
// malformed input.

nlohmann::json coweight_to_json(const Coweight& w);
Coweight coweight_from_json(const nlohmann::json& j);

nlohmann::json hive_to_json(const Hive& h);
Hive hive_from_json(const nlohmann::json& j);

nlohmann::json bz_to_json(const BZDatum& m);
BZDatum bz_from_json(const nlohmann::json& j);

nlohmann::json khive_to_json(const KHive& f);
KHive khive_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const LaurentMatrix& g);
LaurentMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace hivemv
