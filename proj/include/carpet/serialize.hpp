#pragma once

#include <json.hpp>

#include "carpet/boundary.hpp"
#include "carpet/metric.hpp"

namespace carpet {

nlohmann::json coord_json(Coord c);

nlohmann::json to_json_value(const DirectionProfile& p);
nlohmann::json to_json_value(const BoundaryPointFamily& f);
nlohmann::json to_json_value(const Evidence& e);
/// {word, classification, profile, families, evidence}
nlohmann::json to_json_value(const BoundaryCatalog& c);
nlohmann::json to_json_value(const SequenceRep& s);
nlohmann::json to_json_value(const Distinction& d);
nlohmann::json to_json_value(const RayCheck& r);
nlohmann::json to_json_value(const AxisRayReport& r);
nlohmann::json to_json_value(const MeasureResult& m);

}  // namespace carpet
