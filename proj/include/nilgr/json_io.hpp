#pragma once

#include <json.hpp>

#include "nilgr/correspondence.hpp"
#include "nilgr/laurent.hpp"
#include "nilgr/partitions.hpp"
#include "nilgr/weights.hpp"

namespace nilgr {

using json = nlohmann::ordered_json;

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json matrix_to_json(const RationalMatrix& a);
RationalMatrix matrix_from_json(const json& j);

json laurent_to_json(const LaurentMatrix& g);
LaurentMatrix laurent_from_json(const json& j);

json weight_to_json(const WeightTuple& w);
WeightTuple weight_from_json(const json& j);

Partition partition_from_json(const json& j);
json orbit_to_json(const OrbitDescriptor& o);

json report_to_json(const TableReport& r);
json duality_to_json(const std::vector<DualityRow>& rows);

}  // namespace nilgr
