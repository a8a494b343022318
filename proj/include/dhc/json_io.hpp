#pragma once

#include <json.hpp>

#include "dhc/verify.hpp"

namespace dhc {

using ordered_json = nlohmann::ordered_json;

// Tensor wire format: {"shape":[...],"data":[[re,im],...]} row-major.
ordered_json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const ordered_json& j);

// State wire format: {"dim":d,"tensor":<Tensor>,"certificate":[<Tensor>...]?}
ordered_json state_to_json(const DHState& s);
DHState state_from_json(const ordered_json& j);

ordered_json census_to_json(const OrbitCensus& c);
ordered_json interference_to_json(const InterferenceReport& r);
ordered_json verify_to_json(const VerifyReport& r);

// CSV with columns (dim, subset_size, probability, sorkin_order, sorkin_value):
// one row per subset size and one per Sorkin order.
std::string interference_to_csv(const InterferenceReport& r);

// Deterministic serialization; floating values carry 16 significant digits.
std::string dump_report(const ordered_json& j);

}  // namespace dhc
