#pragma once

#include <json.hpp>

#include "critgroup/brauer.hpp"
#include "critgroup/catalog_types.hpp"
#include "critgroup/exact_linalg.hpp"
#include "critgroup/matrix.hpp"
#include "critgroup/rep_data.hpp"

// Integers are encoded as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
namespace nlohmann {

template <>
struct adl_serializer<critgroup::Int> {
    static void to_json(json& j, const critgroup::Int& x);
    static void from_json(const json& j, critgroup::Int& x);
};

}  // namespace nlohmann

namespace critgroup {

using nlohmann::json;

void to_json(json& j, const IntMatrix& m);
void from_json(const json& j, IntMatrix& m);

void to_json(json& j, const ModuleClass& v);
void from_json(const json& j, ModuleClass& v);

void to_json(json& j, const RepDatum& rep);
void from_json(const json& j, RepDatum& rep);

void to_json(json& j, const BrauerTable& table);
void from_json(const json& j, BrauerTable& table);

void to_json(json& j, const CatalogEntry& entry);
void from_json(const json& j, CatalogEntry& entry);

void to_json(json& j, const AbelianGroupStructure& g);
void to_json(json& j, const SmithDecomposition& snf);
void to_json(json& j, const ValidationReport& report);

}  // namespace critgroup
