#pragma once

#include <json.hpp>

#include "zetakit/aaa.hpp"
#include "zetakit/asym.hpp"
#include "zetakit/catalog.hpp"

namespace zk {

using json = nlohmann::json;

json to_json(cplx z);
cplx cplx_from_json(const json& j);

json to_json(const AsymExpansion& a);
AsymExpansion asym_from_json(const json& j);

json to_json(const BarycentricModel& m);
BarycentricModel bary_from_json(const json& j);

// {"model":"airy"}, {"model":"hurwitz","a":0.25}, {"model":"pcf","a":1.0}, {"model":"chf","a":0.5,"b":1.5}
// Optional "depth". Throws DomainError on an unknown or malformed spec.
CatalogModel model_from_spec(const json& spec);

json model_summary(const CatalogModel& m);

}  // namespace zk
