#pragma once

#include <json.hpp>

#include "wfree/classical.hpp"
#include "wfree/corrections.hpp"
#include "wfree/freefield.hpp"
#include "wfree/wbasis.hpp"

namespace wfree {

using Json = nlohmann::ordered_json;

Json to_json(const VPoly& p);
Json to_json(const WPoly& p);
Json to_json(const QPoly& p);
Json to_json(const OpeTable& t);
Json to_json(const RelationResult& r);
Json to_json(const Decoupling& d);

VPoly vpoly_from_json(const Json& j);
WPoly wpoly_from_json(const Json& j);
QPoly qpoly_from_json(const Json& j);
RelationResult relation_from_json(const Json& j);
Decoupling decoupling_from_json(const Json& j);

}  // namespace wfree
