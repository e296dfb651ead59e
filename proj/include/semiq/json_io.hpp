#pragma once

#include <string>

#include <json.hpp>

#include "semiq/covers.hpp"
#include "semiq/hilbert.hpp"
#include "semiq/semigroup.hpp"
#include "semiq/varieties.hpp"

namespace semiq {

using Json = nlohmann::json;

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json points_to_json(const std::vector<Point>& pts);
std::vector<Point> points_from_json(const Json& j);

Json order_to_json(const OrderSpec& o);
OrderSpec order_from_json(const Json& j, int dim);

Json cone_to_json(const Cone& c, const OrderSpec& o);
Cone cone_from_json(const Json& j);

/// Accepts either {"cone", "gaps", "order"} or {"generators", "order"};
/// generator form is converted to the canonical gap form on ingestion and
/// the result is validated.
CSemigroup semigroup_from_json(const Json& j);
Json semigroup_to_json(const CSemigroup& s);

DiophantineSystem system_from_json(const Json& j);
Json system_to_json(const DiophantineSystem& s);

ModularSystem modular_from_json(const Json& j);
Json modular_to_json(const ModularSystem& s);

RationalPolytope polytope_from_json(const Json& j);
Json polytope_to_json(const RationalPolytope& f);

Json tree_to_json(const CoverTree& t);
CoverTree tree_from_json(const Json& j);

/// Deterministic compact rendering with a trailing newline.
std::string canonical_text(const Json& j);

/// Parses "a,b,c" into a point.
Point parse_point_arg(const std::string& text);

}  // namespace semiq
