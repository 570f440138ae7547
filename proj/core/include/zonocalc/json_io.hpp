#pragma once

#include "json.hpp"
#include "zonocalc/check_result.hpp"
#include "zonocalc/ellipsoid.hpp"
#include "zonocalc/polygon2d.hpp"
#include "zonocalc/steiner.hpp"
#include "zonocalc/zonotope.hpp"

namespace zonocalc {

using nlohmann::json;

// Scalars: exact values are "p/q" decimal strings, floats are JSON numbers.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

// {"type":"zonotope","dim":n,"generators":[[...],...]} (canonical generator order)
json zonotope_to_json(const Zonotope& z);
Zonotope zonotope_from_json(const json& j);

// {"type":"parallelotope","base":[...],"edges":[[...],...]}
json parallelotope_to_json(const Parallelotope& p);
Parallelotope parallelotope_from_json(const json& j);

// {"type":"polygon","vertices":[[x,y],...]}
json polygon_to_json(const ConvexPolygon& p);
ConvexPolygon polygon_from_json(const json& j);

// {"type":"ellipsoid","dim":n,"gen_matrix":[[column],...]} (column-major)
json ellipsoid_to_json(const EllipsoidL2& e);
EllipsoidL2 ellipsoid_from_json(const json& j);

// Coefficient array, constant term first.
json poly_to_json(const SteinerPoly& p);
SteinerPoly poly_from_json(const json& j);

json check_result_to_json(const CheckResult& r);
CheckResult check_result_from_json(const json& j);

/// Parse failure wrapper: throws InputError with context.
json parse_json(const std::string& text);

}  // namespace zonocalc
