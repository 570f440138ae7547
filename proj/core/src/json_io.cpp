#include "zonocalc/json_io.hpp"

namespace zonocalc {

namespace {

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

mpq_class rational_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal: " + s);
  if (q.get_den() == 0) throw InputError("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return s.str();
  return s.float_value();
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::exact(rational_from_string(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar::exact(j.get<long>());
  if (j.is_number()) return Scalar::real(j.get<double>());
  throw InputError("scalar must be a number or a \"p/q\" string");
}

json vector_to_json(const Vector& v) {
  json a = json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(scalar_to_json(v[i]));
  return a;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("vector must be a non-empty array");
  std::vector<Scalar> x;
  for (const json& c : j) x.push_back(scalar_from_json(c));
  // Integer JSON numbers parse as exact; harmonize mixed int/real arrays to float.
  bool any_float = false;
  for (const Scalar& s : x) any_float |= !s.is_exact();
  if (any_float)
    for (Scalar& s : x) s = s.to_float();
  return Vector(std::move(x));
}

json zonotope_to_json(const Zonotope& z) {
  Zonotope c = z.canonicalized();
  json gens = json::array();
  for (const Vector& g : c.generators()) gens.push_back(vector_to_json(g));
  return json{{"type", "zonotope"}, {"dim", z.dim()}, {"generators", std::move(gens)}};
}

Zonotope zonotope_from_json(const json& j) {
  if (require(j, "type") != "zonotope") throw InputError("expected type \"zonotope\"");
  int dim = require(j, "dim").get<int>();
  std::vector<Vector> gens;
  for (const json& g : require(j, "generators")) gens.push_back(vector_from_json(g));
  Mode mode = Mode::Exact;
  if (!gens.empty()) mode = gens[0].mode();
  bool any_float = false;
  for (const Vector& g : gens) any_float |= g.mode() == Mode::Float;
  if (any_float) {
    for (Vector& g : gens)
      if (g.mode() == Mode::Exact) g = g.to_float();
    mode = Mode::Float;
  }
  if (j.contains("mode")) mode = j["mode"] == "float" ? Mode::Float : Mode::Exact;
  if (mode == Mode::Float)
    for (Vector& g : gens)
      if (g.mode() == Mode::Exact) g = g.to_float();
  return Zonotope(dim, std::move(gens), mode);
}

json parallelotope_to_json(const Parallelotope& p) {
  json edges = json::array();
  for (const Vector& e : p.edges()) edges.push_back(vector_to_json(e));
  return json{{"type", "parallelotope"}, {"base", vector_to_json(p.base())}, {"edges", std::move(edges)}};
}

Parallelotope parallelotope_from_json(const json& j) {
  if (require(j, "type") != "parallelotope") throw InputError("expected type \"parallelotope\"");
  Vector base = vector_from_json(require(j, "base"));
  std::vector<Vector> edges;
  for (const json& e : require(j, "edges")) edges.push_back(vector_from_json(e));
  bool any_float = base.mode() == Mode::Float;
  for (const Vector& e : edges) any_float |= e.mode() == Mode::Float;
  if (any_float) {
    base = base.to_float();
    for (Vector& e : edges)
      if (e.mode() == Mode::Exact) e = e.to_float();
  }
  return Parallelotope(std::move(base), std::move(edges));
}

json polygon_to_json(const ConvexPolygon& p) {
  json verts = json::array();
  for (const Point2& v : p.vertices())
    verts.push_back(json::array({scalar_to_json(v.x), scalar_to_json(v.y)}));
  return json{{"type", "polygon"}, {"vertices", std::move(verts)}};
}

ConvexPolygon polygon_from_json(const json& j) {
  if (require(j, "type") != "polygon") throw InputError("expected type \"polygon\"");
  std::vector<Point2> pts;
  for (const json& v : require(j, "vertices")) {
    if (!v.is_array() || v.size() != 2) throw InputError("polygon vertex must be [x, y]");
    pts.push_back({scalar_from_json(v[0]), scalar_from_json(v[1])});
  }
  bool any_float = false;
  for (const Point2& p2 : pts) any_float |= p2.mode() == Mode::Float;
  if (any_float)
    for (Point2& p2 : pts) p2 = {p2.x.to_float(), p2.y.to_float()};
  return ConvexPolygon(std::move(pts));
}

json ellipsoid_to_json(const EllipsoidL2& e) {
  json cols = json::array();
  for (int c = 0; c < e.num_generators(); ++c) cols.push_back(vector_to_json(e.gen_matrix().column(c)));
  return json{{"type", "ellipsoid"}, {"dim", e.dim()}, {"gen_matrix", std::move(cols)}};
}

EllipsoidL2 ellipsoid_from_json(const json& j) {
  if (require(j, "type") != "ellipsoid") throw InputError("expected type \"ellipsoid\"");
  int dim = require(j, "dim").get<int>();
  std::vector<Vector> cols;
  for (const json& c : require(j, "gen_matrix")) cols.push_back(vector_from_json(c));
  if (cols.empty()) throw InputError("ellipsoid needs at least one generator column");
  bool any_float = false;
  for (const Vector& c : cols) any_float |= c.mode() == Mode::Float;
  if (any_float)
    for (Vector& c : cols)
      if (c.mode() == Mode::Exact) c = c.to_float();
  for (const Vector& c : cols)
    if (c.dim() != dim) throw InputError("ellipsoid column dim mismatch");
  return EllipsoidL2(Matrix::from_columns(cols));
}

json poly_to_json(const SteinerPoly& p) {
  json a = json::array();
  for (const Scalar& c : p.coeffs()) a.push_back(scalar_to_json(c));
  return a;
}

SteinerPoly poly_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("polynomial must be a coefficient array");
  std::vector<Scalar> c;
  for (const json& x : j) c.push_back(scalar_from_json(x));
  bool any_float = false;
  for (const Scalar& s : c) any_float |= !s.is_exact();
  if (any_float)
    for (Scalar& s : c) s = s.to_float();
  return SteinerPoly(std::move(c));
}

json check_result_to_json(const CheckResult& r) {
  json j{{"check_id", r.check_id},
         {"lhs", scalar_to_json(r.lhs)},
         {"rhs", scalar_to_json(r.rhs)},
         {"margin", scalar_to_json(r.margin)},
         {"mode", to_string(r.mode)},
         {"tolerance", r.tolerance},
         {"verdict", to_string(r.verdict)},
         {"witness", r.witness}};
  if (r.seed) j["seed"] = *r.seed;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

CheckResult check_result_from_json(const json& j) {
  CheckResult r;
  r.check_id = require(j, "check_id").get<std::string>();
  r.lhs = scalar_from_json(require(j, "lhs"));
  r.rhs = scalar_from_json(require(j, "rhs"));
  r.margin = scalar_from_json(require(j, "margin"));
  r.mode = require(j, "mode") == "exact" ? Mode::Exact : Mode::Float;
  r.tolerance = require(j, "tolerance").get<double>();
  r.verdict = verdict_from_string(require(j, "verdict").get<std::string>());
  r.witness = j.value("witness", json::object());
  if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
  r.note = j.value("note", std::string());
  return r;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace zonocalc
