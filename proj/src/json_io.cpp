#include "semiq/json_io.hpp"

#include <sstream>

namespace semiq {

namespace {

[[noreturn]] void bad(const std::string& what) { throw schema_error(what); }

Int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + ": expected an integer");
  return j.get<Int>();
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<Int>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      bad("malformed rational: " + s);
    }
  }
  bad("expected an integer or a \"num/den\" string");
}

Json rat_to_json(const Rat& r) {
  if (r.is_integer()) return Json(r.num);
  return Json(std::to_string(r.num) + "/" + std::to_string(r.den));
}

}  // namespace

Json point_to_json(const Point& p) {
  Json j = Json::array();
  for (Int v : p.c) j.push_back(v);
  return j;
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("point: expected a nonempty array of integers");
  Point p;
  for (const Json& v : j) p.c.push_back(int_from_json(v, "point coordinate"));
  return p;
}

Json points_to_json(const std::vector<Point>& pts) {
  Json j = Json::array();
  for (const Point& p : pts) j.push_back(point_to_json(p));
  return j;
}

std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of points");
  std::vector<Point> out;
  for (const Json& v : j) out.push_back(point_from_json(v));
  return out;
}

Json order_to_json(const OrderSpec& o) {
  Json j;
  j["kind"] = order_kind_name(o.kind);
  j["perm"] = o.perm;
  return j;
}

OrderSpec order_from_json(const Json& j, int dim) {
  if (!j.is_object()) bad("order: expected an object");
  OrderSpec o;
  o.kind = order_kind_from_name(j.value("kind", std::string("graded-then-revcoordlex")));
  if (j.contains("perm")) {
    for (const Json& v : j.at("perm")) o.perm.push_back(static_cast<int>(int_from_json(v, "perm")));
  } else {
    o = make_order(o.kind, dim);
  }
  try {
    validate_order(o, dim);
  } catch (const precondition_error& e) {
    bad(e.what());
  }
  return o;
}

Json cone_to_json(const Cone& c, const OrderSpec& o) {
  std::vector<Point> rays = c.rays;
  sort_points(o, rays);
  Json j;
  j["rays"] = points_to_json(rays);
  return j;
}

Cone cone_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rays")) bad("cone: expected {\"rays\": [[..],..]}");
  std::vector<Point> rays = points_from_json(j.at("rays"));
  if (rays.empty()) bad("cone: at least one ray required");
  const int dim = rays[0].dim();
  return make_cone(dim, std::move(rays));
}

CSemigroup semigroup_from_json(const Json& j) {
  if (!j.is_object()) bad("semigroup: expected an object");
  try {
    if (j.contains("generators")) {
      std::vector<Point> gens = points_from_json(j.at("generators"));
      if (gens.empty()) bad("semigroup: empty generator list");
      OrderSpec order = j.contains("order") ? order_from_json(j.at("order"), gens[0].dim())
                                            : make_order(OrderKind::GradedRevCoordLex, gens[0].dim());
      return gaps_from_generators(make_generated(std::move(gens), order));
    }
    if (!j.contains("cone")) bad("semigroup: needs either \"cone\"+\"gaps\" or \"generators\"");
    Cone cone = cone_from_json(j.at("cone"));
    OrderSpec order = j.contains("order") ? order_from_json(j.at("order"), cone.dim)
                                          : make_order(OrderKind::GradedRevCoordLex, cone.dim);
    std::vector<Point> gaps =
        j.contains("gaps") ? points_from_json(j.at("gaps")) : std::vector<Point>{};
    return make_semigroup(std::move(cone), std::move(order), std::move(gaps), /*check=*/true);
  } catch (const precondition_error& e) {
    bad(e.what());  // invalid file content is a schema problem for callers
  }
}

Json semigroup_to_json(const CSemigroup& s) {
  Json j;
  j["cone"] = cone_to_json(s.cone, s.order);
  j["gaps"] = points_to_json(s.gaps);
  j["order"] = order_to_json(s.order);
  return j;
}

DiophantineSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) bad("system: expected {\"entries\": [[..],..]}");
  std::vector<std::vector<Int>> entries;
  for (const Json& row : j.at("entries")) {
    std::vector<Int> r;
    for (const Json& v : row) r.push_back(int_from_json(v, "system entry"));
    entries.push_back(std::move(r));
  }
  return make_system(std::move(entries));
}

Json system_to_json(const DiophantineSystem& s) {
  Json j;
  j["entries"] = s.entries;
  return j;
}

ModularSystem modular_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("G") || !j.contains("b")) {
    bad("modular system: expected {\"A\": .., \"G\": .., \"b\": ..}");
  }
  auto matrix = [](const Json& m, const char* what) {
    std::vector<std::vector<Int>> out;
    if (!m.is_array()) bad(std::string(what) + ": expected an array of rows");
    for (const Json& row : m) {
      std::vector<Int> r;
      for (const Json& v : row) r.push_back(int_from_json(v, what));
      out.push_back(std::move(r));
    }
    return out;
  };
  std::vector<Int> b;
  for (const Json& v : j.at("b")) b.push_back(int_from_json(v, "modulus"));
  return make_modular_system(matrix(j.at("A"), "A"), matrix(j.at("G"), "G"), std::move(b));
}

Json modular_to_json(const ModularSystem& s) {
  Json j;
  j["A"] = s.A;
  j["G"] = s.G;
  j["b"] = s.b;
  return j;
}

RationalPolytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) bad("polytope: expected {\"vertices\": [[..],..]}");
  std::vector<std::vector<Rat>> vertices;
  for (const Json& row : j.at("vertices")) {
    std::vector<Rat> v;
    for (const Json& c : row) v.push_back(rat_from_json(c));
    vertices.push_back(std::move(v));
  }
  return make_polytope(std::move(vertices));
}

Json polytope_to_json(const RationalPolytope& f) {
  Json rows = Json::array();
  for (const auto& v : f.vertices) {
    Json row = Json::array();
    for (const Rat& c : v) row.push_back(rat_to_json(c));
    rows.push_back(row);
  }
  Json j;
  j["vertices"] = rows;
  return j;
}

Json tree_to_json(const CoverTree& t) {
  Json j;
  j["cone"] = cone_to_json(t.cone, t.order);
  j["order"] = order_to_json(t.order);
  j["d"] = t.d;
  j["f"] = point_to_json(t.f);
  j["root"] = t.root;
  Json verts = Json::array();
  for (const CSemigroup& v : t.vertices) verts.push_back(points_to_json(v.gaps));
  j["vertices"] = verts;
  Json edges = Json::array();
  for (const auto& [a, b] : t.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = edges;
  return j;
}

CoverTree tree_from_json(const Json& j) {
  if (!j.is_object()) bad("tree: expected an object");
  CoverTree t;
  t.cone = cone_from_json(j.at("cone"));
  t.order = order_from_json(j.at("order"), t.cone.dim);
  t.d = int_from_json(j.at("d"), "d");
  t.f = point_from_json(j.at("f"));
  t.root = j.at("root").get<std::size_t>();
  for (const Json& gaps : j.at("vertices")) {
    t.vertices.push_back(make_semigroup(t.cone, t.order, points_from_json(gaps), /*check=*/false));
  }
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) bad("tree: malformed edge");
    t.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return t;
}

std::string canonical_text(const Json& j) { return j.dump() + "\n"; }

Point parse_point_arg(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      p.c.push_back(std::stoll(item));
    } catch (const std::exception&) {
      bad("malformed point argument: " + text);
    }
  }
  if (p.c.empty()) bad("empty point argument");
  return p;
}

}  // namespace semiq
