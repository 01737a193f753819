#include "benson/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace benson {

double round12(double x) {
  if (x == 0.0) return 0.0;  // normalizes -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(round12(x));
  return a;
}

namespace {

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a numeric array");
  Vec v;
  for (const Json& x : j) {
    if (!x.is_number()) throw ParseError("expected a numeric array");
    v.push_back(x.get<double>());
  }
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(round12(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a matrix");
  Matrix m(static_cast<int>(j.size()), static_cast<int>(j.at(0).size()));
  for (int i = 0; i < m.rows; ++i) {
    Vec row = vec_from_json(j.at(i));
    if (static_cast<int>(row.size()) != m.cols) throw ParseError("ragged matrix");
    std::copy(row.begin(), row.end(), m.row(i));
  }
  return m;
}

}  // namespace

Json polyhedron_to_json(const Polyhedron& p) {
  Json j;
  j["dim"] = p.dim();
  if (p.has_hrep()) {
    Json hs = Json::array();
    for (const Halfspace& h : p.hrep()) {
      Json one;
      one["a"] = vec_to_json(h.a);
      one["b"] = round12(h.b);
      hs.push_back(std::move(one));
    }
    j["halfspaces"] = std::move(hs);
  }
  if (p.has_vrep()) {
    Json vs = Json::array();
    for (const Vec& v : p.vrep().vertices) vs.push_back(vec_to_json(v));
    j["vertices"] = std::move(vs);
    Json rs = Json::array();
    for (const Vec& r : p.vrep().rays) rs.push_back(vec_to_json(r));
    j["rays"] = std::move(rs);
  }
  return j;
}

Polyhedron polyhedron_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim")) throw ParseError("polyhedron needs a dim field");
  int dim = j.at("dim").get<int>();
  if (dim < 1) throw ParseError("polyhedron dimension must be positive");

  std::vector<Halfspace> hs;
  bool have_h = j.contains("halfspaces");
  if (have_h) {
    for (const Json& one : j.at("halfspaces")) {
      Vec a = vec_from_json(one.at("a"));
      if (static_cast<int>(a.size()) != dim) throw ParseError("halfspace dimension mismatch");
      hs.emplace_back(std::move(a), one.at("b").get<double>());
    }
  }
  VRep vr;
  bool have_v = j.contains("vertices") || j.contains("rays");
  if (j.contains("vertices"))
    for (const Json& one : j.at("vertices")) {
      Vec v = vec_from_json(one);
      if (static_cast<int>(v.size()) != dim) throw ParseError("vertex dimension mismatch");
      vr.vertices.push_back(std::move(v));
    }
  if (j.contains("rays"))
    for (const Json& one : j.at("rays")) {
      Vec r = vec_from_json(one);
      if (static_cast<int>(r.size()) != dim) throw ParseError("ray dimension mismatch");
      vr.rays.push_back(std::move(r));
    }

  if (have_h && have_v) {
    for (const Vec& v : vr.vertices)
      for (const Halfspace& h : hs)
        if (h.eval(v) < -1e-7)
          throw ParseError("vertex violates the stored H-representation");
    for (const Vec& r : vr.rays)
      for (const Halfspace& h : hs)
        if (dot(h.a, r) < -1e-7)
          throw ParseError("ray violates the stored H-representation");
    return Polyhedron::from_both(dim, std::move(hs), std::move(vr));
  }
  if (have_h) return Polyhedron::from_hrep(dim, std::move(hs));
  if (have_v) return Polyhedron::from_vrep(dim, std::move(vr));
  throw ParseError("polyhedron needs halfspaces or vertices");
}

Json expr_to_json(const ConvexExpr& g) {
  return std::visit(
      [](const auto& node) -> Json {
        using T = std::decay_t<decltype(node)>;
        Json j;
        if constexpr (std::is_same_v<T, AffineExpr>) {
          j["affine"] = Json{{"c", vec_to_json(node.c)}, {"d", round12(node.d)}};
        } else if constexpr (std::is_same_v<T, QuadExpr>) {
          j["quad"] = Json{{"Q", matrix_to_json(node.Q)},
                           {"c", vec_to_json(node.c)},
                           {"d", round12(node.d)}};
        } else if constexpr (std::is_same_v<T, Norm2Expr>) {
          j["norm2"] = Json{{"A", matrix_to_json(node.A)},
                            {"b", vec_to_json(node.b)},
                            {"r", round12(node.r)}};
        } else {
          Json args = Json::array();
          for (const ConvexExpr& a : node.args) args.push_back(expr_to_json(a));
          j["max"] = std::move(args);
        }
        return j;
      },
      g.node);
}

ConvexExpr expr_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("constraint must have one kind");
  ConvexExpr g;
  if (j.contains("affine")) {
    const Json& a = j.at("affine");
    g.node = AffineExpr{vec_from_json(a.at("c")), a.at("d").get<double>()};
  } else if (j.contains("quad")) {
    const Json& a = j.at("quad");
    g.node = QuadExpr{matrix_from_json(a.at("Q")), vec_from_json(a.at("c")),
                      a.at("d").get<double>()};
  } else if (j.contains("norm2")) {
    const Json& a = j.at("norm2");
    g.node = Norm2Expr{matrix_from_json(a.at("A")), vec_from_json(a.at("b")),
                       a.at("r").get<double>()};
  } else if (j.contains("max")) {
    MaxExpr mx;
    for (const Json& a : j.at("max")) mx.args.push_back(expr_from_json(a));
    g.node = std::move(mx);
  } else {
    throw ParseError("unknown constraint kind");
  }
  return g;
}

Json instance_to_json(const ProblemInstance& inst) {
  Json j;
  j["mode"] = inst.mode == Mode::Cpp ? "cpp" : "mocp";
  j["n"] = inst.n;
  j["q"] = inst.q;
  if (inst.mode == Mode::Cpp)
    j["G"] = matrix_to_json(inst.G);
  else
    j["C"] = matrix_to_json(inst.C);
  Json cons = Json::array();
  for (const ConvexExpr& g : inst.constraints) cons.push_back(expr_to_json(g));
  j["constraints"] = std::move(cons);
  j["box"] = Json{{"lo", vec_to_json(inst.box_lo)}, {"hi", vec_to_json(inst.box_hi)}};
  if (inst.interior_point) j["interior_point"] = vec_to_json(*inst.interior_point);
  if (!inst.solution_hints.empty()) {
    Json hints = Json::array();
    for (const Vec& h : inst.solution_hints) hints.push_back(vec_to_json(h));
    j["hints"] = std::move(hints);
  }
  return j;
}

ProblemInstance instance_from_json(const Json& j) {
  try {
    ProblemInstance inst;
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "cpp")
      inst.mode = Mode::Cpp;
    else if (mode == "mocp")
      inst.mode = Mode::Mocp;
    else
      throw ParseError("mode must be cpp or mocp");
    inst.n = j.at("n").get<int>();
    inst.q = j.at("q").get<int>();
    if (inst.mode == Mode::Cpp)
      inst.G = matrix_from_json(j.at("G"));
    else
      inst.C = matrix_from_json(j.at("C"));
    if (j.contains("constraints"))
      for (const Json& g : j.at("constraints"))
        inst.constraints.push_back(sanitize_expr(expr_from_json(g), inst.n));
    inst.box_lo = vec_from_json(j.at("box").at("lo"));
    inst.box_hi = vec_from_json(j.at("box").at("hi"));
    if (j.contains("interior_point"))
      inst.interior_point = vec_from_json(j.at("interior_point"));
    if (j.contains("hints"))
      for (const Json& h : j.at("hints")) inst.solution_hints.push_back(vec_from_json(h));
    inst.validate();
    return inst;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

Json result_to_json(const ApproxResult& r) {
  Json j;
  j["kind"] = r.kind == Kind::Outer ? "outer" : "inner";
  j["eps"] = round12(r.eps);
  j["certified_bound"] = round12(r.certified_bound);
  j["p_level"] = polyhedron_to_json(r.p_level);
  if (r.y_level) j["y_level"] = polyhedron_to_json(*r.y_level);
  j["cuts"] = r.cuts;
  j["solves"] = r.solves;
  return j;
}

Json distance_report_to_json(const DistanceReport& r) {
  Json j;
  j["d_h"] = round12(r.d_h);
  j["witness_outer"] = vec_to_json(r.witness_outer);
  j["witness_inner"] = vec_to_json(r.witness_inner);
  return j;
}

Json trace_to_json(const std::vector<TraceRecord>& trace, bool dual) {
  Json arr = Json::array();
  for (const TraceRecord& rec : trace) {
    Json j;
    j["vertex"] = vec_to_json(rec.vertex);
    j[dual ? "phi" : "z"] = round12(rec.score);
    j["action"] = rec.cut ? "cut" : "confirm";
    if (rec.cut_hs)
      j["cut"] = Json{{"a", vec_to_json(rec.cut_hs->a)}, {"b", round12(rec.cut_hs->b)}};
    arr.push_back(std::move(j));
  }
  return arr;
}

Json generated_to_json(const GeneratedInstance& gi) {
  Json j = instance_to_json(gi.instance);
  Json e;
  e["name"] = gi.name;
  e["eps"] = round12(gi.eps);
  if (!gi.wbar.empty()) e["wbar"] = vec_to_json(gi.wbar);
  if (!gi.expected_y_vertices.empty()) {
    Json a = Json::array();
    for (const Vec& v : gi.expected_y_vertices) a.push_back(vec_to_json(v));
    e["expected_y_vertices"] = std::move(a);
  }
  if (!gi.expected_p_vertices.empty()) {
    Json a = Json::array();
    for (const Vec& v : gi.expected_p_vertices) a.push_back(vec_to_json(v));
    e["expected_p_vertices"] = std::move(a);
  }
  if (!gi.reference_y_vertices.empty()) {
    Json a = Json::array();
    for (const Vec& v : gi.reference_y_vertices) a.push_back(vec_to_json(v));
    e["reference_y_vertices"] = std::move(a);
  }
  if (gi.expected_dh) e["expected_dh"] = round12(*gi.expected_dh);
  if (gi.expected_cuts) e["expected_cuts"] = *gi.expected_cuts;
  if (gi.reference_p) {
    Json hs = Json::array();
    Polyhedron ref = gi.reference_p->with_hrep();
    for (const Halfspace& h : ref.hrep())
      hs.push_back(Json{{"a", vec_to_json(h.a)}, {"b", round12(h.b)}});
    e["reference_p_hrep"] = std::move(hs);
  }
  if (gi.reference_d) {
    Json hs = Json::array();
    Polyhedron ref = gi.reference_d->with_hrep();
    for (const Halfspace& h : ref.hrep())
      hs.push_back(Json{{"a", vec_to_json(h.a)}, {"b", round12(h.b)}});
    e["reference_d_hrep"] = std::move(hs);
  }
  j["expectations"] = std::move(e);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace benson
