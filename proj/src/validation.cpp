#include "benson/validation.hpp"

#include <cmath>
#include <cstdio>

#include "benson/metrics.hpp"

namespace benson {

Polyhedron truncate_box(const Polyhedron& poly, double bound) {
  Polyhedron p = poly.has_vrep() ? poly : poly.with_vrep();
  for (int i = 0; i < p.dim(); ++i)
    p = dd_add_halfspace(p, Halfspace(scaled(unit_vector(p.dim(), i), -1.0), -bound));
  return p;
}

double hausdorff_plevel(const Polyhedron& inner, const Polyhedron& outer) {
  Polyhedron pin = inner.has_vrep() ? inner : inner.with_vrep();
  Polyhedron pout = outer.has_vrep() ? outer : outer.with_vrep();
  double maxcoord = 1.0;
  for (const Vec& v : pin.vrep().vertices) maxcoord = std::max(maxcoord, norm_inf(v));
  for (const Vec& v : pout.vrep().vertices) maxcoord = std::max(maxcoord, norm_inf(v));
  double bound = maxcoord + 2.0;
  Polyhedron tin = truncate_box(pin, bound);
  Polyhedron tout = truncate_box(pout, bound);
  return hausdorff_nested(tin.vrep(), tout.vrep()).d_h;
}

bool vertex_set_match(const std::vector<Vec>& got, const std::vector<Vec>& expected,
                      double tol) {
  if (got.size() != expected.size()) return false;
  std::vector<bool> used(got.size(), false);
  for (const Vec& e : expected) {
    bool found = false;
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (used[i] || got[i].size() != e.size()) continue;
      if (dist2(got[i], e) <= tol) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

VerifyRow value_row(const std::string& name, double measured, double expected,
                    double tol) {
  VerifyRow row;
  row.name = name;
  row.pass = std::fabs(measured - expected) <= tol;
  row.detail = "measured=" + fmt(measured) + " expected=" + fmt(expected);
  return row;
}

VerifyRow count_row(const std::string& name, int measured, int expected) {
  VerifyRow row;
  row.name = name;
  row.pass = measured == expected;
  row.detail = "measured=" + fmt(measured) + " expected=" + fmt(expected);
  return row;
}

VerifyRow match_row(const std::string& name, bool ok, std::size_t got,
                    std::size_t expected) {
  VerifyRow row;
  row.name = name;
  row.pass = ok;
  row.detail = "vertices=" + std::to_string(got) + " expected=" + std::to_string(expected);
  return row;
}

void verify_cpp_example(const GeneratedInstance& gen, Algorithm alg, Selection sel,
                        const std::string& tag, std::vector<VerifyRow>& rows) {
  ApproxOptions opts;
  opts.selection = sel;
  if (!gen.wbar.empty()) opts.wbar = gen.wbar;
  ApproxResult res = approximate_body(gen.instance, gen.eps, alg, opts);

  rows.push_back(count_row(tag + " cuts", res.cuts, *gen.expected_cuts));
  const std::vector<Vec>& got = res.y_level->vrep().vertices;
  rows.push_back(match_row(tag + " Y vertices",
                           vertex_set_match(got, gen.expected_y_vertices, 1e-6),
                           got.size(), gen.expected_y_vertices.size()));

  VRep ref;
  ref.vertices = gen.reference_y_vertices;
  double dh = alg == Algorithm::Primal
                  ? hausdorff_nested(ref, res.y_level->vrep()).d_h
                  : hausdorff_nested(res.y_level->vrep(), ref).d_h;
  rows.push_back(value_row(tag + " d_H", dh, *gen.expected_dh, 1e-6));
  rows.push_back(value_row(tag + " bound tightness", dh, res.certified_bound, 1e-6));
}

void verify_mocp_example(const GeneratedInstance& gen, Algorithm alg, Selection sel,
                         double dh_tol, const std::string& tag,
                         std::vector<VerifyRow>& rows) {
  ApproxOptions opts;
  opts.selection = sel;
  if (!gen.wbar.empty()) opts.wbar = gen.wbar;
  ApproxResult res = approximate_body(gen.instance, gen.eps, alg, opts);

  if (gen.expected_cuts)
    rows.push_back(count_row(tag + " cuts", res.cuts, *gen.expected_cuts));
  const std::vector<Vec>& got = res.p_level.vrep().vertices;
  rows.push_back(match_row(tag + " P vertices",
                           vertex_set_match(got, gen.expected_p_vertices, 1e-6),
                           got.size(), gen.expected_p_vertices.size()));

  double dh = alg == Algorithm::Primal
                  ? hausdorff_plevel(*gen.reference_p, res.p_level)
                  : hausdorff_plevel(res.p_level, *gen.reference_p);
  rows.push_back(value_row(tag + " d_H", dh, *gen.expected_dh, dh_tol));
}

}  // namespace

std::vector<VerifyRow> run_paper_verification(const std::vector<int>& qs, Selection sel) {
  std::vector<VerifyRow> rows;
  for (int q : qs) {
    std::string suffix = " q=" + std::to_string(q);
    if (q >= 2)
      verify_cpp_example(gen_primal_tight_cpp(q), Algorithm::Primal, sel,
                         "primal-cpp" + suffix, rows);
    verify_cpp_example(gen_dual_tight_cpp(q), Algorithm::Dual, sel,
                       "dual-cpp" + suffix, rows);
    verify_mocp_example(gen_primal_tight_mocp(q), Algorithm::Primal, sel, 1e-6,
                        "primal-mocp" + suffix, rows);
    verify_mocp_example(gen_dual_tight_mocp(q, 1e-3), Algorithm::Dual, sel, 1e-5,
                        "dual-mocp" + suffix, rows);
  }
  return rows;
}

}  // namespace benson
