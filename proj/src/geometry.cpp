#include "benson/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace benson {

using detail::Gen;

Halfspace::Halfspace(Vec a_in, double b_in) : a(std::move(a_in)), b(b_in) {
  double n = norm2(a);
  if (n <= kVertexDedupTol) throw Error("halfspace normal is numerically zero");
  kernels::scale(1.0 / n, a.data(), a.size());
  b /= n;
}

namespace {

// Homogeneous row of {y : a.y >= b}: (a, -b), acting on generators (y, t).
Vec hs_row(const Halfspace& h) {
  Vec r = h.a;
  r.push_back(-h.b);
  return r;
}

Vec t_row(int dim) {
  Vec r(dim + 1, 0.0);
  r[dim] = 1.0;
  return r;
}

double pair_tol(const Vec& row, const Vec& z) {
  return kFeasTol * std::max(1.0, norm_inf(row) * norm_inf(z));
}

// d = ambient dimension; generators live in R^{d+1}. In polyhedron mode
// row 0 is the homogenizing constraint t >= 0 and generators are
// normalized to t = 1 (vertex) or t = 0, |z| = 1 (ray). In cone mode all
// generators are unit rays.
struct DdSystem {
  int d = 0;
  bool polyhedron_mode = true;
  std::vector<Vec> rows;
  std::vector<char> inserted;
  std::vector<Gen> gens;
};

void normalize_gen(const DdSystem& sys, Vec& z) {
  if (sys.polyhedron_mode) {
    double t = z[sys.d];
    if (t > kFeasTol * std::max(1.0, norm_inf(z))) {
      kernels::scale(1.0 / t, z.data(), z.size());
      z[sys.d] = 1.0;
      return;
    }
    z[sys.d] = 0.0;
  }
  double n = norm2(z);
  if (n > 0) kernels::scale(1.0 / n, z.data(), z.size());
}

std::vector<int> recompute_active(const DdSystem& sys, const Vec& z) {
  std::vector<int> act;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    if (!sys.inserted[i]) continue;
    if (std::fabs(kernels::dot(sys.rows[i].data(), z.data(), z.size())) <=
        pair_tol(sys.rows[i], z))
      act.push_back(static_cast<int>(i));
  }
  return act;
}

bool is_vertex_gen(const DdSystem& sys, const Gen& g) {
  return sys.polyhedron_mode && g.z[sys.d] == 1.0;
}

bool gens_coincide(const DdSystem& sys, const Gen& g1, const Gen& g2) {
  if (is_vertex_gen(sys, g1) != is_vertex_gen(sys, g2)) return false;
  double scale = std::max(1.0, std::max(norm_inf(g1.z), norm_inf(g2.z)));
  for (std::size_t i = 0; i < g1.z.size(); ++i)
    if (std::fabs(g1.z[i] - g2.z[i]) > kVertexDedupTol * scale) return false;
  return true;
}

std::vector<int> active_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

// Two extreme generators are adjacent iff the rows active at both have
// rank hom_dim - 2, i.e. their minimal common face is an edge.
bool adjacent(const DdSystem& sys, const Gen& g1, const Gen& g2) {
  std::vector<int> common = active_intersection(g1.active, g2.active);
  const int need = sys.d - 1;
  if (static_cast<int>(common.size()) < need) return false;
  if (need <= 0) return true;
  Matrix m(static_cast<int>(common.size()), sys.d + 1);
  for (std::size_t i = 0; i < common.size(); ++i)
    std::copy(sys.rows[common[i]].begin(), sys.rows[common[i]].end(),
              m.row(static_cast<int>(i)));
  return rank(m, 1e-8) == need;
}

void dd_insert(DdSystem& sys, int k) {
  sys.inserted[k] = 1;
  const Vec& r = sys.rows[k];
  const std::size_t count = sys.gens.size();
  std::vector<double> s(count);
  std::vector<signed char> cls(count);
  bool any_kept = false;
  for (std::size_t i = 0; i < count; ++i) {
    s[i] = kernels::dot(r.data(), sys.gens[i].z.data(), r.size());
    double tol = pair_tol(r, sys.gens[i].z);
    cls[i] = s[i] > tol ? 1 : (s[i] < -tol ? -1 : 0);
    if (cls[i] >= 0) any_kept = true;
  }
  if (!any_kept) {
    sys.gens.clear();
    return;
  }

  std::vector<Gen> combos;
  for (std::size_t p = 0; p < count; ++p) {
    if (cls[p] != 1) continue;
    for (std::size_t n = 0; n < count; ++n) {
      if (cls[n] != -1) continue;
      if (!adjacent(sys, sys.gens[p], sys.gens[n])) continue;
      Gen g;
      g.z = scaled(sys.gens[n].z, s[p]);
      kernels::axpy(-s[n], sys.gens[p].z.data(), g.z.data(), g.z.size());
      normalize_gen(sys, g.z);
      bool dup = false;
      for (const Gen& other : combos)
        if (gens_coincide(sys, g, other)) {
          dup = true;
          break;
        }
      if (!dup)
        for (std::size_t i = 0; i < count && !dup; ++i)
          if (cls[i] == 0 && gens_coincide(sys, g, sys.gens[i])) dup = true;
      if (dup) continue;
      g.active = recompute_active(sys, g.z);
      combos.push_back(std::move(g));
    }
  }

  std::vector<Gen> next;
  next.reserve(count + combos.size());
  for (std::size_t i = 0; i < count; ++i) {
    if (cls[i] < 0) continue;
    next.push_back(std::move(sys.gens[i]));
    if (cls[i] == 0) {
      auto& act = next.back().active;
      act.insert(std::lower_bound(act.begin(), act.end(), k), k);
    }
  }
  for (Gen& g : combos) next.push_back(std::move(g));
  sys.gens = std::move(next);
}

// Seeds the generator set from a maximal independent subset of the rows
// (scanned in input order) and inserts the remaining rows incrementally.
void dd_run(DdSystem& sys) {
  const int hd = sys.d + 1;
  std::vector<int> basis;
  std::vector<Vec> piv_rows;
  std::vector<int> piv_cols;
  for (std::size_t i = 0; i < sys.rows.size() && static_cast<int>(basis.size()) < hd; ++i) {
    Vec w = sys.rows[i];
    for (std::size_t kidx = 0; kidx < piv_rows.size(); ++kidx)
      kernels::axpy(-w[piv_cols[kidx]], piv_rows[kidx].data(), w.data(), w.size());
    int jmax = 0;
    double best = 0.0;
    for (int j = 0; j < hd; ++j)
      if (std::fabs(w[j]) > best) {
        best = std::fabs(w[j]);
        jmax = j;
      }
    if (best <= 1e-8 * std::max(1.0, norm_inf(sys.rows[i]))) continue;
    kernels::scale(1.0 / w[jmax], w.data(), w.size());
    w[jmax] = 1.0;
    piv_rows.push_back(std::move(w));
    piv_cols.push_back(jmax);
    basis.push_back(static_cast<int>(i));
  }
  if (static_cast<int>(basis.size()) < hd)
    throw LinealityDetected("halfspace normals do not span the space; the set contains a line");

  Matrix b(hd, hd);
  for (int kidx = 0; kidx < hd; ++kidx)
    std::copy(sys.rows[basis[kidx]].begin(), sys.rows[basis[kidx]].end(), b.row(kidx));
  Matrix binv;
  if (!invert(b, binv, 1e-12))
    throw LinealityDetected("degenerate initial basis in double description");

  for (int idx : basis) sys.inserted[idx] = 1;
  sys.gens.clear();
  for (int j = 0; j < hd; ++j) {
    Gen g;
    g.z.resize(hd);
    for (int i = 0; i < hd; ++i) g.z[i] = binv(i, j);
    normalize_gen(sys, g.z);
    g.active = recompute_active(sys, g.z);
    sys.gens.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    if (sys.inserted[i]) continue;
    dd_insert(sys, static_cast<int>(i));
    if (sys.gens.empty()) return;
  }
}

DdSystem make_system(int dim, const std::vector<Halfspace>& hs) {
  DdSystem sys;
  sys.d = dim;
  sys.polyhedron_mode = true;
  sys.rows.push_back(t_row(dim));
  for (const Halfspace& h : hs) {
    if (static_cast<int>(h.a.size()) != dim) throw Error("halfspace dimension mismatch");
    sys.rows.push_back(hs_row(h));
  }
  sys.inserted.assign(sys.rows.size(), 0);
  return sys;
}

VRep vrep_from_gens(const DdSystem& sys) {
  VRep out;
  for (const Gen& g : sys.gens) {
    Vec p(g.z.begin(), g.z.end() - 1);
    if (is_vertex_gen(sys, g))
      out.vertices.push_back(std::move(p));
    else
      out.rays.push_back(std::move(p));
  }
  return out;
}

bool has_vertex(const DdSystem& sys) {
  for (const Gen& g : sys.gens)
    if (is_vertex_gen(sys, g)) return true;
  return false;
}

std::vector<Gen> gens_from_vrep(int dim, const VRep& vr, const std::vector<Halfspace>& hs) {
  DdSystem sys = make_system(dim, hs);
  sys.inserted.assign(sys.rows.size(), 1);
  std::vector<Gen> gens;
  for (const Vec& v : vr.vertices) {
    Gen g;
    g.z = v;
    g.z.push_back(1.0);
    g.active = recompute_active(sys, g.z);
    gens.push_back(std::move(g));
  }
  for (const Vec& r : vr.rays) {
    Gen g;
    g.z = r;
    g.z.push_back(0.0);
    double n = norm2(g.z);
    if (n <= kVertexDedupTol) throw Error("zero ray direction");
    kernels::scale(1.0 / n, g.z.data(), g.z.size());
    g.z[dim] = 0.0;
    g.active = recompute_active(sys, g.z);
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

const std::vector<Halfspace>& Polyhedron::hrep() const {
  if (!hrep_) throw Error("polyhedron has no H-representation; call with_hrep()");
  return *hrep_;
}

const VRep& Polyhedron::vrep() const {
  if (!vrep_) throw Error("polyhedron has no V-representation; call with_vrep()");
  return *vrep_;
}

Polyhedron Polyhedron::from_hrep(int dim, std::vector<Halfspace> hs) {
  Polyhedron p;
  p.dim_ = dim;
  p.hrep_ = std::move(hs);
  return p;
}

Polyhedron Polyhedron::from_vrep(int dim, VRep vr) {
  Polyhedron p;
  p.dim_ = dim;
  p.gens_ = gens_from_vrep(dim, vr, {});
  // store the normalized generator view so ray directions are unit length
  DdSystem sys = make_system(dim, {});
  sys.gens = p.gens_;
  p.vrep_ = vrep_from_gens(sys);
  return p;
}

Polyhedron Polyhedron::from_both(int dim, std::vector<Halfspace> hs, VRep vr) {
  Polyhedron p;
  p.dim_ = dim;
  p.gens_ = gens_from_vrep(dim, vr, hs);
  DdSystem sys = make_system(dim, {});
  sys.gens = p.gens_;
  p.vrep_ = vrep_from_gens(sys);
  p.hrep_ = std::move(hs);
  return p;
}

Polyhedron Polyhedron::with_vrep() const {
  if (vrep_) return *this;
  DdSystem sys = make_system(dim_, hrep());
  dd_run(sys);
  if (!has_vertex(sys)) throw EmptyPolyhedron("halfspace intersection is empty");
  Polyhedron p;
  p.dim_ = dim_;
  p.hrep_ = hrep_;
  p.vrep_ = vrep_from_gens(sys);
  p.gens_ = std::move(sys.gens);
  return p;
}

Polyhedron Polyhedron::with_hrep() const {
  if (hrep_) return *this;
  return from_both(dim_, v_to_h(vrep(), dim_), *vrep_);
}

VRep dd_h_to_v(const std::vector<Halfspace>& hrep, int dim) {
  if (hrep.empty()) throw Error("empty H-representation");
  return Polyhedron::from_hrep(dim, hrep).with_vrep().vrep();
}

Polyhedron dd_add_halfspace(const Polyhedron& poly, const Halfspace& h) {
  Polyhedron base = poly;
  if (!base.has_vrep()) base = base.with_vrep();
  if (!base.has_hrep()) base = base.with_hrep();

  DdSystem sys = make_system(base.dim(), base.hrep());
  sys.rows.push_back(hs_row(h));
  sys.inserted.assign(sys.rows.size(), 1);
  sys.inserted.back() = 0;
  sys.gens = std::move(base.gens_);
  dd_insert(sys, static_cast<int>(sys.rows.size()) - 1);
  if (!has_vertex(sys))
    throw EmptyPolyhedron("cut removed every vertex of the polyhedron");

  Polyhedron out;
  out.dim_ = base.dim();
  std::vector<Halfspace> hs = base.hrep();
  hs.push_back(h);
  out.hrep_ = std::move(hs);
  out.vrep_ = vrep_from_gens(sys);
  out.gens_ = std::move(sys.gens);
  return out;
}

Polyhedron slice_by_hyperplane(const Polyhedron& poly, const Vec& normal, double offset) {
  Polyhedron p = dd_add_halfspace(poly, Halfspace(normal, offset));
  Vec neg = scaled(normal, -1.0);
  return dd_add_halfspace(p, Halfspace(neg, -offset));
}

VRep project_drop_last(const VRep& v) {
  if (!v.rays.empty()) throw RaysPresent("projection requires a bounded V-representation");
  VRep out;
  for (const Vec& p : v.vertices) {
    if (p.size() < 2) throw Error("ambient dimension must be at least 2");
    Vec q(p.begin(), p.end() - 1);
    bool dup = false;
    for (const Vec& existing : out.vertices) {
      double scale = std::max(1.0, std::max(norm_inf(q), norm_inf(existing)));
      if (dist2(q, existing) <= kVertexDedupTol * scale) {
        dup = true;
        break;
      }
    }
    if (!dup) out.vertices.push_back(std::move(q));
  }
  return out;
}

bool contains_point(const Polyhedron& poly, const Vec& p, double tol) {
  for (const Halfspace& h : poly.hrep())
    if (h.eval(p) < -tol) return false;
  return true;
}

std::vector<Halfspace> v_to_h(const VRep& vr, int dim) {
  if (vr.vertices.empty()) throw Error("V-representation has no vertices");
  DdSystem sys;
  sys.d = dim;
  sys.polyhedron_mode = false;
  for (const Vec& v : vr.vertices) {
    Vec r = v;
    r.push_back(1.0);
    sys.rows.push_back(std::move(r));
  }
  for (const Vec& r0 : vr.rays) {
    Vec r = r0;
    r.push_back(0.0);
    sys.rows.push_back(std::move(r));
  }
  sys.inserted.assign(sys.rows.size(), 0);
  dd_run(sys);
  std::vector<Halfspace> out;
  for (const Gen& g : sys.gens) {
    Vec a(g.z.begin(), g.z.end() - 1);
    if (norm2(a) <= 1e-7) continue;  // the trivial whole-space direction
    out.emplace_back(std::move(a), -g.z.back());
  }
  if (out.empty()) throw Error("facet enumeration produced no facets");
  return out;
}

}  // namespace benson
