#ifndef BENSON_GEOMETRY_HPP
#define BENSON_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "benson/errors.hpp"
#include "benson/linalg.hpp"

namespace benson {

// Vertex dedup tolerance (instance data is kept at unit scale).
inline constexpr double kVertexDedupTol = 1e-8;
// Halfspace feasibility tolerance.
inline constexpr double kFeasTol = 1e-9;

// Closed halfspace {y : a.y >= b}, stored with ||a||_2 = 1 so duplicate
// detection and cut comparison are scale-free.
struct Halfspace {
  Vec a;
  double b = 0.0;

  Halfspace() = default;
  Halfspace(Vec a_in, double b_in);  // normalizes; rejects a ~ 0

  double eval(const Vec& y) const { return dot(a, y) - b; }
};

struct VRep {
  std::vector<Vec> vertices;
  std::vector<Vec> rays;  // unit length, pairwise non-parallel
};

namespace detail {
// Homogeneous generator of the lifted cone; z has size dim+1 and the last
// component is the homogenizing coordinate (1 for vertices, 0 for rays).
struct Gen {
  Vec z;
  std::vector<int> active;  // indices into the inserted row list, sorted
};
}  // namespace detail

// Convex polyhedron with dual representations; either may be absent until
// requested. Values are immutable after construction; operations return
// new values.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_hrep(int dim, std::vector<Halfspace> hs);
  static Polyhedron from_vrep(int dim, VRep vr);
  static Polyhedron from_both(int dim, std::vector<Halfspace> hs, VRep vr);

  int dim() const { return dim_; }
  bool has_hrep() const { return hrep_.has_value(); }
  bool has_vrep() const { return vrep_.has_value(); }
  const std::vector<Halfspace>& hrep() const;
  const VRep& vrep() const;

  // Returns a copy carrying the requested representation, converting via
  // double description (H to V) or polar double description (V to H).
  Polyhedron with_vrep() const;
  Polyhedron with_hrep() const;

 private:
  int dim_ = 0;
  std::optional<std::vector<Halfspace>> hrep_;
  std::optional<VRep> vrep_;
  std::vector<detail::Gen> gens_;  // nonempty iff vrep_ present

  friend Polyhedron dd_add_halfspace(const Polyhedron&, const Halfspace&);
};

// All vertices and extreme rays of the intersection of the halfspaces.
// The described set must be pointed; throws EmptyPolyhedron or
// LinealityDetected otherwise.
VRep dd_h_to_v(const std::vector<Halfspace>& hrep, int dim);

// Incremental double-description step: poly intersected with h, with the
// vertex set updated and h appended to the H-rep. Throws EmptyPolyhedron
// when the cut removes everything.
Polyhedron dd_add_halfspace(const Polyhedron& poly, const Halfspace& h);

// poly intersected with {y : normal.y = offset}, implemented as two
// opposing halfspace cuts. Throws EmptyPolyhedron when the plane misses
// the set.
Polyhedron slice_by_hyperplane(const Polyhedron& poly, const Vec& normal, double offset);

// Drops the last coordinate of every vertex and merges duplicates.
// Throws RaysPresent when rays are nonempty.
VRep project_drop_last(const VRep& v);

// True iff a.p >= b - tol for every stored halfspace.
bool contains_point(const Polyhedron& poly, const Vec& p, double tol);

// Facet enumeration for a full-dimensional conv(vertices) + cone(rays),
// by double description on the polar cone. Redundant input points are
// allowed. Throws LinealityDetected when the set is not full-dimensional.
std::vector<Halfspace> v_to_h(const VRep& vr, int dim);

}  // namespace benson

#endif
