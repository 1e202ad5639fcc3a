#pragma once

#include "ainf/zmodel.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ainf {

enum class TailKind { fountain, leapfrog };

// The diagonals accumulating at L(gap).
// fountain: {base,(gap,i)} for i >= right_from and {base,(gap+1,j)} for j <= left_to
// leapfrog: {(gap,r+m),(gap+1,l-m)} and {(gap+1,l-m),(gap,r+m+1)}, r = right_from, l = left_to
struct Tail {
  int gap = 0;
  TailKind kind = TailKind::fountain;
  Vertex base;
  i64 right_from = 0;
  i64 left_to = 0;
  bool operator==(const Tail&) const = default;
};

struct Track {
  int block = 0;
  i64 offset = 0;
  int slope = 0;
  Vertex at(i64 m) const { return {block, offset + slope * m}; }
};

// one-parameter family of tail diagonals, member(m) for m >= 0
struct Family {
  int tail = 0;
  int which = 0;
  Track a, b;
  Arc member(i64 m) const { return Arc::make(a.at(m), b.at(m)); }
};

struct Member {
  int family = -1;  // -1: a core diagonal
  i64 m = 0;
};

struct Interval {
  Point lo, hi;
  bool contains(const Point& x) const { return in_closed(lo, x, hi); }
};

struct VertexSet {
  std::vector<Vertex> points;
  std::vector<IdxRange> ranges;

  bool empty() const { return points.empty() && ranges.empty(); }
  // extremes in the order of `in` read from in.lo; may be a limit point
  std::optional<Point> sup(const ZModel& z, const Interval& in) const;
  std::optional<Point> inf(const ZModel& z, const Interval& in) const;
};

class Triangulation {
 public:
  Triangulation() : z_(ZModel::finite(4)) {}
  Triangulation(ZModel z, std::vector<Arc> core, std::vector<Tail> tails = {});

  const ZModel& model() const { return z_; }
  const std::vector<Arc>& core() const { return core_; }
  const std::vector<Tail>& tails() const { return tails_; }
  const std::vector<Family>& families() const { return families_; }

  bool contains(const Arc& a) const { return locate(a).has_value(); }
  std::optional<Member> locate(const Arc& a) const;
  Arc member(const Member& m) const;

  // vertices of `from` joined to a vertex of `to`; the intervals are disjoint
  VertexSet connected(const Interval& from, const Interval& to, bool diagonals, bool edges) const;

  // tail members with m beyond this bound compare with every named vertex the same way
  i64 stability_bound(const std::vector<Point>& extra = {}) const;
  std::vector<Arc> window(i64 m_max) const;
  std::vector<Arc> window() const { return window(stability_bound()); }

  bool operator==(const Triangulation& o) const {
    return z_ == o.z_ && core_ == o.core_ && tails_ == o.tails_;
  }

 private:
  ZModel z_;
  std::vector<Arc> core_;
  std::set<Arc> core_set_;
  std::map<Vertex, std::vector<Vertex>> adj_;
  std::vector<Tail> tails_;
  std::vector<Family> families_;
};

struct Violation {
  std::string kind;
  std::vector<Arc> witnesses;
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

ValidationReport validate(const Triangulation& t);

enum class Link { edge, diagonal, either };

std::optional<Vertex> sup_connected(const Triangulation& t, Vertex x, const Interval& in, Link link);
std::optional<Vertex> inf_connected(const Triangulation& t, Vertex x, const Interval& in, Link link);

// third vertex of the triangle on d's side running counterclockwise from `from`
Vertex third_vertex(const Triangulation& t, const Arc& d, const Point& from);
// the endpoint of d from which the side containing x starts
Point side_start(const Arc& d, const Point& x);

struct Quadruple {
  Vertex i0, s0, h0, i1, s1, h1;
};

std::optional<Quadruple> bridge_quadruple(const Triangulation& t, Vertex a0, Vertex b0, Vertex a1,
                                          Vertex b1);
// v = {v0,v1} with v0 < v1; i0 <= s0 < v0 < i1 <= s1 < v1, none when v crosses nothing
std::optional<Quadruple> crossing_quadruple(const Triangulation& t, const Arc& v);

std::vector<Vertex> ears(const Triangulation& t);

struct FlipResult {
  Triangulation result;
  Arc partner;
};
FlipResult flip(const Triangulation& t, const Arc& d);

using Triangle = std::array<Vertex, 3>;  // counterclockwise
std::vector<Triangle> triangles(const Triangulation& t, const std::vector<Arc>& around);

struct DualQuiver {
  std::vector<Arc> nodes;
  std::vector<std::pair<int, int>> arrows;
  bool truncated = false;
  i64 window = 0;
  int index_of(const Arc& a) const;
};
DualQuiver dual_quiver(const Triangulation& t);
bool is_acyclic(const DualQuiver& q);

// all triangulations of the n-gon, sorted
std::vector<Triangulation> enumerate_polygon(int n);

}  // namespace ainf
