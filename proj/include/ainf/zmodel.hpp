#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace ainf {

using i64 = std::int64_t;

inline constexpr i64 kNegInf = std::numeric_limits<i64>::min() / 4;
inline constexpr i64 kPosInf = std::numeric_limits<i64>::max() / 4;

inline bool is_inf(i64 x) { return x <= kNegInf || x >= kPosInf; }

// Position in the linearisation that starts at vertex (0,0). Block 0's negative
// half goes last, so the cyclic order of any Blocks(k) is the order of these keys.
struct LinearKey {
  int seg = 0;
  int kind = 0;  // 0 vertex, 1 limit point after the segment
  i64 idx = 0;
  auto operator<=>(const LinearKey&) const = default;
};

struct Vertex {
  int block = 0;
  i64 idx = 0;

  LinearKey key() const;
  bool operator==(const Vertex&) const = default;
  std::strong_ordering operator<=>(const Vertex& o) const { return key() <=> o.key(); }
};

// a vertex or a limit point L(gap), the accumulation point between block gap and gap+1
struct Point {
  bool limit = false;
  Vertex v;
  int gap = 0;

  Point() = default;
  Point(Vertex x) : v(x) {}  // NOLINT(google-explicit-constructor)
  static Point limit_at(int gap) {
    Point p;
    p.limit = true;
    p.gap = gap;
    return p;
  }

  LinearKey key() const;
  bool operator==(const Point& o) const { return key() == o.key(); }
  std::strong_ordering operator<=>(const Point& o) const { return key() <=> o.key(); }
};

struct IdxRange {
  int block = 0;
  i64 lo = 0;
  i64 hi = 0;
};

class ZModel {
 public:
  static ZModel finite(int n);
  static ZModel blocks(int k);

  bool is_finite() const { return finite_; }
  int n() const { return finite_ ? count_ : 0; }
  int k() const { return finite_ ? 1 : count_; }
  int limit_count() const { return finite_ ? 0 : count_; }

  bool contains(const Point& p) const;
  Vertex succ(Vertex x) const;
  Vertex pred(Vertex x) const;
  Vertex at(i64 i) const { return Vertex{0, i}; }

  // idx bounds of one block
  i64 dmin() const { return finite_ ? 0 : kNegInf; }
  i64 dmax() const { return finite_ ? count_ - 1 : kPosInf; }

  // every vertex of the closed interval [lo,hi] lying in `block`, as at most two ranges
  std::vector<IdxRange> pieces(const Point& lo, const Point& hi, int block) const;
  Point range_sup(const IdxRange& r) const;
  Point range_inf(const IdxRange& r) const;

  std::string name() const;
  bool operator==(const ZModel&) const = default;

 private:
  bool finite_ = true;
  int count_ = 0;
};

// cyclic order; lo == hi is the singleton
bool in_closed(const Point& lo, const Point& x, const Point& hi);
// lo != hi
bool in_open(const Point& lo, const Point& x, const Point& hi);
// order of points read counterclockwise starting at anchor
bool rel_less(const Point& anchor, const Point& x, const Point& y);

struct Arc {
  Point p, q;  // p < q

  static Arc make(const Point& a, const Point& b);
  bool has_endpoint(const Point& x) const { return p == x || q == x; }
  Point other(const Point& x) const { return p == x ? q : p; }
  bool finite_ends() const { return !p.limit && !q.limit; }

  auto operator<=>(const Arc&) const = default;
  bool operator==(const Arc&) const = default;
};

bool is_edge(const ZModel& z, const Arc& a);
bool is_diagonal(const ZModel& z, const Arc& a);
bool crosses(const Arc& a, const Arc& b);

std::string to_string(const Point& p);
std::string to_string(const Arc& a);

}  // namespace ainf
