#include "ainf/zmodel.hpp"

#include "ainf/errors.hpp"

#include <climits>

namespace ainf {

LinearKey Vertex::key() const {
  if (block == 0 && idx < 0) return {INT_MAX, 0, idx};
  return {block, 0, idx};
}

LinearKey Point::key() const {
  if (limit) return {gap, 1, 0};
  return v.key();
}

ZModel ZModel::finite(int n) {
  if (n < 4) throw precondition_error("finite model needs n >= 4, got " + std::to_string(n));
  ZModel z;
  z.finite_ = true;
  z.count_ = n;
  return z;
}

ZModel ZModel::blocks(int k) {
  if (k < 1) throw precondition_error("block model needs k >= 1");
  ZModel z;
  z.finite_ = false;
  z.count_ = k;
  return z;
}

bool ZModel::contains(const Point& p) const {
  if (p.limit) return !finite_ && p.gap >= 0 && p.gap < count_;
  if (finite_) return p.v.block == 0 && p.v.idx >= 0 && p.v.idx < count_;
  return p.v.block >= 0 && p.v.block < count_ && !is_inf(p.v.idx);
}

Vertex ZModel::succ(Vertex x) const {
  if (finite_) return {0, (x.idx + 1) % count_};
  return {x.block, x.idx + 1};
}

Vertex ZModel::pred(Vertex x) const {
  if (finite_) return {0, (x.idx + count_ - 1) % count_};
  return {x.block, x.idx - 1};
}

std::vector<IdxRange> ZModel::pieces(const Point& lo, const Point& hi, int block) const {
  bool lo_in = !lo.limit && lo.v.block == block;
  bool hi_in = !hi.limit && hi.v.block == block;
  std::vector<IdxRange> out;
  if (lo_in && hi_in) {
    if (lo.v.idx <= hi.v.idx) {
      out.push_back({block, lo.v.idx, hi.v.idx});
    } else {
      out.push_back({block, lo.v.idx, dmax()});
      out.push_back({block, dmin(), hi.v.idx});
    }
  } else if (lo_in) {
    out.push_back({block, lo.v.idx, dmax()});
  } else if (hi_in) {
    out.push_back({block, dmin(), hi.v.idx});
  } else if (in_closed(lo, Vertex{block, 0}, hi)) {
    out.push_back({block, dmin(), dmax()});
  }
  return out;
}

Point ZModel::range_sup(const IdxRange& r) const {
  if (r.hi >= kPosInf) return Point::limit_at(r.block);
  return Vertex{r.block, r.hi};
}

Point ZModel::range_inf(const IdxRange& r) const {
  if (r.lo <= kNegInf) return Point::limit_at((r.block + count_ - 1) % count_);
  return Vertex{r.block, r.lo};
}

std::string ZModel::name() const {
  return (finite_ ? "Finite(" : "Blocks(") + std::to_string(count_) + ")";
}

bool in_closed(const Point& lo, const Point& x, const Point& hi) {
  if (lo <= hi) return lo <= x && x <= hi;
  return x >= lo || x <= hi;
}

bool in_open(const Point& lo, const Point& x, const Point& hi) {
  if (lo < hi) return lo < x && x < hi;
  if (lo == hi) return x != lo;
  return x > lo || x < hi;
}

bool rel_less(const Point& anchor, const Point& x, const Point& y) {
  bool xw = x < anchor, yw = y < anchor;
  if (xw != yw) return !xw;
  return x < y;
}

Arc Arc::make(const Point& a, const Point& b) {
  if (a == b) throw precondition_error("degenerate arc at " + to_string(a));
  return a < b ? Arc{a, b} : Arc{b, a};
}

bool is_edge(const ZModel& z, const Arc& a) {
  if (!a.finite_ends()) return false;
  return z.succ(a.p.v) == a.q.v || z.succ(a.q.v) == a.p.v;
}

bool is_diagonal(const ZModel& z, const Arc& a) {
  return a.finite_ends() && z.contains(a.p) && z.contains(a.q) && a.p != a.q && !is_edge(z, a);
}

bool crosses(const Arc& a, const Arc& b) {
  if (a.has_endpoint(b.p) || a.has_endpoint(b.q)) return false;
  return in_open(a.p, b.p, a.q) != in_open(a.p, b.q, a.q);
}

std::string to_string(const Point& p) {
  if (p.limit) return "L" + std::to_string(p.gap);
  if (p.v.block == 0) return std::to_string(p.v.idx);
  return std::to_string(p.v.block) + ":" + std::to_string(p.v.idx);
}

std::string to_string(const Arc& a) { return "{" + to_string(a.p) + "," + to_string(a.q) + "}"; }

}  // namespace ainf
