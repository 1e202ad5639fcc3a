#include "ainf/triangulation.hpp"

#include "ainf/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <queue>

namespace ainf {

namespace {

i64 sat_add(i64 x, i64 d) {
  if (x <= kNegInf) return kNegInf;
  if (x >= kPosInf) return kPosInf;
  return x + d;
}

i64 sat_neg(i64 x) {
  if (x <= kNegInf) return kPosInf;
  if (x >= kPosInf) return kNegInf;
  return -x;
}

using MRange = std::pair<i64, i64>;

// parameters m >= 0 with track position inside the interval
std::vector<MRange> m_ranges(const ZModel& z, const Track& tr, const Interval& in) {
  std::vector<MRange> out;
  if (tr.slope == 0) {
    if (in.contains(tr.at(0))) out.push_back({0, kPosInf});
    return out;
  }
  for (const IdxRange& r : z.pieces(in.lo, in.hi, tr.block)) {
    i64 lo, hi;
    if (tr.slope > 0) {
      lo = sat_add(r.lo, -tr.offset);
      hi = sat_add(r.hi, -tr.offset);
    } else {
      lo = sat_add(sat_neg(r.hi), tr.offset);
      hi = sat_add(sat_neg(r.lo), tr.offset);
    }
    lo = std::max<i64>(lo, 0);
    if (lo <= hi) out.push_back({lo, hi});
  }
  return out;
}

constexpr i64 kAnyM = -1;

std::optional<i64> track_param(const Track& tr, const Point& x) {
  if (x.limit) return std::nullopt;
  if (tr.slope == 0) {
    if (tr.at(0) == x.v) return kAnyM;
    return std::nullopt;
  }
  if (x.v.block != tr.block) return std::nullopt;
  i64 m = (x.v.idx - tr.offset) * tr.slope;
  if (m < 0) return std::nullopt;
  return m;
}

std::optional<i64> join_params(std::optional<i64> a, std::optional<i64> b) {
  if (!a || !b) return std::nullopt;
  if (*a == kAnyM) return *b == kAnyM ? std::nullopt : b;
  if (*b == kAnyM || *a == *b) return a;
  return std::nullopt;
}

bool strictly_ccw(const std::vector<Point>& xs) {
  for (size_t i = 1; i < xs.size(); ++i)
    if (!rel_less(xs[0], xs[i - 1], xs[i])) return false;
  return true;
}

}  // namespace

std::optional<Point> VertexSet::sup(const ZModel& z, const Interval& in) const {
  std::optional<Point> best;
  auto take = [&](const Point& p) {
    if (!best || rel_less(in.lo, *best, p)) best = p;
  };
  for (const Vertex& v : points) take(v);
  for (const IdxRange& r : ranges) take(z.range_sup(r));
  return best;
}

std::optional<Point> VertexSet::inf(const ZModel& z, const Interval& in) const {
  std::optional<Point> best;
  auto take = [&](const Point& p) {
    if (!best || rel_less(in.lo, p, *best)) best = p;
  };
  for (const Vertex& v : points) take(v);
  for (const IdxRange& r : ranges) take(z.range_inf(r));
  return best;
}

Triangulation::Triangulation(ZModel z, std::vector<Arc> core, std::vector<Tail> tails)
    : z_(z), tails_(std::move(tails)) {
  for (const Arc& a : core) {
    if (!a.finite_ends() || !z_.contains(a.p) || !z_.contains(a.q))
      throw validation_error("arc " + to_string(a) + " is not an arc of " + z_.name());
    if (!core_set_.insert(a).second) throw validation_error("duplicate diagonal " + to_string(a));
  }
  core_.assign(core_set_.begin(), core_set_.end());
  for (const Arc& a : core_) {
    adj_[a.p.v].push_back(a.q.v);
    adj_[a.q.v].push_back(a.p.v);
  }

  if (z_.is_finite()) {
    if (!tails_.empty()) throw validation_error("a finite model has no tails");
    return;
  }
  std::sort(tails_.begin(), tails_.end(), [](const Tail& x, const Tail& y) { return x.gap < y.gap; });
  int k = z_.k();
  if (static_cast<int>(tails_.size()) != k)
    throw validation_error("expected one tail at each of the " + std::to_string(k) + " limit points");
  for (int g = 0; g < k; ++g) {
    const Tail& tl = tails_[g];
    if (tl.gap != g) throw validation_error("limit point L" + std::to_string(g) + " has no tail");
    int nb = (g + 1) % k;
    if (tl.kind == TailKind::fountain) {
      if (!z_.contains(tl.base)) throw validation_error("fountain base outside the model");
      Track base{tl.base.block, tl.base.idx, 0};
      families_.push_back({g, 0, base, Track{g, tl.right_from, +1}});
      families_.push_back({g, 1, base, Track{nb, tl.left_to, -1}});
    } else {
      families_.push_back({g, 0, Track{g, tl.right_from, +1}, Track{nb, tl.left_to, -1}});
      families_.push_back({g, 1, Track{nb, tl.left_to, -1}, Track{g, tl.right_from + 1, +1}});
    }
  }
}

std::optional<Member> Triangulation::locate(const Arc& a) const {
  if (a.finite_ends() && core_set_.count(a)) return Member{-1, 0};
  for (size_t i = 0; i < families_.size(); ++i) {
    const Family& f = families_[i];
    auto m = join_params(track_param(f.a, a.p), track_param(f.b, a.q));
    if (!m) m = join_params(track_param(f.a, a.q), track_param(f.b, a.p));
    if (m) return Member{static_cast<int>(i), *m};
  }
  return std::nullopt;
}

Arc Triangulation::member(const Member& m) const {
  if (m.family < 0) throw precondition_error("core diagonals carry no parameter");
  return families_.at(m.family).member(m.m);
}

VertexSet Triangulation::connected(const Interval& from, const Interval& to, bool diagonals,
                                   bool edges) const {
  VertexSet out;
  if (diagonals) {
    if (to.lo == to.hi && !to.lo.limit) {
      auto it = adj_.find(to.lo.v);
      if (it != adj_.end())
        for (const Vertex& y : it->second)
          if (from.contains(y)) out.points.push_back(y);
    } else {
      for (const Arc& d : core_) {
        if (from.contains(d.p) && to.contains(d.q)) out.points.push_back(d.p.v);
        if (from.contains(d.q) && to.contains(d.p)) out.points.push_back(d.q.v);
      }
    }
    for (const Family& f : families_) {
      for (int side = 0; side < 2; ++side) {
        const Track& ta = side == 0 ? f.a : f.b;
        const Track& tb = side == 0 ? f.b : f.a;
        auto ma = m_ranges(z_, ta, from);
        if (ma.empty()) continue;
        auto mb = m_ranges(z_, tb, to);
        for (const MRange& x : ma) {
          for (const MRange& y : mb) {
            i64 lo = std::max(x.first, y.first), hi = std::min(x.second, y.second);
            if (lo > hi) continue;
            if (ta.slope == 0) {
              out.points.push_back(ta.at(0));
            } else if (ta.slope > 0) {
              out.ranges.push_back({ta.block, sat_add(lo, ta.offset), sat_add(hi, ta.offset)});
            } else {
              out.ranges.push_back(
                  {ta.block, sat_add(sat_neg(hi), ta.offset), sat_add(sat_neg(lo), ta.offset)});
            }
          }
        }
      }
    }
  }
  if (edges) {
    std::vector<Vertex> cand;
    for (const Point* p : {&from.lo, &from.hi, &to.lo, &to.hi}) {
      if (p->limit) continue;
      cand.push_back(p->v);
      cand.push_back(z_.succ(p->v));
      cand.push_back(z_.pred(p->v));
    }
    for (const Vertex& x : cand) {
      if (!from.contains(x)) continue;
      if (to.contains(z_.succ(x)) || to.contains(z_.pred(x))) out.points.push_back(x);
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

i64 Triangulation::stability_bound(const std::vector<Point>& extra) const {
  i64 w = 0;
  auto see = [&](i64 x) { w = std::max<i64>(w, x < 0 ? -x : x); };
  for (const Arc& a : core_) {
    see(a.p.v.idx);
    see(a.q.v.idx);
  }
  for (const Tail& tl : tails_) {
    see(tl.base.idx);
    see(tl.right_from);
    see(tl.left_to);
  }
  for (const Point& p : extra)
    if (!p.limit) see(p.v.idx);
  return 2 * w + 4;
}

std::vector<Arc> Triangulation::window(i64 m_max) const {
  std::vector<Arc> out = core_;
  for (const Family& f : families_)
    for (i64 m = 0; m <= m_max; ++m) out.push_back(f.member(m));
  return out;
}

ValidationReport validate(const Triangulation& t) {
  ValidationReport rep;
  const ZModel& z = t.model();
  auto fail = [&](std::string kind, std::vector<Arc> w, std::string detail) {
    rep.valid = false;
    rep.violations.push_back({std::move(kind), std::move(w), std::move(detail)});
  };
  if (t.core().empty() && t.tails().empty()) {
    fail("empty", {}, "no diagonals");
    return rep;
  }
  std::vector<Arc> win = t.window();
  std::set<Arc> seen;
  std::vector<Arc> diags;
  for (const Arc& a : win) {
    if (!is_diagonal(z, a)) {
      fail("not-a-diagonal", {a}, to_string(a) + " is an edge or degenerate");
      continue;
    }
    if (!seen.insert(a).second) {
      fail("duplicate", {a}, to_string(a) + " appears twice");
      continue;
    }
    diags.push_back(a);
  }
  for (size_t i = 0; i < diags.size(); ++i)
    for (size_t j = i + 1; j < diags.size(); ++j)
      if (crosses(diags[i], diags[j]))
        fail("crossing", {diags[i], diags[j]}, to_string(diags[i]) + " crosses " + to_string(diags[j]));
  if (!rep.valid) return rep;
  for (const Arc& d : diags) {
    for (const Point& from : {d.p, d.q}) {
      try {
        third_vertex(t, d, from);
      } catch (const invalid_triangulation& e) {
        fail("non-triangular-face", {d}, e.what());
      }
    }
  }
  return rep;
}

namespace {

std::optional<Vertex> extreme(const Triangulation& t, Vertex x, const Interval& in, Link link,
                              bool want_sup) {
  VertexSet s = t.connected(in, Interval{x, x}, link != Link::edge, link != Link::diagonal);
  auto p = want_sup ? s.sup(t.model(), in) : s.inf(t.model(), in);
  if (!p) return std::nullopt;
  if (p->limit)
    throw invalid_triangulation("neighbours of " + to_string(x) + " accumulate at " + to_string(*p));
  return p->v;
}

Vertex extreme_between(const Triangulation& t, const Interval& from, const Interval& to,
                       bool want_sup) {
  VertexSet s = t.connected(from, to, true, true);
  auto p = want_sup ? s.sup(t.model(), from) : s.inf(t.model(), from);
  if (!p) throw std::logic_error("bridge lost its connecting diagonal");
  if (p->limit) throw invalid_triangulation("connecting diagonals accumulate at " + to_string(*p));
  return p->v;
}

}  // namespace

std::optional<Vertex> sup_connected(const Triangulation& t, Vertex x, const Interval& in, Link link) {
  return extreme(t, x, in, link, true);
}

std::optional<Vertex> inf_connected(const Triangulation& t, Vertex x, const Interval& in, Link link) {
  return extreme(t, x, in, link, false);
}

Vertex third_vertex(const Triangulation& t, const Arc& d, const Point& from) {
  const ZModel& z = t.model();
  if (!d.has_endpoint(from) || !d.finite_ends())
    throw precondition_error("third_vertex needs a side of " + to_string(d));
  Point to = d.other(from);
  if (!is_edge(z, d) && !t.contains(d))
    throw precondition_error(to_string(d) + " is neither an edge nor in T");
  Vertex lo = z.succ(from.v), hi = z.pred(to.v);
  if (Point(lo) == to) throw precondition_error("side of " + to_string(d) + " has no vertices");
  Interval side{lo, hi};
  auto h = extreme(t, to.v, side, Link::either, false);
  if (!h) throw std::logic_error("edge neighbour missing");
  Arc closing = Arc::make(from, *h);
  if (!is_edge(z, closing) && !t.contains(closing))
    throw invalid_triangulation("face on the side of " + to_string(d) + " is not a triangle");
  return *h;
}

std::optional<Quadruple> bridge_quadruple(const Triangulation& t, Vertex a0, Vertex b0, Vertex a1,
                                          Vertex b1) {
  const ZModel& z = t.model();
  if (!strictly_ccw({z.pred(a0), b0, z.pred(a1), b1}))
    throw precondition_error("bridge needs a0- < b0 < a1- < b1 < a0- cyclically");
  Interval i0v{a0, b0}, i1v{a1, b1};
  if (t.connected(i0v, i1v, true, false).empty()) return std::nullopt;
  Quadruple r;
  r.i0 = extreme_between(t, i0v, i1v, false);
  r.s1 = extreme_between(t, i1v, Interval{r.i0, r.i0}, true);
  r.i1 = extreme_between(t, i1v, i0v, false);
  r.s0 = extreme_between(t, i0v, Interval{r.i1, r.i1}, true);
  r.h0 = third_vertex(t, Arc::make(r.s0, r.i1), r.s0);
  r.h1 = third_vertex(t, Arc::make(r.s1, r.i0), r.s1);
  if (!in_open(b0, r.h0, a1) || !in_open(b1, r.h1, a0))
    throw std::logic_error("bridge triangle off its side");
  return r;
}

std::optional<Quadruple> crossing_quadruple(const Triangulation& t, const Arc& v) {
  const ZModel& z = t.model();
  if (!is_diagonal(z, v)) throw precondition_error(to_string(v) + " is not a diagonal");
  Vertex v0 = v.p.v, v1 = v.q.v;
  auto q = bridge_quadruple(t, z.succ(v1), z.pred(v0), z.succ(v0), z.pred(v1));
  if (q && (q->h0 != v0 || q->h1 != v1)) throw std::logic_error("crossing quadruple misses v");
  return q;
}

Point side_start(const Arc& d, const Point& x) {
  if (d.has_endpoint(x)) throw precondition_error("side of " + to_string(d) + " named by an endpoint");
  return in_open(d.p, x, d.q) ? d.p : d.q;
}

std::vector<Vertex> ears(const Triangulation& t) {
  const ZModel& z = t.model();
  std::set<Vertex> out;
  for (const Arc& a : t.window()) {
    if (!a.finite_ends()) continue;
    if (z.succ(z.succ(a.p.v)) == a.q.v) out.insert(z.succ(a.p.v));
    if (z.succ(z.succ(a.q.v)) == a.p.v) out.insert(z.succ(a.q.v));
  }
  return {out.begin(), out.end()};
}

FlipResult flip(const Triangulation& t, const Arc& d) {
  auto loc = t.locate(d);
  if (!loc || loc->family >= 0) throw precondition_error(to_string(d) + " is not a core diagonal of T");
  Vertex h1 = third_vertex(t, d, d.p), h2 = third_vertex(t, d, d.q);
  Arc partner = Arc::make(h1, h2);
  std::vector<Arc> core;
  for (const Arc& a : t.core())
    if (a != d) core.push_back(a);
  core.push_back(partner);
  return {Triangulation(t.model(), core, t.tails()), partner};
}

std::vector<Triangle> triangles(const Triangulation& t, const std::vector<Arc>& around) {
  std::set<Triangle> out;
  for (const Arc& d : around) {
    if (!is_diagonal(t.model(), d)) continue;
    for (const Point& from : {d.p, d.q}) {
      Triangle tri{d.p.v, d.q.v, third_vertex(t, d, from)};
      std::sort(tri.begin(), tri.end());
      out.insert(tri);
    }
  }
  return {out.begin(), out.end()};
}

int DualQuiver::index_of(const Arc& a) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), a);
  if (it == nodes.end() || *it != a) return -1;
  return static_cast<int>(it - nodes.begin());
}

DualQuiver dual_quiver(const Triangulation& t) {
  DualQuiver q;
  if (t.model().is_finite()) {
    q.nodes = t.core();
  } else {
    q.truncated = true;
    q.window = t.stability_bound();
    q.nodes = t.window(q.window);
    std::sort(q.nodes.begin(), q.nodes.end());
  }
  std::set<std::pair<int, int>> arrows;
  for (const Triangle& tri : triangles(t, q.nodes)) {
    int side[3];
    for (int i = 0; i < 3; ++i) side[i] = q.index_of(Arc::make(tri[i], tri[(i + 1) % 3]));
    // side -> next side counterclockwise
    for (int i = 0; i < 3; ++i) {
      int src = side[i], dst = side[(i + 1) % 3];
      if (src >= 0 && dst >= 0) arrows.insert({src, dst});
    }
  }
  q.arrows.assign(arrows.begin(), arrows.end());
  return q;
}

bool is_acyclic(const DualQuiver& q) {
  size_t n = q.nodes.size();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [s, d] : q.arrows) {
    out[s].push_back(d);
    ++indeg[d];
  }
  std::queue<int> ready;
  for (size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(static_cast<int>(i));
  size_t done = 0;
  while (!ready.empty()) {
    int x = ready.front();
    ready.pop();
    ++done;
    for (int y : out[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  return done == n;
}

std::vector<Triangulation> enumerate_polygon(int n) {
  ZModel z = ZModel::finite(n);
  std::map<std::pair<int, int>, std::vector<std::vector<Arc>>> memo;
  std::function<const std::vector<std::vector<Arc>>&(int, int)> rec =
      [&](int i, int j) -> const std::vector<std::vector<Arc>>& {
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<Arc>> res;
    if (j - i < 2) {
      res.push_back({});
    } else {
      for (int k = i + 1; k < j; ++k) {
        const auto& left = rec(i, k);
        const auto& right = rec(k, j);
        for (const auto& l : left) {
          for (const auto& r : right) {
            std::vector<Arc> arcs = l;
            arcs.insert(arcs.end(), r.begin(), r.end());
            if (k - i >= 2) arcs.push_back(Arc::make(z.at(i), z.at(k)));
            if (j - k >= 2) arcs.push_back(Arc::make(z.at(k), z.at(j)));
            res.push_back(std::move(arcs));
          }
        }
      }
    }
    return memo[key] = std::move(res);
  };
  std::vector<Triangulation> out;
  for (const auto& arcs : rec(0, n - 1)) out.emplace_back(z, arcs);
  std::sort(out.begin(), out.end(),
            [](const Triangulation& a, const Triangulation& b) { return a.core() < b.core(); });
  return out;
}

}  // namespace ainf
