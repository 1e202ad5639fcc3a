#include "ainf/decomposition.hpp"

#include "ainf/errors.hpp"

#include <algorithm>
#include <set>

namespace ainf {

SupportDescriptor support(const CoVector& c) {
  SupportDescriptor s;
  for (const auto& [a, v] : c.explicit_part)
    if (v != 0) s.explicit_arcs.push_back(a);
  for (const TailIndicator& ti : c.tails)
    if (ti.coeff != 0) s.tails.push_back({ti.family, ti.from});
  return s;
}

bool support_subset(const Triangulation& t, const CoVector& a, const CoVector& b) {
  for (const auto& [x, v] : a.explicit_part)
    if (v != 0 && b.eval(t, x) == 0) return false;
  for (const TailIndicator& ti : a.tails) {
    if (ti.coeff == 0) continue;
    const TailIndicator* cover = nullptr;
    for (const TailIndicator& tb : b.tails)
      if (tb.family == ti.family && tb.coeff != 0) cover = &tb;
    if (!cover) return false;
    const Family& fam = t.families().at(ti.family);
    for (i64 m = ti.from; m < cover->from; ++m)
      if (b.eval(t, fam.member(m)) == 0) return false;
  }
  return true;
}

bool in_X(const Triangulation& t, const Point& e, const Point& f, const CoVector& c) {
  if (c.is_zero()) throw precondition_error("X_{e,f} membership of the zero vector");
  return support_subset(t, c, dimension_vector(t, Arc::make(e, f)));
}

namespace {

std::vector<Point> special_points(const Triangulation& t) {
  std::vector<Point> pts;
  for (const Vertex& v : ears(t)) pts.push_back(v);
  for (const Tail& tl : t.tails())
    if (tl.kind == TailKind::leapfrog) pts.push_back(Point::limit_at(tl.gap));
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::pair<Point, Point> chord_sides(const OrderedCrossingSet& y, const Arc& a) {
  if (in_open(y.e, a.p, y.f)) return {a.p, a.q};
  return {a.q, a.p};
}

Arc member_at(const Triangulation& t, int family, i64 m) { return t.families().at(family).member(m); }

}  // namespace

std::vector<Arc> maximal_pairs(const Triangulation& t) {
  std::vector<Point> pts = special_points(t);
  std::vector<Arc> out;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Arc a = Arc::make(pts[i], pts[j]);
      if (!dimension_vector(t, a).is_zero()) out.push_back(a);
    }
  return out;
}

std::string OrderDescriptor::str() const {
  if (finite) return "Finite(" + std::to_string(size) + ")";
  std::vector<std::string> parts;
  if (head) parts.push_back("ω");
  for (size_t i = 0; i < middle; ++i) parts.push_back("ℤ");
  if (tail) parts.push_back("ω*");
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " + ") + p;
  return s;
}

bool y_less(const OrderedCrossingSet& y, const Arc& a, const Arc& b) {
  if (a == b) return false;
  auto [pa, qa] = chord_sides(y, a);
  auto [pb, qb] = chord_sides(y, b);
  bool p_le = pa == pb || rel_less(y.e, pa, pb);
  bool q_ge = qa == qb || rel_less(y.f, qb, qa);
  return p_le && q_ge;
}

OrderedCrossingSet crossing_order(const Triangulation& t, const Point& e, const Point& f) {
  OrderedCrossingSet y;
  y.e = e;
  y.f = f;
  CoVector d = dimension_vector(t, Arc::make(e, f));
  if (d.is_zero()) throw precondition_error("nothing in T crosses " + to_string(Arc::make(e, f)));
  for (const auto& [a, c] : d.explicit_part) y.explicit_members.push_back(a);
  std::sort(y.explicit_members.begin(), y.explicit_members.end(),
            [&](const Arc& a, const Arc& b) { return y_less(y, a, b); });

  i64 bound = t.stability_bound({e, f});
  bool at_e = false, at_f = false;
  std::set<int> inside;
  for (const TailIndicator& ti : d.tails) {
    const Family& fam = t.families().at(ti.family);
    const Tail& tl = t.tails().at(fam.tail);
    i64 m = std::max(ti.from, bound);
    Ray r{ti.family, ti.from, y_less(y, fam.member(m), fam.member(m + 1)), 0};
    Point lim = Point::limit_at(tl.gap);
    if (lim == e) {
      r.acc = kAccAtE;
      at_e = true;
    } else if (lim == f) {
      r.acc = kAccAtF;
      at_f = true;
    } else if (tl.kind == TailKind::fountain) {
      r.acc = tl.gap;
      inside.insert(tl.gap);
    } else {
      throw std::logic_error("leapfrog crossing a chord away from its limit point");
    }
    y.rays.push_back(r);
  }
  OrderDescriptor& o = y.order;
  if (y.rays.empty()) {
    o.size = y.explicit_members.size();
    return y;
  }
  o.finite = false;
  o.head = !at_e;
  o.tail = !at_f;
  o.middle = inside.size() + at_e + at_f - 1;
  return y;
}

std::optional<Arc> y_pred(const Triangulation& t, const OrderedCrossingSet& y, const Arc& a) {
  auto [p, q] = chord_sides(y, a);
  Vertex h = third_vertex(t, a, q);
  if (Point(h) == y.e) return std::nullopt;
  if (in_open(y.e, h, p)) return Arc::make(q, h);
  return Arc::make(h, p);
}

std::optional<Arc> y_succ(const Triangulation& t, const OrderedCrossingSet& y, const Arc& a) {
  auto [p, q] = chord_sides(y, a);
  Vertex h = third_vertex(t, a, p);
  if (Point(h) == y.f) return std::nullopt;
  if (in_open(p, h, y.f)) return Arc::make(h, q);
  return Arc::make(p, h);
}

std::optional<Arc> y_least(const Triangulation& t, const OrderedCrossingSet& y) {
  if (y.order.finite) {
    if (y.explicit_members.empty()) return std::nullopt;
    return y.explicit_members.front();
  }
  if (!y.order.head) return std::nullopt;
  std::vector<Arc> cand = y.explicit_members;
  for (const Ray& r : y.rays)
    if (r.increasing) cand.push_back(member_at(t, r.family, r.from));
  return *std::min_element(cand.begin(), cand.end(), [&](const Arc& a, const Arc& b) { return y_less(y, a, b); });
}

std::optional<Arc> y_greatest(const Triangulation& t, const OrderedCrossingSet& y) {
  if (y.order.finite) {
    if (y.explicit_members.empty()) return std::nullopt;
    return y.explicit_members.back();
  }
  if (!y.order.tail) return std::nullopt;
  std::vector<Arc> cand = y.explicit_members;
  for (const Ray& r : y.rays)
    if (!r.increasing) cand.push_back(member_at(t, r.family, r.from));
  return *std::max_element(cand.begin(), cand.end(), [&](const Arc& a, const Arc& b) { return y_less(y, a, b); });
}

bool y_contains(const Triangulation& t, const OrderedCrossingSet& y, const Arc& a) {
  return t.contains(a) && crosses(Arc::make(y.e, y.f), a);
}

std::string to_string(const YElem& y) { return y.neg_inf ? "-inf" : to_string(y.arc); }

bool has_neg_inf(const OrderedCrossingSet& y) {
  return y.order.finite ? y.order.size > 0 : y.order.head;
}

std::string y_ext_str(const OrderedCrossingSet& y) {
  if (y.order.finite) return "Finite(" + std::to_string(y.order.size + 1) + ")";
  return (has_neg_inf(y) ? "−∞ + " : "") + y.order.str();
}

std::vector<YElem> y_ext_window(const Triangulation& t, const OrderedCrossingSet& y, std::size_t n) {
  std::vector<Arc> arcs;
  if (y.order.finite) {
    arcs = y.explicit_members;
  } else {
    auto walk = [&](std::optional<Arc> x, std::size_t count, bool forward) {
      for (std::size_t i = 0; i < count && x; ++i) {
        arcs.push_back(*x);
        x = forward ? y_succ(t, y, *x) : y_pred(t, y, *x);
      }
    };
    auto lo = y_least(t, y), hi = y_greatest(t, y);
    if (lo && n > 1) walk(lo, n - 1, true);
    if (hi) walk(hi, n, false);
    if (!lo && !hi) {
      const Ray& r = y.rays.front();
      Arc anchor = member_at(t, r.family, r.from);
      walk(anchor, n, true);
      walk(anchor, n, false);
    }
  }
  std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) { return y_less(y, a, b); });
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  std::vector<YElem> out;
  if (has_neg_inf(y)) out.push_back(YElem{true, {}});
  for (const Arc& a : arcs) out.push_back(YElem{false, a});
  return out;
}

std::string to_string(const Root& r) { return "e" + to_string(r.pos) + " - e" + to_string(r.neg); }

YElem pred_ext(const Triangulation& t, const OrderedCrossingSet& y, const Arc& a) {
  auto p = y_pred(t, y, a);
  if (!p) return YElem{true, {}};
  return YElem{false, *p};
}

Root psi(const Triangulation& t, const OrderedCrossingSet& y, const Arc& a, const Arc& b) {
  if (!y_contains(t, y, a) || !y_contains(t, y, b)) throw precondition_error("interval ends outside Y");
  if (y_less(y, b, a)) throw precondition_error("interval [" + to_string(a) + "," + to_string(b) + "] is reversed");
  return Root{YElem{false, b}, pred_ext(t, y, a)};
}

Root root_of_arc(const Triangulation& t, const Point& e, const Point& f, const Arc& v) {
  CoVector d = dimension_vector(t, v);
  if (d.is_zero()) throw precondition_error("dim " + to_string(v) + " is zero");
  if (!in_X(t, e, f, d)) throw precondition_error("dim " + to_string(v) + " is not in X_{e,f}");
  OrderedCrossingSet y = crossing_order(t, e, f);
  auto q = crossing_quadruple(t, v);
  Arc x = Arc::make(q->s0, q->i1), z = Arc::make(q->i0, q->s1);
  if (y_less(y, z, x)) std::swap(x, z);
  return psi(t, y, x, z);
}

std::vector<Root> delta_plus(const std::vector<YElem>& window) {
  std::vector<Root> out;
  for (size_t i = 0; i < window.size(); ++i)
    for (size_t j = i + 1; j < window.size(); ++j) out.push_back(Root{window[j], window[i]});
  return out;
}

std::string root_system_label(const OrderedCrossingSet& y) {
  if (y.order.finite) {
    static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string n;
    for (char c : std::to_string(y.order.size + 1)) n += sub[c - '0'];
    return "Δ⁺(sl" + n + ")";
  }
  return "Borel of sl_∞ for Y = " + y.order.str();
}

AcyclicityReport unique_maximal_iff_acyclic_report(const Triangulation& t) {
  AcyclicityReport rep;
  rep.acyclic = is_acyclic(dual_quiver(t));
  rep.pairs = maximal_pairs(t);
  rep.consistent = !rep.acyclic || rep.pairs.size() == 1;
  if (rep.pairs.size() < 2) return rep;

  std::set<Point> seen;
  for (const Arc& a : rep.pairs) {
    seen.insert(a.p);
    seen.insert(a.q);
  }
  std::vector<Point> pts(seen.begin(), seen.end());
  pts.resize(3);
  rep.football = std::array<Point, 3>{pts[0], pts[1], pts[2]};

  const ZModel& z = t.model();
  i64 bound = t.stability_bound(pts);
  // the black diagonal cutting off each point: {x-,x+} for an ear, a far leapfrog member otherwise
  auto black = [&](const Point& x) -> std::pair<Vertex, Vertex> {
    if (!x.limit) return {z.pred(x.v), z.succ(x.v)};
    const Tail& tl = t.tails().at(x.gap);
    return {Vertex{x.gap, tl.right_from + bound}, Vertex{(x.gap + 1) % z.k(), tl.left_to - bound}};
  };
  auto [b1, a0] = black(pts[0]);
  auto [b0, a2] = black(pts[1]);
  auto [b2, a1] = black(pts[2]);
  (void)a2;
  (void)b2;
  auto q = bridge_quadruple(t, a1, b1, a0, b0);
  if (!q) throw std::logic_error("football without a bridge");
  Triangle tri{q->i0, q->h1, q->s1};
  std::sort(tri.begin(), tri.end());
  for (int i = 0; i < 3; ++i)
    if (!t.contains(Arc::make(tri[i], tri[(i + 1) % 3])))
      throw std::logic_error("football triangle has a boundary side");
  rep.internal_triangle = tri;
  return rep;
}

}  // namespace ainf
