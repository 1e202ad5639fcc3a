#include "ainf/homindex.hpp"

#include "ainf/errors.hpp"

namespace ainf {

namespace {

void need_vertices(const Arc& a) {
  if (!a.finite_ends()) throw precondition_error(to_string(a) + " ends at a limit point");
}

void need_diagonal(const ZModel& z, const Arc& a) {
  if (!is_diagonal(z, a)) throw precondition_error(to_string(a) + " is not a diagonal");
}

}  // namespace

Arc suspend(const ZModel& z, const Arc& a) {
  need_vertices(a);
  return Arc::make(z.pred(a.p.v), z.pred(a.q.v));
}

Arc unsuspend(const ZModel& z, const Arc& a) {
  need_vertices(a);
  return Arc::make(z.succ(a.p.v), z.succ(a.q.v));
}

bool hom_nonzero(const ZModel& z, const Arc& x, const Arc& y) {
  need_diagonal(z, x);
  need_diagonal(z, y);
  for (int lx = 0; lx < 2; ++lx) {
    Vertex x0 = lx ? x.q.v : x.p.v, x1 = lx ? x.p.v : x.q.v;
    for (int ly = 0; ly < 2; ++ly) {
      Vertex y0 = ly ? y.q.v : y.p.v, y1 = ly ? y.p.v : y.q.v;
      if (in_closed(x0, y0, z.pred(z.pred(x1))) && in_closed(x1, y1, z.pred(z.pred(x0)))) return true;
    }
  }
  return false;
}

bool ext_nonzero(const ZModel& z, const Arc& x, const Arc& y) {
  need_diagonal(z, x);
  need_diagonal(z, y);
  return crosses(x, y);
}

void KVector::add(const Arc& a, i64 c) {
  if (c == 0) return;
  i64& slot = terms_[a];
  slot += c;
  if (slot == 0) terms_.erase(a);
}

void KVector::add(const KVector& o, i64 scale) {
  for (const auto& [a, c] : o.terms_) add(a, c * scale);
}

i64 KVector::at(const Arc& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0 : it->second;
}

KVector KVector::operator-() const {
  KVector r;
  r.add(*this, -1);
  return r;
}

std::string to_string(const KVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : v.terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    i64 m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m);
    s += "[" + to_string(a) + "]";
  }
  return s;
}

ZigZagPath zigzag(const Triangulation& t, Vertex e, Vertex f, std::size_t step_cap) {
  const ZModel& z = t.model();
  if (!z.contains(e) || !z.contains(f)) throw precondition_error("zig-zag endpoints outside the model");
  if (e == f) throw precondition_error("zig-zag needs e != f");
  ZigZagPath path{e, f, {e}};
  auto& vs = path.vertices;
  auto odd_step = [&](Vertex from, Vertex anchor) {
    auto x = sup_connected(t, anchor, Interval{z.succ(from), f}, Link::either);
    if (!x) throw std::logic_error("zig-zag lost its edge neighbour");
    return *x;
  };
  vs.push_back(odd_step(e, e));
  while (vs.back() != f) {
    if (vs.size() > step_cap) throw cap_exceeded("zig-zag step cap reached");
    Vertex last_odd = vs.back(), last_even = vs[vs.size() - 2];
    if (z.pred(last_even) == f) throw invalid_triangulation("zig-zag stalled at " + to_string(last_even));
    auto even = inf_connected(t, last_odd, Interval{z.succ(f), z.pred(last_even)}, Link::diagonal);
    if (!even) throw invalid_triangulation("zig-zag found no diagonal at " + to_string(last_odd));
    vs.push_back(*even);
    vs.push_back(odd_step(last_odd, *even));
  }
  return path;
}

KVector index(const Triangulation& t, const Arc& a) {
  const ZModel& z = t.model();
  need_vertices(a);
  KVector out;
  if (is_edge(z, a)) return out;
  ZigZagPath path = zigzag(t, a.p.v, a.q.v);
  const auto& vs = path.vertices;
  for (std::size_t m = 0; m + 1 < vs.size(); ++m) {
    Arc step = Arc::make(vs[m], vs[m + 1]);
    if (is_edge(z, step)) continue;
    out.add(step, m % 2 == 0 ? 1 : -1);
  }
  return out;
}

KVector index(const Triangulation& t, const KVector& s) {
  KVector out;
  for (const auto& [a, c] : s.terms()) out.add(index(t, a), c);
  return out;
}

KVector index_bar(const Triangulation& t, const Arc& a) { return -index(t, suspend(t.model(), a)); }

KVector index_bar(const Triangulation& t, const KVector& s) {
  KVector out;
  for (const auto& [a, c] : s.terms()) out.add(index_bar(t, a), c);
  return out;
}

DualityReport check_duality(const Triangulation& t, const Triangulation& u,
                            const std::vector<Arc>& t_window, const std::vector<Arc>& u_window) {
  if (!(t.model() == u.model())) throw precondition_error("triangulations over different models");
  DualityReport rep;
  for (const Arc& a : t_window) {
    if (!t.contains(a)) throw precondition_error(to_string(a) + " is not in T");
    KVector mid = index_bar(u, a);
    KVector back = index(t, mid);
    ++rep.checked;
    if (!(back == KVector::unit(a))) rep.failures.push_back({"ind_T o ind_bar_U", a, mid, back});
  }
  for (const Arc& b : u_window) {
    if (!u.contains(b)) throw precondition_error(to_string(b) + " is not in U");
    KVector mid = index(t, b);
    KVector back = index_bar(u, mid);
    ++rep.checked;
    if (!(back == KVector::unit(b))) rep.failures.push_back({"ind_bar_U o ind_T", b, mid, back});
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace ainf
