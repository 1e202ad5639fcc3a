#include "ainf/cvector.hpp"

#include "ainf/errors.hpp"

#include <algorithm>

namespace ainf {

i64 CoVector::eval(const Triangulation& t, const Arc& d) const {
  auto loc = t.locate(d);
  if (!loc) throw precondition_error(to_string(d) + " is not in T");
  auto it = explicit_part.find(d);
  if (it != explicit_part.end()) return it->second;
  if (loc->family < 0) return 0;
  for (const TailIndicator& ti : tails)
    if (ti.family == loc->family && loc->m >= ti.from) return ti.coeff;
  return 0;
}

bool CoVector::positive() const {
  for (const auto& [a, c] : explicit_part)
    if (c < 0) return false;
  for (const TailIndicator& ti : tails)
    if (ti.coeff < 0) return false;
  return true;
}

bool CoVector::negative() const {
  for (const auto& [a, c] : explicit_part)
    if (c > 0) return false;
  for (const TailIndicator& ti : tails)
    if (ti.coeff > 0) return false;
  return true;
}

CoVector CoVector::scaled(i64 s) const {
  CoVector r;
  if (s == 0) return r;
  for (const auto& [a, c] : explicit_part) r.explicit_part[a] = c * s;
  for (TailIndicator ti : tails) {
    ti.coeff *= s;
    r.tails.push_back(ti);
  }
  return r;
}

std::vector<i64> CoVector::dense(const Triangulation& t) const {
  std::vector<i64> out;
  for (const Arc& d : t.core()) out.push_back(eval(t, d));
  return out;
}

Triangulation suspend(const Triangulation& t) {
  const ZModel& z = t.model();
  std::vector<Arc> core;
  for (const Arc& a : t.core()) core.push_back(suspend(z, a));
  std::vector<Tail> tails = t.tails();
  for (Tail& tl : tails) {
    tl.base = z.pred(tl.base);
    --tl.right_from;
    --tl.left_to;
  }
  return Triangulation(z, core, tails);
}

namespace {

void need_member(const Triangulation& t, const Arc& a, const char* what) {
  if (!t.contains(a)) throw precondition_error(to_string(a) + " is not in " + what);
}

}  // namespace

i64 cvector_eval(const Triangulation& t, const Triangulation& u, const Arc& uarc, const Arc& tarc) {
  need_member(t, tarc, "T");
  need_member(u, uarc, "U");
  return index_bar(u, tarc).at(uarc);
}

i64 cvector_bar_eval(const Triangulation& t, const Triangulation& u, const Arc& uarc, const Arc& tarc) {
  need_member(t, tarc, "T");
  need_member(u, uarc, "U");
  return index(u, tarc).at(uarc);
}

CoVector dimension_vector(const Triangulation& t, const Arc& a) {
  CoVector out;
  for (const Arc& d : t.core())
    if (crosses(a, d)) out.explicit_part[d] = 1;
  i64 bound = t.stability_bound({a.p, a.q});
  const auto& fams = t.families();
  for (size_t f = 0; f < fams.size(); ++f) {
    std::vector<bool> hit(bound + 2);
    for (i64 m = 0; m <= bound + 1; ++m) hit[m] = crosses(a, fams[f].member(m));
    i64 from = bound + 2;
    if (hit[bound] && hit[bound + 1]) {
      from = bound;
      while (from > 0 && hit[from - 1]) --from;
      out.tails.push_back({static_cast<int>(f), from, 1});
    }
    for (i64 m = 0; m < from && m <= bound + 1; ++m)
      if (hit[m]) out.explicit_part[fams[f].member(m)] = 1;
  }
  return out;
}

Exchange exchange_partner(const Triangulation& u, const Arc& d) {
  FlipResult fr = flip(u, d);
  Vertex h1 = third_vertex(u, d, d.p), h2 = third_vertex(u, d, d.q);
  const ZModel& z = u.model();
  Exchange ex{fr.partner, {}};
  auto keep = [&](std::vector<Arc>& side, Vertex x, Vertex y) {
    Arc s = Arc::make(x, y);
    if (!is_edge(z, s)) side.push_back(s);
  };
  keep(ex.middles[0], d.p.v, h1);
  keep(ex.middles[0], d.q.v, h2);
  keep(ex.middles[1], h1, d.q.v);
  keep(ex.middles[1], h2, d.p.v);
  return ex;
}

namespace {

// u = {b0,b1}, u* = {a0-,a1-} with b0 < a1- < b1 < a0-
std::optional<Quadruple> image_bridge(const Triangulation& t, const Arc& u, const Arc& ustar) {
  const ZModel& z = t.model();
  if (!u.finite_ends() || !ustar.finite_ends() || !crosses(u, ustar))
    throw precondition_error(to_string(u) + " and " + to_string(ustar) + " do not cross");
  bool first_inside = in_open(u.p, ustar.p, u.q);
  Vertex a1m = first_inside ? ustar.p.v : ustar.q.v;
  Vertex a0m = first_inside ? ustar.q.v : ustar.p.v;
  return bridge_quadruple(t, z.succ(a0m), u.p.v, z.succ(a1m), u.q.v);
}

}  // namespace

std::optional<Arc> image_arc(const Triangulation& t, const Arc& u, const Arc& ustar) {
  auto q = image_bridge(t, u, ustar);
  if (!q) return std::nullopt;
  return Arc::make(q->h0, q->h1);
}

SignedCVector cvector_full(const Triangulation& t, const Triangulation& u, const Arc& uarc) {
  if (!(t.model() == u.model())) throw precondition_error("triangulations over different models");
  need_member(u, uarc, "U");
  // tail diagonals have exchange partners too; only the flipped triangulation leaves the schema
  Arc ustar = Arc::make(third_vertex(u, uarc, uarc.p), third_vertex(u, uarc, uarc.q));

  std::vector<Arc> samples;
  for (auto q : {image_bridge(t, uarc, ustar), image_bridge(t, ustar, uarc)})
    if (q) samples.push_back(Arc::make(q->s0, q->i1));
  for (const Arc& d : t.window(t.stability_bound({uarc.p, uarc.q, ustar.p, ustar.q})))
    if (crosses(d, uarc) || crosses(d, ustar)) samples.push_back(d);
  int sign = 0;
  for (const Arc& d : samples) {
    i64 val = cvector_eval(t, u, uarc, d);
    if (val != 0) {
      sign = val > 0 ? 1 : -1;
      break;
    }
  }
  if (sign == 0) throw std::logic_error("c-vector of " + to_string(uarc) + " vanished near u");
  auto v = sign > 0 ? image_arc(t, uarc, ustar) : image_arc(t, ustar, uarc);
  if (!v) throw std::logic_error("no image arc for a nonzero c-vector");
  return {sign, *v, dimension_vector(t, *v).scaled(sign)};
}

namespace {

using Face = std::vector<Vertex>;

// split the n-gon along the given diagonals and fan each face from its least vertex
std::vector<Arc> complete(const ZModel& z, const std::vector<Arc>& arcs) {
  std::vector<Face> faces(1);
  for (int i = 0; i < z.n(); ++i) faces[0].push_back(z.at(i));
  for (const Arc& a : arcs) {
    for (size_t f = 0; f < faces.size(); ++f) {
      Face& face = faces[f];
      auto ip = std::find(face.begin(), face.end(), a.p.v);
      auto iq = std::find(face.begin(), face.end(), a.q.v);
      if (ip == face.end() || iq == face.end()) continue;
      size_t x = ip - face.begin(), y = iq - face.begin();
      if (x > y) std::swap(x, y);
      Face left(face.begin() + x, face.begin() + y + 1);
      Face right(face.begin() + y, face.end());
      right.insert(right.end(), face.begin(), face.begin() + x + 1);
      faces[f] = std::move(left);
      faces.push_back(std::move(right));
      break;
    }
  }
  std::vector<Arc> out = arcs;
  for (const Face& face : faces)
    for (size_t i = 2; i + 1 < face.size(); ++i) out.push_back(Arc::make(face[0], face[i]));
  return out;
}

}  // namespace

Realization realize_dimension_vector(const Triangulation& t, const Arc& v) {
  const ZModel& z = t.model();
  if (!z.is_finite()) throw precondition_error("realization is only supported on finite models");
  auto q = crossing_quadruple(t, v);
  if (!q) throw precondition_error(to_string(v) + " crosses no diagonal of T, its dimension vector is zero");
  Vertex v0 = v.p.v, v1 = v.q.v;

  std::vector<Arc> arcs;
  for (const Arc& d : t.core())
    if (!crosses(d, v)) arcs.push_back(d);
  Arc ubar_arc = Arc::make(q->i0, q->i1);
  for (const Arc& a : {ubar_arc, Arc::make(q->i0, v0), Arc::make(q->i1, v1)})
    if (!is_edge(z, a) && std::find(arcs.begin(), arcs.end(), a) == arcs.end()) arcs.push_back(a);
  Triangulation ubar(z, complete(z, arcs));

  // c(Sigma u*, Sigma U*) = -c_bar(u*, U*) = c_bar(u, U)
  FlipResult fr = flip(ubar, ubar_arc);
  Triangulation u = suspend(fr.result);
  Arc uarc = suspend(z, fr.partner);

  CoVector dim = dimension_vector(t, v);
  for (const Arc& d : t.core()) {
    if (cvector_bar_eval(t, ubar, ubar_arc, d) != dim.eval(t, d))
      throw std::logic_error("construction misses dim(v) at " + to_string(d));
    if (cvector_eval(t, u, uarc, d) != dim.eval(t, d))
      throw std::logic_error("realized c-vector differs from dim(v) at " + to_string(d));
  }
  return {u, uarc, ubar, ubar_arc};
}

}  // namespace ainf
