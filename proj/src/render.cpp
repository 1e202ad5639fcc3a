#include "ainf/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ainf {

namespace {

constexpr double kSize = 400, kCenter = 200, kRadius = 170;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::pair<std::string, std::string> coords(const ZModel& z, const Point& p, double r = kRadius) {
  double a = point_angle(z, p);
  return {num(kCenter + r * std::cos(a)), num(kCenter - r * std::sin(a))};
}

std::string xy(const ZModel& z, const Point& p) {
  auto [x, y] = coords(z, p);
  return x + "," + y;
}

bool visible(const RenderSpec& s, const Point& p) { return p.limit || (p.v.idx >= s.lo && p.v.idx <= s.hi); }

}  // namespace

double point_angle(const ZModel& z, const Point& p) {
  if (z.is_finite()) return 2 * M_PI * double(p.v.idx) / z.n();
  double half = M_PI / z.k();
  if (p.limit) return 2 * M_PI * double(p.gap + 1) / z.k();
  double mid = 2 * M_PI * (p.v.block + 0.5) / z.k();
  i64 i = p.v.idx;
  double frac = 1 - std::pow(2.0, -double(i < 0 ? -i : i));
  return mid + (i < 0 ? -1 : 1) * half * frac;
}

std::string render_svg(const Triangulation& t, const RenderSpec& spec) {
  const ZModel& z = t.model();
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
    << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  o << "<circle cx=\"" << kCenter << "\" cy=\"" << kCenter << "\" r=\"" << kRadius
    << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

  if (spec.filled) {
    const Triangle& tr = *spec.filled;
    o << "<polygon class=\"triangle\" points=\"" << xy(z, tr[0]) << " " << xy(z, tr[1]) << " " << xy(z, tr[2])
      << "\" fill=\"#ddd\" stroke=\"none\"/>\n";
  }

  std::vector<Arc> arcs = t.core();
  for (const Family& f : t.families())
    for (i64 m = 0;; ++m) {
      Arc a = f.member(m);
      if (!visible(spec, a.p) || !visible(spec, a.q)) break;
      arcs.push_back(a);
    }
  for (const Arc& a : arcs) {
    auto [x1, y1] = coords(z, a.p);
    auto [x2, y2] = coords(z, a.q);
    o << "<line class=\"diagonal\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
      << "\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
  }

  for (const Arc& a : spec.query)
    o << "<polyline class=\"query\" points=\"" << xy(z, a.p) << " " << xy(z, a.q)
      << "\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";

  if (spec.path) {
    o << "<polyline class=\"zigzag\" points=\"";
    for (size_t i = 0; i < spec.path->vertices.size(); ++i) o << (i ? " " : "") << xy(z, spec.path->vertices[i]);
    o << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"3\"/>\n";
  }

  auto dot = [&](const Point& p, bool open) {
    auto [cx, cy] = coords(z, p);
    o << "<circle class=\"" << (open ? "limit" : "vertex") << "\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\""
      << (open ? 4 : 3) << "\" fill=\"" << (open ? "#fff" : "#000") << "\" stroke=\"#000\"/>\n";
    auto [tx, ty] = coords(z, p, kRadius + 14);
    o << "<text x=\"" << tx << "\" y=\"" << ty << "\" dy=\"4\" font-size=\"10\" text-anchor=\"middle\">"
      << to_string(p) << "</text>\n";
  };
  if (z.is_finite()) {
    for (int i = 0; i < z.n(); ++i) dot(Vertex{0, i}, false);
  } else {
    for (int b = 0; b < z.k(); ++b) {
      for (i64 i = spec.lo; i <= spec.hi; ++i) dot(Vertex{b, i}, false);
      dot(Point::limit_at(b), true);
    }
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace ainf
