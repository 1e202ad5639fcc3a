#include "ainf/cvector.hpp"
#include "ainf/decomposition.hpp"
#include "ainf/errors.hpp"
#include "ainf/fzoracle.hpp"
#include "ainf/homindex.hpp"
#include "ainf/json_io.hpp"
#include "ainf/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <queue>

using namespace ainf;

namespace {

struct Options {
  std::string input, second, out, format = "json";
  std::vector<std::string> arc;
  std::vector<i64> window{-6, 6};
  bool football = false;
};

Triangulation parse(const std::string& path) {
  if (path.empty()) throw precondition_error("no triangulation given (--triangulation FILE)");
  return triangulation_from_json(read_json_file(path));
}

Triangulation load(const std::string& path) {
  Triangulation t = parse(path);
  ValidationReport r = validate(t);
  if (!r.valid) throw validation_error(path + ": " + r.violations.front().detail);
  return t;
}

Arc arc_arg(const ZModel& z, const Options& o) {
  if (o.arc.size() != 2) throw precondition_error("--arc needs two points");
  Point p = point_from_token(z, o.arc[0]), q = point_from_token(z, o.arc[1]);
  if (p == q) throw precondition_error("--arc: degenerate arc");
  return Arc::make(p, q);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw precondition_error(o.out + ": cannot write");
  f << text;
}

void emit(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

// every vertex of every block with idx in the window, and the limit points
std::vector<Point> window_points(const ZModel& z, const Options& o) {
  std::vector<Point> pts;
  if (z.is_finite()) {
    for (int i = 0; i < z.n(); ++i) pts.push_back(Vertex{0, i});
    return pts;
  }
  for (int b = 0; b < z.k(); ++b) {
    for (i64 i = o.window[0]; i <= o.window[1]; ++i) pts.push_back(Vertex{b, i});
    pts.push_back(Point::limit_at(b));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<Arc> window_arcs(const ZModel& z, const Options& o) {
  std::vector<Point> pts = window_points(z, o);
  std::vector<Arc> out;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Arc a = Arc::make(pts[i], pts[j]);
      if (is_diagonal(z, a)) out.push_back(a);
    }
  return out;
}

std::vector<Arc> diagonals_in(const Triangulation& t, const std::vector<Arc>& arcs) {
  std::vector<Arc> out;
  for (const Arc& a : arcs)
    if (!a.p.limit && !a.q.limit && t.contains(a)) out.push_back(a);
  return out;
}

json root_json(const Root& r) { return json{{"pos", to_string(r.pos)}, {"neg", to_string(r.neg)}}; }

json order_json(const Triangulation& t, const OrderedCrossingSet& y, std::size_t n) {
  json w = json::array();
  for (const YElem& e : y_ext_window(t, y, n)) w.push_back(to_string(e));
  return json{{"order", y.order.str()}, {"y_ext", y_ext_str(y)}, {"label", root_system_label(y)}, {"y_ext_window", w}};
}

std::vector<Arc> flip_path(const Triangulation& from, const Triangulation& to) {
  std::map<std::vector<Arc>, std::pair<std::vector<Arc>, Arc>> parent;
  std::queue<Triangulation> todo;
  todo.push(from);
  parent[from.core()] = {{}, Arc{}};
  while (!todo.empty()) {
    Triangulation cur = todo.front();
    todo.pop();
    if (cur == to) break;
    for (const Arc& d : cur.core()) {
      Triangulation next = flip(cur, d).result;
      if (parent.count(next.core())) continue;
      parent[next.core()] = {cur.core(), d};
      todo.push(next);
    }
  }
  if (!parent.count(to.core())) throw precondition_error("no flip path between the two triangulations");
  std::vector<Arc> path;
  for (auto key = to.core(); key != from.core(); key = parent[key].first) path.push_back(parent[key].second);
  std::reverse(path.begin(), path.end());
  return path;
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "validate") {
    Triangulation t = parse(o.input);
    ValidationReport r = validate(t);
    emit(o, to_json(r));
    return r.valid ? 0 : 1;
  }
  Triangulation t = load(o.input);
  const ZModel& z = t.model();
  if (cmd == "index") {
    emit(o, to_json(index(t, arc_arg(z, o))));
  } else if (cmd == "dimvec") {
    emit(o, to_json(z, dimension_vector(t, arc_arg(z, o))));
  } else if (cmd == "cvector") {
    Triangulation u = load(o.second);
    SignedCVector c = cvector_full(t, u, arc_arg(z, o));
    emit(o, json{{"sign", c.sign}, {"image", to_json(z, c.arc)}, {"vector", to_json(z, c.vec)}});
  } else if (cmd == "image") {
    Triangulation u = load(o.second);
    Arc ua = arc_arg(z, o);
    if (!u.contains(ua)) throw precondition_error(to_string(ua) + " is not in the second triangulation");
    Arc us = Arc::make(third_vertex(u, ua, ua.p), third_vertex(u, ua, ua.q));
    auto fwd = image_arc(t, ua, us), back = image_arc(t, us, ua);
    emit(o, json{{"u", to_json(z, ua)},
                 {"u_star", to_json(z, us)},
                 {"image", fwd ? to_json(z, *fwd) : json()},
                 {"image_reversed", back ? to_json(z, *back) : json()}});
  } else if (cmd == "realize") {
    Realization r = realize_dimension_vector(t, arc_arg(z, o));
    SignedCVector c = cvector_full(t, r.u, r.uarc);
    emit(o, json{{"U", to_json(r.u)}, {"u", to_json(z, r.uarc)}, {"sign", c.sign}, {"vector", to_json(z, c.vec)}});
  } else if (cmd == "decompose") {
    AcyclicityReport rep = unique_maximal_iff_acyclic_report(t);
    std::vector<Arc> arcs = window_arcs(z, o);
    json pairs = json::array();
    for (const Arc& ef : rep.pairs) {
      OrderedCrossingSet y = crossing_order(t, ef.p, ef.q);
      json pj{{"pair", to_json(z, ef)}};
      json oj = order_json(t, y, std::size_t(o.window[1]));
      for (auto& [k, v] : oj.items()) pj[k] = v;
      json table = json::array();
      for (const Arc& v : arcs) {
        if (v.p.limit || v.q.limit) continue;
        CoVector d = dimension_vector(t, v);
        if (d.is_zero() || !in_X(t, ef.p, ef.q, d)) continue;
        table.push_back(json{{"arc", to_json(z, v)}, {"root", root_json(root_of_arc(t, ef.p, ef.q, v))}});
      }
      pj["table"] = table;
      pairs.push_back(pj);
    }
    json j{{"acyclic", rep.acyclic}, {"consistent", rep.consistent}, {"maximal_pairs", pairs}};
    if (rep.internal_triangle) {
      json tri = json::array();
      for (const Vertex& v : *rep.internal_triangle) tri.push_back(to_json(z, Point(v)));
      j["internal_triangle"] = tri;
    }
    emit(o, j);
    return rep.consistent ? 0 : 1;
  } else if (cmd == "roots") {
    Arc ef = arc_arg(z, o);
    OrderedCrossingSet y = crossing_order(t, ef.p, ef.q);
    std::size_t n = std::size_t(o.window[1]);
    json j = order_json(t, y, n);
    json roots = json::array();
    for (const Root& r : delta_plus(y_ext_window(t, y, n))) roots.push_back(root_json(r));
    j["roots"] = roots;
    emit(o, j);
  } else if (cmd == "duality") {
    Triangulation u = o.second.empty() ? t : load(o.second);
    std::vector<Arc> arcs = window_arcs(z, o);
    DualityReport r = check_duality(t, u, diagonals_in(t, arcs), diagonals_in(u, arcs));
    json f = json::array();
    for (const DualityFailure& x : r.failures)
      f.push_back(json{{"direction", x.direction}, {"start", to_json(z, x.start)}, {"result", to_json(x.result)}});
    emit(o, json{{"ok", r.ok}, {"checked", r.checked}, {"failures", f}});
    return r.ok ? 0 : 1;
  } else if (cmd == "oracle") {
    Triangulation u = o.second.empty() ? t : load(o.second);
    OracleRun run = run_flip_path(t, flip_path(t, u));
    const SeedMatrix& s = run.seed;
    json labels = json::array();
    bool agree = rows_sign_coherent(s.C) && multiply(s.G, transpose(s.C)) == identity(s.C.size());
    for (size_t j = 0; j < s.labels.size(); ++j) {
      labels.push_back(to_json(z, s.labels[j]));
      agree = agree && s.C[j] == cvector_full(t, run.u, s.labels[j]).vec.dense(t);
      KVector g = index(t, s.labels[j]);
      for (size_t i = 0; i < t.core().size(); ++i) agree = agree && s.G[j][i] == g.at(t.core()[i]);
    }
    json basis = json::array();
    for (const Arc& a : t.core()) basis.push_back(to_json(z, a));
    emit(o, json{{"basis", basis}, {"labels", labels}, {"path", run.path}, {"B", s.B}, {"C", s.C}, {"G", s.G},
                 {"agree", agree}});
    return agree ? 0 : 1;
  } else if (cmd == "render") {
    RenderSpec spec;
    spec.lo = o.window[0];
    spec.hi = o.window[1];
    if (!o.arc.empty()) {
      Arc a = arc_arg(z, o);
      spec.query.push_back(a);
      if (!a.p.limit && !a.q.limit && !is_edge(z, a)) spec.path = zigzag(t, a.p.v, a.q.v);
    }
    if (o.football) spec.filled = unique_maximal_iff_acyclic_report(t).internal_triangle;
    if (o.format == "json") {
      json j{{"triangulation", to_json(t)}};
      if (spec.path) {
        json vs = json::array();
        for (const Vertex& v : spec.path->vertices) vs.push_back(to_json(z, Point(v)));
        j["zigzag"] = vs;
      }
      emit(o, j);
    } else {
      emit(o, render_svg(t, spec));
    }
  } else {
    throw precondition_error("unknown command " + cmd);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ainf: exact computations in cluster categories of type A"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> cmds{
      {"validate", "check that the input is a triangulation"},
      {"index", "index of --arc"},
      {"cvector", "c-vector of --arc in the second triangulation"},
      {"dimvec", "dimension vector of --arc"},
      {"image", "image arc of --arc under the second triangulation"},
      {"realize", "a c-vector equal to dim(--arc)"},
      {"decompose", "maximal pairs, orders and root systems"},
      {"roots", "ordered crossing set of --arc and its positive roots"},
      {"duality", "ind/ind-bar duality on the window"},
      {"oracle", "matrix mutation along a flip path to the second triangulation"},
      {"render", "SVG picture"}};
  for (const auto& [name, help] : cmds) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.input, "triangulation JSON");
    sub->add_option("--triangulation,--model", o.input, "triangulation JSON");
    sub->add_option("--second-triangulation", o.second, "second triangulation JSON");
    sub->add_option("--arc", o.arc, "two points: 5, 1:-3 or L0")->expected(2);
    sub->add_option("--window", o.window, "vertex window lo hi")->expected(2);
    sub->add_option("--out", o.out, "output file");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "svg"}));
    sub->add_flag("--football", o.football, "shade the internal triangle");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "render" && !app.get_subcommands().front()->count("--format")) o.format = "svg";
  try {
    return run(cmd, o);
  } catch (const validation_error& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
