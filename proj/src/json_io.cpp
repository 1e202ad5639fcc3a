#include "ainf/json_io.hpp"

#include "ainf/errors.hpp"

#include <fstream>

namespace ainf {

namespace {

[[noreturn]] void fail(const std::string& at, const std::string& what) {
  throw precondition_error((at.empty() ? "/" : at) + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) fail(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(at, "missing \"" + key + "\"");
  return *it;
}

i64 integer(const json& j, const std::string& at) {
  if (!j.is_number_integer()) fail(at, "expected an integer");
  return j.get<i64>();
}

Arc arc_from_json(const ZModel& z, const json& j, const std::string& at) {
  if (!j.is_array() || j.size() != 2) fail(at, "expected a pair of points");
  Point p = point_from_json(z, j[0], at + "/0"), q = point_from_json(z, j[1], at + "/1");
  if (p == q) fail(at, "degenerate arc");
  return Arc::make(p, q);
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error(path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw precondition_error(path + ": " + e.what());
  }
}

ZModel model_from_json(const json& j, const std::string& at) {
  if (!j.is_object() || j.size() != 1) fail(at, "expected {\"finite\": n} or {\"blocks\": k}");
  if (j.contains("finite")) {
    i64 n = integer(j["finite"], at + "/finite");
    if (n < 4) fail(at + "/finite", "a polygon needs at least 4 vertices");
    return ZModel::finite(int(n));
  }
  if (j.contains("blocks")) {
    i64 k = integer(j["blocks"], at + "/blocks");
    if (k < 1) fail(at + "/blocks", "at least one block");
    return ZModel::blocks(int(k));
  }
  fail(at, "expected {\"finite\": n} or {\"blocks\": k}");
}

Point point_from_json(const ZModel& z, const json& j, const std::string& at) {
  Point p;
  if (j.is_number_integer()) {
    p = Vertex{0, j.get<i64>()};
  } else if (j.is_array() && j.size() == 2) {
    p = Vertex{int(integer(j[0], at + "/0")), integer(j[1], at + "/1")};
  } else if (j.is_object()) {
    i64 g = integer(field(j, "limit", at), at + "/limit");
    if (z.is_finite() || g < 0 || g >= z.k()) fail(at + "/limit", "no such limit point");
    return Point::limit_at(int(g));
  } else {
    fail(at, "expected a vertex");
  }
  if (!z.contains(p.v)) fail(at, "vertex " + to_string(p) + " is not in " + z.name());
  return p;
}

Triangulation triangulation_from_json(const json& j) {
  ZModel z = model_from_json(field(j, "z", ""), "/z");
  std::vector<Arc> core;
  if (j.contains("core")) {
    const json& c = j["core"];
    if (!c.is_array()) fail("/core", "expected an array");
    for (size_t i = 0; i < c.size(); ++i) {
      std::string at = "/core/" + std::to_string(i);
      Arc a = arc_from_json(z, c[i], at);
      if (a.p.limit || a.q.limit) fail(at, "core diagonals join vertices");
      core.push_back(a);
    }
  }
  std::vector<Tail> tails;
  if (j.contains("tails")) {
    const json& ts = j["tails"];
    if (!ts.is_array()) fail("/tails", "expected an array");
    for (size_t i = 0; i < ts.size(); ++i) {
      std::string at = "/tails/" + std::to_string(i);
      const json& tj = ts[i];
      Tail t;
      t.gap = int(integer(field(tj, "limit", at), at + "/limit"));
      std::string type = field(tj, "type", at).is_string() ? tj["type"].get<std::string>() : "";
      if (type == "fountain") {
        t.kind = TailKind::fountain;
        Point b = point_from_json(z, field(tj, "base", at), at + "/base");
        if (b.limit) fail(at + "/base", "the base is a vertex");
        t.base = b.v;
      } else if (type == "leapfrog") {
        t.kind = TailKind::leapfrog;
      } else {
        fail(at + "/type", "expected \"fountain\" or \"leapfrog\"");
      }
      t.right_from = integer(field(tj, "right_from", at), at + "/right_from");
      t.left_to = integer(field(tj, "left_to", at), at + "/left_to");
      tails.push_back(t);
    }
  }
  return Triangulation(z, core, tails);
}

Point point_from_token(const ZModel& z, const std::string& tok) {
  auto num = [&](const std::string& s) -> i64 {
    try {
      size_t used = 0;
      i64 v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw precondition_error("bad point token \"" + tok + "\"");
  };
  if (!tok.empty() && tok[0] == 'L') return point_from_json(z, json{{"limit", num(tok.substr(1))}}, tok);
  auto colon = tok.find(':');
  if (colon == std::string::npos) return point_from_json(z, json(num(tok)), tok);
  return point_from_json(z, json::array({num(tok.substr(0, colon)), num(tok.substr(colon + 1))}), tok);
}

json to_json(const ZModel& z) {
  if (z.is_finite()) return json{{"finite", z.n()}};
  return json{{"blocks", z.k()}};
}

json to_json(const ZModel& z, const Point& p) {
  if (p.limit) return json{{"limit", p.gap}};
  if (z.is_finite()) return json(p.v.idx);
  return json::array({p.v.block, p.v.idx});
}

json to_json(const ZModel& z, const Arc& a) { return json::array({to_json(z, a.p), to_json(z, a.q)}); }

json to_json(const Triangulation& t) {
  const ZModel& z = t.model();
  json j{{"z", to_json(z)}, {"core", json::array()}};
  for (const Arc& a : t.core()) j["core"].push_back(to_json(z, a));
  if (!t.tails().empty()) {
    j["tails"] = json::array();
    for (const Tail& tl : t.tails()) {
      json tj{{"limit", tl.gap}, {"type", tl.kind == TailKind::fountain ? "fountain" : "leapfrog"}};
      if (tl.kind == TailKind::fountain) tj["base"] = to_json(z, Point(tl.base));
      tj["right_from"] = tl.right_from;
      tj["left_to"] = tl.left_to;
      j["tails"].push_back(tj);
    }
  }
  return j;
}

json to_json(const KVector& v) {
  json j = json::object();
  for (const auto& [a, c] : v.terms()) j[to_string(a)] = c;
  return j;
}

json to_json(const ZModel& z, const CoVector& c) {
  json j{{"explicit", json::array()}, {"tails", json::array()}};
  for (const auto& [a, v] : c.explicit_part) j["explicit"].push_back(json::array({to_json(z, a), v}));
  for (const TailIndicator& ti : c.tails)
    j["tails"].push_back(json{{"family", ti.family}, {"from_offset", ti.from}, {"coeff", ti.coeff}});
  return j;
}

json to_json(const ValidationReport& r) {
  json j{{"valid", r.valid}, {"violations", json::array()}};
  for (const Violation& v : r.violations) {
    json w = json::array();
    for (const Arc& a : v.witnesses) w.push_back(to_string(a));
    j["violations"].push_back(json{{"kind", v.kind}, {"witnesses", w}, {"detail", v.detail}});
  }
  return j;
}

KVector kvector_from_json(const ZModel& z, const json& j, const std::string& at) {
  KVector v;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string key = it.key(), pat = at + "/" + key;
      if (key.size() < 5 || key.front() != '{' || key.back() != '}' || key.find(',') == std::string::npos)
        fail(pat, "expected an arc key like {0,2}");
      auto comma = key.find(',');
      Point p = point_from_token(z, key.substr(1, comma - 1));
      Point q = point_from_token(z, key.substr(comma + 1, key.size() - comma - 2));
      v.add(Arc::make(p, q), integer(it.value(), pat));
    }
    return v;
  }
  if (!j.is_array()) fail(at, "expected an object or a list of [arc, coeff]");
  for (size_t i = 0; i < j.size(); ++i) {
    std::string pat = at + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) fail(pat, "expected [arc, coeff]");
    v.add(arc_from_json(z, j[i][0], pat + "/0"), integer(j[i][1], pat + "/1"));
  }
  return v;
}

CoVector covector_from_json(const ZModel& z, const json& j, const std::string& at) {
  CoVector c;
  const json& ex = field(j, "explicit", at);
  if (!ex.is_array()) fail(at + "/explicit", "expected an array");
  for (size_t i = 0; i < ex.size(); ++i) {
    std::string pat = at + "/explicit/" + std::to_string(i);
    if (!ex[i].is_array() || ex[i].size() != 2) fail(pat, "expected [arc, coeff]");
    i64 v = integer(ex[i][1], pat + "/1");
    if (v != 0) c.explicit_part[arc_from_json(z, ex[i][0], pat + "/0")] = v;
  }
  if (j.contains("tails")) {
    const json& ts = j["tails"];
    if (!ts.is_array()) fail(at + "/tails", "expected an array");
    for (size_t i = 0; i < ts.size(); ++i) {
      std::string pat = at + "/tails/" + std::to_string(i);
      c.tails.push_back(TailIndicator{int(integer(field(ts[i], "family", pat), pat + "/family")),
                                      integer(field(ts[i], "from_offset", pat), pat + "/from_offset"),
                                      integer(field(ts[i], "coeff", pat), pat + "/coeff")});
    }
  }
  return c;
}

}  // namespace ainf
