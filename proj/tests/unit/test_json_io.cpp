#include "../fixtures.hpp"

#include "ainf/errors.hpp"
#include "ainf/json_io.hpp"
#include "ainf/render.hpp"

#include <doctest.h>

#include <cmath>

using namespace fx;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const precondition_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("triangulation JSON round trip") {
  for (const Triangulation& t : {pentagon_fan(), hexagon_cyclic(), fountain0(), fountain3(), leapfrog(), blocks2(),
                                 blocks2_mixed()}) {
    json j = to_json(t);
    CHECK(triangulation_from_json(j) == t);
    CHECK(triangulation_from_json(json::parse(j.dump())) == t);
  }
  json f = json::parse(R"({"z": {"blocks": 1}, "tails": [{"limit": 0, "type": "fountain", "base": 0,
                             "right_from": 2, "left_to": -2}]})");
  CHECK(triangulation_from_json(f) == fountain0());
  CHECK(to_json(pentagon_fan()).dump() == R"({"z":{"finite":5},"core":[[0,2],[0,3]]})");
}

TEST_CASE("parse errors carry pointers") {
  auto parse = [](const char* s) { return [s] { triangulation_from_json(json::parse(s)); }; };
  CHECK(error_of(parse(R"({"core": []})")).rfind("/: missing \"z\"", 0) == 0);
  CHECK(error_of(parse(R"({"z": {"finite": 3}})")).rfind("/z/finite:", 0) == 0);
  CHECK(error_of(parse(R"({"z": {"finite": 5}, "core": [[0,2],[0,"a"]]})")).rfind("/core/1/1:", 0) == 0);
  CHECK(error_of(parse(R"({"z": {"finite": 5}, "core": [[0,7]]})")).rfind("/core/0/1:", 0) == 0);
  CHECK(error_of(parse(R"({"z": {"finite": 5}, "core": [[0,0]]})")).rfind("/core/0:", 0) == 0);
  CHECK(error_of(parse(R"({"z": {"blocks": 1}, "tails": [{"limit": 0, "type": "spiral"}]})")).rfind("/tails/0/type:", 0) == 0);
  CHECK(error_of(parse(R"({"z": {"blocks": 1}, "tails": [{"limit": 0, "type": "leapfrog", "right_from": 2}]})"))
            .rfind("/tails/0:", 0) == 0);
  CHECK_THROWS_AS(triangulation_from_json(json::parse(R"({"z": {"finite": 5}, "core": [[0,2],[0,2]]})")), validation_error);
}

TEST_CASE("point tokens") {
  ZModel b = ZModel::blocks(2), f = ZModel::finite(5);
  CHECK(point_from_token(f, "4") == Point(V(4)));
  CHECK(point_from_token(b, "1:-3") == Point(V(1, -3)));
  CHECK(point_from_token(b, "-3") == Point(V(0, -3)));
  CHECK(point_from_token(b, "L1") == Point::limit_at(1));
  CHECK_THROWS_AS(point_from_token(b, "L2"), precondition_error);
  CHECK_THROWS_AS(point_from_token(f, "5"), precondition_error);
  CHECK_THROWS_AS(point_from_token(f, "x"), precondition_error);
  CHECK_THROWS_AS(point_from_token(f, "1:"), precondition_error);
  for (const Point& p : {Point(V(1, -3)), Point(V(0, 4)), Point::limit_at(0)}) CHECK(point_from_token(b, to_string(p)) == p);
}

TEST_CASE("vector JSON") {
  ZModel b = ZModel::blocks(2);
  KVector v;
  v.add(A(V(1, -1), V(0, 2)), 3);
  v.add(A(0, 2), -1);
  json j = to_json(v);
  CHECK(kvector_from_json(b, j) == v);
  CHECK(kvector_from_json(b, json::parse(j.dump())) == v);
  json list = json::array({json::array({json::array({0, 2}), -1}), json::array({json::array({json::array({1, -1}), 2}), 3})});
  CHECK(kvector_from_json(b, list) == v);
  CHECK(to_json(KVector::unit(A(0, 2))).dump() == R"({"{0,2}":1})");

  Triangulation t = fountain0();
  CoVector c;
  c.explicit_part[A(0, 2)] = 1;
  c.tails.push_back({1, 3, -1});
  CHECK(covector_from_json(t.model(), to_json(t.model(), c)) == c);
  CHECK(error_of([&] { covector_from_json(t.model(), json::parse(R"({"explicit": [[[0,2], "x"]]})")); })
            .rfind("/explicit/0/1:", 0) == 0);
}

TEST_CASE("validation report JSON") {
  Triangulation t = polygon(5, {{0, 2}});
  json j = to_json(validate(t));
  CHECK(j["valid"] == false);
  CHECK(j["violations"][0]["kind"] == "non-triangular-face");
  CHECK(to_json(validate(pentagon_fan())).dump() == R"({"valid":true,"violations":[]})");
}

TEST_CASE("render layout") {
  ZModel f = ZModel::finite(4);
  CHECK(point_angle(f, V(1)) == doctest::Approx(M_PI / 2));
  ZModel b = ZModel::blocks(2);
  // block 0 fills the upper half, L0 at angle pi
  CHECK(point_angle(b, V(0, 0)) == doctest::Approx(M_PI / 2));
  CHECK(point_angle(b, V(0, 1)) == doctest::Approx(M_PI / 2 + M_PI / 4));
  CHECK(point_angle(b, V(0, -2)) == doctest::Approx(M_PI / 2 - 3 * M_PI / 8));
  CHECK(point_angle(b, Point::limit_at(0)) == doctest::Approx(M_PI));
  CHECK(point_angle(b, Point::limit_at(1)) == doctest::Approx(2 * M_PI));
  for (i64 i = -10; i < 10; ++i) CHECK(point_angle(b, V(1, i)) < point_angle(b, V(1, i + 1)));

  RenderSpec s;
  std::string svg = render_svg(fountain0(), s);
  CHECK(svg == render_svg(fountain0(), s));
  CHECK(svg.find("-0.0000") == std::string::npos);
  CHECK(svg.find("class=\"limit\"") != std::string::npos);
  s.lo = -2;
  s.hi = 2;
  std::string small = render_svg(fountain0(), s);
  size_t lines = 0;
  for (size_t p = small.find("class=\"diagonal\""); p != std::string::npos; p = small.find("class=\"diagonal\"", p + 1)) ++lines;
  CHECK(lines == 2);
}
