#include "../fixtures.hpp"

#include "ainf/errors.hpp"
#include "ainf/homindex.hpp"

#include <doctest.h>

using namespace fx;

namespace {

KVector kv(std::initializer_list<std::pair<Arc, i64>> xs) {
  KVector v;
  for (auto& [a, c] : xs) v.add(a, c);
  return v;
}

std::vector<Vertex> verts(std::initializer_list<i64> xs) {
  std::vector<Vertex> out;
  for (i64 x : xs) out.push_back(V(x));
  return out;
}

std::vector<Arc> all_diagonals(int n) {
  std::vector<Arc> out;
  ZModel z = ZModel::finite(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (is_diagonal(z, A(a, b))) out.push_back(A(a, b));
  return out;
}

}  // namespace

TEST_CASE("suspension") {
  ZModel f5 = ZModel::finite(5);
  CHECK(suspend(f5, A(0, 2)) == A(4, 1));
  Arc a = A(1, 3);
  Arc b = a;
  for (int i = 0; i < 5; ++i) b = suspend(f5, b);
  CHECK(b == a);
  CHECK(unsuspend(f5, suspend(f5, a)) == a);
  CHECK(suspend(ZModel::blocks(1), A(0, 3)) == A(-1, 2));
  CHECK_THROWS_AS(suspend(ZModel::blocks(1), Arc::make(Point::limit_at(0), V(2))), precondition_error);
}

TEST_CASE("hom and ext") {
  ZModel f5 = ZModel::finite(5), f6 = ZModel::finite(6);
  CHECK(hom_nonzero(f5, A(0, 2), A(0, 2)));
  CHECK(ext_nonzero(f5, A(0, 2), A(1, 3)));
  CHECK(hom_nonzero(f6, A(0, 3), A(1, 4)));
  CHECK_FALSE(hom_nonzero(f6, A(1, 4), A(0, 3)));
  CHECK_THROWS_AS(hom_nonzero(f5, A(0, 1), A(0, 2)), precondition_error);
  // Ext(x,y) = Hom(x, Sigma y) in the 2-Calabi-Yau category
  for (int n = 4; n <= 8; ++n) {
    ZModel z = ZModel::finite(n);
    auto ds = all_diagonals(n);
    for (const Arc& x : ds)
      for (const Arc& y : ds) {
        CHECK(ext_nonzero(z, x, y) == hom_nonzero(z, x, suspend(z, y)));
        CHECK(hom_nonzero(z, x, y) == hom_nonzero(z, y, suspend(z, suspend(z, x))));
      }
  }
  ZModel b1 = ZModel::blocks(1);
  for (i64 p = -6; p <= 6; ++p)
    for (i64 q = p + 2; q <= 6; ++q)
      for (i64 r = -6; r <= 6; ++r)
        for (i64 s = r + 2; s <= 6; ++s)
          CHECK(ext_nonzero(b1, A(p, q), A(r, s)) == hom_nonzero(b1, A(p, q), suspend(b1, A(r, s))));
}

TEST_CASE("zig-zag paths") {
  Triangulation fan = pentagon_fan();
  CHECK(zigzag(fan, V(1), V(4)).vertices == verts({1, 2, 0, 4}));
  CHECK(zigzag(fan, V(0), V(2)).vertices == verts({0, 2}));
  CHECK(zigzag(fountain0(), V(1), V(-1)).vertices == verts({1, 2, 0, -1}));
  CHECK_THROWS_AS(zigzag(fan, V(1), V(1)), precondition_error);
  CHECK_THROWS_AS(zigzag(hexagon_cyclic(), V(0), V(3), 1), cap_exceeded);
}

TEST_CASE("index") {
  Triangulation fan = pentagon_fan();
  CHECK(index(fan, A(1, 4)) == kv({{A(0, 2), -1}}));
  CHECK(index(fan, A(0, 3)) == kv({{A(0, 3), 1}}));
  CHECK(index(fan, A(1, 3)) == kv({{A(0, 2), -1}, {A(0, 3), 1}}));
  CHECK(index(fan, A(0, 1)).empty());
  CHECK(index(fountain0(), A(1, -1)) == kv({{A(0, 2), -1}}));
  CHECK(to_string(index(fan, A(1, 3))) == "-[{0,2}] + [{0,3}]");

  for (int n = 4; n <= 8; ++n) {
    ZModel z = ZModel::finite(n);
    auto ds = all_diagonals(n);
    for (const auto& t : enumerate_polygon(n)) {
      for (const Arc& d : t.core()) {
        CHECK(index(t, d) == KVector::unit(d));
        CHECK(index(t, suspend(z, d)) == -KVector::unit(d));
      }
      // the zig-zag from either end gives the same class
      for (const Arc& a : ds) {
        auto fwd = zigzag(t, a.p.v, a.q.v).vertices, bwd = zigzag(t, a.q.v, a.p.v).vertices;
        KVector x, y;
        for (size_t m = 0; m + 1 < fwd.size(); ++m)
          if (!is_edge(z, A(fwd[m], fwd[m + 1]))) x.add(A(fwd[m], fwd[m + 1]), m % 2 ? -1 : 1);
        for (size_t m = 0; m + 1 < bwd.size(); ++m)
          if (!is_edge(z, A(bwd[m], bwd[m + 1]))) y.add(A(bwd[m], bwd[m + 1]), m % 2 ? -1 : 1);
        CHECK(x == y);
      }
    }
  }
}

TEST_CASE("index bar") {
  Triangulation fan = pentagon_fan(), other = pentagon_other();
  CHECK(index_bar(fan, A(1, 4)) == kv({{A(0, 3), -1}}));
  CHECK(index_bar(other, A(0, 2)) == kv({{A(1, 4), -1}}));
  ZModel z = fan.model();
  for (const Arc& d : fan.core()) CHECK(index_bar(fan, unsuspend(z, d)) == -KVector::unit(d));
}

TEST_CASE("duality on polygons") {
  auto rep = check_duality(pentagon_fan(), pentagon_other(), pentagon_fan().core(), pentagon_other().core());
  CHECK(rep.ok);
  CHECK(rep.checked == 4);
  for (int n = 4; n <= 8; ++n) {
    auto all = enumerate_polygon(n);
    size_t bad = 0;
    for (const auto& t : all)
      for (const auto& u : all)
        if (!check_duality(t, u, t.core(), u.core()).ok) ++bad;
    CHECK(bad == 0);
  }
}

TEST_CASE("duality on infinite fixtures") {
  Triangulation f0 = fountain0(), f3 = fountain3();
  std::vector<Arc> tw, uw;
  for (i64 n = -6; n <= 6; ++n)
    if (std::llabs(n) >= 2) tw.push_back(A(0, n));
  for (i64 n = -3; n <= 9; ++n)
    if (std::llabs(n - 3) >= 2) uw.push_back(A(3, n));
  auto rep = check_duality(f0, f3, tw, uw);
  CHECK(rep.ok);
  CHECK(rep.checked == tw.size() + uw.size());

  std::vector<Triangulation> fixtures{fountain0(), fountain3(), leapfrog(), leapfrog2()};
  for (const auto& t : fixtures)
    for (const auto& u : fixtures) {
      auto r = check_duality(t, u, t.window(8), u.window(8));
      CHECK(r.ok);
    }
  std::vector<Triangulation> two{blocks2(), blocks2_mixed()};
  for (const auto& t : two)
    for (const auto& u : two) CHECK(check_duality(t, u, t.window(8), u.window(8)).ok);
}
