#include "../fixtures.hpp"

#include "ainf/cvector.hpp"
#include "ainf/errors.hpp"
#include "ainf/fzoracle.hpp"
#include "ainf/homindex.hpp"

#include <doctest.h>

#include <random>

using namespace fx;

namespace {

std::vector<i64> coords(const Triangulation& t, const KVector& v) {
  std::vector<i64> out;
  for (const Arc& d : t.core()) out.push_back(v.at(d));
  return out;
}

std::vector<Arc> random_path(const Triangulation& t, std::mt19937& rng, int len) {
  std::vector<Arc> path;
  Triangulation u = t;
  for (int i = 0; i < len; ++i) {
    const auto& core = u.core();
    Arc d = core[std::uniform_int_distribution<size_t>(0, core.size() - 1)(rng)];
    path.push_back(d);
    u = flip(u, d).result;
  }
  return path;
}

}  // namespace

TEST_CASE("seed from a triangulation") {
  CHECK(from_triangulation(polygon(4, {{0, 2}})).B == Matrix{{0}});
  auto p = from_triangulation(pentagon_fan());
  CHECK(p.labels == std::vector<Arc>{A(0, 2), A(0, 3)});
  CHECK(p.B[0][1] == -p.B[1][0]);
  CHECK(std::abs(p.B[0][1]) == 1);
  CHECK(p.C == identity(2));
  CHECK(p.G == identity(2));
  auto h = from_triangulation(hexagon_cyclic());
  // a directed 3-cycle
  for (int i = 0; i < 3; ++i) {
    int pos = 0;
    for (int j = 0; j < 3; ++j) pos += h.B[i][j] == 1;
    CHECK(pos == 1);
    CHECK(h.B[i][i] == 0);
  }
  CHECK_THROWS_AS(from_triangulation(fountain0()), precondition_error);
}

TEST_CASE("mutation") {
  auto s = from_triangulation(hexagon_cyclic());
  for (int k = 0; k < 3; ++k) {
    auto r = mutate(s, k);
    for (int i = 0; i < 3; ++i) CHECK(r.C[k][i] == (i == k ? -1 : 0));
    CHECK(mutate(r, k) == s);
  }
  CHECK_THROWS_AS(mutate(s, 3), precondition_error);
  CHECK_THROWS_AS(mutate(s, -1), precondition_error);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 8)(rng);
    auto all = enumerate_polygon(n);
    Triangulation t = all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
    auto run = run_flip_path(t, random_path(t, rng, 5));
    int k = std::uniform_int_distribution<int>(0, n - 4)(rng);
    CHECK(mutate(mutate(run.seed, k), k) == run.seed);
    Matrix neg = run.seed.B;
    for (auto& row : neg)
      for (i64& x : row) x = -x;
    CHECK(transpose(run.seed.B) == neg);
  }
}

TEST_CASE("flip paths") {
  Triangulation t = pentagon_fan();
  auto run = run_flip_path(t, {A(0, 2), A(0, 3)});
  CHECK(run.u == pentagon_other());
  CHECK(run.path == std::vector<int>{0, 1});
  CHECK(run.seed.labels == std::vector<Arc>{A(1, 3), A(1, 4)});
  CHECK(flip_path_to_mutation_path(t, {A(0, 2), A(1, 3)}) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(flip_path_to_mutation_path(t, {A(1, 3)}), precondition_error);

  Triangulation h = hexagon_cyclic();
  auto hr = run_flip_path(h, {A(0, 2), A(2, 4), A(1, 3)});
  CHECK(hr.path == std::vector<int>{0, 2, 2});
  std::vector<Arc> lab = hr.seed.labels;
  std::sort(lab.begin(), lab.end());
  CHECK(lab == hr.u.core());
}

TEST_CASE("oracle agrees with categorical c- and g-vectors") {
  std::mt19937 rng(2024);
  for (int n = 4; n <= 8; ++n) {
    auto all = enumerate_polygon(n);
    for (int trial = 0; trial < 40; ++trial) {
      Triangulation t = all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
      int len = std::uniform_int_distribution<int>(0, 10)(rng);
      auto run = run_flip_path(t, random_path(t, rng, len));
      const SeedMatrix& s = run.seed;
      CHECK(rows_sign_coherent(s.C));
      CHECK(multiply(s.G, transpose(s.C)) == identity(s.C.size()));
      CHECK(std::abs(determinant(s.G)) == 1);
      for (size_t j = 0; j < s.labels.size(); ++j) {
        SignedCVector c = cvector_full(t, run.u, s.labels[j]);
        auto dense = c.vec.dense(t);  // already signed
        CHECK(s.C[j] == dense);
        CHECK(s.G[j] == coords(t, index(t, s.labels[j])));
      }
    }
  }
}
