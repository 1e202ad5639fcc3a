#pragma once

#include "ainf/triangulation.hpp"

#include <initializer_list>
#include <utility>

namespace fx {

using namespace ainf;

inline Vertex V(i64 i) { return Vertex{0, i}; }
inline Vertex V(int b, i64 i) { return Vertex{b, i}; }
inline Arc A(i64 p, i64 q) { return Arc::make(V(p), V(q)); }
inline Arc A(Vertex p, Vertex q) { return Arc::make(p, q); }

inline Triangulation polygon(int n, std::initializer_list<std::pair<int, int>> ds) {
  std::vector<Arc> core;
  for (auto [p, q] : ds) core.push_back(A(p, q));
  return Triangulation(ZModel::finite(n), core);
}

inline Triangulation pentagon_fan() { return polygon(5, {{0, 2}, {0, 3}}); }
inline Triangulation pentagon_other() { return polygon(5, {{1, 3}, {1, 4}}); }
inline Triangulation hexagon_cyclic() { return polygon(6, {{0, 2}, {2, 4}, {4, 0}}); }

inline Tail fountain_tail(int gap, Vertex base, i64 r, i64 l) {
  return Tail{gap, TailKind::fountain, base, r, l};
}
inline Tail leapfrog_tail(int gap, i64 r, i64 l) { return Tail{gap, TailKind::leapfrog, {}, r, l}; }

// {0,n} for n >= 2 and n <= -2
inline Triangulation fountain0() {
  return Triangulation(ZModel::blocks(1), {}, {fountain_tail(0, V(0), 2, -2)});
}
// {3,n} for n >= 5 and n <= 1
inline Triangulation fountain3() {
  return Triangulation(ZModel::blocks(1), {}, {fountain_tail(0, V(3), 5, 1)});
}
// {3+m,-1-m}, {-1-m,4+m} plus a core fan inside {-1,...,3}
inline Triangulation leapfrog() {
  return Triangulation(ZModel::blocks(1), {A(-1, 1), A(1, 3)}, {leapfrog_tail(0, 3, -1)});
}
inline Triangulation leapfrog2() {
  return Triangulation(ZModel::blocks(1), {A(-1, 1)}, {leapfrog_tail(0, 2, -1)});
}
// two fountains and a hexagon of core diagonals between them
inline Triangulation blocks2() {
  return Triangulation(ZModel::blocks(2),
                       {A(V(0, 0), V(1, -1)), A(V(0, 0), V(1, 0)), A(V(0, 0), V(0, -2))},
                       {fountain_tail(0, V(0, 0), 2, -2), fountain_tail(1, V(1, 0), 2, -2)});
}
// fountain at L0 and leapfrog at L1
inline Triangulation blocks2_mixed() {
  return Triangulation(ZModel::blocks(2), {A(V(1, -1), V(1, 1)), A(V(1, -1), V(0, -1))},
                       {fountain_tail(0, V(0, 0), 2, -1), leapfrog_tail(1, 1, -1)});
}

}  // namespace fx
