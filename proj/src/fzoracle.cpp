#include "ainf/fzoracle.hpp"

#include "ainf/errors.hpp"

#include <algorithm>

namespace ainf {

namespace {

i64 pos(i64 x) { return x > 0 ? x : 0; }
i64 sgn(i64 x) { return (x > 0) - (x < 0); }

}  // namespace

Matrix identity(std::size_t m) {
  Matrix a(m, std::vector<i64>(m, 0));
  for (std::size_t i = 0; i < m; ++i) a[i][i] = 1;
  return a;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return a;
  Matrix t(a[0].size(), std::vector<i64>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  Matrix c(n, std::vector<i64>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// fraction-free elimination
i64 determinant(const Matrix& in) {
  Matrix a = in;
  std::size_t n = a.size();
  i64 sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n ? sign * a[n - 1][n - 1] : 1;
}

SeedMatrix from_triangulation(const Triangulation& t) {
  if (!t.model().is_finite()) throw precondition_error("the mutation oracle needs a finite model");
  SeedMatrix s;
  s.labels = t.core();
  std::size_t m = s.labels.size();
  s.B.assign(m, std::vector<i64>(m, 0));
  DualQuiver q = dual_quiver(t);
  std::vector<int> to_core(q.nodes.size());
  for (std::size_t i = 0; i < q.nodes.size(); ++i)
    to_core[i] = int(std::find(s.labels.begin(), s.labels.end(), q.nodes[i]) - s.labels.begin());
  for (auto [a, b] : q.arrows) {
    s.B[to_core[a]][to_core[b]] -= 1;
    s.B[to_core[b]][to_core[a]] += 1;
  }
  s.C = identity(m);
  s.G = identity(m);
  return s;
}

SeedMatrix mutate(const SeedMatrix& s, int k) {
  int m = int(s.B.size());
  if (k < 0 || k >= m) throw precondition_error("mutation index " + std::to_string(k) + " out of range");
  SeedMatrix r = s;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == k || j == k)
        r.B[i][j] = -s.B[i][j];
      else
        r.B[i][j] = s.B[i][j] + sgn(s.B[i][k]) * pos(s.B[i][k] * s.B[k][j]);
    }
  // C rows are the columns of the coefficient part of the extended exchange matrix
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      if (j == k)
        r.C[j][i] = -s.C[j][i];
      else
        r.C[j][i] = s.C[j][i] + sgn(s.C[k][i]) * pos(s.C[k][i] * s.B[k][j]);
    }
  i64 eps = 0;
  for (i64 x : s.C[k]) eps = eps ? eps : sgn(x);
  for (int i = 0; i < m; ++i) {
    i64 v = -s.G[k][i];
    for (int j = 0; j < m; ++j) v += pos(-eps * s.B[j][k]) * s.G[j][i];
    r.G[k][i] = v;
  }
  return r;
}

bool rows_sign_coherent(const Matrix& c) {
  for (const auto& row : c) {
    bool p = false, n = false;
    for (i64 x : row) {
      p = p || x > 0;
      n = n || x < 0;
    }
    if (p && n) return false;
  }
  return true;
}

OracleRun run_flip_path(const Triangulation& t, const std::vector<Arc>& flips) {
  OracleRun run{t, from_triangulation(t), {}};
  for (const Arc& d : flips) {
    auto it = std::find(run.seed.labels.begin(), run.seed.labels.end(), d);
    if (it == run.seed.labels.end()) throw precondition_error("cannot flip " + to_string(d) + ": not in the triangulation");
    int k = int(it - run.seed.labels.begin());
    FlipResult f = flip(run.u, d);
    run.u = f.result;
    run.seed = mutate(run.seed, k);
    run.seed.labels[k] = f.partner;
    run.path.push_back(k);
  }
  return run;
}

std::vector<int> flip_path_to_mutation_path(const Triangulation& t, const std::vector<Arc>& flips) {
  return run_flip_path(t, flips).path;
}

}  // namespace ainf
