#pragma once

#include "ainf/triangulation.hpp"

#include <vector>

namespace ainf {

using Matrix = std::vector<std::vector<i64>>;

Matrix identity(std::size_t m);
Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
i64 determinant(const Matrix& a);

// row j of C and of G belongs to labels[j]
struct SeedMatrix {
  Matrix B, C, G;
  std::vector<Arc> labels;
  bool operator==(const SeedMatrix&) const = default;
};

SeedMatrix from_triangulation(const Triangulation& t);
SeedMatrix mutate(const SeedMatrix& s, int k);
bool rows_sign_coherent(const Matrix& c);

std::vector<int> flip_path_to_mutation_path(const Triangulation& t, const std::vector<Arc>& flips);

struct OracleRun {
  Triangulation u;
  SeedMatrix seed;  // labels are the diagonals of u
  std::vector<int> path;
};
OracleRun run_flip_path(const Triangulation& t, const std::vector<Arc>& flips);

}  // namespace ainf
