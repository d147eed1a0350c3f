#pragma once

#include <optional>
#include <vector>

#include "dfb/field.hpp"

namespace dfb {

/// Dense matrix over the coefficient field, row-major.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const Field& F, DenseMatrix& m);
int rank(const Field& F, DenseMatrix m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Scalar>> nullspace(const Field& F, const DenseMatrix& m);
/// Some x with m x = b, or nullopt.
std::optional<std::vector<Scalar>> solve(const Field& F, const DenseMatrix& m, const std::vector<Scalar>& b);
DenseMatrix multiply(const Field& F, const DenseMatrix& a, const DenseMatrix& b);

}  // namespace dfb
