#pragma once

#include <vector>

#include "dfb/groebner.hpp"
#include "dfb/quotient_ring.hpp"

namespace dfb {

/// Homogeneous matrix over A = P/I describing a map of graded free modules
/// A(-s_j) -> A(-t_i): entry (i,j) has degree s_j - t_i and is kept in
/// normal form modulo I.
class Matrix {
 public:
  Matrix() = default;
  Matrix(QRingPtr A, std::vector<int> target_degrees, std::vector<int> source_degrees);
  static Matrix from_columns(QRingPtr A, std::vector<int> target_degrees, std::vector<int> source_degrees,
                             const std::vector<SVec>& cols);
  // Source degrees taken from the columns; zero columns get degree 0.
  static Matrix from_columns(QRingPtr A, std::vector<int> target_degrees, const std::vector<SVec>& cols);
  static Matrix identity(QRingPtr A, std::vector<int> degrees);

  const QRingPtr& ring() const { return A_; }
  int rows() const { return static_cast<int>(tdeg_.size()); }
  int cols() const { return static_cast<int>(sdeg_.size()); }
  const std::vector<int>& target_degrees() const { return tdeg_; }
  const std::vector<int>& source_degrees() const { return sdeg_; }

  const Poly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * sdeg_.size() + j]; }
  void set(int i, int j, const Poly& p);

  OrderPtr target_order() const { return ModuleOrder::top(tdeg_); }
  SVec column(int j) const;
  std::vector<SVec> columns() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;

  // Dual map between dual free modules: degrees negate and swap.
  Matrix transpose() const;
  Matrix select_columns(const std::vector<int>& idx) const;
  Matrix select_rows(const std::vector<int>& idx) const;
  Matrix hconcat(const Matrix& o) const;
  Matrix vconcat(const Matrix& o) const;
  Matrix direct_sum(const Matrix& o) const;
  // Shifts all generator degrees on both sides by d.
  Matrix twisted(int d) const;
  // Same entries read over another ring on the same polynomial ring.
  Matrix over(QRingPtr B) const;

  bool is_zero() const;
  // Nonzero constant entry between generators of equal degree.
  bool has_unit_entry() const;
  std::string to_string() const;

 private:
  QRingPtr A_;
  std::vector<int> tdeg_, sdeg_;
  std::vector<Poly> e_;
};

// Sum of k copies of a free-module element layout: helper for Hom/Ext
// coordinates. Block b of size n is placed at components [b*n, (b+1)*n).
SVec place_block(const SVec& v, int block, int block_size);

// The polynomial ring P of A viewed as a quotient ring with zero ideal.
QRingPtr ambient_ring(const QRingPtr& A);

}  // namespace dfb
