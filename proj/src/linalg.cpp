#include "dfb/linalg.hpp"

namespace dfb {

std::vector<int> rref(const Field& F, DenseMatrix& m) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!Field::is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = F.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || Field::is_zero(m.at(i, c))) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(const Field& F, DenseMatrix m) { return static_cast<int>(rref(F, m).size()); }

std::vector<std::vector<Scalar>> nullspace(const Field& F, const DenseMatrix& m) {
  DenseMatrix r = m;
  auto piv = rref(F, r);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Scalar> x(m.cols, Scalar(0));
    x[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = F.neg(r.at(static_cast<int>(k), f));
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<std::vector<Scalar>> solve(const Field& F, const DenseMatrix& m, const std::vector<Scalar>& b) {
  DenseMatrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto piv = rref(F, aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<Scalar> x(m.cols, Scalar(0));
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.at(static_cast<int>(k), m.cols);
  return x;
}

DenseMatrix multiply(const Field& F, const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (Field::is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) = F.add(c.at(i, j), F.mul(a.at(i, k), b.at(k, j)));
    }
  return c;
}

}  // namespace dfb
