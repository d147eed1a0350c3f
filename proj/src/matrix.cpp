#include "dfb/matrix.hpp"

#include <sstream>

namespace dfb {

Matrix::Matrix(QRingPtr A, std::vector<int> target_degrees, std::vector<int> source_degrees)
    : A_(std::move(A)), tdeg_(std::move(target_degrees)), sdeg_(std::move(source_degrees)) {
  e_.assign(tdeg_.size() * sdeg_.size(), Poly(A_->poly_ring()));
}

void Matrix::set(int i, int j, const Poly& p) {
  Poly r = A_->reduce(p);
  if (!r.is_zero()) {
    auto d = r.homogeneous_degree();
    if (!d || *d != sdeg_[j] - tdeg_[i])
      throw MathError("matrix entry " + r.to_string() + " has the wrong degree at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  }
  e_[static_cast<std::size_t>(i) * sdeg_.size() + j] = std::move(r);
}

Matrix Matrix::from_columns(QRingPtr A, std::vector<int> tdeg, std::vector<int> sdeg, const std::vector<SVec>& cols) {
  Matrix m(A, std::move(tdeg), std::move(sdeg));
  for (int j = 0; j < m.cols(); ++j) {
    auto parts = vsplit(A->poly_ring(), cols[j], m.rows());
    for (int i = 0; i < m.rows(); ++i)
      if (!parts[i].is_zero()) m.set(i, j, parts[i]);
  }
  return m;
}

Matrix Matrix::from_columns(QRingPtr A, std::vector<int> tdeg, const std::vector<SVec>& cols) {
  auto ord = ModuleOrder::top(tdeg);
  std::vector<int> sdeg;
  for (const auto& c : cols) sdeg.push_back(c.empty() ? 0 : vdegree(c, *ord));
  return from_columns(std::move(A), std::move(tdeg), std::move(sdeg), cols);
}

Matrix Matrix::identity(QRingPtr A, std::vector<int> degrees) {
  Matrix m(A, degrees, degrees);
  for (int i = 0; i < m.rows(); ++i) m.set(i, i, Poly::constant(A->poly_ring(), Scalar(1)));
  return m;
}

SVec Matrix::column(int j) const {
  SVec v;
  for (int i = 0; i < rows(); ++i)
    for (const auto& t : at(i, j).terms()) v.push_back({t.c, t.m, i});
  vsort(v, A_->field(), *target_order());
  return v;
}

std::vector<SVec> Matrix::columns() const {
  std::vector<SVec> out;
  for (int j = 0; j < cols(); ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols() != o.rows()) throw MathError("matrix size mismatch in product");
  // A degree-e left factor shifts the source degrees of the product by e.
  int e = 0;
  for (int k = 0; k < cols(); ++k) {
    if (k == 0) e = sdeg_[0] - o.tdeg_[0];
    else if (sdeg_[k] - o.tdeg_[k] != e) throw MathError("inhomogeneous matrix product");
  }
  std::vector<int> sd = o.sdeg_;
  for (auto& x : sd) x += e;
  Matrix m(A_, tdeg_, sd);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < o.cols(); ++j) {
      Poly s(A_->poly_ring());
      for (int k = 0; k < cols(); ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        s += at(i, k) * o.at(k, j);
      }
      if (!s.is_zero()) m.set(i, j, s);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m(A_, tdeg_, sdeg_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) m.set(i, j, at(i, j) + o.at(i, j));
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  Scalar cc = A_->field().normalize(c);
  for (auto& p : m.e_) p = p.scaled(cc);
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return tdeg_ == o.tdeg_ && sdeg_ == o.sdeg_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
  std::vector<int> t, s;
  for (int d : sdeg_) t.push_back(-d);
  for (int d : tdeg_) s.push_back(-d);
  Matrix m(A_, t, s);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) m.e_[static_cast<std::size_t>(j) * rows() + i] = at(i, j);
  return m;
}

Matrix Matrix::select_columns(const std::vector<int>& idx) const {
  std::vector<int> s;
  for (int j : idx) s.push_back(sdeg_[j]);
  Matrix m(A_, tdeg_, s);
  for (int i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m.e_[i * idx.size() + j] = at(i, idx[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
  std::vector<int> t;
  for (int i : idx) t.push_back(tdeg_[i]);
  Matrix m(A_, t, sdeg_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols(); ++j) m.e_[i * sdeg_.size() + j] = at(idx[i], j);
  return m;
}

Matrix Matrix::hconcat(const Matrix& o) const {
  if (tdeg_ != o.tdeg_) throw MathError("hconcat: target mismatch");
  std::vector<int> s = sdeg_;
  s.insert(s.end(), o.sdeg_.begin(), o.sdeg_.end());
  Matrix m(A_, tdeg_, s);
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) m.e_[i * s.size() + j] = at(i, j);
    for (int j = 0; j < o.cols(); ++j) m.e_[i * s.size() + cols() + j] = o.at(i, j);
  }
  return m;
}

Matrix Matrix::vconcat(const Matrix& o) const {
  if (sdeg_ != o.sdeg_) throw MathError("vconcat: source mismatch");
  std::vector<int> t = tdeg_;
  t.insert(t.end(), o.tdeg_.begin(), o.tdeg_.end());
  Matrix m(A_, t, sdeg_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) m.e_[i * sdeg_.size() + j] = at(i, j);
  for (int i = 0; i < o.rows(); ++i)
    for (int j = 0; j < cols(); ++j) m.e_[(rows() + i) * sdeg_.size() + j] = o.at(i, j);
  return m;
}

Matrix Matrix::direct_sum(const Matrix& o) const {
  std::vector<int> t = tdeg_, s = sdeg_;
  t.insert(t.end(), o.tdeg_.begin(), o.tdeg_.end());
  s.insert(s.end(), o.sdeg_.begin(), o.sdeg_.end());
  Matrix m(A_, t, s);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) m.e_[i * s.size() + j] = at(i, j);
  for (int i = 0; i < o.rows(); ++i)
    for (int j = 0; j < o.cols(); ++j) m.e_[(rows() + i) * s.size() + cols() + j] = o.at(i, j);
  return m;
}

Matrix Matrix::twisted(int d) const {
  Matrix m = *this;
  for (auto& x : m.sdeg_) x += d;
  for (auto& x : m.tdeg_) x += d;
  return m;
}

Matrix Matrix::over(QRingPtr B) const {
  Matrix m(B, tdeg_, sdeg_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (!at(i, j).is_zero()) m.set(i, j, at(i, j));
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool Matrix::has_unit_entry() const {
  for (const auto& p : e_)
    if (!p.is_zero() && p.lead().m.is_one()) return true;
  return false;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols(); ++j) os << (j ? ", " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

SVec place_block(const SVec& v, int block, int block_size) {
  SVec out = v;
  for (auto& t : out) t.comp += block * block_size;
  return out;
}

QRingPtr ambient_ring(const QRingPtr& A) {
  return std::make_shared<const QuotientRing>(A->poly_ring(), std::vector<Poly>{}, A->name() + "_P");
}

}  // namespace dfb
