#include "opsplit/linalg.hpp"

#include <string>
#include <utility>

#include "opsplit/error.hpp"

namespace opsplit {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::DimMismatch, what);
}

}  // namespace

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector sum");
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector difference");
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= s;
  return out;
}

Vec& axpy(Vec& y, const Scalar& a, const Vec& x) {
  require(y.size() == x.size(), "axpy");
  if (is_zero(a)) return y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i])) y[i] += a * x[i];
  }
  return y;
}

Scalar dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dot");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  }
  return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  require(v.size() == rows_, "set_column");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!opsplit::is_zero(x)) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (a.data_[i] != b.data_[i]) return false;
  }
  return true;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator-(const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = -a(r, c);
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  if (is_zero(s)) return out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) out(r, c) = s * m(r, c);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(r, k);
      if (is_zero(x)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!is_zero(b(k, c))) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

Vec operator*(const Matrix& m, const Vec& v) {
  require(m.cols() == v.size(), "matrix-vector product");
  Vec out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_zero(v[c])) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!is_zero(m(r, c))) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return row_reduce(work).size();
}

Matrix invert(const Matrix& m) {
  require(m.square(), "invert needs a square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw Error(ErrorCode::Singular, "matrix of size " + std::to_string(n) + " is singular");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Scalar determinant(const Matrix& m) {
  require(m.square(), "determinant needs a square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(a(p, col))) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const Scalar f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

Tensor3::Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
    : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2) {}

Vec Tensor3::fiber(std::size_t i, std::size_t j) const {
  Vec v(d2_);
  for (std::size_t k = 0; k < d2_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

void Tensor3::set_fiber(std::size_t i, std::size_t j, const Vec& v) {
  require(v.size() == d2_, "set_fiber");
  for (std::size_t k = 0; k < d2_; ++k) (*this)(i, j, k) = v[k];
}

bool Tensor3::is_zero() const {
  for (const auto& x : data_) {
    if (!opsplit::is_zero(x)) return false;
  }
  return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  require(d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_, "tensor sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  require(d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_, "tensor difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  if (a.d0_ != b.d0_ || a.d1_ != b.d1_ || a.d2_ != b.d2_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (a.data_[i] != b.data_[i]) return false;
  }
  return true;
}

Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

Tensor3 operator*(const Scalar& s, const Tensor3& t) {
  Tensor3 out(t.d0(), t.d1(), t.d2());
  for (std::size_t i = 0; i < t.d0(); ++i)
    for (std::size_t j = 0; j < t.d1(); ++j)
      for (std::size_t k = 0; k < t.d2(); ++k)
        if (!is_zero(t(i, j, k))) out(i, j, k) = s * t(i, j, k);
  return out;
}

Vec contract(const Tensor3& t, const Vec& u, const Vec& v) {
  require(u.size() == t.d0() && v.size() == t.d1(), "contract");
  Vec out(t.d2());
  for (std::size_t i = 0; i < t.d0(); ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < t.d1(); ++j) {
      if (is_zero(v[j])) continue;
      const Scalar w = u[i] * v[j];
      for (std::size_t k = 0; k < t.d2(); ++k) {
        if (!is_zero(t(i, j, k))) out[k] += w * t(i, j, k);
      }
    }
  }
  return out;
}

}  // namespace opsplit
