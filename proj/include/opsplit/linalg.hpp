#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "opsplit/scalar.hpp"

namespace opsplit {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
Vec& axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a*x
Scalar dot(const Vec& a, const Vec& b);

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);

  bool is_zero() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Scalar& s, const Matrix& m);
Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& m, const Vec& v);

// Block-diagonal matrix diag(a, b).
Matrix block_diag(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& m);
Matrix invert(const Matrix& m);  // throws Error(Singular) or Error(DimMismatch)
Scalar determinant(const Matrix& m);

// Dense rank-3 tensor indexed [i][j][k].
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2);
  explicit Tensor3(std::size_t n) : Tensor3(n, n, n) {}

  std::size_t d0() const { return d0_; }
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  bool cubic(std::size_t n) const { return d0_ == n && d1_ == n && d2_ == n; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d1_ + j) * d2_ + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d1_ + j) * d2_ + k];
  }

  // Fiber t[i][j][.] as a vector.
  Vec fiber(std::size_t i, std::size_t j) const;
  void set_fiber(std::size_t i, std::size_t j, const Vec& v);

  bool is_zero() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);

  friend bool operator==(const Tensor3& a, const Tensor3& b);

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Scalar> data_;
};

Tensor3 operator+(Tensor3 a, const Tensor3& b);
Tensor3 operator-(Tensor3 a, const Tensor3& b);
Tensor3 operator*(const Scalar& s, const Tensor3& t);

// result_k = sum_{i,j} u_i v_j t[i][j][k]. Throws Error(DimMismatch).
Vec contract(const Tensor3& t, const Vec& u, const Vec& v);

}  // namespace opsplit
