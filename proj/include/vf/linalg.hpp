#ifndef VF_LINALG_HPP
#define VF_LINALG_HPP

#include <cstddef>
#include <vector>

#include "vf/scalar.hpp"

namespace vf {

/// Dense matrix over Q(i), row-major.  All operations are exact.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool isZero() const;
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const GaussianRational& s) const;

  // this - s * I (square only)
  Matrix minusScalar(const GaussianRational& s) const;

  // Columns glued side by side.
  static Matrix hcat(const Matrix& a, const Matrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

// Basis of the right kernel, returned as columns of an n x d matrix (d may be
// 0).  Gaussian elimination with deterministic pivoting: first nonzero
// column, row of smallest index; the basis is the standard one obtained from
// the reduced row echelon form (free variable set to 1, ascending).
Matrix nullspace(const Matrix& m);

// Column rank.
std::size_t rank(const Matrix& m);

// Least-exponent-stable kernel of powers: returns a basis of
// ker(m^e) for e = `maxExponent`, computed by raising the power until the
// kernel dimension stabilizes (kernels of successive powers form an
// increasing chain that, once stationary, stays stationary).
Matrix powerKernel(const Matrix& m, std::size_t maxExponent);

// Basis of span(columns of a) intersected with ker(b): solves b*a*x = 0 and
// maps the solutions back through a.
Matrix kernelIntersectColumnSpan(const Matrix& b, const Matrix& a);

}  // namespace vf

#endif
