#include "vf/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace vf {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

bool Matrix::isZero() const {
  for (const auto& v : data_)
    if (!v.isZero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const GaussianRational& a = at(i, k);
      if (a.isZero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const GaussianRational& b = o.at(k, j);
        if (!b.isZero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in sum");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in difference");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::scaled(const GaussianRational& s) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

Matrix Matrix::minusScalar(const GaussianRational& s) const {
  if (rows_ != cols_) throw std::invalid_argument("minusScalar requires a square matrix");
  Matrix r = *this;
  for (std::size_t i = 0; i < rows_; ++i) r.at(i, i) -= s;
  return r;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).isZero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    GaussianRational inv = GaussianRational(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).isZero()) continue;
      GaussianRational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix nullspace(const Matrix& input) {
  Matrix m = input;
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (std::size_t p : pivots) isPivot[p] = true;

  std::size_t d = m.cols() - pivots.size();
  Matrix basis(m.cols(), d);
  std::size_t col = 0;
  for (std::size_t freeCol = 0; freeCol < m.cols(); ++freeCol) {
    if (isPivot[freeCol]) continue;
    basis.at(freeCol, col) = GaussianRational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], col) = -m.at(r, freeCol);
    ++col;
  }
  return basis;
}

std::size_t rank(const Matrix& input) {
  Matrix m = input;
  return rref(m).size();
}

Matrix powerKernel(const Matrix& m, std::size_t maxExponent) {
  if (m.rows() != m.cols()) throw std::invalid_argument("powerKernel requires square matrix");
  Matrix power = m;
  Matrix kernel = nullspace(power);
  for (std::size_t e = 1; e < maxExponent; ++e) {
    if (kernel.cols() == m.cols()) break;  // already everything
    Matrix next = power * m;
    Matrix nextKernel = nullspace(next);
    if (nextKernel.cols() == kernel.cols()) break;  // chain stabilized
    power = std::move(next);
    kernel = std::move(nextKernel);
  }
  return kernel;
}

Matrix kernelIntersectColumnSpan(const Matrix& b, const Matrix& a) {
  Matrix coords = nullspace(b * a);
  return a * coords;
}

}  // namespace vf
