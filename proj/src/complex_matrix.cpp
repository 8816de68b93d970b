#include "antsel/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace antsel {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("ComplexMatrix: entry count " + std::to_string(entries_.size()) +
                                " does not match " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::select_rows(std::span<const std::size_t> indices) const {
  ComplexMatrix out(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= rows_) throw std::out_of_range("select_rows: index out of range");
    std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>(indices[k] * cols_), cols_,
                out.entries_.begin() + static_cast<std::ptrdiff_t>(k * cols_));
  }
  return out;
}

ComplexMatrix ComplexMatrix::select_cols(std::span<const std::size_t> indices) const {
  ComplexMatrix out(rows_, indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= cols_) throw std::out_of_range("select_cols: index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, indices[k]);
  }
  return out;
}

ComplexMatrix ComplexMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  if (rows_ != cols_) throw std::invalid_argument("principal_submatrix: matrix is not square");
  const std::size_t k = indices.size();
  ComplexMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (indices[i] >= rows_) throw std::out_of_range("principal_submatrix: index out of range");
    for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(indices[i], indices[j]);
  }
  return out;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) {
  std::vector<Complex> e(a.entries().begin(), a.entries().end());
  for (auto& z : e) z *= s;
  return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix identity_plus_outer(const ComplexMatrix& a, double s) {
  const std::size_t n = a.rows();
  ComplexMatrix out = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      // row_i . conj(row_j)
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * std::conj(a(j, k));
      acc *= s;
      if (i == j) {
        out(i, i) = 1.0 + acc.real();
      } else {
        out(i, j) = acc;
        out(j, i) = std::conj(acc);
      }
    }
  }
  return out;
}

ComplexMatrix identity_plus_gram(const ComplexMatrix& a, double s) {
  const std::size_t n = a.cols();
  ComplexMatrix out = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.rows(); ++k) acc += std::conj(a(k, i)) * a(k, j);
      acc *= s;
      if (i == j) {
        out(i, i) = 1.0 + acc.real();
      } else {
        out(i, j) = acc;
        out(j, i) = std::conj(acc);
      }
    }
  }
  return out;
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double squared_norm(std::span<const Complex> x) {
  double acc = 0.0;
  for (const auto& z : x) acc += std::norm(z);
  return acc;
}

}  // namespace antsel
