#ifndef ANTSEL_COMPLEX_MATRIX_HPP
#define ANTSEL_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace antsel {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix, row-major. Rows of a channel matrix are receive
/// antennas, columns are transmit antennas.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix select_rows(std::span<const std::size_t> indices) const;
  ComplexMatrix select_cols(std::span<const std::size_t> indices) const;
  /// Rows and columns `indices` of a square matrix, in the given order.
  ComplexMatrix principal_submatrix(std::span<const std::size_t> indices) const;

  bool all_finite() const;
  double max_abs() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(double s, const ComplexMatrix& a);
ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> x);

/// I + s * A * A^H, with the lower triangle mirrored so the result is exactly
/// Hermitian.
ComplexMatrix identity_plus_outer(const ComplexMatrix& a, double s);

/// I + s * A^H * A, exactly Hermitian.
ComplexMatrix identity_plus_gram(const ComplexMatrix& a, double s);

/// x^H y
Complex dot(std::span<const Complex> x, std::span<const Complex> y);
double squared_norm(std::span<const Complex> x);

}  // namespace antsel

#endif  // ANTSEL_COMPLEX_MATRIX_HPP
