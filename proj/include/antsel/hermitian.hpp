#ifndef ANTSEL_HERMITIAN_HPP
#define ANTSEL_HERMITIAN_HPP

#include <cstddef>
#include <span>
#include <stdexcept>

#include "antsel/complex_matrix.hpp"

namespace antsel {

/// Raised when a Cholesky pivot falls below the positive-definiteness
/// threshold. `minor()` is the order (1-based) of the offending leading minor.
class NotPositiveDefinite : public std::domain_error {
 public:
  NotPositiveDefinite(std::size_t minor, double pivot);
  std::size_t minor() const { return minor_; }
  double pivot() const { return pivot_; }

 private:
  std::size_t minor_;
  double pivot_;
};

/// Pivots below this fraction of the largest diagonal entry are rejected.
inline constexpr double kPdPivotTolerance = 1e-12;

/// Lower-triangular factor L with M = L L^H.
class CholeskyFactor {
 public:
  /// Reads the lower triangle of `m`; throws NotPositiveDefinite.
  static CholeskyFactor factor(const ComplexMatrix& m);

  std::size_t dim() const { return lower_.rows(); }
  const ComplexMatrix& lower() const { return lower_; }

  /// ln det M = 2 * sum ln L_kk.
  double logdet() const;

  ComplexVector solve(std::span<const Complex> b) const;

  /// z with L z = b.
  ComplexVector forward_solve(std::span<const Complex> b) const;

  /// x^H M^{-1} x, evaluated as |L^{-1} x|^2.
  double inverse_quadratic_form(std::span<const Complex> x) const;

  /// Replaces the factor of M with the factor of M + x x^H.
  void rank_one_update(std::span<const Complex> x);

 private:
  explicit CholeskyFactor(ComplexMatrix lower) : lower_(std::move(lower)) {}
  ComplexMatrix lower_;
};

/// Hermitian positive-definite matrix together with its factorization.
/// Construction fails unless the input is square, finite, Hermitian, and
/// factorizes with every pivot above the tolerance.
class HermitianPD {
 public:
  explicit HermitianPD(ComplexMatrix m);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const CholeskyFactor& factor() const { return factor_; }

 private:
  ComplexMatrix matrix_;
  CholeskyFactor factor_;
};

/// Natural log of det(M).
double logdet_pd(const HermitianPD& m);

/// x with M x = b.
ComplexVector solve_pd(const HermitianPD& m, std::span<const Complex> b);

struct RayleighMax {
  double value = 0.0;
  ComplexVector argmax;  // B^{-1} Delta, unnormalized
  bool degenerate = false;
};

/// max_w |w^H Delta|^2 / (w^H B w). The numerator is rank one, so the maximum
/// is Delta^H B^{-1} Delta, attained at w = B^{-1} Delta. A zero Delta yields
/// value 0 with a zero argmax flagged degenerate.
RayleighMax rank1_rayleigh_max(std::span<const Complex> delta, const HermitianPD& b);

/// Differential entropy (nats) of a Gaussian vector with covariance `cov`:
/// ln sqrt((2 pi e)^L det cov).
double gaussian_entropy(const HermitianPD& cov);

}  // namespace antsel

#endif  // ANTSEL_HERMITIAN_HPP
