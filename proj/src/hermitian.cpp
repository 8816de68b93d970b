#include "antsel/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace antsel {

NotPositiveDefinite::NotPositiveDefinite(std::size_t minor, double pivot)
    : std::domain_error("matrix is not positive definite: leading minor of order " +
                        std::to_string(minor) + " has pivot " + std::to_string(pivot)),
      minor_(minor),
      pivot_(pivot) {}

CholeskyFactor CholeskyFactor::factor(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("Cholesky: matrix is not square");
  const std::size_t n = m.rows();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, m(i, i).real());
  const double threshold = kPdPivotTolerance * max_diag;

  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = m(j, j).real();
    for (std::size_t k = 0; k < j; ++k) pivot -= std::norm(l(j, k));
    if (!(pivot > threshold) || max_diag <= 0.0) throw NotPositiveDefinite(j + 1, pivot);
    const double ljj = std::sqrt(pivot);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex acc = m(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
      l(i, j) = acc / ljj;
    }
  }
  return CholeskyFactor(std::move(l));
}

double CholeskyFactor::logdet() const {
  double acc = 0.0;
  for (std::size_t k = 0; k < dim(); ++k) acc += std::log(lower_(k, k).real());
  return 2.0 * acc;
}

ComplexVector CholeskyFactor::forward_solve(std::span<const Complex> b) const {
  const std::size_t n = dim();
  if (b.size() != n) throw std::invalid_argument("Cholesky solve: dimension mismatch");
  ComplexVector z(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = z[i];
    for (std::size_t k = 0; k < i; ++k) acc -= lower_(i, k) * z[k];
    z[i] = acc / lower_(i, i).real();
  }
  return z;
}

ComplexVector CholeskyFactor::solve(std::span<const Complex> b) const {
  ComplexVector x = forward_solve(b);
  const std::size_t n = dim();
  for (std::size_t ii = n; ii-- > 0;) {
    Complex acc = x[ii];
    for (std::size_t k = ii + 1; k < n; ++k) acc -= std::conj(lower_(k, ii)) * x[k];
    x[ii] = acc / lower_(ii, ii).real();
  }
  return x;
}

double CholeskyFactor::inverse_quadratic_form(std::span<const Complex> x) const {
  return squared_norm(forward_solve(x));
}

void CholeskyFactor::rank_one_update(std::span<const Complex> x) {
  const std::size_t n = dim();
  if (x.size() != n) throw std::invalid_argument("rank_one_update: dimension mismatch");
  ComplexVector work(x.begin(), x.end());
  // Unitary column rotations of [L x] that zero x one entry at a time.
  for (std::size_t k = 0; k < n; ++k) {
    const double a = lower_(k, k).real();
    const Complex b = work[k];
    const double r = std::hypot(a, std::abs(b));
    lower_(k, k) = r;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex li = lower_(i, k);
      lower_(i, k) = (a * li + std::conj(b) * work[i]) / r;
      work[i] = (a * work[i] - b * li) / r;
    }
  }
}

namespace {

void require_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("HermitianPD: matrix is not square");
  if (!m.all_finite()) throw std::invalid_argument("HermitianPD: non-finite entry");
  const double tol = 1e-12 * std::max(1.0, m.max_abs());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (std::abs(m(i, i).imag()) > tol)
      throw std::invalid_argument("HermitianPD: diagonal entry " + std::to_string(i) +
                                  " is not real");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
        throw std::invalid_argument("HermitianPD: entry (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") breaks Hermitian symmetry");
    }
  }
}

const ComplexMatrix& checked(const ComplexMatrix& m) {
  require_hermitian(m);
  return m;
}

}  // namespace

HermitianPD::HermitianPD(ComplexMatrix m)
    : matrix_(std::move(m)), factor_(CholeskyFactor::factor(checked(matrix_))) {}

double logdet_pd(const HermitianPD& m) { return m.factor().logdet(); }

ComplexVector solve_pd(const HermitianPD& m, std::span<const Complex> b) {
  return m.factor().solve(b);
}

RayleighMax rank1_rayleigh_max(std::span<const Complex> delta, const HermitianPD& b) {
  if (delta.size() != b.dim())
    throw std::invalid_argument("rank1_rayleigh_max: Delta length does not match B");
  RayleighMax out;
  if (std::all_of(delta.begin(), delta.end(), [](const Complex& z) { return z == 0.0; })) {
    out.argmax.assign(delta.size(), 0.0);
    out.degenerate = true;
    return out;
  }
  out.argmax = b.factor().solve(delta);
  // Delta^H B^{-1} Delta is real and non-negative; drop the rounding residue.
  out.value = std::max(0.0, dot(delta, out.argmax).real());
  return out;
}

double gaussian_entropy(const HermitianPD& cov) {
  const double l = static_cast<double>(cov.dim());
  return 0.5 * (l * std::log(2.0 * std::numbers::pi * std::numbers::e) + logdet_pd(cov));
}

}  // namespace antsel
