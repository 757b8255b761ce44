#include "roadfield/banded.hpp"

#include <cmath>

namespace roadfield {

void solve_tridiag(const double* lower, const double* diag,
                   const double* upper, double* rhs, double* scratch, int n) {
  // scratch holds the modified upper diagonal
  double piv = diag[0];
  if (piv == 0.0) fail(ErrorCode::SingularSystem, "tridiagonal zero pivot");
  scratch[0] = upper[0] / piv;
  rhs[0] /= piv;
  for (int i = 1; i < n; ++i) {
    piv = diag[i] - lower[i] * scratch[i - 1];
    if (piv == 0.0) fail(ErrorCode::SingularSystem, "tridiagonal zero pivot");
    scratch[i] = upper[i] / piv;
    rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / piv;
  }
  for (int i = n - 2; i >= 0; --i) rhs[i] -= scratch[i] * rhs[i + 1];
}

BandedMatrix::BandedMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), width_(kl + ku + 1),
      a_(static_cast<size_t>(n) * (kl + ku + 1), 0.0) {}

double& BandedMatrix::at(int i, int j) {
  return a_[static_cast<size_t>(i) * width_ + (j - i + kl_)];
}

double BandedMatrix::at(int i, int j) const {
  return a_[static_cast<size_t>(i) * width_ + (j - i + kl_)];
}

void BandedMatrix::clear() { std::fill(a_.begin(), a_.end(), 0.0); }

void BandedMatrix::solve(double* rhs) {
  // in-place banded LU, no pivoting; the systems assembled here are
  // diagonally dominant by construction
  for (int k = 0; k < n_ - 1; ++k) {
    double piv = at(k, k);
    if (piv == 0.0) fail(ErrorCode::SingularSystem, "banded zero pivot");
    int imax = std::min(n_ - 1, k + kl_);
    for (int i = k + 1; i <= imax; ++i) {
      double m = at(i, k) / piv;
      if (m == 0.0) continue;
      at(i, k) = 0.0;
      int jmax = std::min(n_ - 1, k + ku_);
      for (int j = k + 1; j <= jmax; ++j) at(i, j) -= m * at(k, j);
      rhs[i] -= m * rhs[k];
    }
  }
  for (int i = n_ - 1; i >= 0; --i) {
    double s = rhs[i];
    int jmax = std::min(n_ - 1, i + ku_);
    for (int j = i + 1; j <= jmax; ++j) s -= at(i, j) * rhs[j];
    double piv = at(i, i);
    if (piv == 0.0) fail(ErrorCode::SingularSystem, "banded zero pivot");
    rhs[i] = s / piv;
  }
}

}  // namespace roadfield
