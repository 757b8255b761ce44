#pragma once

#include <cstddef>
#include <vector>

#include "roadfield/errors.hpp"

namespace roadfield {

// Thomas algorithm for a tridiagonal system; lower/diag/upper of size n
// (lower[0] and upper[n-1] unused). Overwrites rhs with the solution.
// Scratch must have size >= n.
void solve_tridiag(const double* lower, const double* diag,
                   const double* upper, double* rhs, double* scratch, int n);

// Small general banded solver (LU without pivoting) for bandwidth kl/ku.
// Matrix stored dense-banded: band(i, j) for |i-j| <= max(kl, ku).
// Used for the short vertical lines whose top row carries the Wentzell
// coupling (bandwidth 2).
class BandedMatrix {
 public:
  BandedMatrix(int n, int kl, int ku);
  double& at(int i, int j);
  double at(int i, int j) const;
  void clear();
  // Factor and solve in place; throws SingularSystem on zero pivot.
  void solve(double* rhs);

 private:
  int n_, kl_, ku_, width_;
  std::vector<double> a_;
};

}  // namespace roadfield
