#pragma once

#include <vector>

namespace pidn {

/// Square CSR matrix with sorted column indices per row.
struct CsrMatrix {
  int n = 0;
  std::vector<int> indptr;   // size n+1
  std::vector<int> indices;  // column per entry
  std::vector<double> values;

  /// y = A x.
  void multiply(const std::vector<double>& x, std::vector<double>& y) const;

  /// Builds from coordinate triplets; duplicates are summed.
  static CsrMatrix from_triplets(
      int n, const std::vector<std::pair<std::pair<int, int>, double>>& trip);
};

struct SolveStats {
  int iterations = 0;
  double rel_residual = 0.0;
  bool converged = false;
};

/// Preconditioned conjugate gradient with Jacobi (diagonal) scaling. `x`
/// carries the initial guess in and the solution out. Stops when
/// ||b - Ax||_2 <= tol * ||b||_2.
SolveStats cg_jacobi(const CsrMatrix& A, const std::vector<double>& b,
                     std::vector<double>& x, double tol = 1e-10,
                     int max_iter = 20000);

/// BiCGStab with Jacobi scaling for the nonsymmetric systems.
SolveStats bicgstab_jacobi(const CsrMatrix& A, const std::vector<double>& b,
                           std::vector<double>& x, double tol = 1e-10,
                           int max_iter = 20000);

}  // namespace pidn
