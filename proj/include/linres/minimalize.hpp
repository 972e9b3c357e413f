#pragma once
// Kernels X_{p,r} of the vertical maps localized at delta, the snake map
// L_r, the generic minimal complex G'(r) for n = 2, and minimization of
// specialized complexes by cancelling unit entries.

#include <string>
#include <vector>

#include "linres/rescomplex.hpp"

namespace linres {

/// Basis of (X_{p,r})_delta.  Column k of `columns` equals
/// transform * (scale[k] e_{free[k]} + sum over pivots), expressed in the
/// standard basis of L_{p,r}; `transform` is block diagonal with blocks
/// Adj(T) or the identity, so it is invertible after inverting delta.
struct LocalizedBasis {
  int d = 0, n = 0, r = 0, p = 0;
  Poly delta;
  SparseMatrix columns;
  SparseMatrix transform;
  /// transform^{-1} * delta, polynomial.
  SparseMatrix transform_inverse_times_delta;
  std::vector<int> pivots;
  std::vector<int> free;
  std::vector<Poly> scale;
  std::vector<std::string> names;
  int rank() const { return columns.cols(); }
};

/// Requires n = 2 and n <= r; throws "unsupported parameters" otherwise.
LocalizedBasis kernel_basis_X(int d, int n, int r, int p);

/// X with basis.columns * X = y.  Throws std::domain_error when some
/// coordinate is not a polynomial.
SparseMatrix coordinates_in(const LocalizedBasis& basis, const SparseMatrix& y);

/// Column vector of L_r(omega) in the standard basis of L_{d-2,r}, with
/// delta * sigma realized by the adjugate of the generic catalecticant.
/// For r > n the splitting privileges x_1.
SparseMatrix snake_map(int d, int n, int r);

/// G'(2) over the generic ring for n = 2: F_0 = R, F_i = X_{i-1,2} and
/// F_d = wedge^d.  Differentials are delta * Kos in the chosen bases and
/// delta * L_2 on wedge^d.
FreeComplex build_generic_Gprime(int d, int n);

/// Signed maximal-order Pfaffians (-1)^{j+1} Pf(Z without row/column j).
std::vector<Poly> signed_submaximal_pfaffians(const SparseMatrix& z);

/// Unit cancellation: repeatedly removes the first nonzero constant entry
/// (scanning d_1, d_2, ... in row-major order).
FreeComplex minimize_complex(const FreeComplex& c);

/// Betti number of the truncation J^{r-n} I in homological degree i.
long long betti_truncation(int d, int n, int r, int i);

}  // namespace linres
