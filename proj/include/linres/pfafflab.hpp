#pragma once
// Pfaffians of alternating matrices, the Buchsbaum-Eisenbud matrices H_n and
// their maximal-order Pfaffians, the Catalan inverse systems phi_n and
// phi_{n,mu}, and the contraction of l^n against an inverse system used to
// separate the mu-classes.  Throughout d = 3 and x, y, z are x1, x2, x3.

#include <map>
#include <vector>

#include "linres/inversesys.hpp"
#include "linres/matrix.hpp"

namespace linres {

struct AltMatrix {
  SparseMatrix entries;
  int size() const { return entries.rows(); }
  /// Throws std::invalid_argument unless m is square, skew and zero on the diagonal.
  static AltMatrix from(SparseMatrix m);
};

Poly pfaffian(const AltMatrix& z);
/// Pfaffian of the principal submatrix on the given increasing indices (0-based).
Poly pfaffian_of(const AltMatrix& z, const std::vector<int>& indices);

/// (2n+1) x (2n+1) Buchsbaum-Eisenbud matrix H_n(x, y, z).
AltMatrix build_Hn(int n);
/// sum_j C(i-j, j) x^j y^j z^(i-2j).
Poly s_poly(int i);
/// B_1..B_{2n+1} from the closed form in the s_i.
std::vector<Poly> be_generators(int n);
/// B_i computed as the Pfaffian of H_n with row and column i removed.
std::vector<Poly> be_generators_direct(int n);

int catalan(int i);
InverseSystem catalan_phi(int n);
/// phi_{n,2} = phi_n, phi_{n,1} = phi_n + x*^(2n-2), phi_{n,0} = phi_{n,1} + 2 y*^(2n-2).
InverseSystem phi_mu(int n, int mu);

/// l^n(phi) for l = alpha x + beta y + gamma z with symbolic alpha, beta,
/// gamma: exponent vector of the divided monomial -> coefficient.
std::map<Exponents, Poly> ell_power_contraction(int n, const InverseSystem& phi);
Poly alpha_sym();
Poly beta_sym();
Poly gamma_sym();

/// True iff l^n annihilates phi, with l = a x + b y + c z.
bool mu_membership(const InverseSystem& phi, const std::vector<Rational>& l, int n);

struct GridEvidence {
  int checked = 0;
  /// Linear forms (primitive, leading coefficient positive) with l^n in ann phi.
  std::vector<std::vector<int>> members;
};
/// Scans primitive integer forms with coefficients in [-bound, bound].
GridEvidence membership_grid(const InverseSystem& phi, int n, int bound);

}  // namespace linres
