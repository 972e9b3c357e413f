#pragma once
// Macaulay inverse systems over Q: catalecticant matrices, the maps p_i,
// annihilator slices and generators, colon ideals and Hilbert/Betti data.
// All ideal computations are degreewise linear algebra.

#include <map>
#include <vector>

#include "linres/linalg.hpp"
#include "linres/multilinear.hpp"

namespace linres {

/// phi in D_{2n-2}(U^*), stored as exponent vector -> coefficient.
struct InverseSystem {
  int d = 0;
  int n = 0;
  std::map<Exponents, Rational> coeffs;

  /// Coefficient of x^{*(e)}; zero when absent.
  Rational at(const Exponents& e) const;
  /// Throws std::invalid_argument when an invariant fails.
  void validate() const;
  /// Drops zero coefficients.
  void normalize();
  friend bool operator==(const InverseSystem&, const InverseSystem&) = default;
};

/// A homogeneous slice [I]_e: a basis of coefficient vectors over monomials(d, e).
struct GradedIdealSlice {
  int d = 0;
  int degree = 0;
  std::vector<QVector> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<Poly> polys() const;
};

QVector poly_to_vector(const Poly& f, int d, int e);
Poly vector_to_poly(const QVector& v, int d, int e);

SparseMatrix p_map(const InverseSystem& phi, int i);
SparseMatrix t_matrix(const InverseSystem& phi);
Rational delta(const InverseSystem& phi);
bool in_In(const InverseSystem& phi);
SparseMatrix sigma_adjugate(const InverseSystem& phi);

/// Generic catalecticant (t_{m_i m_j}) over the degree-(n-1) monomials.
SparseMatrix generic_t_matrix(int d, int n);

/// phi(f) for f of degree 2n-2 (pairing against dual monomials).
Rational apply_phi(const InverseSystem& phi, const Poly& f);
/// f(phi) for homogeneous f, as a map of exponent vectors to coefficients.
std::map<Exponents, Rational> contract_poly_on_phi(const Poly& f, const InverseSystem& phi);

GradedIdealSlice ann_slice(const InverseSystem& phi, int e);
std::vector<Poly> ann_generators_explicit(const InverseSystem& phi);
InverseSystem inverse_system_from_ideal(const GradedIdealSlice& slice, int d, int n);

/// Degree-e part of the ideal generated by homogeneous polynomials.
GradedIdealSlice ideal_slice(const std::vector<Poly>& gens, int d, int e);
/// P_k * slice as a slice of degree slice.degree + k.
GradedIdealSlice multiply_by_forms(const GradedIdealSlice& slice, int k);

struct ColonDegree {
  GradedIdealSlice slice;
  GradedIdealSlice minimal_generators;
};
/// Slices of (F) : g for degrees 0..up_to.
std::vector<ColonDegree> colon_ideal_slices(const std::vector<Poly>& f, const Poly& g, int d, int up_to);
/// J_{a,b} = (x^a, y^a, z^a) : (x+y+z)^b.
std::vector<ColonDegree> power_colon(int a, int b, int up_to);

std::vector<long long> hilbert_compressed(int d, int n);
/// Betti number of the linear resolution; both closed forms are evaluated
/// and must agree.
long long betti_linear(int d, int n, int i);
long long binomial(long long n, long long k);

}  // namespace linres
