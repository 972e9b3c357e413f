#pragma once
// Symmetric powers, divided powers and exterior powers of a free module
// with ordered basis x_1..x_d: monomial bases, the two contraction actions,
// comultiplication, Koszul contraction and the dual evaluation element.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "linres/poly.hpp"

namespace linres {

/// Exponent vector of length d.
using Exponents = std::vector<int>;

struct SymMonomial {
  Exponents e;
  int degree() const;
  friend auto operator<=>(const SymMonomial&, const SymMonomial&) = default;
};

/// x_1^{*(e_1)} ... x_d^{*(e_d)}
struct DivMonomial {
  Exponents e;
  int degree() const;
  friend auto operator<=>(const DivMonomial&, const DivMonomial&) = default;
};

/// x_{i_1} ^ ... ^ x_{i_a} with 1 <= i_1 < ... < i_a <= d.
struct ExtMonomial {
  std::vector<int> idx;
  int size() const { return static_cast<int>(idx.size()); }
  friend auto operator<=>(const ExtMonomial&, const ExtMonomial&) = default;
};

/// Element of a divided-power component with polynomial coefficients.
struct DivElement {
  std::map<Exponents, Poly> coeffs;
  void add(const Exponents& e, const Poly& c);
};

/// Degree-q exponent vectors in d variables, x_1-major lexicographic
/// descending (x^2, xy, xz, y^2, ...).
const std::vector<Exponents>& monomials(int d, int q);
/// Position of an exponent vector within monomials(d, degree).
int monomial_index(const Exponents& e);
/// Number of monomials of degree q in d variables.
long long monomial_count(int d, int q);
/// Strictly increasing index subsets of {1..d} of size k, lexicographic.
const std::vector<std::vector<int>>& subsets(int d, int k);

/// Multiset form (weakly increasing indices) of an exponent vector and back.
std::vector<int> exps_to_indices(const Exponents& e);
Exponents indices_to_exps(const std::vector<int>& idx, int d);

std::optional<DivMonomial> contract_sym_on_div(const SymMonomial& u, const DivMonomial& w);
std::optional<std::pair<Rational, SymMonomial>> contract_div_on_sym(const DivMonomial& w,
                                                                    const SymMonomial& u);

/// The pairs (m, m*) over all degree-j monomials.
std::vector<std::pair<SymMonomial, DivMonomial>> ev_dual(int d, int j);

struct CoTerm {
  int sign;
  int index;
  ExtMonomial rest;
};
/// The (1, a-1) component of comultiplication: term i has sign (-1)^(i+1).
std::vector<CoTerm> comultiply(const ExtMonomial& t);

/// Kos(t) = sum_i (-1)^(i+1) psi[t_i - 1] * (t without t_i).
std::vector<std::pair<ExtMonomial, Poly>> koszul_contract(const std::vector<Poly>& psi,
                                                          const ExtMonomial& t);

/// Structural Psi = (x_1, ..., x_d).
std::vector<Poly> structural_psi(int d);

/// (x_{a_1}^* ^ ... ^ x_{a_k}^*)(x_1 ^ ... ^ x_d) = sign * x_C where C is the
/// complement of a.  a must be strictly increasing.
std::pair<int, std::vector<int>> contract_into_top(int d, const std::vector<int>& a);
std::vector<int> complement(int d, const std::vector<int>& a);

}  // namespace linres
