#pragma once
// Exact rationals and sparse multivariate polynomials over Q.
//
// Variables come in three kinds: structural x_i, coefficient variables t_E
// indexed by an exponent vector E, and auxiliary named symbols.  Every
// variable is packed into a 64-bit key whose integer order is the variable
// order (structural < coefficient < auxiliary).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linres {

using Rational = mpq_class;
using Integer = mpz_class;

/// "num" when the denominator is 1, otherwise "num/den".
std::string rational_to_string(const Rational& q);
/// Parses "num" or "num/den"; throws std::invalid_argument.
Rational parse_rational(std::string_view s);

class VarId {
 public:
  enum class Kind : std::uint8_t { Structural = 0, Coefficient = 1, Auxiliary = 2 };

  static constexpr int kMaxCoefficientDim = 9;
  static constexpr int kMaxCoefficientExp = 63;
  static constexpr std::size_t kMaxAuxName = 7;

  VarId() = default;
  /// x_i with i >= 1.
  static VarId x(int i);
  /// t_E; E has at most 9 entries, each at most 63.
  static VarId t(const std::vector<int>& exps);
  /// Named symbol of 1..7 characters from [A-Za-z0-9_], not starting with a digit.
  static VarId aux(std::string_view name);

  Kind kind() const { return static_cast<Kind>(key_ >> 62); }
  int index() const;                 // structural only
  std::vector<int> exponents() const;  // coefficient only
  std::string name() const;          // auxiliary only
  std::uint64_t key() const { return key_; }

  std::string to_string() const;

  friend auto operator<=>(const VarId&, const VarId&) = default;
  friend bool operator==(const VarId&, const VarId&) = default;

 private:
  explicit VarId(std::uint64_t k) : key_(k) {}
  std::uint64_t key_ = 0;
};

struct Bidegree {
  int x = 0;
  int t = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  Bidegree operator+(const Bidegree& o) const { return {x + o.x, t + o.t}; }
  Bidegree operator-(const Bidegree& o) const { return {x - o.x, t - o.t}; }
};

/// Power product with variables stored in increasing VarId order and
/// positive exponents only.
class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;
  static Monomial of(VarId v, int e = 1);
  /// Structural monomial x^e for an exponent vector over x_1..x_d.
  static Monomial structural(const std::vector<int>& exps);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int degree() const;
  Bidegree bidegree() const;
  int exponent(VarId v) const;
  /// Exponent vector over x_1..x_d; throws if non-structural variables occur.
  std::vector<int> structural_exponents(int d) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Term order: total degree, then structural degree, then lexicographic
  /// with the smallest variable most significant.  Returns <0, 0, >0.
  friend int compare(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> f_;
  friend class Poly;
};

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c);             // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(static_cast<long>(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(long long c) : Poly(static_cast<long>(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(VarId v, int e = 1);
  static Poly x(int i, int e = 1) { return var(VarId::x(i), e); }
  static Poly t(const std::vector<int>& exps) { return var(VarId::t(exps)); }
  static Poly aux(std::string_view name) { return var(VarId::aux(name)); }
  static Poly term(Monomial m, Rational c);
  /// Builds from arbitrary terms; combines duplicates and sorts.
  static Poly from_terms(std::vector<Term> terms);

  /// Terms in decreasing term order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// One term whose coefficient is +1 or -1.
  bool is_signed_monomial() const;
  const Term& leading() const { return terms_.front(); }

  /// Bidegree when all terms share one, otherwise nullopt.
  std::optional<Bidegree> bidegree() const;
  /// Reports the first pair of terms with different bidegrees.
  std::optional<std::pair<Monomial, Monomial>> bihomogeneity_violation() const;
  int degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Replaces each variable v with subst(v) when it returns a value.
  Poly substitute(const std::function<std::optional<Poly>(VarId)>& subst) const;
  /// Evaluates all variables; throws if a variable is unassigned.
  Rational evaluate(const std::function<Rational(VarId)>& value) const;
  /// All variables occurring, in increasing order.
  std::vector<VarId> variables() const;

  std::string to_string() const;
  /// Inverse of to_string; also accepts unicode minus and optional spaces.
  static Poly parse(std::string_view s);

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

}  // namespace linres
