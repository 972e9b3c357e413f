#include <random>

#include "doctest.h"
#include "linres/linalg.hpp"
#include "linres/pfafflab.hpp"
#include "oracles.hpp"

using namespace linres;

namespace {

Poly x() { return Poly::x(1); }
Poly y() { return Poly::x(2); }
Poly z() { return Poly::x(3); }

AltMatrix random_alternating(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> c(-5, 5);
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly v(c(rng));
      m.set(i, j, v);
      m.set(j, i, -v);
    }
  return AltMatrix::from(m);
}

}  // namespace

TEST_CASE("Pfaffians of small matrices") {
  auto a = AltMatrix::from(oracle::golden_matrix({{"0", "a"}, {"-a", "0"}}));
  CHECK(pfaffian(a) == Poly::aux("a"));
  std::mt19937 rng(1);
  CHECK(pfaffian(random_alternating(rng, 5)).is_zero());
  CHECK_THROWS_AS(AltMatrix::from(oracle::golden_matrix({{"0", "1"}, {"1", "0"}})), std::invalid_argument);
  CHECK_THROWS_AS(AltMatrix::from(oracle::golden_matrix({{"1"}})), std::invalid_argument);
}

TEST_CASE("Pfaffian squared is the determinant") {
  std::mt19937 rng(42);
  for (int n = 2; n <= 8; n += 2)
    for (int k = 0; k < 3; ++k) {
      auto z = random_alternating(rng, n);
      Poly pf = pfaffian(z);
      CHECK(pf * pf == determinant(z.entries));
    }
}

TEST_CASE("Buchsbaum-Eisenbud matrices") {
  CHECK(build_Hn(1).entries == oracle::golden_matrix({{"0", "x1", "x3"}, {"-x1", "0", "x2"}, {"-x3", "-x2", "0"}}));
  CHECK(build_Hn(2).entries == oracle::golden_matrix({{"0", "x1", "0", "0", "x3"},
                                                      {"-x1", "0", "x2", "x3", "0"},
                                                      {"0", "-x2", "0", "x1", "0"},
                                                      {"0", "-x3", "-x1", "0", "x2"},
                                                      {"-x3", "0", "0", "-x2", "0"}}));
  auto h3 = build_Hn(3);
  CHECK(h3.size() == 7);
  CHECK_THROWS(build_Hn(0));
}

TEST_CASE("s polynomials") {
  CHECK(s_poly(0) == Poly(1));
  CHECK(s_poly(1) == z());
  CHECK(s_poly(2) == z() * z() + x() * y());
  CHECK(s_poly(3) == z() * z() * z() + Poly(2) * x() * y() * z());
  for (int a = 1; a <= 10; ++a) CHECK(s_poly(a + 1) == x() * y() * s_poly(a - 1) + z() * s_poly(a));
}

TEST_CASE("closed-form generators") {
  CHECK(be_generators(1) == std::vector<Poly>{y(), z(), x()});
  CHECK(be_generators(2) == std::vector<Poly>{y() * y(), x() * z(), x() * y() + z() * z(), y() * z(), x() * x()});
  CHECK(be_generators(3)[2] == y() * (x() * y() + z() * z()));
  for (int n = 1; n <= 5; ++n) CHECK(be_generators(n) == be_generators_direct(n));
}

TEST_CASE("Catalan inverse systems") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  CHECK(catalan_phi(1).coeffs == std::map<Exponents, Rational>{{{0, 0, 0}, 1}});
  CHECK(catalan_phi(2).coeffs == std::map<Exponents, Rational>{{{1, 1, 0}, 1}, {{0, 0, 2}, -1}});
  CHECK(catalan_phi(3).coeffs == std::map<Exponents, Rational>{{{2, 2, 0}, 1}, {{1, 1, 2}, -1}, {{0, 0, 4}, 2}});
  auto p1 = phi_mu(3, 1);
  CHECK(p1.at({4, 0, 0}) == 1);
  CHECK(p1.at({0, 4, 0}) == 0);
  auto p0 = phi_mu(3, 0);
  CHECK(p0.at({0, 4, 0}) == 2);
  CHECK(phi_mu(4, 2) == catalan_phi(4));
  CHECK_THROWS(phi_mu(3, 3));
}

TEST_CASE("phi_n annihilates the Pfaffian generators") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : be_generators(n)) CHECK(contract_poly_on_phi(g, catalan_phi(n)).empty());
}

TEST_CASE("contraction by powers of a linear form") {
  Poly a = alpha_sym(), b = beta_sym(), c = gamma_sym();
  auto t2 = ell_power_contraction(3, phi_mu(3, 2));
  CHECK(t2[{0, 0, 1}] == Poly(-6) * a * b * c + Poly(2) * c * c * c);
  auto t1 = ell_power_contraction(3, phi_mu(3, 1));
  CHECK(t1[{1, 0, 0}] == Poly(3) * a * b * b - Poly(3) * b * c * c + a * a * a);
  for (int n = 2; n <= 5; ++n) CHECK(mu_membership(phi_mu(n, 2), {1, 0, 0}, n));
}

TEST_CASE("membership of powers of linear forms") {
  for (int n = 2; n <= 6; ++n) CHECK(mu_membership(phi_mu(n, 2), {0, 1, 0}, n));
  CHECK_FALSE(mu_membership(phi_mu(3, 1), {1, 0, 0}, 3));
  CHECK_FALSE(mu_membership(phi_mu(4, 0), {0, 0, 1}, 4));
}

TEST_CASE("grid evidence for the mu classification") {
  for (int mu = 0; mu <= 2; ++mu) {
    auto ev = membership_grid(phi_mu(3, mu), 3, 3);
    CHECK(ev.checked > 0);
    CHECK(static_cast<int>(ev.members.size()) == mu);
  }
}
