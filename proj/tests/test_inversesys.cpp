#include <random>

#include "doctest.h"
#include "linres/inversesys.hpp"
#include "linres/linalg.hpp"
#include "linres/pfafflab.hpp"
#include "oracles.hpp"

using namespace linres;

namespace {

std::vector<QVector> vectors_of(const std::vector<std::string>& polys, int d, int e) {
  std::vector<QVector> out;
  for (const auto& s : polys) out.push_back(poly_to_vector(Poly::parse(s), d, e));
  return out;
}

std::vector<QVector> vectors_of(const std::vector<Poly>& polys, int d, int e) {
  std::vector<QVector> out;
  for (const auto& p : polys) out.push_back(poly_to_vector(p, d, e));
  return out;
}

bool same_up_to_sign(const InverseSystem& a, const InverseSystem& b) {
  if (a == b) return true;
  InverseSystem neg = b;
  for (auto& [e, c] : neg.coeffs) c = -c;
  return a == neg;
}

const SparseMatrix t_phi2 = oracle::golden_matrix({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "-1"}});

}  // namespace

TEST_CASE("catalecticant and p maps") {
  auto phi = catalan_phi(2);
  CHECK(t_matrix(phi) == t_phi2);
  CHECK(p_map(phi, 1) == t_phi2);
  CHECK(delta(phi) == 1);
  auto p0 = p_map(phi, 0);
  CHECK(p0.cols() == 1);
  CHECK(p0.rows() == 6);
  CHECK(p_map(phi, 2) == p0.transpose());
  CHECK_THROWS(p_map(phi, 3));
}

TEST_CASE("rank-one inverse system") {
  for (int n = 2; n <= 3; ++n) {
    InverseSystem phi{3, n, {{{2 * n - 2, 0, 0}, 1}}};
    auto t = t_matrix(phi);
    CHECK(t.nonzeros() == 1);
    CHECK(delta(phi) == 0);
    CHECK_FALSE(in_In(phi));
    CHECK_THROWS(ann_generators_explicit(phi));
  }
}

TEST_CASE("membership in I_n") {
  CHECK(in_In(catalan_phi(2)));
  CHECK(delta(catalan_phi(3)) != 0);
  CHECK(in_In(phi_mu(3, 1)));
}

TEST_CASE("adjugate of the catalecticant") {
  std::mt19937 rng(5);
  for (int k = 0; k < 6; ++k) {
    auto phi = oracle::random_phi(rng, 3, 2 + k % 2, false);
    auto t = t_matrix(phi);
    CHECK(t == t.transpose());
    CHECK(t * sigma_adjugate(phi) == SparseMatrix::identity(t.rows()).scaled(Poly(delta(phi))));
  }
  InverseSystem id{3, 2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}};
  CHECK(sigma_adjugate(id) == SparseMatrix::identity(3));
}

TEST_CASE("annihilator slices of phi_2") {
  auto phi = catalan_phi(2);
  auto s2 = ann_slice(phi, 2);
  CHECK(s2.dim() == 5);
  CHECK(span_equal(s2.basis, vectors_of({"x1^2", "x2^2", "x1*x3", "x2*x3", "x1*x2 + x3^2"}, 3, 2), 6));
  CHECK(ann_slice(phi, 1).dim() == 0);
  CHECK(ann_slice(phi, 3).dim() == 10);
  CHECK(span_equal(vectors_of(ann_generators_explicit(phi), 3, 2), s2.basis, 6));
}

TEST_CASE("explicit annihilator generators") {
  auto phi = catalan_phi(3);
  CHECK(span_equal(vectors_of(ann_generators_explicit(phi), 3, 3), ann_slice(phi, 3).basis, 10));
  InverseSystem line{1, 3, {{{4}, 1}}};
  CHECK(ann_generators_explicit(line).empty());
  CHECK(ann_slice(line, 3).dim() == 0);
  CHECK(ann_slice(line, 5).dim() == 1);
}

TEST_CASE("inverse system from an ideal") {
  for (int n = 2; n <= 4; ++n) {
    auto slice = ideal_slice(be_generators(n), 3, 2 * n - 2);
    CHECK(same_up_to_sign(inverse_system_from_ideal(slice, 3, n), catalan_phi(n)));
  }
  auto ci = ideal_slice({Poly::x(1, 5)}, 1, 4);
  CHECK(inverse_system_from_ideal(ci, 1, 3) == InverseSystem{1, 3, {{{4}, 1}}});
  CHECK_THROWS(inverse_system_from_ideal(ideal_slice({Poly::x(1, 2)}, 3, 2), 3, 2));
}

TEST_CASE("colon ideals") {
  auto j10 = power_colon(1, 0, 3);
  CHECK(span_equal(j10[1].slice.basis, vectors_of({"x1", "x2", "x3"}, 3, 1), 3));
  CHECK(j10[1].minimal_generators.dim() == 3);
  CHECK(j10[2].minimal_generators.dim() == 0);
  auto j21 = power_colon(2, 1, 4);
  CHECK(j21[1].slice.dim() == 0);
  CHECK(span_equal(j21[2].slice.basis,
                   vectors_of({"x1^2", "x2^2", "x3^2", "x3*x1 - x3*x2", "x2*x1 - x2*x3"}, 3, 2), 6));
  CHECK(j21[3].minimal_generators.dim() == 0);
  std::vector<Poly> f{Poly::x(1, 2), Poly::x(2, 2)};
  auto self = colon_ideal_slices(f, Poly(1), 3, 3);
  for (int e = 0; e <= 3; ++e)
    CHECK(span_equal(self[e].slice.basis, ideal_slice(f, 3, e).basis, static_cast<int>(monomial_count(3, e))));
}

TEST_CASE("compressed Hilbert functions") {
  CHECK(hilbert_compressed(3, 2) == std::vector<long long>{1, 3, 1});
  CHECK(hilbert_compressed(3, 3) == std::vector<long long>{1, 3, 6, 3, 1});
  CHECK(hilbert_compressed(1, 4) == std::vector<long long>(7, 1));
  std::mt19937 rng(9);
  for (int k = 0; k < 4; ++k) {
    int n = 2 + k % 2;
    auto phi = oracle::random_phi(rng, 3, n, false);
    if (delta(phi) == 0) continue;
    auto h = hilbert_compressed(3, n);
    for (int e = 0; e <= 2 * n - 2; ++e) CHECK(h[e] == monomial_count(3, e) - ann_slice(phi, e).dim());
  }
}

TEST_CASE("linear Betti numbers") {
  CHECK(betti_linear(3, 2, 1) == 5);
  CHECK(betti_linear(3, 2, 2) == 5);
  CHECK(betti_linear(3, 3, 1) == 7);
  for (int d = 2; d <= 6; ++d)
    for (int n = 1; n <= 6; ++n)
      for (int i = 1; i <= d - 1; ++i) CHECK(betti_linear(d, n, i) > 0);
}

TEST_CASE("truncation identity") {
  auto phi = catalan_phi(3);
  for (int rho = 0; rho <= 1; ++rho) {
    auto lhs = ann_slice(phi, 3 + rho);
    auto rhs = multiply_by_forms(ann_slice(phi, 3), rho);
    CHECK(span_equal(lhs.basis, rhs.basis, static_cast<int>(monomial_count(3, 3 + rho))));
  }
}

TEST_CASE("delta criterion against annihilator slices") {
  std::mt19937 rng(2024);
  int singular = 0;
  for (int k = 0; k < 20; ++k) {
    int n = 2 + k % 2;
    auto phi = oracle::random_phi(rng, 3, n, k % 4 >= 2);
    bool lhs = delta(phi) != 0;
    bool rhs = ann_slice(phi, n - 1).dim() == 0 && ann_slice(phi, 2 * n - 1).dim() == monomial_count(3, 2 * n - 1);
    CHECK(lhs == rhs);
    singular += lhs ? 0 : 1;
  }
  CHECK(singular > 0);
}

TEST_CASE("validation") {
  InverseSystem bad{3, 2, {{{1, 0, 0}, 1}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
