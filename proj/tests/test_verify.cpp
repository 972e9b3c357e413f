#include "doctest.h"
#include "linres/linalg.hpp"
#include "linres/minimalize.hpp"
#include "linres/pfafflab.hpp"
#include "linres/verify.hpp"
#include "oracles.hpp"

using namespace linres;

namespace {

FreeComplex koszul() { return build_L_complex(3, 1); }

FreeComplex phi2_complex() { return specialize(build_generic_G(3, 2, 2), catalan_phi(2)); }

}  // namespace

TEST_CASE("square zero") {
  CHECK(check_square_zero(build_generic_G(3, 3, 3)).pass);
  CHECK(check_square_zero(build_generic_Gprime(3, 2)).pass);
  auto c = build_generic_G(3, 2, 2);
  auto [rc, p] = *c.diffs[1].entries().begin();
  c.diffs[1].set(rc.first, rc.second, -p);
  auto rep = check_square_zero(c);
  CHECK_FALSE(rep.pass);
  REQUIRE_FALSE(rep.messages.empty());
  CHECK(rep.messages.front().find("entry") != std::string::npos);
}

TEST_CASE("monomiality") {
  for (int n = 2; n <= 3; ++n)
    for (int r = n; r <= 2 * n - 2; ++r) CHECK(check_monomiality(build_generic_G(3, n, r)).pass);
  CHECK_FALSE(check_monomiality(build_generic_Gprime(3, 2)).pass);
  CHECK(check_monomiality(koszul()).pass);
}

TEST_CASE("strand exactness") {
  CHECK(strand_exactness(phi2_complex(), 10, {1, 3, 1}).pass);
  CHECK_FALSE(strand_exactness(phi2_complex(), 10, {1, 3, 2}).pass);
  auto c3 = specialize(build_generic_G(3, 3, 3), catalan_phi(3));
  CHECK(strand_exactness(c3, 12, {1, 3, 6, 3, 1}).pass);
  auto c4 = specialize(build_generic_G(3, 3, 4), catalan_phi(3));
  CHECK(strand_exactness(c4, 10, oracle::truncation_h0(3, 1, 10)).pass);
  auto s = strand(phi2_complex(), 2);
  CHECK(s.homology[0] == 1);
}

TEST_CASE("strands reject inhomogeneous entries") {
  auto c = phi2_complex();
  c.diffs[0].set(0, 0, Poly::x(1) + Poly(1));
  CHECK_THROWS_AS(strand(c, 3), std::invalid_argument);
}

TEST_CASE("Euler characteristic and Hilbert series") {
  auto m = minimize_complex(phi2_complex());
  CHECK(euler_hilbert_identity(m, {1, 3, 1}).pass);
  CHECK(euler_hilbert_identity(koszul(), {1}).pass);
  m.modules[3].twists[0].x -= 1;
  CHECK_FALSE(euler_hilbert_identity(m, {1, 3, 1}).pass);
}

TEST_CASE("rank conditions") {
  auto generic = rank_conditions(build_generic_G(3, 2, 2), RankCheckOptions{false, 3});
  CHECK(generic.pass);
  CHECK(generic.info["mode"] == "probabilistic");
  auto exact = rank_conditions(specialize(build_generic_G(3, 3, 3), catalan_phi(3)), RankCheckOptions{true, 1});
  CHECK(exact.pass);
  CHECK(exact.info["mode"] == "exact");
  FreeComplex zero;
  zero.meta = {3, 2, 2, false};
  for (int i = 0; i < 3; ++i) zero.modules.push_back({{"m" + std::to_string(i)}, {{-i, 0}}});
  zero.diffs = {SparseMatrix(1, 1), SparseMatrix(1, 1)};
  CHECK_FALSE(rank_conditions(zero).pass);
}

TEST_CASE("Betti data of minimal complexes") {
  CHECK(check_betti(minimize_complex(phi2_complex())).pass);
  CHECK(check_betti(minimize_complex(specialize(build_generic_G(3, 3, 4), catalan_phi(3)))).pass);
  CHECK_FALSE(check_betti(phi2_complex()).pass);
}

TEST_CASE("ideal presented in degree zero") {
  auto slices = extract_h0_ideal(phi2_complex(), 3);
  std::vector<QVector> be2;
  for (const auto& g : be_generators(2)) be2.push_back(poly_to_vector(g, 3, 2));
  CHECK(span_equal(slices[2].basis, be2, 6));
  CHECK(slices[1].dim() == 0);
  auto phi3 = catalan_phi(3);
  auto s3 = extract_h0_ideal(specialize(build_generic_G(3, 3, 3), phi3), 3);
  CHECK(span_equal(s3[3].basis, exact_kernel(p_map(phi3, 3)), 10));
  CHECK(compare_h0_ideal(phi2_complex(), catalan_phi(2), 6).pass);
}

TEST_CASE("full verification and negative controls") {
  auto phi = catalan_phi(2);
  auto s = verify_all(minimize_complex(phi2_complex()), phi);
  CHECK(s.pass);
  CHECK(s.max_degree == 9);
  InverseSystem degenerate{3, 2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}}};
  auto bad = verify_all(specialize(build_generic_G(3, 2, 2), degenerate), degenerate);
  CHECK_FALSE(bad.pass);
  bool flagged = false, strand_failed = false;
  for (const auto& r : bad.reports) {
    if (r.name == "strand_exactness") strand_failed = !r.pass;
    for (const auto& m : r.messages) flagged = flagged || m.find("outside I_n") != std::string::npos;
  }
  CHECK(flagged);
  CHECK(strand_failed);
  CHECK_THROWS(verify_all(phi2_complex(), catalan_phi(3)));
}
