#include "doctest.h"
#include "linres/hookmods.hpp"
#include "oracles.hpp"

using namespace linres;

namespace {

AmbientVector combine(const HookComb& c) {
  AmbientVector out;
  for (const auto& [h, k] : c)
    for (const auto& [key, v] : ambient_image(h)) out[key] += Rational(static_cast<long>(k)) * v;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

bool unit_coefficients(const HookComb& c) {
  for (const auto& [h, k] : c)
    if (k != 1 && k != -1) return false;
  return true;
}

}  // namespace

TEST_CASE("standard bases") {
  auto l = hook_basis(HookKind::L, 3, 0, 3);
  REQUIRE(l.size() == 10);
  CHECK(l.front().to_string() == "l[1;1,1]");
  CHECK(l.back().to_string() == "l[3;3,3]");
  auto k = hook_basis(HookKind::K, 3, 1, 1);
  REQUIRE(k.size() == 8);
  CHECK(k.front().to_string() == "k[2;1,1]");
  CHECK(k.back().to_string() == "k[3;2,3]");
  auto one = hook_basis(HookKind::L, 1, 0, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "l[1;1,1,1,1]");
  for (std::size_t i = 0; i < l.size(); ++i) CHECK(hook_position(l[i]) == static_cast<int>(i));
  CHECK(HookIndex::parse("k[2;1,1]", 3) == k.front());
}

TEST_CASE("rank formulas") {
  CHECK(rank_formula(HookKind::L, 3, 2, 3) == 6);
  CHECK(rank_formula(HookKind::K, 3, 2, 1) == 6);
  CHECK(rank_formula(HookKind::L, 3, 0, 2) == 6);
  for (int d = 1; d <= 5; ++d)
    for (int p = 0; p <= d - 1; ++p)
      for (int q = 0; q <= 5; ++q) {
        if (q >= 1) {
          CHECK(static_cast<long long>(hook_basis(HookKind::L, d, p, q).size()) == rank_formula(HookKind::L, d, p, q));
          CHECK(rank_formula(HookKind::L, d, p, q) == oracle::choose(d + q - 1, p + q) * oracle::choose(p + q - 1, p));
        }
        CHECK(static_cast<long long>(hook_basis(HookKind::K, d, p, q).size()) == rank_formula(HookKind::K, d, p, q));
        CHECK(rank_formula(HookKind::K, d, p, q) == oracle::choose(d + q, p) * oracle::choose(d + q - p - 1, q));
      }
}

TEST_CASE("straightening L labels") {
  auto s = straighten_L(3, {{1, 2}}, {{1, 0, 0}});
  REQUIRE(s.size() == 1);
  CHECK(s.begin()->first.to_string() == "l[1,2;1]");
  CHECK(s.begin()->second == 1);
  auto r = straighten_L(3, {{2, 3}}, {{1, 0, 0}});
  CHECK(r.size() == 2);
  CHECK(r[HookIndex::parse("l[1,3;2]", 3)] == 1);
  CHECK(r[HookIndex::parse("l[1,2;3]", 3)] == -1);
}

TEST_CASE("straightening agrees with kappa in the ambient basis") {
  int d = 3;
  for (int p = 0; p <= 2; ++p)
    for (int q = 1; q <= 3; ++q)
      for (const auto& t : subsets(d, p + 1))
        for (const auto& m : monomials(d, q - 1)) {
          auto comb = straighten_L(d, {t}, {m});
          CHECK(unit_coefficients(comb));
          AmbientVector direct = kappa_apply(d, AmbientVector{{{t, m}, Rational(1)}});
          CHECK(combine(comb) == direct);
        }
}

TEST_CASE("straightening K labels") {
  int d = 3;
  auto single = straighten_K(d, {{3}}, {{2, 0, 0}});
  REQUIRE(single.size() == 1);
  CHECK(single.begin()->first.is_standard());
  for (int a = 0; a <= d - 1; ++a)
    for (int q = 0; q <= 3; ++q)
      for (const auto& s : subsets(d, a))
        for (const auto& w : monomials(d, q + 1)) {
          auto comb = straighten_K(d, {s}, {w});
          CHECK(unit_coefficients(comb));
          auto [sign, rest] = contract_into_top(d, s);
          AmbientVector direct = eta_apply(d, AmbientVector{{{rest, w}, Rational(sign)}});
          CHECK(combine(comb) == direct);
        }
  auto rew = straighten_K(d, {{1}}, {{2, 0, 0}});
  CHECK_FALSE(HookIndex::K(d, {1}, {1, 1}).is_standard());
  for (const auto& [h, k] : rew) CHECK(h.is_standard());
}

TEST_CASE("kappa and eta matrices") {
  CHECK(kappa_matrix(3, 0, 2).is_zero());
  CHECK(eta_matrix(3, 1, 0).is_zero());
  for (int p = 2; p <= 3; ++p)
    for (int q = 0; q <= 4; ++q) CHECK((kappa_matrix(3, p - 1, q + 1) * kappa_matrix(3, p, q)).is_zero());
  for (int p = 2; p <= 3; ++p)
    for (int q = 2; q <= 4; ++q) CHECK((eta_matrix(3, p - 1, q - 1) * eta_matrix(3, p, q)).is_zero());
}

TEST_CASE("standard L elements lie in the kernel of kappa") {
  for (int p = 0; p <= 2; ++p)
    for (int q = 1; q <= 3; ++q)
      for (const auto& l : hook_basis(HookKind::L, 3, p, q)) CHECK(kappa_apply(3, ambient_image(l)).empty());
}

TEST_CASE("standard K elements lie in the kernel of eta") {
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 3; ++q)
      for (const auto& k : hook_basis(HookKind::K, 3, p, q)) CHECK(eta_apply(3, ambient_image(k)).empty());
}

TEST_CASE("Koszul differential on labels squares to zero") {
  for (const auto& l : hook_basis(HookKind::L, 3, 2, 2)) {
    HookVector twice;
    for (const auto& [m, c] : koszul_L(l))
      for (const auto& [u, c2] : koszul_L(m)) twice[u] += c * c2;
    for (const auto& [u, c] : twice) CHECK(c.is_zero());
  }
}
