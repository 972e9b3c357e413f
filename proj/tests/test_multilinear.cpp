#include <map>
#include <random>

#include "doctest.h"
#include "linres/multilinear.hpp"
#include "oracles.hpp"

using namespace linres;

namespace {

/// Kos applied twice, collected per basis element.
std::map<ExtMonomial, Poly> kos_twice(const std::vector<Poly>& psi, const ExtMonomial& t) {
  std::map<ExtMonomial, Poly> out;
  for (const auto& [s, c] : koszul_contract(psi, t))
    for (const auto& [u, c2] : koszul_contract(psi, s)) out[u] += c * c2;
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_CASE("symmetric monomials contract divided monomials") {
  auto r = contract_sym_on_div({{2, 1, 0}}, {{3, 1, 0}});
  REQUIRE(r.has_value());
  CHECK(r->e == Exponents{1, 0, 0});
  CHECK_FALSE(contract_sym_on_div({{1, 0, 0}}, {{0, 2, 0}}).has_value());
  auto id = contract_sym_on_div({{0, 0, 0}}, {{1, 2, 3}});
  REQUIRE(id.has_value());
  CHECK(id->e == Exponents{1, 2, 3});
}

TEST_CASE("divided monomials contract symmetric monomials with binomials") {
  auto r = contract_div_on_sym({{1, 0, 0}}, {{3, 0, 0}});
  REQUIRE(r.has_value());
  CHECK(r->first == 3);
  CHECK(r->second.e == Exponents{2, 0, 0});
  CHECK_FALSE(contract_div_on_sym({{2, 1, 0}}, {{1, 1, 0}}).has_value());
  for (const auto& u : monomials(3, 3))
    for (const auto& w : monomials(3, 3)) {
      auto p = contract_div_on_sym({w}, {u});
      CHECK(p.has_value() == (u == w));
      if (p) CHECK(p->first == 1);
    }
}

TEST_CASE("module action is compatible with multiplication") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(0, 2);
  for (int k = 0; k < 50; ++k) {
    SymMonomial u1{{e(rng), e(rng), e(rng)}}, u2{{e(rng), e(rng), e(rng)}};
    DivMonomial w{{e(rng) + 2, e(rng) + 2, e(rng) + 2}};
    SymMonomial prod{{u1.e[0] + u2.e[0], u1.e[1] + u2.e[1], u1.e[2] + u2.e[2]}};
    auto inner = contract_sym_on_div(u2, w);
    auto lhs = inner ? contract_sym_on_div(u1, *inner) : std::nullopt;
    auto rhs = contract_sym_on_div(prod, w);
    CHECK(lhs.has_value() == rhs.has_value());
    if (lhs && rhs) CHECK(lhs->e == rhs->e);
  }
}

TEST_CASE("dual evaluation element") {
  CHECK(ev_dual(3, 0).size() == 1);
  auto one = ev_dual(3, 1);
  REQUIRE(one.size() == 3);
  CHECK(one[0].first.e == Exponents{1, 0, 0});
  CHECK(one[0].second.e == Exponents{1, 0, 0});
  for (int j = 0; j <= 4; ++j) CHECK(static_cast<long long>(ev_dual(3, j).size()) == oracle::choose(j + 2, j));
  for (const auto& [m, w] : ev_dual(3, 2)) {
    auto p = contract_div_on_sym(w, m);
    REQUIRE(p.has_value());
    CHECK(p->first == 1);
  }
}

TEST_CASE("comultiplication signs") {
  auto c = comultiply({{1, 2}});
  REQUIRE(c.size() == 2);
  CHECK(c[0].sign == 1);
  CHECK(c[0].index == 1);
  CHECK(c[0].rest.idx == std::vector<int>{2});
  CHECK(c[1].sign == -1);
  CHECK(c[1].index == 2);
  CHECK(c[1].rest.idx == std::vector<int>{1});
  auto s = comultiply({{3}});
  REQUIRE(s.size() == 1);
  CHECK(s[0].sign == 1);
  CHECK(s[0].rest.idx.empty());
  auto t = comultiply({{1, 2, 3}});
  REQUIRE(t.size() == 3);
  CHECK(t[0].sign == 1);
  CHECK(t[1].sign == -1);
  CHECK(t[2].sign == 1);
}

TEST_CASE("Koszul contraction") {
  auto psi = structural_psi(3);
  auto k = koszul_contract(psi, {{1, 2}});
  std::map<ExtMonomial, Poly> m(k.begin(), k.end());
  CHECK(m[ExtMonomial{{2}}] == Poly::x(1));
  CHECK(m[ExtMonomial{{1}}] == -Poly::x(2));
  auto top = koszul_contract(psi, {{1, 2, 3}});
  std::map<ExtMonomial, Poly> mt(top.begin(), top.end());
  CHECK(mt[ExtMonomial{{2, 3}}] == Poly::x(1));
  CHECK(mt[ExtMonomial{{1, 3}}] == -Poly::x(2));
  CHECK(mt[ExtMonomial{{1, 2}}] == Poly::x(3));
}

TEST_CASE("Kos composed with Kos vanishes for d <= 4") {
  for (int d = 1; d <= 4; ++d) {
    auto psi = structural_psi(d);
    for (int a = 0; a <= d; ++a)
      for (const auto& s : subsets(d, a)) CHECK(kos_twice(psi, {s}).empty());
  }
}

TEST_CASE("monomial enumeration order") {
  const auto& m = monomials(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m[0] == Exponents{2, 0, 0});
  CHECK(m[1] == Exponents{1, 1, 0});
  CHECK(m[3] == Exponents{0, 2, 0});
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(monomial_index(m[i]) == static_cast<int>(i));
  CHECK(monomial_count(3, 4) == 15);
}
