#include "linres/multilinear.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace linres {

int SymMonomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }
int DivMonomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

void DivElement::add(const Exponents& e, const Poly& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(e);
  if (it == coeffs.end()) {
    coeffs.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

namespace {

void enumerate(int d, int q, int pos, Exponents& cur, std::vector<Exponents>& out) {
  if (pos == d - 1) {
    cur[pos] = q;
    out.push_back(cur);
    return;
  }
  for (int v = q; v >= 0; --v) {
    cur[pos] = v;
    enumerate(d, q - v, pos + 1, cur, out);
  }
}

void enumerate_subsets(int d, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= d; ++i) {
    cur.push_back(i);
    enumerate_subsets(d, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::mutex cache_mutex;

}  // namespace

const std::vector<Exponents>& monomials(int d, int q) {
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Exponents>>> cache;
  if (d < 1) throw std::invalid_argument("monomials: d must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = cache[{d, q}];
  if (!slot) {
    slot = std::make_unique<std::vector<Exponents>>();
    if (q >= 0) {
      Exponents cur(d, 0);
      enumerate(d, q, 0, cur, *slot);
    }
  }
  return *slot;
}

long long monomial_count(int d, int q) {
  if (q < 0 || d < 1) return 0;
  // C(q+d-1, d-1)
  long long r = 1;
  for (int i = 1; i <= d - 1; ++i) r = r * (q + i) / i;
  return r;
}

int monomial_index(const Exponents& e) {
  int d = static_cast<int>(e.size());
  int rem = std::accumulate(e.begin(), e.end(), 0);
  long long idx = 0;
  for (int k = 0; k < d - 1; ++k) {
    for (int v = rem; v > e[k]; --v) idx += monomial_count(d - k - 1, rem - v);
    rem -= e[k];
  }
  return static_cast<int>(idx);
}

const std::vector<std::vector<int>>& subsets(int d, int k) {
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<std::vector<int>>>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = cache[{d, k}];
  if (!slot) {
    slot = std::make_unique<std::vector<std::vector<int>>>();
    if (k >= 0 && k <= d) {
      std::vector<int> cur;
      enumerate_subsets(d, k, 1, cur, *slot);
    }
  }
  return *slot;
}

std::vector<int> exps_to_indices(const Exponents& e) {
  std::vector<int> idx;
  for (int k = 0; k < static_cast<int>(e.size()); ++k)
    for (int j = 0; j < e[k]; ++j) idx.push_back(k + 1);
  return idx;
}

Exponents indices_to_exps(const std::vector<int>& idx, int d) {
  Exponents e(d, 0);
  for (int i : idx) {
    if (i < 1 || i > d) throw std::invalid_argument("index out of range");
    ++e[i - 1];
  }
  return e;
}

std::optional<DivMonomial> contract_sym_on_div(const SymMonomial& u, const DivMonomial& w) {
  if (u.e.size() != w.e.size()) throw std::invalid_argument("dimension mismatch");
  DivMonomial r{w.e};
  for (std::size_t k = 0; k < r.e.size(); ++k) {
    r.e[k] -= u.e[k];
    if (r.e[k] < 0) return std::nullopt;
  }
  return r;
}

std::optional<std::pair<Rational, SymMonomial>> contract_div_on_sym(const DivMonomial& w,
                                                                    const SymMonomial& u) {
  if (u.e.size() != w.e.size()) throw std::invalid_argument("dimension mismatch");
  SymMonomial r{u.e};
  Integer c = 1;
  for (std::size_t k = 0; k < r.e.size(); ++k) {
    if (u.e[k] < w.e[k]) return std::nullopt;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(u.e[k]), static_cast<unsigned long>(w.e[k]));
    c *= b;
    r.e[k] -= w.e[k];
  }
  return std::make_pair(Rational(c), r);
}

std::vector<std::pair<SymMonomial, DivMonomial>> ev_dual(int d, int j) {
  if (j < 0) throw std::invalid_argument("ev_dual: negative degree");
  std::vector<std::pair<SymMonomial, DivMonomial>> out;
  for (const auto& e : monomials(d, j)) out.emplace_back(SymMonomial{e}, DivMonomial{e});
  return out;
}

std::vector<CoTerm> comultiply(const ExtMonomial& t) {
  std::vector<CoTerm> out;
  for (int i = 0; i < t.size(); ++i) {
    ExtMonomial rest;
    for (int k = 0; k < t.size(); ++k)
      if (k != i) rest.idx.push_back(t.idx[k]);
    out.push_back({i % 2 == 0 ? 1 : -1, t.idx[i], std::move(rest)});
  }
  return out;
}

std::vector<std::pair<ExtMonomial, Poly>> koszul_contract(const std::vector<Poly>& psi, const ExtMonomial& t) {
  std::vector<std::pair<ExtMonomial, Poly>> out;
  for (auto& term : comultiply(t)) {
    if (term.index < 1 || term.index > static_cast<int>(psi.size()))
      throw std::invalid_argument("koszul_contract: index out of range");
    Poly c = psi[term.index - 1].scaled(term.sign);
    if (!c.is_zero()) out.emplace_back(std::move(term.rest), std::move(c));
  }
  return out;
}

std::vector<Poly> structural_psi(int d) {
  std::vector<Poly> psi;
  for (int i = 1; i <= d; ++i) psi.push_back(Poly::x(i));
  return psi;
}

std::vector<int> complement(int d, const std::vector<int>& a) {
  std::vector<int> c;
  for (int i = 1; i <= d; ++i)
    if (!std::binary_search(a.begin(), a.end(), i)) c.push_back(i);
  return c;
}

std::pair<int, std::vector<int>> contract_into_top(int d, const std::vector<int>& a) {
  std::vector<int> cur(d);
  std::iota(cur.begin(), cur.end(), 1);
  int sign = 1;
  for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) {
    auto it = std::find(cur.begin(), cur.end(), a[j]);
    if (it == cur.end()) throw std::invalid_argument("contract_into_top: repeated index");
    int pos = static_cast<int>(it - cur.begin());  // 0-based
    if (pos % 2) sign = -sign;
    cur.erase(it);
  }
  return {sign, cur};
}

}  // namespace linres
