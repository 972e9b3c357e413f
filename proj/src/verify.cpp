#include "linres/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "linres/minimalize.hpp"
#include "linres/parallel.hpp"

namespace linres {

namespace {

std::string where(int i, int r, int c) {
  return "d" + std::to_string(i) + " entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

bool is_signed_single_t(const Poly& p) {
  if (!p.is_signed_monomial()) return false;
  const auto& f = p.leading().first.factors();
  return f.size() == 1 && f.front().second == 1 && f.front().first.kind() == VarId::Kind::Coefficient;
}

bool l_type(const std::string& label) { return label == "1" || (!label.empty() && label[0] == 'l'); }
bool k_type(const std::string& label) { return label == "w" || (!label.empty() && label[0] == 'k'); }

int generator_degree(const Bidegree& b) { return -b.x; }

/// Coordinates of the degree-e strand of a module.
struct StrandLayout {
  std::vector<int> offset;  // -1 when the generator contributes nothing
  int dim = 0;
};

StrandLayout layout(const GradedFreeModule& m, int d, int e) {
  StrandLayout l;
  for (const auto& t : m.twists) {
    int k = e - generator_degree(t);
    if (k < 0) {
      l.offset.push_back(-1);
      continue;
    }
    l.offset.push_back(l.dim);
    l.dim += static_cast<int>(monomial_count(d, k));
  }
  return l;
}

/// Images of the strand basis of F_i under d_i as sparse rows over the
/// strand coordinates of F_{i-1}; `coord` remaps target coordinates.
std::vector<SparseQRow> strand_images(const FreeComplex& c, int i, int e, const StrandLayout& tgt,
                                      const std::function<int(int, int)>& coord) {
  int d = c.meta.d;
  const SparseMatrix& m = c.d(i);
  const auto& src = c.modules[i];
  const auto& dst = c.modules[i - 1];
  std::vector<std::vector<std::pair<int, const Poly*>>> by_col(m.cols());
  for (const auto& [ij, p] : m.entries()) by_col[ij.second].emplace_back(ij.first, &p);
  std::vector<SparseQRow> out;
  for (int j = 0; j < m.cols(); ++j) {
    int gj = generator_degree(src.twists[j]);
    if (e < gj) continue;
    for (const auto& mono : monomials(d, e - gj)) {
      std::map<int, Rational> acc;
      for (const auto& [r, p] : by_col[j]) {
        int gr = generator_degree(dst.twists[r]);
        for (const auto& [pm, pc] : p->terms()) {
          auto ex = pm.structural_exponents(d);
          int deg = 0;
          for (int k = 0; k < d; ++k) {
            deg += ex[k];
            ex[k] += mono[k];
          }
          if (deg != gj - gr)
            throw std::invalid_argument("strand: " + where(i, r, j) + " is not homogeneous of degree " +
                                        std::to_string(gj - gr));
          if (tgt.offset[r] < 0) throw std::logic_error("strand: target generator out of range");
          acc[coord(r, tgt.offset[r] + monomial_index(ex))] += pc;
        }
      }
      SparseQRow row;
      for (auto& [k, v] : acc)
        if (v != 0) row.emplace_back(k, v);
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace

Report check_square_zero(const FreeComplex& c) {
  Report rep{"square_zero", true, {}, {}};
  int bad = 0;
  for (int i = 1; i < c.length(); ++i) {
    SparseMatrix prod = c.d(i) * c.d(i + 1);
    for (const auto& [ij, p] : prod.entries()) {
      if (++bad <= 5)
        rep.fail("d" + std::to_string(i) + "*d" + std::to_string(i + 1) + " entry (" + std::to_string(ij.first + 1) + "," +
                 std::to_string(ij.second + 1) + ") = " + p.to_string());
      else
        rep.pass = false;
    }
  }
  rep.info["nonzero_entries"] = std::to_string(bad);
  return rep;
}

Report check_monomiality(const FreeComplex& c) {
  Report rep{"monomiality", true, {}, {}};
  int bad = 0;
  for (int i = 1; i <= c.length(); ++i)
    for (const auto& [ij, p] : c.d(i).entries()) {
      auto [r, col] = ij;
      bool vertical = k_type(c.modules[i - 1].labels[r]) && l_type(c.modules[i].labels[col]);
      bool ok = vertical ? is_signed_single_t(p) : p.is_signed_monomial();
      if (ok) continue;
      if (++bad <= 5)
        rep.fail(where(i, r, col) + (vertical ? " is not a signed t-variable: " : " is not a signed monomial: ") +
                 p.to_string());
      else
        rep.pass = false;
    }
  rep.info["violations"] = std::to_string(bad);
  return rep;
}

Strand strand(const FreeComplex& c, int e) {
  Strand s;
  s.degree = e;
  int d = c.meta.d;
  std::vector<StrandLayout> lay;
  for (const auto& m : c.modules) {
    lay.push_back(layout(m, d, e));
    s.dims.push_back(lay.back().dim);
  }
  for (int i = 1; i <= c.length(); ++i) {
    const auto& tgt = lay[i - 1];
    auto rows = strand_images(c, i, e, tgt, [](int, int k) { return k; });
    s.ranks.push_back(sparse_rank(rows));
  }
  for (int i = 0; i <= c.length(); ++i) {
    int in = i < c.length() ? s.ranks[i] : 0;
    int out = i >= 1 ? s.ranks[i - 1] : 0;
    s.homology.push_back(s.dims[i] - in - out);
  }
  return s;
}

Report strand_exactness(const FreeComplex& c, int max_degree, const std::vector<long long>& expected_h0) {
  Report rep{"strand_exactness", true, {}, {}};
  std::vector<Strand> strands(max_degree + 1);
  parallel_for(max_degree + 1, [&](int e) { strands[e] = strand(c, e); });
  for (const auto& s : strands) {
    long long want = s.degree < static_cast<int>(expected_h0.size()) ? expected_h0[s.degree] : 0;
    if (s.homology[0] != want)
      rep.fail("degree " + std::to_string(s.degree) + ": dim H0 = " + std::to_string(s.homology[0]) + ", expected " +
               std::to_string(want));
    for (std::size_t i = 1; i < s.homology.size(); ++i)
      if (s.homology[i] != 0)
        rep.fail("degree " + std::to_string(s.degree) + ": dim H" + std::to_string(i) + " = " +
                 std::to_string(s.homology[i]));
  }
  rep.info["max_degree"] = std::to_string(max_degree);
  return rep;
}

Report euler_hilbert_identity(const FreeComplex& c, const std::vector<long long>& expected_h0) {
  Report rep{"euler_hilbert_identity", true, {}, {}};
  std::map<int, long long> lhs;
  for (int i = 0; i <= c.length(); ++i)
    for (const auto& t : c.modules[i].twists) lhs[generator_degree(t)] += i % 2 == 0 ? 1 : -1;
  std::map<int, long long> rhs;
  std::vector<long long> factor{1};
  for (int k = 0; k < c.meta.d; ++k) {
    std::vector<long long> next(factor.size() + 1, 0);
    for (std::size_t j = 0; j < factor.size(); ++j) {
      next[j] += factor[j];
      next[j + 1] -= factor[j];
    }
    factor = next;
  }
  for (std::size_t a = 0; a < expected_h0.size(); ++a)
    for (std::size_t b = 0; b < factor.size(); ++b) rhs[static_cast<int>(a + b)] += expected_h0[a] * factor[b];
  auto clean = [](std::map<int, long long>& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  };
  clean(lhs);
  clean(rhs);
  if (lhs != rhs) {
    std::string l, r;
    for (auto& [k, v] : lhs) l += " " + std::to_string(v) + "t^" + std::to_string(k);
    for (auto& [k, v] : rhs) r += " " + std::to_string(v) + "t^" + std::to_string(k);
    rep.fail("alternating twist sum" + l + " differs from (1-t)^d HS(H0) =" + r);
  }
  return rep;
}

Report rank_conditions(const FreeComplex& c, const RankCheckOptions& opts) {
  Report rep{"rank_conditions", true, {}, {}};
  std::vector<int> ranks(c.length() + 2, 0);
  std::string mode = "exact";
  std::vector<RankResult> results(c.length());
  parallel_for(c.length(), [&](int k) {
    results[k] = rank_over_fraction_field(c.d(k + 1), RankOptions{!opts.exact, opts.seed + static_cast<std::uint64_t>(k)});
  });
  for (int i = 1; i <= c.length(); ++i) {
    ranks[i] = results[i - 1].rank;
    if (results[i - 1].mode != "exact") mode = results[i - 1].mode;
  }
  for (int i = 1; i <= c.length(); ++i)
    if (ranks[i] + ranks[i + 1] != c.modules[i].rank())
      rep.fail("rank d" + std::to_string(i) + " + rank d" + std::to_string(i + 1) + " = " +
               std::to_string(ranks[i] + ranks[i + 1]) + " but rank F" + std::to_string(i) + " = " +
               std::to_string(c.modules[i].rank()));
  std::string list;
  for (int i = 1; i <= c.length(); ++i) list += (i > 1 ? "," : "") + std::to_string(ranks[i]);
  rep.info["ranks"] = list;
  rep.info["mode"] = mode;
  return rep;
}

Report check_betti(const FreeComplex& c) {
  Report rep{"betti", true, {}, {}};
  int d = c.meta.d, n = c.meta.n, r = c.meta.r;
  if (c.length() != d) {
    rep.fail("complex has length " + std::to_string(c.length()) + ", expected " + std::to_string(d));
    return rep;
  }
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  for (int i = 0; i <= d; ++i) {
    std::vector<int> want;
    if (i == 0) {
      want = {0};
    } else {
      long long b = betti_truncation(d, n, r, i);
      if (r == n && i <= d - 1 && b != betti_linear(d, n, i))
        rep.fail("betti formulas disagree at i = " + std::to_string(i));
      want.assign(static_cast<std::size_t>(b), r + i - 1);
      if (i == d) want.push_back(2 * n + d - 2);
    }
    std::vector<int> have;
    for (const auto& t : c.modules[i].twists) have.push_back(generator_degree(t));
    if (sorted(have) != sorted(want))
      rep.fail("F" + std::to_string(i) + " has " + std::to_string(have.size()) + " generators, expected " +
               std::to_string(want.size()) + " with the predicted degrees");
  }
  std::string list;
  for (int i = 0; i <= d; ++i) list += (i ? "," : "") + std::to_string(c.modules[i].rank());
  rep.info["ranks"] = list;
  return rep;
}

std::vector<GradedIdealSlice> extract_h0_ideal(const FreeComplex& c, int max_degree) {
  int d = c.meta.d;
  const auto& f0 = c.modules.at(0);
  int unit = -1;
  for (int k = 0; k < f0.rank(); ++k)
    if (f0.labels[k] == "1") unit = k;
  if (unit < 0 && f0.rank() == 1) unit = 0;
  if (unit < 0) throw std::invalid_argument("extract_h0_ideal: no generator labelled 1 in F0");
  if (generator_degree(f0.twists[unit]) != 0) throw std::invalid_argument("extract_h0_ideal: R must sit in degree 0");
  std::vector<GradedIdealSlice> out(max_degree + 1);
  parallel_for(max_degree + 1, [&](int e) {
    StrandLayout tgt = layout(f0, d, e);
    int n_unit = static_cast<int>(monomial_count(d, e));
    int n_other = tgt.dim - n_unit;
    auto coord = [&](int r, int k) {
      int local = k - tgt.offset[r];
      if (r == unit) return n_other + local;
      return tgt.offset[r] < tgt.offset[unit] ? k : k - n_unit;
    };
    GradedIdealSlice s{d, e, {}};
    if (c.length() >= 1) {
      SparseEchelon ech;
      for (auto& row : strand_images(c, 1, e, tgt, coord)) ech.insert(std::move(row));
      std::vector<QVector> vecs;
      for (const auto& [col, row] : ech.pivots()) {
        if (col < n_other) continue;
        QVector v(n_unit);
        for (const auto& [k, val] : row) v[k - n_other] = val;
        vecs.push_back(std::move(v));
      }
      s.basis = span_basis(vecs, n_unit);
    }
    out[e] = std::move(s);
  });
  return out;
}

GradedIdealSlice expected_ideal_slice(const InverseSystem& phi, int r, int e) {
  int rho = r - phi.n;
  if (e < rho) return GradedIdealSlice{phi.d, e, {}};
  return multiply_by_forms(ann_slice(phi, e - rho), rho);
}

std::vector<long long> expected_h0_dims(const InverseSystem& phi, int r, int max_degree) {
  std::vector<long long> out;
  for (int e = 0; e <= max_degree; ++e) out.push_back(monomial_count(phi.d, e) - expected_ideal_slice(phi, r, e).dim());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Report compare_h0_ideal(const FreeComplex& c, const InverseSystem& phi, int max_degree) {
  Report rep{"h0_ideal", true, {}, {}};
  if (delta(phi) == 0) rep.messages.push_back("phi is outside I_n (delta = 0)");
  auto slices = extract_h0_ideal(c, max_degree);
  for (int e = 0; e <= max_degree; ++e) {
    auto want = expected_ideal_slice(phi, c.meta.r, e);
    int N = static_cast<int>(monomial_count(phi.d, e));
    if (!span_equal(slices[e].basis, want.basis, N))
      rep.fail("degree " + std::to_string(e) + ": image of d1 has dimension " + std::to_string(slices[e].dim()) +
               ", ideal slice has dimension " + std::to_string(want.dim()));
  }
  return rep;
}

namespace {

bool has_unit_entry(const FreeComplex& c) {
  for (const auto& m : c.diffs)
    for (const auto& [ij, p] : m.entries())
      if (p.is_constant()) return true;
  return false;
}

}  // namespace

VerifySummary verify_all(const FreeComplex& c, const InverseSystem& phi, const VerifyOptions& opts) {
  c.validate_shapes();
  if (c.meta.d != phi.d || c.meta.n != phi.n) throw std::invalid_argument("verify: (d, n) of complex and phi differ");
  VerifySummary sum;
  sum.max_degree = opts.max_degree >= 0 ? opts.max_degree : 2 * c.meta.n + c.meta.d + 2;
  auto h0 = expected_h0_dims(phi, c.meta.r, std::max(sum.max_degree, 2 * c.meta.n + c.meta.r));
  sum.reports.push_back(check_square_zero(c));
  sum.reports.push_back(strand_exactness(c, sum.max_degree, h0));
  sum.reports.push_back(euler_hilbert_identity(c, h0));
  sum.reports.push_back(rank_conditions(c, RankCheckOptions{opts.exact_rank, opts.seed}));
  sum.reports.push_back(compare_h0_ideal(c, phi, sum.max_degree));
  if (!has_unit_entry(c)) sum.reports.push_back(check_betti(c));
  for (const auto& r : sum.reports) sum.pass = sum.pass && r.pass;
  return sum;
}

}  // namespace linres
