#pragma once
// Property checks for complexes: d^2 = 0, monomiality of generic entries,
// exactness of internal-degree strands, the Euler characteristic of the
// Hilbert series, rank conditions over the fraction field, Betti data of
// minimal complexes and extraction of the ideal presented in degree 0.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linres/inversesys.hpp"
#include "linres/rescomplex.hpp"

namespace linres {

struct Report {
  std::string name;
  bool pass = true;
  std::vector<std::string> messages;
  std::map<std::string, std::string> info;

  void fail(const std::string& msg) {
    pass = false;
    messages.push_back(msg);
  }
};

Report check_square_zero(const FreeComplex& c);

/// Entries of every differential are signed monomials; entries from an
/// L-type generator to a K-type generator are signed single t-variables.
Report check_monomiality(const FreeComplex& c);

/// Generator degrees -twist.x.  Entries must be homogeneous of the degree
/// difference; throws std::invalid_argument otherwise.
struct Strand {
  int degree = 0;
  std::vector<int> dims;
  std::vector<int> ranks;  // ranks[i - 1] is the rank of d_i in this degree
  std::vector<int> homology;
};
Strand strand(const FreeComplex& c, int degree);

/// Exactness at positions >= 1 and dim H_0 = expected_h0[e] (zero beyond
/// the list) for every internal degree e <= max_degree.
Report strand_exactness(const FreeComplex& c, int max_degree, const std::vector<long long>& expected_h0);

/// sum_i (-1)^i sum_j t^{deg g_ij} equals (1 - t)^d times the expected
/// Hilbert polynomial of H_0.
Report euler_hilbert_identity(const FreeComplex& c, const std::vector<long long>& expected_h0);

struct RankCheckOptions {
  bool exact = false;
  std::uint64_t seed = 1;
};
/// rank d_i + rank d_{i+1} = rank F_i for i >= 1 over the fraction field.
Report rank_conditions(const FreeComplex& c, const RankCheckOptions& opts = {});

/// For a minimal specialized complex: ranks and twists agree with the
/// Betti formulas for (d, n, r) of the metadata.
Report check_betti(const FreeComplex& c);

/// Degree-e slices {f : (f, 0) in image of d_1} for e = 0..max_degree, where
/// the first coordinate is the generator labelled "1" (or the only generator).
std::vector<GradedIdealSlice> extract_h0_ideal(const FreeComplex& c, int max_degree);

/// Slices of J^(r-n) ann(phi) with J the irrelevant ideal, computed as
/// P_(r-n) * [ann phi]_(e-r+n).
GradedIdealSlice expected_ideal_slice(const InverseSystem& phi, int r, int e);
std::vector<long long> expected_h0_dims(const InverseSystem& phi, int r, int max_degree);

Report compare_h0_ideal(const FreeComplex& c, const InverseSystem& phi, int max_degree);

struct VerifyOptions {
  int max_degree = -1;  // default 2n + d + 2
  bool exact_rank = false;
  std::uint64_t seed = 1;
};
struct VerifySummary {
  bool pass = true;
  int max_degree = 0;
  std::vector<Report> reports;
};
/// Runs every check on a specialized complex resolving P / J^(r-n) I.
VerifySummary verify_all(const FreeComplex& c, const InverseSystem& phi, const VerifyOptions& opts = {});

}  // namespace linres
