#pragma once
// The complexes L(Psi, r) and K(Psi, m), the vertical maps induced by the
// generic inverse system Phi = sum_E t_E x^{*(E)}, and their mapping cone
// G(r).  Specialization substitutes t_E by the coefficients of a concrete
// inverse system.
//
// Twists are bidegrees (x, t) written as in R(x, t).  An entry from source
// column c to target row r of a generic differential has bidegree
// (twist(r).x - twist(c).x, twist(c).t - twist(r).t).

#include <optional>
#include <string>
#include <vector>

#include "linres/hookmods.hpp"
#include "linres/inversesys.hpp"
#include "linres/matrix.hpp"

namespace linres {

struct GradedFreeModule {
  std::vector<std::string> labels;
  std::vector<Bidegree> twists;
  int rank() const { return static_cast<int>(labels.size()); }
  void append(const GradedFreeModule& o);
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

struct ComplexMeta {
  int d = 0;
  int n = 0;
  int r = 0;
  bool generic = true;
  friend bool operator==(const ComplexMeta&, const ComplexMeta&) = default;
};

/// modules[i] is F_i and diffs[i - 1] is d_i : F_i -> F_{i-1}.
struct FreeComplex {
  ComplexMeta meta;
  std::vector<GradedFreeModule> modules;
  std::vector<SparseMatrix> diffs;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  const SparseMatrix& d(int i) const { return diffs.at(i - 1); }
  std::vector<int> ranks() const;
  /// Throws std::invalid_argument when shapes are inconsistent.
  void validate_shapes() const;
  friend bool operator==(const FreeComplex&, const FreeComplex&) = default;
};

/// Expected bidegree of an entry mapping column `src` to row `tgt`.
Bidegree entry_bidegree(const Bidegree& src_twist, const Bidegree& tgt_twist);

/// Twist of L_{a,r}, K_{a,m} (inside G(r)), wedge^d and R.
Bidegree twist_L(int a, int r);
Bidegree twist_K(int a, int r);
Bidegree twist_top(int d, int n);

GradedFreeModule hook_module(HookKind kind, int d, int p, int q, const Bidegree& twist);

/// 0 -> L_{d-1,r} -> ... -> L_{0,r} -> R.
FreeComplex build_L_complex(int d, int r);
/// 0 -> wedge^d -> K_{d-1,m} -> ... -> K_{0,m} with m = 2n - 2 - r.
FreeComplex build_K_complex(int d, int n, int r);

/// Matrices v_1..v_d with v_i : L_{i-1,r} -> K_{i-1,2n-2-r}.  With no phi the
/// entries are signed t-variables; otherwise they are the specialized scalars.
std::vector<SparseMatrix> vertical_maps(int d, int n, int r, const InverseSystem* phi = nullptr);

/// Mapping cone G(r) with differential [[h_i, 0], [v_i, -h'_i]].
FreeComplex build_generic_G(int d, int n, int r);

/// t_E -> phi(E) in every entry; the result is singly graded (t-twists zero).
FreeComplex specialize(const FreeComplex& c, const InverseSystem& phi);

/// Substitution map for t-variables given an inverse system.
std::optional<Poly> phi_substitution(const InverseSystem& phi, VarId v);

}  // namespace linres
