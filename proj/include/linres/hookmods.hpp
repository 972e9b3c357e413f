#pragma once
// Hook Schur modules L_{p,q} (images of kappa in wedge^p (x) Sym_q) and hook
// Weyl modules K_{p,q} (images of eta in wedge^p (x) D_q): standard bases,
// ranks, straightening and the ambient maps kappa and eta.
//
// A label l_{a;b} stands for kappa(x_a (x) x_b) with |a| = p+1, |b| = q-1,
// standard when a_1 <= b_1.  A label k_{a;b} stands for
// eta((x_a^*)(omega) (x) x^{*(b)}) with |a| = d-p-1, |b| = q+1, standard
// when b_1 < a_1.  omega = x_1 ^ ... ^ x_d.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linres/matrix.hpp"
#include "linres/multilinear.hpp"

namespace linres {

enum class HookKind { L, K };

struct HookIndex {
  HookKind kind = HookKind::L;
  int d = 0, p = 0, q = 0;
  std::vector<int> a;  // strictly increasing
  std::vector<int> b;  // weakly increasing

  static HookIndex L(int d, std::vector<int> a, std::vector<int> b);
  static HookIndex K(int d, std::vector<int> a, std::vector<int> b);

  bool is_standard() const;
  /// "l[1,2;1,1]" or "k[2;1,1]".
  std::string to_string() const;
  static HookIndex parse(const std::string& s, int d);

  friend auto operator<=>(const HookIndex&, const HookIndex&) = default;
};

using HookVector = std::map<HookIndex, Poly>;
/// Integer combination of labels, used where coefficients are scalars.
using HookComb = std::map<HookIndex, long long>;

std::vector<HookIndex> hook_basis(HookKind kind, int d, int p, int q);
long long rank_formula(HookKind kind, int d, int p, int q);
/// Position of a standard label within hook_basis.
int hook_position(const HookIndex& h);

/// kappa(t (x) m) in the standard basis of L_{|t|-1, deg m + 1}.
HookComb straighten_L(int d, const ExtMonomial& t, const SymMonomial& m);
/// eta((x_a^*)(omega) (x) w) in the standard basis of K_{d-|a|-1, deg w - 1}.
HookComb straighten_K(int d, const ExtMonomial& a, const DivMonomial& w);
HookVector to_hook_vector(const HookComb& c);

/// Kos (x) 1 applied to a standard L label with p >= 1, as a combination of
/// standard labels of L_{p-1,q} with coefficients linear in the x_i.
HookVector koszul_L(const HookIndex& l);
/// Kos (x) 1 applied to a standard K label with p >= 1.
HookVector koszul_K(const HookIndex& k);

// ---- ambient tensor bases

/// Basis element of wedge^p (x) Sym_q or wedge^p (x) D_q.
using AmbientKey = std::pair<std::vector<int>, Exponents>;
using AmbientVector = std::map<AmbientKey, Rational>;

/// Subsets (lexicographic) times monomials (canonical order).
std::vector<AmbientKey> ambient_basis(int d, int p, int q);
AmbientVector kappa_apply(int d, const AmbientVector& v);
AmbientVector eta_apply(int d, const AmbientVector& v);
/// The element a label stands for, in the ambient basis.
AmbientVector ambient_image(const HookIndex& h);
SparseMatrix kappa_matrix(int d, int p, int q);
SparseMatrix eta_matrix(int d, int p, int q);

/// Expresses an ambient vector lying in L_{p,q} or K_{p,q} in the standard
/// basis by exact linear solving; throws if it is not in the span.
HookComb solve_in_standard_basis(HookKind kind, int d, int p, int q, const AmbientVector& v);

}  // namespace linres
