#pragma once
// The integral Mackey algebra as End of the canonical multi-component object
// (one coset space per subgroup class), with the transfer/conjugation/
// restriction 4-tuple basis, explicit structure constants, and the classical
// double-coset product formula as an independent oracle.

#include <map>
#include <vector>

#include "mackey/span_cat.hpp"

namespace mackey {

/// Basis label: classes of tuples (H class, L class, g, K) with
/// K <= rep(H) and g^{-1} K g <= rep(L), canonical under simultaneous
/// H-conjugation and right L-translation, ordered by (H, L, g, K).
struct TWIndex {
  int H_class = 0;
  int L_class = 0;
  Elt g = 0;
  std::vector<Elt> K;  // sorted
  auto operator<=>(const TWIndex&) const = default;
};

/// Canonical representative of the class of (H_cls, L_cls, g, K): minimize
/// (h g l, ^h K) over h in rep(H_cls), l in rep(L_cls). Throws if the tuple
/// constraints fail.
TWIndex canonical_tuple(const GroupCtx& ctx, int H_cls, int L_cls, Elt g,
                        std::vector<Elt> K);
/// All basis tuples, sorted.
std::vector<TWIndex> tw_basis(const GroupCtx& ctx);

/// The span over (omega, omega) carried by a tuple: middle G/K, target leg
/// into the H component, source leg through g into the L component.
SpanClass span_of_tuple(const OmegaCtx& oc, const TWIndex& t);
/// Inverse translation; the span must be a basis class of End(omega).
TWIndex tuple_of_span(const OmegaCtx& oc, const SpanClass& s);

/// Restriction from the H_cls component to the component of J <= rep(H_cls).
SpanClass restriction_span(const OmegaCtx& oc, int H_cls, const Subgroup& J);
TWIndex tw_restriction(const OmegaCtx& oc, int H_cls, const Subgroup& J);
/// Transfer from the component of K <= rep(H_cls) up to the H_cls component.
SpanClass transfer_span(const OmegaCtx& oc, int H_cls, const Subgroup& K);
TWIndex tw_transfer(const OmegaCtx& oc, int H_cls, const Subgroup& K);

using SparseRow = std::vector<std::pair<int, long long>>;  // sorted by index
using AlgebraElement = std::map<int, long long>;           // basis index -> coeff

/// The algebra with explicit basis and structure constants. Also used for the
/// fused quotient, in which case unfused_to_fused records the basis
/// surjection from the unfused algebra.
struct AlgebraData {
  const GroupCtx* ctx = nullptr;
  bool fused = false;
  std::vector<TWIndex> basis;
  std::map<TWIndex, int> index_of;
  std::vector<std::vector<SparseRow>> mult;  // mult[i][j] = expansion of b_i b_j
  std::vector<int> component_identity;       // per class, basis index of (H, H, e, rep H)
  std::vector<int> unfused_to_fused;         // empty unless fused

  int rank() const { return static_cast<int>(basis.size()); }
};

/// Build basis and structure constants by pullback composition over omega;
/// verifies that the component identities sum to a two-sided identity.
AlgebraData build_algebra(const GroupCtx& ctx);

AlgebraElement algebra_product(const AlgebraData& A, const AlgebraElement& x,
                               const AlgebraElement& y);
AlgebraElement algebra_identity(const AlgebraData& A);

/// Transpose anti-automorphism on basis tuples (exchange the two legs).
TWIndex transpose_tuple(const OmegaCtx& oc, const TWIndex& t);

/// Classical formula for the product (restriction to J) . (transfer from K)
/// inside the H_cls component: one term per J\rep(H_cls)/K double coset,
/// built directly from coset spans without pullback composition.
std::map<TWIndex, long long> mackey_formula_product(const OmegaCtx& oc, int H_cls,
                                                    const Subgroup& J, const Subgroup& K);
/// Wrapper taking the two factors as basis tuples; validates that they are a
/// pure restriction and a pure transfer meeting in the same component.
std::map<TWIndex, long long> mackey_formula_product(const OmegaCtx& oc, const TWIndex& r,
                                                    const TWIndex& t);

}  // namespace mackey
