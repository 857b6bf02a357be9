#pragma once
// The fused quotient of the span category: Hom modules are divided by the
// subgroup generated by differences of a span and its target-leg twist by a
// map into the conjugation G-set. Provides the coarser canonical form, the
// quotient presentation, and three independent equality tests for twisted
// maps.

#include <utility>
#include <vector>

#include "mackey/span_cat.hpp"
#include "mackey/zlattice.hpp"

namespace mackey {

/// Whether b = u * a for some twist u: Z -> G^c, decided orbitwise through
/// centralizer elements of the stabilizers.
bool fused_equal(const GMap& a, const GMap& b);
/// The same relation decided by factoring (a, b): Z -> Y x Y through the
/// evaluation projection of the path object Y x G^c.
bool fused_equal_via_path_object(const GMap& a, const GMap& b);
/// The same relation decided by lattice membership of the difference of the
/// two span classes (identity source leg) in the twist-difference lattice.
bool fused_equal_via_lattice(const GMap& a, const GMap& b);

/// Coarser canonical form: minimum of the key over target-leg twists by
/// centralizer elements of the middle representative.
SpanKey fuse_key(const GroupCtx& ctx, const SpanKey& k, const GSet& Y, const GSet& X);
SpanClass fuse_class(const SpanClass& s);
/// Termwise coarsening of a Hom element.
BurnsideElement fuse_element(const BurnsideElement& e);
/// Compose, then coarsen. Well defined on fused classes.
BurnsideElement fused_compose(const BurnsideElement& s2, const BurnsideElement& s1);

/// Difference generators of the twist subgroup of Hom(X, Y) in coordinates of
/// the given basis (one column per basis class and centralizer twist that
/// moves it).
IntMatrix twist_difference_generators(const GroupCtx& ctx, const GSet& X, const GSet& Y,
                                      const std::vector<SpanClass>& basis);
/// Coordinates of an element in a basis of span classes.
IntVector coordinates(const BurnsideElement& e, const std::vector<SpanClass>& basis);

/// Hom(X, Y) in the fused quotient: fused basis, presentation of the quotient
/// lattice, and the collapse pattern on the unfused basis.
struct FusedHom {
  std::vector<SpanClass> unfused_basis;
  std::vector<SpanClass> basis;       // fused classes, sorted by key
  std::vector<int> fuse_map;          // unfused index -> fused index
  std::vector<std::pair<int, int>> collapsed_pairs;  // (i, j): class i fused onto class j
  QuotientPresentation quotient;
};

FusedHom fused_hom(const GroupCtx& ctx, const GSet& X, const GSet& Y);

/// Weak pullback: the ordinary pullback as the canonical lift construction.
/// Lifting a and b through twists changes the result by an isomorphism only
/// up to fusion; see the verification suite for the contract.
PullbackResult weak_pullback(const GMap& a, const GMap& b);

}  // namespace mackey
