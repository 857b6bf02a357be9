#pragma once
// Finite G-sets with eager orbit data (base points, stabilizers, transporters),
// equivariant maps, pullbacks, and the conjugation action used to twist maps.

#include <memory>
#include <utility>
#include <vector>

#include "mackey/group.hpp"

namespace mackey {

struct Orbit {
  std::vector<int> points;  // ascending; points[0] is the base
  int base = 0;
  Subgroup stabilizer;      // of the base, class_id set
  Elt conj_to_rep = 0;      // a with a stab a^{-1} = class representative
};

/// A finite left G-set. Cheap to copy (shared immutable data). Structural
/// equality: same group context and identical action table.
class GSet {
 public:
  GSet() = default;

  /// act[g][x] = g.x. Validates the action axioms unless told not to.
  static GSet from_action(const GroupCtx& ctx, std::vector<std::vector<int>> act,
                          bool validate = true);

  bool valid() const { return d_ != nullptr; }
  int size() const { return d_->size; }
  const GroupCtx& ctx() const { return *d_->ctx; }
  int act(Elt g, int x) const { return d_->act[g][x]; }
  const std::vector<Orbit>& orbits() const { return d_->orbits; }
  const Orbit& orbit_of(int x) const { return d_->orbits[d_->orbit_idx[x]]; }
  int orbit_index(int x) const { return d_->orbit_idx[x]; }
  /// Least t with t.base = x, base the orbit base of x.
  Elt transporter(int x) const { return d_->transp[x]; }
  bool is_transitive() const { return d_->orbits.size() == 1; }

  bool operator==(const GSet& o) const {
    return d_ == o.d_ || (d_ && o.d_ && d_->ctx == o.d_->ctx && d_->act == o.d_->act);
  }
  bool operator!=(const GSet& o) const { return !(*this == o); }

 private:
  struct Data {
    const GroupCtx* ctx;
    int size;
    std::vector<std::vector<int>> act;
    std::vector<Orbit> orbits;
    std::vector<int> orbit_idx;
    std::vector<Elt> transp;
  };
  std::shared_ptr<const Data> d_;
};

/// Coset space G/H; cosets are ordered by least member, so point 0 is H.
GSet transitive_gset(const GroupCtx& ctx, const Subgroup& H);
/// One-point G-set G/G.
GSet point_gset(const GroupCtx& ctx);
GSet empty_gset(const GroupCtx& ctx);
/// G acting on itself by conjugation.
GSet conjugation_gset(const GroupCtx& ctx);
bool is_conjugation_gset(const GSet& X);
/// Cartesian product with the diagonal action; point (x, y) has index
/// x * |Y| + y.
GSet product_gset(const GSet& X, const GSet& Y);

/// An equivariant map of G-sets. Construction checks equivariance.
class GMap {
 public:
  GMap(GSet src, GSet tgt, std::vector<int> images);

  const GSet& src() const { return src_; }
  const GSet& tgt() const { return tgt_; }
  int operator()(int z) const { return images_[z]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const GMap& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && images_ == o.images_;
  }
  bool operator!=(const GMap& o) const { return !(*this == o); }

 private:
  GSet src_, tgt_;
  std::vector<int> images_;
};

GMap identity_map(const GSet& X);
/// g after f.
GMap compose_maps(const GMap& g, const GMap& f);
bool is_bijective(const GMap& f);
GMap inverse_map(const GMap& f);

/// All equivariant maps Z -> X in a fixed deterministic order (per-orbit
/// choice of a stabilizer-fixed image, odometer over orbits, last orbit
/// fastest).
std::vector<GMap> maps_between(const GSet& Z, const GSet& X);
/// Points of X fixed by every element of S.
std::vector<int> fixed_points(const GSet& X, const Subgroup& S);

struct UnionResult {
  GSet space;
  GMap into_left, into_right;
};
UnionResult disjoint_union(const GSet& X, const GSet& Y);

/// Fiber product {(x, y) : a(x) = b(y)} of a: X -> Z and b: Y -> Z, points in
/// lexicographic order, with the two projections.
struct PullbackResult {
  GSet space;
  GMap p;  // onto src(a)
  GMap q;  // onto src(b)
  std::vector<std::pair<int, int>> points;
  int index_of(int x, int y) const;
};
PullbackResult pullback(const GMap& a, const GMap& b);

/// Twist of f: Z -> Y by u: Z -> G^c: z -> u(z).f(z). Requires the target of
/// u to be the conjugation G-set.
GMap star(const GMap& u, const GMap& f);
/// Pointwise group product of two maps into G^c; this is the group law that
/// makes Hom(Z, G^c) a group.
GMap twist_product(const GMap& u, const GMap& v);
GMap twist_inverse(const GMap& u);

/// Components ordered by subgroup class: one coset space G/rep per class.
struct OmegaCtx {
  explicit OmegaCtx(const GroupCtx& ctx);

  GSet omega;
  std::vector<GSet> components;  // components[c] = G/rep(c)
  std::vector<int> offsets;      // size num_classes + 1
  int component_of(int point) const;
};

/// One coset space per subgroup (not per class), in the subgroups() order.
GSet omega_all_subgroups(const GroupCtx& ctx);

}  // namespace mackey
