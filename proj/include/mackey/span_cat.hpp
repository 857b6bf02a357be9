#pragma once
// The category of spans of G-sets up to isomorphism, with Z-linear Hom
// modules. A basis class of Hom(X, Y) is an orbit of triples
// (stabilizer class, target point, source point); composition is pullback
// followed by orbit decomposition.

#include <compare>
#include <map>
#include <vector>

#include "mackey/gset.hpp"

namespace mackey {

/// Canonical coordinates of one span orbit class: the conjugacy class of the
/// middle stabilizer and the (target, source) point pair at the base, taken
/// minimal over all conjugators onto the class representative.
struct SpanKey {
  int mid_class = 0;
  int tgt_point = 0;
  int src_point = 0;
  auto operator<=>(const SpanKey&) const = default;
};

struct SpanClass {
  SpanKey key;
  GSet src, tgt;
};

/// A span with an explicit middle: tgt_leg into the target, src_leg into the
/// source, both from the same middle G-set.
struct MaterializedSpan {
  GSet mid;
  GMap tgt_leg, src_leg;
};

/// Z-linear combination of span classes from src to tgt, terms in key order.
class BurnsideElement {
 public:
  BurnsideElement(GSet src, GSet tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

  const GSet& src() const { return src_; }
  const GSet& tgt() const { return tgt_; }
  const std::map<SpanKey, long long>& terms() const { return terms_; }
  void add(const SpanKey& k, long long coeff);
  long long coeff(const SpanKey& k) const;

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  BurnsideElement& operator*=(long long c);
  bool operator==(const BurnsideElement& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && terms_ == o.terms_;
  }

 private:
  GSet src_, tgt_;
  std::map<SpanKey, long long> terms_;
};

/// Minimal (tgt, src) pair over the normalizer of the class representative.
/// Both points must already be fixed by that representative.
SpanKey canonical_key(const GroupCtx& ctx, int mid_class, int tgt_point, int src_point,
                      const GSet& Y, const GSet& X);
/// Canonical class of the span X <- Z -> Y with transitive middle Z,
/// source leg a and target leg b.
SpanClass canonical_class(const GroupCtx& ctx, const GSet& Z, const GMap& a, const GMap& b);
/// Orbit decomposition of a span with arbitrary middle into basis classes.
BurnsideElement span_decompose(const GMap& src_leg, const GMap& tgt_leg);

/// All basis classes of Hom(X, Y), sorted by key.
std::vector<SpanClass> hom_basis(const GroupCtx& ctx, const GSet& X, const GSet& Y);
BurnsideElement basis_element(const SpanClass& s);
BurnsideElement zero_element(const GSet& X, const GSet& Y);
BurnsideElement identity_element(const GSet& X);

/// Representative span of a class: middle G/rep, legs spread from the base
/// pair by transporters.
MaterializedSpan materialize(const SpanClass& s);
/// Pullback composition of two explicit spans (s2 after s1).
BurnsideElement compose_spans(const MaterializedSpan& s2, const MaterializedSpan& s1);
/// Bilinear extension to Hom elements (s2 after s1).
BurnsideElement compose(const BurnsideElement& s2, const BurnsideElement& s1);

/// The same class viewed as a span from tgt to src (legs exchanged).
SpanClass transpose_class(const SpanClass& s);
BurnsideElement transpose_element(const BurnsideElement& e);

}  // namespace mackey
