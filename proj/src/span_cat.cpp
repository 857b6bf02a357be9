#include "mackey/span_cat.hpp"

#include <set>
#include <stdexcept>

namespace mackey {

void BurnsideElement::add(const SpanKey& k, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.try_emplace(k, 0).first;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

long long BurnsideElement::coeff(const SpanKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  if (src_ != o.src_ || tgt_ != o.tgt_)
    throw std::invalid_argument("BurnsideElement: shape mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  if (src_ != o.src_ || tgt_ != o.tgt_)
    throw std::invalid_argument("BurnsideElement: shape mismatch");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

BurnsideElement& BurnsideElement::operator*=(long long c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

SpanKey canonical_key(const GroupCtx& ctx, int mid_class, int tgt_point, int src_point,
                      const GSet& Y, const GSet& X) {
  for (Elt s : ctx.rep(mid_class).elements)
    if (Y.act(s, tgt_point) != tgt_point || X.act(s, src_point) != src_point)
      throw std::invalid_argument("canonical_key: base points not fixed by the middle");
  const Subgroup& N = ctx.normalizer_of_rep(mid_class);
  bool first = true;
  int by = 0, bx = 0;
  for (Elt n : N.elements) {
    int cy = Y.act(n, tgt_point), cx = X.act(n, src_point);
    if (first || cy < by || (cy == by && cx < bx)) {
      by = cy;
      bx = cx;
      first = false;
    }
  }
  return SpanKey{mid_class, by, bx};
}

SpanClass canonical_class(const GroupCtx& ctx, const GSet& Z, const GMap& a, const GMap& b) {
  if (!Z.is_transitive())
    throw std::invalid_argument("canonical_class: middle must be transitive");
  if (a.src() != Z || b.src() != Z)
    throw std::invalid_argument("canonical_class: legs must start at the middle");
  const Orbit& o = Z.orbits()[0];
  Elt conj = o.conj_to_rep;
  int cls = o.stabilizer.class_id;
  SpanKey k = canonical_key(ctx, cls, b.tgt().act(conj, b(o.base)),
                            a.tgt().act(conj, a(o.base)), b.tgt(), a.tgt());
  return SpanClass{k, a.tgt(), b.tgt()};
}

BurnsideElement span_decompose(const GMap& src_leg, const GMap& tgt_leg) {
  if (src_leg.src() != tgt_leg.src())
    throw std::invalid_argument("span_decompose: legs start at different G-sets");
  const GSet& W = src_leg.src();
  const GroupCtx& ctx = W.ctx();
  BurnsideElement out(src_leg.tgt(), tgt_leg.tgt());
  for (const Orbit& o : W.orbits()) {
    SpanKey k = canonical_key(ctx, o.stabilizer.class_id,
                              tgt_leg.tgt().act(o.conj_to_rep, tgt_leg(o.base)),
                              src_leg.tgt().act(o.conj_to_rep, src_leg(o.base)),
                              tgt_leg.tgt(), src_leg.tgt());
    out.add(k, 1);
  }
  return out;
}

std::vector<SpanClass> hom_basis(const GroupCtx& ctx, const GSet& X, const GSet& Y) {
  std::set<SpanKey> keys;
  for (int cls = 0; cls < ctx.num_classes(); ++cls) {
    std::vector<int> fy = fixed_points(Y, ctx.rep(cls));
    std::vector<int> fx = fixed_points(X, ctx.rep(cls));
    for (int y : fy)
      for (int x : fx) keys.insert(canonical_key(ctx, cls, y, x, Y, X));
  }
  std::vector<SpanClass> out;
  for (const SpanKey& k : keys) out.push_back(SpanClass{k, X, Y});
  return out;
}

BurnsideElement basis_element(const SpanClass& s) {
  BurnsideElement e(s.src, s.tgt);
  e.add(s.key, 1);
  return e;
}

BurnsideElement zero_element(const GSet& X, const GSet& Y) {
  return BurnsideElement(X, Y);
}

BurnsideElement identity_element(const GSet& X) {
  return span_decompose(identity_map(X), identity_map(X));
}

MaterializedSpan materialize(const SpanClass& s) {
  const GroupCtx& ctx = s.src.ctx();
  GSet mid = transitive_gset(ctx, ctx.rep(s.key.mid_class));
  std::vector<int> imt(mid.size()), ims(mid.size());
  for (int p = 0; p < mid.size(); ++p) {
    Elt t = mid.transporter(p);
    imt[p] = s.tgt.act(t, s.key.tgt_point);
    ims[p] = s.src.act(t, s.key.src_point);
  }
  return MaterializedSpan{mid, GMap(mid, s.tgt, std::move(imt)),
                          GMap(mid, s.src, std::move(ims))};
}

BurnsideElement compose_spans(const MaterializedSpan& s2, const MaterializedSpan& s1) {
  if (s1.tgt_leg.tgt() != s2.src_leg.tgt())
    throw std::invalid_argument("compose_spans: middle object mismatch");
  PullbackResult pb = pullback(s2.src_leg, s1.tgt_leg);
  return span_decompose(compose_maps(s1.src_leg, pb.q), compose_maps(s2.tgt_leg, pb.p));
}

BurnsideElement compose(const BurnsideElement& s2, const BurnsideElement& s1) {
  if (s1.tgt() != s2.src())
    throw std::invalid_argument("compose: codomain of first factor differs from domain of second");
  BurnsideElement out(s1.src(), s2.tgt());
  std::map<SpanKey, MaterializedSpan> mats1, mats2;
  for (const auto& kv : s1.terms())
    mats1.emplace(kv.first, materialize(SpanClass{kv.first, s1.src(), s1.tgt()}));
  for (const auto& kv : s2.terms())
    mats2.emplace(kv.first, materialize(SpanClass{kv.first, s2.src(), s2.tgt()}));
  for (const auto& [k2, c2] : s2.terms())
    for (const auto& [k1, c1] : s1.terms()) {
      BurnsideElement part = compose_spans(mats2.at(k2), mats1.at(k1));
      part *= c1 * c2;
      out += part;
    }
  return out;
}

SpanClass transpose_class(const SpanClass& s) {
  SpanKey k = canonical_key(s.src.ctx(), s.key.mid_class, s.key.src_point,
                            s.key.tgt_point, s.src, s.tgt);
  return SpanClass{k, s.tgt, s.src};
}

BurnsideElement transpose_element(const BurnsideElement& e) {
  BurnsideElement out(e.tgt(), e.src());
  for (const auto& [k, c] : e.terms())
    out.add(transpose_class(SpanClass{k, e.src(), e.tgt()}).key, c);
  return out;
}

}  // namespace mackey
