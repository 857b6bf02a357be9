#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mackey/span_cat.hpp"

using namespace mackey;

namespace {

int class_of_order(const GroupCtx& ctx, int order) {
  for (int c = 0; c < ctx.num_classes(); ++c)
    if (ctx.rep(c).order() == order) return c;
  throw std::logic_error("no class of that order");
}

BurnsideElement point_class(const GSet& pt, int mid_class) {
  BurnsideElement e(pt, pt);
  e.add(SpanKey{mid_class, 0, 0}, 1);
  return e;
}

}  // namespace

TEST_CASE("endomorphisms of the point are the Burnside ring") {
  GroupCtx c2(FiniteGroup::builtin("C2"));
  CHECK(hom_basis(c2, point_gset(c2), point_gset(c2)).size() == 2);
  GroupCtx s3(FiniteGroup::builtin("S3"));
  CHECK(hom_basis(s3, point_gset(s3), point_gset(s3)).size() == 4);
  GroupCtx d4(FiniteGroup::builtin("D4"));
  CHECK(hom_basis(d4, point_gset(d4), point_gset(d4)).size() == 8);
}

TEST_CASE("products of coset classes decompose as in the Burnside ring") {
  GroupCtx c2(FiniteGroup::builtin("C2"));
  GSet pt2 = point_gset(c2);
  // [G/1]^2 = 2 [G/1] over C2.
  BurnsideElement free2 = point_class(pt2, c2.trivial_class());
  BurnsideElement sq = compose(free2, free2);
  BurnsideElement expect = free2;
  expect *= 2;
  CHECK(sq == expect);

  GroupCtx s3(FiniteGroup::builtin("S3"));
  GSet pt3 = point_gset(s3);
  int c2cls = class_of_order(s3, 2), c3cls = class_of_order(s3, 3);
  // [G/C2]^2 = [G/C2] + [G/1] over S3.
  BurnsideElement lhs = compose(point_class(pt3, c2cls), point_class(pt3, c2cls));
  BurnsideElement rhs = point_class(pt3, c2cls);
  rhs += point_class(pt3, s3.trivial_class());
  CHECK(lhs == rhs);
  // [G/C3]^2 = 2 [G/C3] over S3 (normal subgroup).
  BurnsideElement lhs3 = compose(point_class(pt3, c3cls), point_class(pt3, c3cls));
  BurnsideElement rhs3 = point_class(pt3, c3cls);
  rhs3 *= 2;
  CHECK(lhs3 == rhs3);
}

TEST_CASE("point endomorphism products match orbit decompositions directly") {
  for (const char* name : {"C4", "S3", "Q8"}) {
    GroupCtx ctx(FiniteGroup::builtin(name));
    CAPTURE(name);
    GSet pt = point_gset(ctx);
    for (int h = 0; h < ctx.num_classes(); ++h)
      for (int k = 0; k < ctx.num_classes(); ++k) {
        BurnsideElement prod =
            compose(point_class(pt, h), point_class(pt, k));
        BurnsideElement expect = zero_element(pt, pt);
        GSet P = product_gset(transitive_gset(ctx, ctx.rep(h)),
                              transitive_gset(ctx, ctx.rep(k)));
        for (const Orbit& o : P.orbits())
          expect.add(SpanKey{o.stabilizer.class_id, 0, 0}, 1);
        CHECK(prod == expect);
      }
  }
}

TEST_CASE("identity element is a two sided unit") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  std::vector<GSet> objs = {point_gset(ctx),
                            transitive_gset(ctx, ctx.rep(class_of_order(ctx, 2))),
                            OmegaCtx(ctx).omega};
  for (const GSet& X : objs)
    for (const GSet& Y : objs) {
      BurnsideElement idX = identity_element(X), idY = identity_element(Y);
      for (const SpanClass& s : hom_basis(ctx, X, Y)) {
        BurnsideElement b = basis_element(s);
        CHECK(compose(idY, b) == b);
        CHECK(compose(b, idX) == b);
      }
    }
}

TEST_CASE("identity of the multi component object has one term per component") {
  GroupCtx c2(FiniteGroup::builtin("C2"));
  OmegaCtx oc(c2);
  CHECK(oc.omega.size() == 3);
  CHECK(identity_element(oc.omega).terms().size() == 2);
  GroupCtx s3(FiniteGroup::builtin("S3"));
  CHECK(identity_element(OmegaCtx(s3).omega).terms().size() == 4);
}

TEST_CASE("hom ranks are isomorphism invariants of the objects") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  // Two conjugate order 2 subgroups present isomorphic coset spaces.
  std::vector<const Subgroup*> order2;
  for (const Subgroup& S : ctx.subgroups())
    if (S.order() == 2) order2.push_back(&S);
  REQUIRE(order2.size() == 3);
  GSet A = transitive_gset(ctx, *order2[0]);
  GSet B = transitive_gset(ctx, *order2[1]);
  GSet pt = point_gset(ctx);
  CHECK(hom_basis(ctx, A, pt).size() == hom_basis(ctx, B, pt).size());
  CHECK(hom_basis(ctx, A, A).size() == hom_basis(ctx, B, B).size());
  CHECK(hom_basis(ctx, pt, A).size() == hom_basis(ctx, pt, B).size());
}

TEST_CASE("decompose of a materialized class is the class itself") {
  for (const char* name : {"C2", "S3"}) {
    GroupCtx ctx(FiniteGroup::builtin(name));
    CAPTURE(name);
    OmegaCtx oc(ctx);
    std::vector<GSet> objs = {point_gset(ctx), oc.omega};
    for (const GSet& X : objs)
      for (const GSet& Y : objs)
        for (const SpanClass& s : hom_basis(ctx, X, Y)) {
          MaterializedSpan m = materialize(s);
          CHECK(span_decompose(m.src_leg, m.tgt_leg) == basis_element(s));
        }
  }
}

TEST_CASE("transpose exchanges the legs and reverses composition") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  GSet pt = point_gset(ctx);
  GSet X = transitive_gset(ctx, ctx.rep(class_of_order(ctx, 2)));
  for (const SpanClass& s : hom_basis(ctx, X, pt)) {
    SpanClass t = transpose_class(s);
    CHECK(t.key.mid_class == s.key.mid_class);
    CHECK(transpose_class(t).key == s.key);
  }
  for (const SpanClass& f : hom_basis(ctx, X, pt))
    for (const SpanClass& g : hom_basis(ctx, pt, X)) {
      BurnsideElement fg = compose(basis_element(f), basis_element(g));
      BurnsideElement gt_ft =
          compose(transpose_element(basis_element(g)), transpose_element(basis_element(f)));
      CHECK(transpose_element(fg) == gt_ft);
    }
}

TEST_CASE("element arithmetic erases zeros") {
  GroupCtx ctx(FiniteGroup::builtin("C2"));
  GSet pt = point_gset(ctx);
  BurnsideElement a = point_class(pt, 0);
  BurnsideElement b = a;
  b -= a;
  CHECK(b == zero_element(pt, pt));
  CHECK(b.terms().empty());
  a *= 0;
  CHECK(a == zero_element(pt, pt));
  BurnsideElement c = point_class(pt, 1);
  c.add(SpanKey{1, 0, 0}, -1);
  CHECK(c.terms().empty());
  CHECK(c.coeff(SpanKey{1, 0, 0}) == 0);
}

TEST_CASE("composition is associative on mixed hom sets") {
  GroupCtx ctx(FiniteGroup::builtin("C4"));
  OmegaCtx oc(ctx);
  GSet pt = point_gset(ctx);
  auto h1 = hom_basis(ctx, pt, oc.omega);
  auto h2 = hom_basis(ctx, oc.omega, oc.omega);
  auto h3 = hom_basis(ctx, oc.omega, pt);
  size_t checked = 0;
  for (size_t i = 0; i < h1.size(); i += 2)
    for (size_t j = 0; j < h2.size(); j += 5)
      for (size_t k = 0; k < h3.size(); k += 2) {
        BurnsideElement b1 = basis_element(h1[i]);
        BurnsideElement b2 = basis_element(h2[j]);
        BurnsideElement b3 = basis_element(h3[k]);
        CHECK(compose(compose(b3, b2), b1) == compose(b3, compose(b2, b1)));
        ++checked;
      }
  CHECK(checked > 20);
}

TEST_CASE("canonical keys reject unfixed base points") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  GSet pt = point_gset(ctx);
  GSet free = transitive_gset(ctx, ctx.rep(ctx.trivial_class()));
  // Point 0 of the free orbit is not fixed by the order 2 representative.
  CHECK_THROWS_AS(canonical_key(ctx, class_of_order(ctx, 2), 0, 0, free, pt),
                  std::invalid_argument);
  CHECK_NOTHROW(canonical_key(ctx, ctx.trivial_class(), 0, 0, free, pt));
}
