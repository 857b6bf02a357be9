#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mackey/gset.hpp"

using namespace mackey;

namespace {

const Subgroup& sub_of_order(const GroupCtx& ctx, int order) {
  for (int c = 0; c < ctx.num_classes(); ++c)
    if (ctx.rep(c).order() == order) return ctx.rep(c);
  throw std::logic_error("no subgroup of that order");
}

// Count equivariant maps X -> Y by trying every function. Exponential; only
// for tiny sets.
long long count_maps_raw(const GSet& X, const GSet& Y) {
  int n = X.size(), m = Y.size();
  REQUIRE(std::pow(static_cast<double>(m), n) < 5e4);
  std::vector<int> f(n, 0);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (Elt g = 0; g < X.ctx().order() && ok; ++g)
      for (int x = 0; x < n && ok; ++x)
        if (f[X.act(g, x)] != Y.act(g, f[x])) ok = false;
    if (ok) ++count;
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("coset spaces have index many points and the right stabilizer") {
  for (const char* name : {"C4", "S3", "D4"}) {
    GroupCtx ctx(FiniteGroup::builtin(name));
    CAPTURE(name);
    for (int c = 0; c < ctx.num_classes(); ++c) {
      GSet X = transitive_gset(ctx, ctx.rep(c));
      CHECK(X.size() == ctx.order() / ctx.rep(c).order());
      REQUIRE(X.orbits().size() == 1);
      const Orbit& o = X.orbits()[0];
      CHECK(o.stabilizer.class_id == c);
      CHECK(o.stabilizer == ctx.rep(c));
      // Transporters move the base point where they claim.
      for (int p : o.points) CHECK(X.act(X.transporter(p), o.base) == p);
    }
  }
}

TEST_CASE("pullback of the two maximal coset spaces of S3 over the point") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  GSet X = transitive_gset(ctx, sub_of_order(ctx, 2));
  GSet Y = transitive_gset(ctx, sub_of_order(ctx, 3));
  GSet pt = point_gset(ctx);
  GMap a(X, pt, std::vector<int>(X.size(), 0));
  GMap b(Y, pt, std::vector<int>(Y.size(), 0));
  PullbackResult pb = pullback(a, b);
  CHECK(pb.space.size() == 6);
  REQUIRE(pb.space.orbits().size() == 1);
  CHECK(pb.space.orbits()[0].stabilizer.order() == 1);  // free orbit
  // Projections are the coordinate maps.
  for (size_t i = 0; i < pb.points.size(); ++i) {
    CHECK(pb.p(static_cast<int>(i)) == pb.points[i].first);
    CHECK(pb.q(static_cast<int>(i)) == pb.points[i].second);
  }
}

TEST_CASE("product of G/C2 with itself over S3") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  GSet X = transitive_gset(ctx, sub_of_order(ctx, 2));
  GSet P = product_gset(X, X);
  CHECK(P.size() == 9);
  REQUIRE(P.orbits().size() == 2);
  std::multiset<size_t> orbit_sizes, stab_orders;
  for (const Orbit& o : P.orbits()) {
    orbit_sizes.insert(o.points.size());
    stab_orders.insert(o.stabilizer.elements.size());
  }
  CHECK(orbit_sizes == std::multiset<size_t>{3, 6});
  CHECK(stab_orders == std::multiset<size_t>{1, 2});
}

TEST_CASE("map enumeration agrees with the exponential oracle") {
  GroupCtx s3(FiniteGroup::builtin("S3"));
  GSet x2 = transitive_gset(s3, sub_of_order(s3, 2));
  GSet x3 = transitive_gset(s3, sub_of_order(s3, 3));
  CHECK(static_cast<long long>(maps_between(x2, x3).size()) == count_maps_raw(x2, x3));
  CHECK(static_cast<long long>(maps_between(x3, x2).size()) == count_maps_raw(x3, x2));
  CHECK(static_cast<long long>(maps_between(x3, x3).size()) == count_maps_raw(x3, x3));

  GroupCtx c4(FiniteGroup::builtin("C4"));
  GSet y2 = transitive_gset(c4, sub_of_order(c4, 2));
  GSet y1 = transitive_gset(c4, sub_of_order(c4, 1));
  CHECK(static_cast<long long>(maps_between(y2, y1).size()) == count_maps_raw(y2, y1));
  CHECK(static_cast<long long>(maps_between(y1, y2).size()) == count_maps_raw(y1, y2));
}

TEST_CASE("maps from a coset space are fixed points; maps into G^c are centralizers") {
  for (const char* name : {"S3", "D4", "Q8"}) {
    GroupCtx ctx(FiniteGroup::builtin(name));
    CAPTURE(name);
    GSet gc = conjugation_gset(ctx);
    for (int c = 0; c < ctx.num_classes(); ++c) {
      GSet X = transitive_gset(ctx, ctx.rep(c));
      CHECK(maps_between(X, gc).size() ==
            static_cast<size_t>(ctx.centralizer_of_rep(c).order()));
      for (int d = 0; d < ctx.num_classes(); ++d) {
        GSet Y = transitive_gset(ctx, ctx.rep(d));
        CHECK(maps_between(X, Y).size() == fixed_points(Y, ctx.rep(c)).size());
      }
    }
  }
}

TEST_CASE("equivariance is enforced by the map constructor") {
  GroupCtx ctx(FiniteGroup::builtin("C2"));
  GSet free = transitive_gset(ctx, ctx.rep(ctx.trivial_class()));
  GSet pt = point_gset(ctx);
  CHECK_NOTHROW(GMap(free, free, {1, 0}));
  CHECK_THROWS_AS(GMap(free, free, {0, 0}), std::invalid_argument);  // collapses a free orbit
  CHECK_THROWS_AS(GMap(pt, free, {0}), std::invalid_argument);       // point into free orbit
  CHECK_THROWS_AS(GMap(free, pt, {0}), std::invalid_argument);       // wrong length
}

TEST_CASE("twists by maps into the conjugation G-set") {
  GroupCtx ctx(FiniteGroup::builtin("Q8"));
  GSet gc = conjugation_gset(ctx);
  for (int c = 0; c < ctx.num_classes(); ++c) {
    GSet X = transitive_gset(ctx, ctx.rep(c));
    GMap id = identity_map(X);
    for (const GMap& u : maps_between(X, gc)) {
      // Inverse twist undoes the twist.
      GMap tu = star(u, id);
      CHECK(star(twist_inverse(u), tu) == id);
      // Stacked twists multiply pointwise, outer twist on the left.
      for (const GMap& v : maps_between(X, gc))
        CHECK(star(v, star(u, id)) == star(twist_product(v, u), id));
    }
  }
  // Twisting requires the twist to land in the conjugation G-set.
  GSet pt = point_gset(ctx);
  GSet x = transitive_gset(ctx, ctx.rep(ctx.full_class()));
  CHECK_THROWS_AS(star(GMap(x, pt, {0}), identity_map(x)), std::invalid_argument);
}

TEST_CASE("disjoint unions preserve sizes, orbits and equivariance") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  GSet A = transitive_gset(ctx, sub_of_order(ctx, 2));
  GSet B = transitive_gset(ctx, sub_of_order(ctx, 3));
  UnionResult u = disjoint_union(A, B);
  CHECK(u.space.size() == A.size() + B.size());
  CHECK(u.space.orbits().size() == A.orbits().size() + B.orbits().size());
  CHECK(is_bijective(u.into_left) == false);
  for (int x = 0; x < A.size(); ++x)
    for (Elt g = 0; g < ctx.order(); ++g)
      CHECK(u.into_left(A.act(g, x)) == u.space.act(g, u.into_left(x)));
}

TEST_CASE("the conjugation G-set splits into conjugacy classes") {
  GroupCtx c2(FiniteGroup::builtin("C2"));
  CHECK(conjugation_gset(c2).orbits().size() == 2);
  GroupCtx s3(FiniteGroup::builtin("S3"));
  GSet gc = conjugation_gset(s3);
  CHECK(gc.size() == 6);
  CHECK(gc.orbits().size() == 3);  // e, transpositions, rotations
  CHECK(is_conjugation_gset(gc));
  CHECK_FALSE(is_conjugation_gset(transitive_gset(s3, s3.rep(0))));
  // Action is conjugation.
  const FiniteGroup& G = s3.group();
  for (Elt g = 0; g < G.order(); ++g)
    for (Elt x = 0; x < G.order(); ++x) CHECK(gc.act(g, x) == G.conj(g, x));
}

TEST_CASE("the canonical multi-component object lists one coset space per class") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  OmegaCtx oc(ctx);
  CHECK(oc.components.size() == static_cast<size_t>(ctx.num_classes()));
  CHECK(oc.omega.size() == 6 + 3 + 2 + 1);
  for (int c = 0; c < ctx.num_classes(); ++c) {
    CHECK(oc.components[c].size() == ctx.order() / ctx.rep(c).order());
    for (int p = 0; p < oc.components[c].size(); ++p)
      CHECK(oc.component_of(oc.offsets[c] + p) == c);
  }
  // The variant with one component per subgroup covers every subgroup.
  GSet all = omega_all_subgroups(ctx);
  CHECK(all.orbits().size() == ctx.subgroups().size());
  int expected = 0;
  for (const Subgroup& S : ctx.subgroups()) expected += ctx.order() / S.order();
  CHECK(all.size() == expected);
}

TEST_CASE("map composition and inversion") {
  GroupCtx ctx(FiniteGroup::builtin("C6"));
  GSet X = transitive_gset(ctx, ctx.rep(ctx.trivial_class()));
  for (const GMap& f : maps_between(X, X)) {
    CHECK(compose_maps(f, identity_map(X)) == f);
    CHECK(compose_maps(identity_map(X), f) == f);
    if (is_bijective(f)) {
      GMap g = inverse_map(f);
      CHECK(compose_maps(g, f) == identity_map(X));
      CHECK(compose_maps(f, g) == identity_map(X));
    }
  }
}
