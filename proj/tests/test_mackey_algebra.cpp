#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mackey/mackey_algebra.hpp"

using namespace mackey;

namespace {

int class_of_order(const GroupCtx& ctx, int order) {
  for (int c = 0; c < ctx.num_classes(); ++c)
    if (ctx.rep(c).order() == order) return c;
  throw std::logic_error("no class of that order");
}

bool leq(const Subgroup& A, const Subgroup& B) {
  return std::includes(B.elements.begin(), B.elements.end(), A.elements.begin(),
                       A.elements.end());
}

}  // namespace

TEST_CASE("the C2 algebra has the six classical basis tuples") {
  GroupCtx ctx(FiniteGroup::builtin("C2"));
  std::vector<TWIndex> basis = tw_basis(ctx);
  std::vector<TWIndex> expect = {
      {0, 0, 0, {0}},     // identity on the free component
      {0, 0, 1, {0}},     // conjugation by the involution
      {0, 1, 0, {0}},     // restriction to the trivial subgroup
      {1, 0, 0, {0}},     // transfer from the trivial subgroup
      {1, 1, 0, {0}},     // transfer of the restriction
      {1, 1, 0, {0, 1}},  // identity on the full component
  };
  CHECK(basis == expect);
}

TEST_CASE("hand checked products in the C2 algebra") {
  GroupCtx ctx(FiniteGroup::builtin("C2"));
  AlgebraData A = build_algebra(ctx);
  REQUIRE(A.rank() == 6);
  auto b = [](int i) { return AlgebraElement{{i, 1}}; };
  // transfer . restriction passes through the free component.
  CHECK(algebra_product(A, b(3), b(2)) == b(4));
  // restriction . transfer expands by the double coset formula: two
  // conjugation terms on the free component.
  CHECK(algebra_product(A, b(2), b(3)) == AlgebraElement{{0, 1}, {1, 1}});
  // The conjugation is an involution.
  CHECK(algebra_product(A, b(1), b(1)) == b(0));
  // Component identities.
  CHECK(algebra_identity(A) == AlgebraElement{{0, 1}, {5, 1}});
  CHECK(A.component_identity == std::vector<int>{0, 5});
  // Non composable pairs multiply to zero.
  CHECK(algebra_product(A, b(2), b(2)).empty());
}

TEST_CASE("algebra ranks match the independently counted values") {
  auto rank = [](const char* name) {
    return tw_basis(GroupCtx(FiniteGroup::builtin(name))).size();
  };
  CHECK(rank("C1") == 1);
  CHECK(rank("C2") == 6);
  CHECK(rank("C3") == 7);
  CHECK(rank("C4") == 21);
  CHECK(rank("V4") == 53);
  CHECK(rank("S3") == 39);
  CHECK(rank("C6") == 42);
  CHECK(rank("C8") == 58);
  CHECK(rank("Q8") == 120);
  CHECK(rank("D4") == 208);
  // Isomorphic presentations give the same rank.
  CHECK(rank("D3") == 39);
  CHECK(rank("D2") == 53);
}

TEST_CASE("tuples and spans translate back and forth") {
  for (const char* name : {"C2", "C4", "S3", "Q8"}) {
    GroupCtx ctx(FiniteGroup::builtin(name));
    CAPTURE(name);
    OmegaCtx oc(ctx);
    std::vector<TWIndex> basis = tw_basis(ctx);
    std::set<SpanKey> seen;
    for (const TWIndex& t : basis) {
      SpanClass s = span_of_tuple(oc, t);
      CHECK(tuple_of_span(oc, s) == t);
      CHECK(seen.insert(s.key).second);  // distinct tuples map to distinct spans
    }
    CHECK(seen.size() == hom_basis(ctx, oc.omega, oc.omega).size());
  }
}

TEST_CASE("canonical_tuple is idempotent and validates the containments") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  const FiniteGroup& G = ctx.group();
  for (int hc = 0; hc < ctx.num_classes(); ++hc)
    for (int lc = 0; lc < ctx.num_classes(); ++lc)
      for (Elt g = 0; g < G.order(); ++g) {
        Subgroup I = intersect(ctx.rep(hc), conjugate_subgroup(G, g, ctx.rep(lc)));
        TWIndex t = canonical_tuple(ctx, hc, lc, g, I.elements);
        TWIndex again = canonical_tuple(ctx, t.H_class, t.L_class, t.g, t.K);
        CHECK(t == again);
      }
  // K must sit inside rep(H) and g^{-1} K g inside rep(L).
  int c2 = class_of_order(ctx, 2), c3 = class_of_order(ctx, 3);
  CHECK_THROWS_AS(canonical_tuple(ctx, c2, c2, 0, ctx.rep(c3).elements),
                  std::invalid_argument);
}

TEST_CASE("restriction and transfer tuples point between the right components") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  OmegaCtx oc(ctx);
  for (int c = 0; c < ctx.num_classes(); ++c)
    for (const Subgroup& J : ctx.subgroups()) {
      if (!leq(J, ctx.rep(c))) continue;
      TWIndex r = tw_restriction(oc, c, J);
      TWIndex t = tw_transfer(oc, c, J);
      CHECK(r.H_class == ctx.class_of(J.elements));
      CHECK(r.L_class == c);
      CHECK(t.H_class == c);
      CHECK(t.L_class == ctx.class_of(J.elements));
      // The transpose anti-automorphism exchanges them.
      CHECK(transpose_tuple(oc, r) == t);
      CHECK(transpose_tuple(oc, t) == r);
    }
}

TEST_CASE("pullback products of restriction and transfer match the double coset formula") {
  for (const char* name : {"S3", "C6", "Q8"}) {
    GroupCtx ctx(FiniteGroup::builtin(name));
    CAPTURE(name);
    OmegaCtx oc(ctx);
    AlgebraData A = build_algebra(ctx);
    for (int hc = 0; hc < ctx.num_classes(); ++hc)
      for (const Subgroup& J : ctx.subgroups())
        for (const Subgroup& K : ctx.subgroups()) {
          if (!leq(J, ctx.rep(hc)) || !leq(K, ctx.rep(hc))) continue;
          TWIndex r = tw_restriction(oc, hc, J);
          TWIndex t = tw_transfer(oc, hc, K);
          AlgebraElement engine = algebra_product(A, AlgebraElement{{A.index_of.at(r), 1}},
                                                  AlgebraElement{{A.index_of.at(t), 1}});
          AlgebraElement formula;
          for (const auto& [tup, c] : mackey_formula_product(oc, r, t))
            formula[A.index_of.at(tup)] += c;
          CHECK(engine == formula);
        }
  }
}

TEST_CASE("the S3 double coset formula with two cosets") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  OmegaCtx oc(ctx);
  int c2 = class_of_order(ctx, 2);
  const Subgroup& C2 = ctx.rep(c2);
  auto prod = mackey_formula_product(oc, ctx.full_class(), C2, C2);
  // C2 \ S3 / C2 has two double cosets; the x = e term keeps the middle C2,
  // the other meets it trivially.
  CHECK(prod.size() == 2);
  long long total = 0;
  bool saw_c2 = false, saw_triv = false;
  for (const auto& [t, c] : prod) {
    total += c;
    if (static_cast<int>(t.K.size()) == 2) saw_c2 = true;
    if (static_cast<int>(t.K.size()) == 1) saw_triv = true;
  }
  CHECK(total == 2);
  CHECK(saw_c2);
  CHECK(saw_triv);
}

TEST_CASE("the formula wrapper rejects factors that are not pure") {
  GroupCtx ctx(FiniteGroup::builtin("C2"));
  OmegaCtx oc(ctx);
  TWIndex conj{0, 0, 1, {0}};       // conjugation, not a restriction
  TWIndex transfer{1, 0, 0, {0}};
  CHECK_THROWS_AS(mackey_formula_product(oc, conj, transfer), std::invalid_argument);
  TWIndex restr{0, 1, 0, {0}};
  TWIndex tr{1, 1, 0, {0}};         // transfer of a restriction, not pure
  CHECK_THROWS_AS(mackey_formula_product(oc, restr, tr), std::invalid_argument);
}

TEST_CASE("products respect the component grading") {
  GroupCtx ctx(FiniteGroup::builtin("S3"));
  AlgebraData A = build_algebra(ctx);
  for (int i = 0; i < A.rank(); ++i)
    for (int j = 0; j < A.rank(); ++j) {
      AlgebraElement p = algebra_product(A, AlgebraElement{{i, 1}}, AlgebraElement{{j, 1}});
      if (A.basis[i].L_class != A.basis[j].H_class) {
        CHECK(p.empty());
      } else {
        for (const auto& [k, c] : p) {
          CHECK(c != 0);
          CHECK(A.basis[k].H_class == A.basis[i].H_class);
          CHECK(A.basis[k].L_class == A.basis[j].L_class);
        }
      }
    }
}
