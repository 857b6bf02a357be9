#include "mackey/verify.hpp"

#include <algorithm>
#include <set>
#include <random>
#include <sstream>

#include "mackey/fused_cat.hpp"

namespace mackey {

namespace {

std::string num(long long v) { return std::to_string(v); }

// Deterministic slice step so that roughly `cap` items of `n` are visited.
size_t stride_for(size_t n, size_t cap) { return n <= cap ? 1 : (n + cap - 1) / cap; }

struct Suite {
  std::vector<CheckResult> out;
  void check(const std::string& name, bool pass, const std::string& detail) {
    out.push_back(CheckResult{name, pass, detail});
  }
  void skipped(const std::string& name, const std::string& why) {
    out.push_back(CheckResult{name, true, "skipped: " + why});
  }
};

// ---------------------------------------------------------------- group_core

void suite_group_core(const GroupCtx& ctx, const VerifyOptions&, Suite& s) {
  const FiniteGroup& G = ctx.group();

  if (G.order() <= 64)
    s.check("group_core.axioms", check_group_axioms(G), "full enumeration");
  else
    s.skipped("group_core.axioms", "order above 64");

  bool cent_ok = true;
  for (int c = 0; c < ctx.num_classes() && cent_ok; ++c) {
    const Subgroup& S = ctx.rep(c);
    const Subgroup& C = ctx.centralizer_of_rep(c);
    for (Elt x : C.elements)
      for (Elt e : S.elements)
        if (G.mul(x, e) != G.mul(e, x)) cent_ok = false;
    for (Elt g = 0; g < G.order() && cent_ok; ++g) {
      Subgroup Sg = conjugate_subgroup(G, g, S);
      Subgroup Cg = conjugate_subgroup(G, g, C);
      if (!(ctx.centralizer(Sg) == Cg)) cent_ok = false;
    }
  }
  s.check("group_core.centralizer_conjugation", cent_ok,
          "commutation and covariance over all classes and conjugators");

  bool dc_ok = true;
  long long dc_pairs = 0;
  for (int hc = 0; hc < ctx.num_classes() && dc_ok; ++hc)
    for (int lc = 0; lc < ctx.num_classes() && dc_ok; ++lc) {
      const Subgroup& H = ctx.rep(hc);
      const Subgroup& L = ctx.rep(lc);
      std::vector<Elt> reps = double_cosets(G, H, L);
      long long total = 0;
      for (Elt x : reps) {
        std::set<Elt> orbit;
        for (Elt h : H.elements)
          for (Elt l : L.elements) orbit.insert(G.mul(G.mul(h, x), l));
        total += static_cast<long long>(orbit.size());
        Subgroup I = intersect(H, conjugate_subgroup(G, x, L));
        if (static_cast<long long>(orbit.size()) * I.order() !=
            static_cast<long long>(H.order()) * L.order())
          dc_ok = false;
      }
      if (total != G.order()) dc_ok = false;
      ++dc_pairs;
    }
  s.check("group_core.double_coset_partition", dc_ok,
          num(dc_pairs) + " subgroup class pairs");

  bool cover_ok = true;
  size_t covered = 0;
  for (int c = 0; c < ctx.num_classes(); ++c) {
    const SubgroupClass& cls = ctx.classes()[c];
    covered += cls.members.size();
    if (static_cast<int>(cls.members.size()) * ctx.normalizer_of_rep(c).order() !=
        G.order())
      cover_ok = false;
    for (const Subgroup& m : cls.members) {
      Elt a = ctx.conjugator_to_rep(m.elements);
      if (!(conjugate_subgroup(G, a, m) == cls.rep)) cover_ok = false;
    }
  }
  if (covered != ctx.subgroups().size()) cover_ok = false;
  s.check("group_core.subgroup_class_cover", cover_ok,
          num(static_cast<long long>(covered)) + " subgroups in " +
              num(ctx.num_classes()) + " classes");
}

// ---------------------------------------------------------------------- gset

void suite_gset(const GroupCtx& ctx, const VerifyOptions& opts, Suite& s) {
  if (ctx.order() > opts.max_order) {
    s.skipped("gset.star_composition_identity", "order above cap");
    s.skipped("gset.twist_antihomomorphism", "order above cap");
    s.skipped("gset.pullback_universal_property", "order above cap");
    return;
  }
  GSet gc = conjugation_gset(ctx);
  std::vector<GSet> reps;
  for (int c = 0; c < ctx.num_classes(); ++c) reps.push_back(transitive_gset(ctx, ctx.rep(c)));

  bool star_ok = true;
  long long star_checked = 0;
  for (const GSet& Z : reps)
    for (const GSet& Y : reps)
      for (const GSet& X : reps) {
        auto us = maps_between(Z, gc);
        auto fs = maps_between(Z, Y);
        auto vs = maps_between(Y, gc);
        auto gs = maps_between(Y, X);
        size_t combos = us.size() * fs.size() * vs.size() * gs.size();
        size_t step = stride_for(combos, 1000);
        size_t idx = 0;
        for (const GMap& u : us)
          for (const GMap& f : fs)
            for (const GMap& v : vs)
              for (const GMap& g : gs) {
                if (idx++ % step != 0) continue;
                GMap lhs = compose_maps(star(v, g), star(u, f));
                GMap rhs = star(twist_product(u, compose_maps(v, f)),
                                compose_maps(g, f));
                if (lhs != rhs) star_ok = false;
                ++star_checked;
              }
      }
  s.check("gset.star_composition_identity", star_ok,
          num(star_checked) + " twisted composites");

  bool anti_ok = true;
  long long anti_checked = 0;
  for (const GSet& X : reps) {
    auto us = maps_between(X, gc);
    for (const GMap& u : us)
      for (const GMap& v : us) {
        GMap lhs = compose_maps(star(u, identity_map(X)), star(v, identity_map(X)));
        GMap rhs = star(twist_product(v, u), identity_map(X));
        if (lhs != rhs) anti_ok = false;
        ++anti_checked;
      }
  }
  s.check("gset.twist_antihomomorphism", anti_ok, num(anti_checked) + " pairs");

  bool pb_ok = true;
  long long cones = 0;
  for (const GSet& X : reps)
    for (const GSet& Y : reps)
      for (const GSet& Z : reps) {
        if (X.size() * Y.size() > 36) continue;
        auto as = maps_between(X, Z);
        auto bs = maps_between(Y, Z);
        size_t step = stride_for(as.size() * bs.size(), 60);
        size_t idx = 0;
        for (const GMap& a : as)
          for (const GMap& b : bs) {
            if (idx++ % step != 0) continue;
            PullbackResult pb = pullback(a, b);
            for (const GSet& W : reps) {
              auto hs = maps_between(W, pb.space);
              auto fsw = maps_between(W, X);
              auto gsw = maps_between(W, Y);
              for (const GMap& f : fsw)
                for (const GMap& g : gsw) {
                  if (compose_maps(a, f) != compose_maps(b, g)) continue;
                  int found = 0;
                  for (const GMap& h : hs)
                    if (compose_maps(pb.p, h) == f && compose_maps(pb.q, h) == g)
                      ++found;
                  if (found != 1) pb_ok = false;
                  ++cones;
                }
            }
          }
      }
  s.check("gset.pullback_universal_property", pb_ok,
          num(cones) + " cones factor uniquely");
}

// ------------------------------------------------------------------ zlattice

void suite_zlattice(const GroupCtx&, const VerifyOptions& opts, Suite& s) {
  std::mt19937_64 rng(opts.seed);
  auto rnd_int = [&rng](int lo, int hi) {
    return static_cast<int>(lo + rng() % static_cast<unsigned long long>(hi - lo + 1));
  };

  bool snf_ok = true;
  for (int trial = 0; trial < 40 && snf_ok; ++trial) {
    Index r = rnd_int(0, 6), c = rnd_int(0, 6);
    IntMatrix M(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) M(i, j) = rnd_int(-9, 9);
    SNFResult f = snf(M);
    if (!mat_equal(f.U * M * f.V, f.D)) snf_ok = false;
    if (!mat_is_identity(f.U * f.Uinv)) snf_ok = false;
    if (!is_unimodular(f.U) || !is_unimodular(f.V)) snf_ok = false;
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j)
        if (i != j && f.D(i, j) != 0) snf_ok = false;
    Index mn = std::min(r, c);
    for (Index i = 0; i < mn; ++i) {
      if (f.D(i, i) < 0) snf_ok = false;
      if (i + 1 < mn && f.D(i + 1, i + 1) != 0 && f.D(i, i) == 0) snf_ok = false;
      if (i + 1 < mn && f.D(i, i) != 0 && f.D(i + 1, i + 1) % f.D(i, i) != 0)
        snf_ok = false;
    }
  }
  s.check("zlattice.snf_properties", snf_ok,
          "40 random matrices: factorization, unimodularity, divisibility");

  bool q_ok = true;
  for (int trial = 0; trial < 25 && q_ok; ++trial) {
    Index n = rnd_int(1, 5), m = rnd_int(0, 5);
    IntMatrix gens(n, m);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < m; ++j) gens(i, j) = rnd_int(-6, 6);
    QuotientPresentation q1 = quotient_by_columns(n, gens);

    // The presentation only depends on the column lattice.
    IntMatrix mixed(n, m + 2);
    mixed.leftCols(m) = gens;
    IntVector extra = IntVector::Zero(n), extra2 = IntVector::Zero(n);
    for (Index j = 0; j < m; ++j) {
      extra += Int(rnd_int(-3, 3)) * gens.col(j);
      extra2 += Int(rnd_int(-3, 3)) * gens.col(j);
    }
    mixed.col(m) = extra;
    mixed.col(m + 1) = extra2;
    for (Index j = 0; j < m; ++j)
      if (rnd_int(0, 1)) mixed.col(j) = -mixed.col(j);
    QuotientPresentation q2 = quotient_by_columns(n, mixed);
    if (q1.free_rank != q2.free_rank || q1.torsion != q2.torsion) q_ok = false;

    LatticeMembership lat(n, gens);
    IntVector combo = IntVector::Zero(n);
    for (Index j = 0; j < m; ++j) combo += Int(rnd_int(-4, 4)) * gens.col(j);
    if (!lat.contains(combo)) q_ok = false;
    for (Index j = 0; j < q1.free_rank; ++j)
      if (lat.contains(IntVector(q1.section.col(j)))) q_ok = false;
    if (q1.free_rank > 0 &&
        !mat_is_identity(q1.free_projection * q1.section))
      q_ok = false;
  }
  s.check("zlattice.quotient_presentation", q_ok,
          "25 random lattices: column invariance, membership, section");
}

// ------------------------------------------------------------------ span_cat

void suite_span_cat(const GroupCtx& ctx, const VerifyOptions& opts, Suite& s) {
  if (ctx.order() > opts.max_order) {
    s.skipped("span_cat.rank_by_counting", "order above cap");
    s.skipped("span_cat.point_endomorphisms", "order above cap");
    s.skipped("span_cat.associativity", "order above cap");
    s.skipped("span_cat.union_additivity", "order above cap");
    return;
  }
  std::vector<GSet> reps;
  for (int c = 0; c < ctx.num_classes(); ++c) reps.push_back(transitive_gset(ctx, ctx.rep(c)));
  GSet pt = point_gset(ctx);

  bool rank_ok = hom_basis(ctx, pt, pt).size() == static_cast<size_t>(ctx.num_classes());
  long long rank_pairs = 0;
  for (const GSet& X : reps)
    for (const GSet& Y : reps) {
      if (static_cast<long long>(hom_basis(ctx, X, Y).size()) !=
          hom_rank_by_counting(ctx, X, Y))
        rank_ok = false;
      ++rank_pairs;
    }
  s.check("span_cat.rank_by_counting", rank_ok,
          num(rank_pairs) + " Hom modules against the counting lemma");

  // End(pt) composition is multiplication of G-sets.
  bool pt_ok = true;
  for (int hc = 0; hc < ctx.num_classes(); ++hc)
    for (int kc = 0; kc < ctx.num_classes(); ++kc) {
      BurnsideElement bh(pt, pt), bk(pt, pt);
      bh.add(SpanKey{hc, 0, 0}, 1);
      bk.add(SpanKey{kc, 0, 0}, 1);
      BurnsideElement prod = compose(bh, bk);
      BurnsideElement expect(pt, pt);
      for (const Orbit& o : product_gset(reps[hc], reps[kc]).orbits())
        expect.add(SpanKey{o.stabilizer.class_id, 0, 0}, 1);
      if (!(prod == expect)) pt_ok = false;
    }
  s.check("span_cat.point_endomorphisms", pt_ok,
          "pullback composition matches orbit decomposition of products");

  bool assoc_ok = true;
  long long triples = 0;
  for (const GSet& X : reps)
    for (const GSet& Y : reps)
      for (const GSet& Z : reps)
        for (const GSet& W : reps) {
          if (X.size() + Y.size() + Z.size() + W.size() > 12) continue;
          auto h1 = hom_basis(ctx, X, Y);
          auto h2 = hom_basis(ctx, Y, Z);
          auto h3 = hom_basis(ctx, Z, W);
          size_t step = stride_for(h1.size() * h2.size() * h3.size(), 200);
          size_t idx = 0;
          for (const SpanClass& f1 : h1)
            for (const SpanClass& f2 : h2)
              for (const SpanClass& f3 : h3) {
                if (idx++ % step != 0) continue;
                BurnsideElement b1 = basis_element(f1), b2 = basis_element(f2),
                                b3 = basis_element(f3);
                if (!(compose(compose(b3, b2), b1) == compose(b3, compose(b2, b1))))
                  assoc_ok = false;
                ++triples;
              }
        }
  s.check("span_cat.associativity", assoc_ok, num(triples) + " basis triples");

  bool add_ok = true;
  for (size_t i = 0; i + 1 < reps.size(); ++i) {
    UnionResult u = disjoint_union(reps[i], reps[i + 1]);
    BurnsideElement idu = identity_element(u.space);
    BurnsideElement parts = span_decompose(u.into_left, u.into_left);
    parts += span_decompose(u.into_right, u.into_right);
    if (!(idu == parts)) add_ok = false;
    for (const GSet& Z : reps)
      if (hom_basis(ctx, u.space, Z).size() !=
          hom_basis(ctx, reps[i], Z).size() + hom_basis(ctx, reps[i + 1], Z).size())
        add_ok = false;
  }
  s.check("span_cat.union_additivity", add_ok,
          "identity and Hom ranks split over disjoint unions");
}

// ----------------------------------------------------------------- fused_cat

void suite_fused_cat(const GroupCtx& ctx, const VerifyOptions& opts, Suite& s) {
  if (ctx.order() > opts.max_order) {
    s.skipped("fused_cat.fused_equal_agreement", "order above cap");
    s.skipped("fused_cat.fused_equal_congruence", "order above cap");
    s.skipped("fused_cat.leg_twist_symmetry", "order above cap");
    s.skipped("fused_cat.quotient_rank", "order above cap");
    s.skipped("fused_cat.weak_pullback_invariance", "order above cap");
    s.skipped("fused_cat.identity_detection", "order above cap");
    return;
  }
  GSet gc = conjugation_gset(ctx);
  std::vector<GSet> reps;
  for (int c = 0; c < ctx.num_classes(); ++c) reps.push_back(transitive_gset(ctx, ctx.rep(c)));

  bool eq_ok = true;
  long long eq_pairs = 0;
  for (const GSet& Z : reps)
    for (const GSet& Y : reps) {
      auto ms = maps_between(Z, Y);
      if (ms.size() > 24) ms.erase(ms.begin() + 24, ms.end());
      size_t lat_step = stride_for(ms.size() * ms.size(), 30);
      size_t lat_idx = 0;
      for (const GMap& a : ms) {
        if (!fused_equal(a, a)) eq_ok = false;
        for (const GMap& b : ms) {
          bool e1 = fused_equal(a, b);
          if (e1 != fused_equal_via_path_object(a, b)) eq_ok = false;
          if (lat_idx++ % lat_step == 0 && e1 != fused_equal_via_lattice(a, b))
            eq_ok = false;
          if (e1 != fused_equal(b, a)) eq_ok = false;
          if (e1)
            for (const GMap& c : ms)
              if (fused_equal(b, c) && !fused_equal(a, c)) eq_ok = false;
          ++eq_pairs;
        }
      }
    }
  s.check("fused_cat.fused_equal_agreement", eq_ok,
          num(eq_pairs) + " pairs, three decision procedures");

  bool cong_ok = true;
  long long cong_checked = 0;
  for (const GSet& Z : reps)
    for (const GSet& Y : reps) {
      auto ms = maps_between(Z, Y);
      if (ms.size() > 12) ms.erase(ms.begin() + 12, ms.end());
      for (const GMap& a : ms)
        for (const GMap& b : ms) {
          if (!fused_equal(a, b)) continue;
          for (const GSet& X : reps) {
            auto ws = maps_between(Y, X);
            if (ws.size() > 8) ws.erase(ws.begin() + 8, ws.end());
            for (const GMap& w : ws)
              if (!fused_equal(compose_maps(w, a), compose_maps(w, b))) cong_ok = false;
            auto vs = maps_between(X, Z);
            if (vs.size() > 8) vs.erase(vs.begin() + 8, vs.end());
            for (const GMap& v : vs)
              if (!fused_equal(compose_maps(a, v), compose_maps(b, v))) cong_ok = false;
            ++cong_checked;
          }
        }
    }
  s.check("fused_cat.fused_equal_congruence", cong_ok,
          num(cong_checked) + " pre/post composition checks");

  bool twist_ok = true;
  long long twists = 0;
  for (const GSet& Z : reps)
    for (const GSet& X : reps)
      for (const GSet& Y : reps) {
        auto as = maps_between(Z, X);
        auto bs = maps_between(Z, Y);
        auto us = maps_between(Z, gc);
        size_t step = stride_for(as.size() * bs.size() * us.size(), 400);
        size_t idx = 0;
        for (const GMap& a : as)
          for (const GMap& b : bs)
            for (const GMap& u : us) {
              if (idx++ % step != 0) continue;
              BurnsideElement base = fuse_element(span_decompose(a, b));
              if (!(fuse_element(span_decompose(star(u, a), b)) == base))
                twist_ok = false;
              if (!(fuse_element(span_decompose(a, star(u, b))) == base))
                twist_ok = false;
              ++twists;
            }
      }
  s.check("fused_cat.leg_twist_symmetry", twist_ok,
          num(twists) + " spans against twists of either leg");

  bool rank_ok = true;
  long long rank_pairs = 0;
  for (const GSet& X : reps)
    for (const GSet& Y : reps) {
      FusedHom fh = fused_hom(ctx, X, Y);  // throws on rank/torsion failure
      for (size_t i = 0; i < fh.unfused_basis.size(); ++i) {
        SpanKey f = fh.basis[fh.fuse_map[i]].key;
        if (fuse_key(ctx, f, Y, X) != f) rank_ok = false;
      }
      ++rank_pairs;
    }
  s.check("fused_cat.quotient_rank", rank_ok,
          num(rank_pairs) + " Hom modules: torsion free, idempotent collapse");

  bool wpb_ok = true;
  long long wpb_checked = 0;
  for (const GSet& X : reps)
    for (const GSet& Y : reps)
      for (const GSet& Z : reps) {
        auto as = maps_between(X, Z);
        auto bs = maps_between(Y, Z);
        auto vs = maps_between(X, gc);
        auto ws = maps_between(Y, gc);
        size_t step = stride_for(as.size() * bs.size() * vs.size() * ws.size(), 120);
        size_t idx = 0;
        for (const GMap& a : as)
          for (const GMap& b : bs)
            for (const GMap& v : vs)
              for (const GMap& w : ws) {
                if (idx++ % step != 0) continue;
                PullbackResult P = weak_pullback(a, b);
                PullbackResult Pp = weak_pullback(star(v, a), star(w, b));
                std::vector<int> im(Pp.points.size());
                for (size_t i = 0; i < Pp.points.size(); ++i) {
                  auto [x, y] = Pp.points[i];
                  im[i] = P.index_of(X.act(v(x), x), Y.act(w(y), y));
                }
                GMap f(Pp.space, P.space, std::move(im));
                if (!is_bijective(f)) wpb_ok = false;
                if (!fused_equal(compose_maps(P.p, f), Pp.p)) wpb_ok = false;
                if (!fused_equal(compose_maps(P.q, f), Pp.q)) wpb_ok = false;
                ++wpb_checked;
              }
      }
  s.check("fused_cat.weak_pullback_invariance", wpb_ok,
          num(wpb_checked) + " lifted pullbacks compare isomorphic");

  bool id_ok = true;
  long long id_checked = 0;
  for (const GSet& X : reps) {
    BurnsideElement fid = fuse_element(identity_element(X));
    for (const GMap& a : maps_between(X, X)) {
      bool as_elt = fuse_element(span_decompose(identity_map(X), a)) == fid;
      if (as_elt != fused_equal(identity_map(X), a)) id_ok = false;
      ++id_checked;
    }
  }
  s.check("fused_cat.identity_detection", id_ok,
          num(id_checked) + " graph spans equal the fused identity iff twisted identity");
}

// ------------------------------------------------------------ mackey_algebra

void suite_mackey_algebra(const GroupCtx& ctx, const VerifyOptions& opts, Suite& s) {
  if (ctx.order() > opts.max_order) {
    s.skipped("mackey_algebra.rank_agreement", "order above cap");
    s.skipped("mackey_algebra.identity", "order above cap");
    s.skipped("mackey_algebra.associativity", "order above cap");
    s.skipped("mackey_algebra.double_coset_formula", "order above cap");
    s.skipped("mackey_algebra.transpose_antiautomorphism", "order above cap");
    return;
  }
  OmegaCtx oc(ctx);
  AlgebraData A = build_algebra(ctx);

  bool rank_ok =
      static_cast<long long>(A.rank()) == hom_rank_by_counting(ctx, oc.omega, oc.omega) &&
      A.basis.size() == hom_basis(ctx, oc.omega, oc.omega).size();
  s.check("mackey_algebra.rank_agreement", rank_ok,
          "tuple count = span basis = counting lemma (" + num(A.rank()) + ")");

  bool id_ok = true;
  AlgebraElement one = algebra_identity(A);
  for (int i = 0; i < A.rank(); ++i) {
    AlgebraElement b{{i, 1}};
    if (algebra_product(A, one, b) != b || algebra_product(A, b, one) != b) id_ok = false;
  }
  s.check("mackey_algebra.identity", id_ok, "component identities sum to 1");

  bool assoc_ok = true;
  long long assoc_checked = 0;
  {
    long long budget = 2000000;
    long long all = static_cast<long long>(A.rank()) * A.rank() * A.rank();
    size_t step = stride_for(static_cast<size_t>(all), static_cast<size_t>(budget));
    size_t idx = 0;
    for (int i = 0; i < A.rank(); ++i)
      for (int j = 0; j < A.rank(); ++j) {
        if (A.basis[i].L_class != A.basis[j].H_class) {
          idx += A.rank();
          continue;
        }
        for (int k = 0; k < A.rank(); ++k) {
          if (idx++ % step != 0) continue;
          if (A.basis[j].L_class != A.basis[k].H_class) continue;
          AlgebraElement bi{{i, 1}}, bj{{j, 1}}, bk{{k, 1}};
          if (algebra_product(A, algebra_product(A, bi, bj), bk) !=
              algebra_product(A, bi, algebra_product(A, bj, bk)))
            assoc_ok = false;
          ++assoc_checked;
        }
      }
  }
  s.check("mackey_algebra.associativity", assoc_ok, num(assoc_checked) + " basis triples");

  bool rt_ok = true;
  long long rt_checked = 0;
  for (int hc = 0; hc < ctx.num_classes(); ++hc) {
    const Subgroup& H = ctx.rep(hc);
    for (const Subgroup& J : ctx.subgroups()) {
      if (!std::includes(H.elements.begin(), H.elements.end(), J.elements.begin(),
                         J.elements.end()))
        continue;
      for (const Subgroup& K : ctx.subgroups()) {
        if (!std::includes(H.elements.begin(), H.elements.end(), K.elements.begin(),
                           K.elements.end()))
          continue;
        TWIndex r = tw_restriction(oc, hc, J);
        TWIndex t = tw_transfer(oc, hc, K);
        AlgebraElement engine = algebra_product(A, AlgebraElement{{A.index_of.at(r), 1}},
                                                AlgebraElement{{A.index_of.at(t), 1}});
        AlgebraElement formula;
        for (const auto& [tup, c] : mackey_formula_product(oc, r, t))
          formula[A.index_of.at(tup)] += c;
        if (engine != formula) rt_ok = false;
        ++rt_checked;
      }
    }
  }
  s.check("mackey_algebra.double_coset_formula", rt_ok,
          num(rt_checked) + " restriction/transfer products");

  bool tr_ok = true;
  long long tr_checked = 0;
  {
    std::vector<int> tr(A.rank());
    for (int i = 0; i < A.rank(); ++i) {
      TWIndex t = transpose_tuple(oc, A.basis[i]);
      tr[i] = A.index_of.at(t);
      if (transpose_tuple(oc, t) != A.basis[i]) tr_ok = false;
    }
    size_t step = stride_for(static_cast<size_t>(A.rank()) * A.rank(), 200000);
    size_t idx = 0;
    for (int i = 0; i < A.rank(); ++i)
      for (int j = 0; j < A.rank(); ++j) {
        if (idx++ % step != 0) continue;
        AlgebraElement lhs0 = algebra_product(A, AlgebraElement{{i, 1}},
                                              AlgebraElement{{j, 1}});
        AlgebraElement lhs;
        for (const auto& [k, c] : lhs0) lhs[tr[k]] += c;
        AlgebraElement rhs = algebra_product(A, AlgebraElement{{tr[j], 1}},
                                             AlgebraElement{{tr[i], 1}});
        if (lhs != rhs) tr_ok = false;
        ++tr_checked;
      }
  }
  s.check("mackey_algebra.transpose_antiautomorphism", tr_ok,
          num(tr_checked) + " products transposed");
}

// ------------------------------------------------------------- fused_algebra

void suite_fused_algebra(const GroupCtx& ctx, const VerifyOptions& opts, Suite& s) {
  if (ctx.order() > opts.max_order) {
    s.skipped("fused_algebra.rank_agreement", "order above cap");
    s.skipped("fused_algebra.quotient_ring_hom", "order above cap");
    s.skipped("fused_algebra.associativity", "order above cap");
    return;
  }
  OmegaCtx oc(ctx);
  AlgebraData A = build_algebra(ctx);
  AlgebraData F = build_fused_algebra(ctx, A);

  FusedHom fh = fused_hom(ctx, oc.omega, oc.omega);
  auto pairs = fusion_kernel_pairs(ctx, A);
  bool rank_ok = fh.basis.size() == F.basis.size() &&
                 F.rank() + static_cast<int>(pairs.size()) == A.rank();
  for (const TWIndex& t : F.basis)
    if (fuse_tuple(ctx, t) != t) rank_ok = false;
  s.check("fused_algebra.rank_agreement", rank_ok,
          "fused tuples = fused span classes (" + num(F.rank()) + "), kernel " +
              num(static_cast<long long>(pairs.size())));

  bool hom_ok = true;
  long long hom_checked = 0;
  for (int i = 0; i < A.rank(); ++i)
    for (int j = 0; j < A.rank(); ++j) {
      AlgebraElement pij = quotient_hom(F, algebra_product(A, AlgebraElement{{i, 1}},
                                                           AlgebraElement{{j, 1}}));
      AlgebraElement pipj =
          algebra_product(F, quotient_hom(F, AlgebraElement{{i, 1}}),
                          quotient_hom(F, AlgebraElement{{j, 1}}));
      if (pij != pipj) hom_ok = false;
      ++hom_checked;
    }
  if (quotient_hom(F, algebra_identity(A)) != algebra_identity(F)) hom_ok = false;
  s.check("fused_algebra.quotient_ring_hom", hom_ok,
          num(hom_checked) + " products through the projection");

  bool assoc_ok = true;
  long long assoc_checked = 0;
  {
    long long all = static_cast<long long>(F.rank()) * F.rank() * F.rank();
    size_t step = stride_for(static_cast<size_t>(all), 2000000);
    size_t idx = 0;
    for (int i = 0; i < F.rank(); ++i)
      for (int j = 0; j < F.rank(); ++j)
        for (int k = 0; k < F.rank(); ++k) {
          if (idx++ % step != 0) continue;
          AlgebraElement bi{{i, 1}}, bj{{j, 1}}, bk{{k, 1}};
          if (algebra_product(F, algebra_product(F, bi, bj), bk) !=
              algebra_product(F, bi, algebra_product(F, bj, bk)))
            assoc_ok = false;
          ++assoc_checked;
        }
  }
  s.check("fused_algebra.associativity", assoc_ok, num(assoc_checked) + " basis triples");
}

// ------------------------------------------------------------ mackey_functor

// Sampled version of respects_structure for larger algebras: the pair budget
// shrinks with the cube of the block size so the work stays bounded.
bool respects_structure_sampled(const MackeyModule& M) {
  const AlgebraData& mu = *M.mu;
  IntMatrix id_sum = IntMatrix::Zero(M.total_rank, M.total_rank);
  for (int idx : mu.component_identity) id_sum += M.action[idx];
  if (!mat_is_identity(id_sum)) return false;
  long long tr = std::max<long long>(1, M.total_rank);
  size_t cap = static_cast<size_t>(
      std::clamp<long long>(40000000 / (tr * tr * tr), 200, 20000));
  size_t n = static_cast<size_t>(mu.rank());
  size_t step = stride_for(n * n, cap);
  size_t idx = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (idx++ % step != 0) continue;
      IntMatrix lhs = M.action[i] * M.action[j];
      IntMatrix rhs = IntMatrix::Zero(M.total_rank, M.total_rank);
      for (const auto& [k, c] : mu.mult[i][j]) rhs += Int(static_cast<long>(c)) * M.action[k];
      if (!mat_equal(lhs, rhs)) return false;
    }
  return true;
}

void suite_mackey_functor(const GroupCtx& ctx, const VerifyOptions& opts, Suite& s) {
  if (ctx.order() > opts.max_order) {
    s.skipped("mackey_functor.represented_respects_structure", "order above cap");
    s.skipped("mackey_functor.fusion_idempotent", "order above cap");
    s.skipped("mackey_functor.fusion_projection_is_module_map", "order above cap");
    s.skipped("mackey_functor.fused_representables_identified", "order above cap");
    s.skipped("mackey_functor.fused_iff_kernel_acts_zero", "order above cap");
    return;
  }
  AlgebraData mu = build_algebra(ctx);
  auto pairs = fusion_kernel_pairs(ctx, mu);

  bool rs_ok = true, idem_ok = true, proj_ok = true, ident_ok = true, iff_ok = true;
  long long modules = 0, identified = 0;
  std::string ident_detail;
  for (int c = 0; c < ctx.num_classes(); ++c) {
    GSet X = transitive_gset(ctx, ctx.rep(c));
    MackeyModule M = yoneda_module(ctx, mu, X);
    ++modules;

    if (!respects_structure_sampled(M)) rs_ok = false;

    MackeyModule F = fuse_module(M);
    MackeyModule FF = fuse_module(F);
    if (!is_fused(F)) idem_ok = false;
    if (FF.total_rank != F.total_rank || FF.component_range != F.component_range)
      idem_ok = false;
    for (size_t t = 0; t < mu.basis.size(); ++t)
      if (!mat_equal(FF.action[t], F.action[t])) idem_ok = false;
    if (!mat_is_identity(FF.fusion_projection)) idem_ok = false;

    for (size_t t = 0; t < mu.basis.size(); ++t)
      if (!mat_equal(F.fusion_projection * M.action[t],
                     F.action[t] * F.fusion_projection))
        proj_ok = false;

    if (M.total_rank <= 64) {
      std::string d;
      if (!fused_yoneda_identified(ctx, mu, X, &d)) {
        ident_ok = false;
        ident_detail = d;
      }
      ++identified;
    }

    bool kernel_zero = true;
    for (const auto& [i, j] : pairs)
      if (!mat_equal(M.action[i], M.action[j])) kernel_zero = false;
    bool unchanged = F.total_rank == M.total_rank;
    if (is_fused(M) != kernel_zero || is_fused(M) != unchanged) iff_ok = false;
  }
  s.check("mackey_functor.represented_respects_structure", rs_ok,
          num(modules) + " represented modules");
  s.check("mackey_functor.fusion_idempotent", idem_ok,
          "fuse(fuse(M)) = fuse(M), and fused modules pass is_fused");
  s.check("mackey_functor.fusion_projection_is_module_map", proj_ok,
          "P A_t = B_t P for all tuples");
  s.check("mackey_functor.fused_representables_identified", ident_ok,
          ident_ok ? num(identified) + " of " + num(modules) + " represented modules"
                   : ident_detail);
  s.check("mackey_functor.fused_iff_kernel_acts_zero", iff_ok,
          "is_fused = kernel differences vanish = fusion changes nothing");
}

}  // namespace

long long hom_rank_by_counting(const GroupCtx& ctx, const GSet& X, const GSet& Y) {
  long long total = 0;
  for (int c = 0; c < ctx.num_classes(); ++c) {
    const Subgroup& S = ctx.rep(c);
    const Subgroup& N = ctx.normalizer_of_rep(c);
    std::vector<int> fy = fixed_points(Y, S), fx = fixed_points(X, S);
    long long fixed_sum = 0;
    for (Elt n : N.elements) {
      long long cy = 0, cx = 0;
      for (int y : fy)
        if (Y.act(n, y) == y) ++cy;
      for (int x : fx)
        if (X.act(n, x) == x) ++cx;
      fixed_sum += cy * cx;
    }
    if (fixed_sum % N.order() != 0)
      throw std::logic_error("counting lemma gave a non-integer orbit count");
    total += fixed_sum / N.order();
  }
  return total;
}

bool fused_yoneda_identified(const GroupCtx& ctx, const AlgebraData& mu, const GSet& X,
                             std::string* detail) {
  auto fail = [&](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };
  MackeyModule M = yoneda_module(ctx, mu, X);
  MackeyModule F = fuse_module(M);
  MackeyModule N = fused_yoneda_module(ctx, mu, X);
  if (!F.has_actions) return fail("fusion produced torsion");
  if (F.total_rank != N.total_rank || F.component_range != N.component_range)
    return fail("component ranks differ");

  // Q collapses each basis class onto its fused class; sigma embeds the fused
  // basis as the subset of unfused classes that are already canonical.
  std::map<SpanKey, Index> m_row, n_row;
  for (size_t i = 0; i < M.basis_keys.size(); ++i) m_row[M.basis_keys[i]] = static_cast<Index>(i);
  for (size_t i = 0; i < N.basis_keys.size(); ++i) n_row[N.basis_keys[i]] = static_cast<Index>(i);
  OmegaCtx oc(ctx);
  IntMatrix Q = IntMatrix::Zero(N.total_rank, M.total_rank);
  for (size_t j = 0; j < M.basis_keys.size(); ++j) {
    SpanKey f = fuse_key(ctx, M.basis_keys[j], oc.omega, X);
    auto it = n_row.find(f);
    if (it == n_row.end()) return fail("collapsed class missing from fused basis");
    Q(it->second, static_cast<Index>(j)) = 1;
  }
  IntMatrix sigma = IntMatrix::Zero(M.total_rank, N.total_rank);
  for (size_t i = 0; i < N.basis_keys.size(); ++i) {
    auto it = m_row.find(N.basis_keys[i]);
    if (it == m_row.end()) return fail("fused class is not an unfused class");
    sigma(it->second, static_cast<Index>(i)) = 1;
  }

  IntMatrix W = F.fusion_projection * sigma;  // F.total_rank x N.total_rank
  if (!mat_equal(W * Q, F.fusion_projection)) return fail("W Q != P");
  if (!is_unimodular(W)) return fail("the change of basis is not unimodular");
  for (size_t t = 0; t < mu.basis.size(); ++t)
    if (!mat_equal(F.action[t] * W, W * N.action[t]))
      return fail("actions do not intertwine");
  if (detail) *detail = "rank " + num(F.total_rank) + ", unimodular identification";
  return true;
}

std::vector<std::string> suite_names() {
  return {"group_core", "gset",          "zlattice",       "span_cat",
          "fused_cat",  "mackey_algebra", "fused_algebra", "mackey_functor"};
}

std::vector<CheckResult> run_suite(const GroupCtx& ctx, const std::string& suite,
                                   const VerifyOptions& opts) {
  Suite s;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "group_core") suite_group_core(ctx, opts, s), known = true;
  if (all || suite == "gset") suite_gset(ctx, opts, s), known = true;
  if (all || suite == "zlattice") suite_zlattice(ctx, opts, s), known = true;
  if (all || suite == "span_cat") suite_span_cat(ctx, opts, s), known = true;
  if (all || suite == "fused_cat") suite_fused_cat(ctx, opts, s), known = true;
  if (all || suite == "mackey_algebra") suite_mackey_algebra(ctx, opts, s), known = true;
  if (all || suite == "fused_algebra") suite_fused_algebra(ctx, opts, s), known = true;
  if (all || suite == "mackey_functor") suite_mackey_functor(ctx, opts, s), known = true;
  if (!known) throw std::invalid_argument("unknown verification suite: " + suite);
  return std::move(s.out);
}

}  // namespace mackey
