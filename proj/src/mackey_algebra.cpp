#include "mackey/mackey_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mackey {

TWIndex canonical_tuple(const GroupCtx& ctx, int H_cls, int L_cls, Elt g,
                        std::vector<Elt> K) {
  const FiniteGroup& G = ctx.group();
  const Subgroup& H = ctx.rep(H_cls);
  const Subgroup& L = ctx.rep(L_cls);
  std::sort(K.begin(), K.end());
  for (Elt k : K)
    if (!H.contains(k) || !L.contains(G.conj(G.inv(g), k)))
      throw std::invalid_argument("tuple constraints violated");

  bool first = true;
  Elt bg = 0;
  std::vector<Elt> bK;
  for (Elt h : H.elements) {
    std::vector<Elt> Kc;
    Kc.reserve(K.size());
    for (Elt k : K) Kc.push_back(G.conj(h, k));
    std::sort(Kc.begin(), Kc.end());
    Elt hg = G.mul(h, g);
    for (Elt l : L.elements) {
      Elt cand = G.mul(hg, l);
      if (first || cand < bg || (cand == bg && Kc < bK)) {
        bg = cand;
        bK = Kc;
        first = false;
      }
    }
  }
  return TWIndex{H_cls, L_cls, bg, std::move(bK)};
}

std::vector<TWIndex> tw_basis(const GroupCtx& ctx) {
  const FiniteGroup& G = ctx.group();
  std::set<TWIndex> out;
  for (int hc = 0; hc < ctx.num_classes(); ++hc)
    for (int lc = 0; lc < ctx.num_classes(); ++lc) {
      const Subgroup& H = ctx.rep(hc);
      const Subgroup& L = ctx.rep(lc);
      for (Elt g = 0; g < G.order(); ++g) {
        Subgroup M = intersect(H, conjugate_subgroup(G, g, L));
        for (const Subgroup& K : ctx.subgroups()) {
          if (K.order() > M.order()) break;
          if (!std::includes(M.elements.begin(), M.elements.end(), K.elements.begin(),
                             K.elements.end()))
            continue;
          out.insert(canonical_tuple(ctx, hc, lc, g, K.elements));
        }
      }
    }
  return std::vector<TWIndex>(out.begin(), out.end());
}

SpanClass span_of_tuple(const OmegaCtx& oc, const TWIndex& t) {
  const GroupCtx& ctx = oc.omega.ctx();
  const FiniteGroup& G = ctx.group();
  GSet mid = transitive_gset(ctx, Subgroup{t.K, ctx.class_of(t.K)});
  const GSet& TH = oc.components[t.H_class];
  const GSet& TL = oc.components[t.L_class];
  std::vector<int> imt(mid.size()), ims(mid.size());
  for (int p = 0; p < mid.size(); ++p) {
    Elt w = mid.transporter(p);
    imt[p] = oc.offsets[t.H_class] + TH.act(w, 0);
    ims[p] = oc.offsets[t.L_class] + TL.act(G.mul(w, t.g), 0);
  }
  GMap src_leg(mid, oc.omega, std::move(ims));
  GMap tgt_leg(mid, oc.omega, std::move(imt));
  return canonical_class(ctx, mid, src_leg, tgt_leg);
}

TWIndex tuple_of_span(const OmegaCtx& oc, const SpanClass& s) {
  const GroupCtx& ctx = oc.omega.ctx();
  const FiniteGroup& G = ctx.group();
  if (s.src != oc.omega || s.tgt != oc.omega)
    throw std::invalid_argument("tuple_of_span: span must live over omega");
  int hc = oc.component_of(s.key.tgt_point);
  int lc = oc.component_of(s.key.src_point);
  const GSet& TH = oc.components[hc];
  const GSet& TL = oc.components[lc];
  Elt b = TH.transporter(s.key.tgt_point - oc.offsets[hc]);
  Elt x = G.inv(b);
  std::vector<Elt> K;
  for (Elt e : ctx.rep(s.key.mid_class).elements) K.push_back(G.conj(x, e));
  std::sort(K.begin(), K.end());
  Elt c = TL.transporter(s.key.src_point - oc.offsets[lc]);
  return canonical_tuple(ctx, hc, lc, G.mul(x, c), std::move(K));
}

SpanClass restriction_span(const OmegaCtx& oc, int H_cls, const Subgroup& J) {
  const GroupCtx& ctx = oc.omega.ctx();
  const FiniteGroup& G = ctx.group();
  int jc = ctx.class_of(J.elements);
  Elt aj = ctx.conjugator_to_rep(J.elements);
  GSet mid = transitive_gset(ctx, J);
  const GSet& TH = oc.components[H_cls];
  const GSet& TJ = oc.components[jc];
  std::vector<int> imt(mid.size()), ims(mid.size());
  for (int p = 0; p < mid.size(); ++p) {
    Elt w = mid.transporter(p);
    imt[p] = oc.offsets[jc] + TJ.act(G.mul(w, G.inv(aj)), 0);
    ims[p] = oc.offsets[H_cls] + TH.act(w, 0);
  }
  GMap src_leg(mid, oc.omega, std::move(ims));
  GMap tgt_leg(mid, oc.omega, std::move(imt));
  return canonical_class(ctx, mid, src_leg, tgt_leg);
}

SpanClass transfer_span(const OmegaCtx& oc, int H_cls, const Subgroup& K) {
  const GroupCtx& ctx = oc.omega.ctx();
  const FiniteGroup& G = ctx.group();
  int kc = ctx.class_of(K.elements);
  Elt ak = ctx.conjugator_to_rep(K.elements);
  GSet mid = transitive_gset(ctx, K);
  const GSet& TH = oc.components[H_cls];
  const GSet& TK = oc.components[kc];
  std::vector<int> imt(mid.size()), ims(mid.size());
  for (int p = 0; p < mid.size(); ++p) {
    Elt w = mid.transporter(p);
    imt[p] = oc.offsets[H_cls] + TH.act(w, 0);
    ims[p] = oc.offsets[kc] + TK.act(G.mul(w, G.inv(ak)), 0);
  }
  GMap src_leg(mid, oc.omega, std::move(ims));
  GMap tgt_leg(mid, oc.omega, std::move(imt));
  return canonical_class(ctx, mid, src_leg, tgt_leg);
}

TWIndex tw_restriction(const OmegaCtx& oc, int H_cls, const Subgroup& J) {
  return tuple_of_span(oc, restriction_span(oc, H_cls, J));
}

TWIndex tw_transfer(const OmegaCtx& oc, int H_cls, const Subgroup& K) {
  return tuple_of_span(oc, transfer_span(oc, H_cls, K));
}

namespace {

void validate_subgroup_of_rep(const GroupCtx& ctx, int H_cls, const Subgroup& S,
                              const char* what) {
  const Subgroup& H = ctx.rep(H_cls);
  for (Elt s : S.elements)
    if (!H.contains(s)) throw std::invalid_argument(std::string(what) + ": not a subgroup of the component representative");
}

}  // namespace

AlgebraData build_algebra(const GroupCtx& ctx) {
  OmegaCtx oc(ctx);
  AlgebraData A;
  A.ctx = &ctx;
  A.basis = tw_basis(ctx);
  for (size_t i = 0; i < A.basis.size(); ++i)
    A.index_of[A.basis[i]] = static_cast<int>(i);

  std::vector<SpanClass> spans;
  std::vector<MaterializedSpan> mats;
  spans.reserve(A.basis.size());
  for (const TWIndex& t : A.basis) {
    spans.push_back(span_of_tuple(oc, t));
    mats.push_back(materialize(spans.back()));
  }
  // The two labelings must be mutually inverse bijections.
  {
    std::set<SpanKey> keys;
    for (size_t i = 0; i < A.basis.size(); ++i) {
      keys.insert(spans[i].key);
      if (tuple_of_span(oc, spans[i]) != A.basis[i])
        throw std::logic_error("tuple/span translation mismatch");
    }
    if (keys.size() != A.basis.size() ||
        hom_basis(ctx, oc.omega, oc.omega).size() != A.basis.size())
      throw std::logic_error("tuple basis does not match End(omega) basis");
  }

  const int n = A.rank();
  A.mult.assign(n, std::vector<SparseRow>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (A.basis[i].L_class != A.basis[j].H_class) continue;
      BurnsideElement prod = compose_spans(mats[i], mats[j]);
      SparseRow row;
      for (const auto& [k, c] : prod.terms()) {
        TWIndex t = tuple_of_span(oc, SpanClass{k, oc.omega, oc.omega});
        row.emplace_back(A.index_of.at(t), c);
      }
      std::sort(row.begin(), row.end());
      A.mult[i][j] = std::move(row);
    }

  A.component_identity.resize(ctx.num_classes());
  for (int c = 0; c < ctx.num_classes(); ++c)
    A.component_identity[c] =
        A.index_of.at(canonical_tuple(ctx, c, c, 0, ctx.rep(c).elements));
  AlgebraElement one = algebra_identity(A);
  for (int i = 0; i < n; ++i) {
    AlgebraElement b{{i, 1}};
    if (algebra_product(A, one, b) != b || algebra_product(A, b, one) != b)
      throw std::logic_error("component identities do not sum to an identity");
  }
  return A;
}

AlgebraElement algebra_product(const AlgebraData& A, const AlgebraElement& x,
                               const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y)
      for (const auto& [k, ck] : A.mult[i][j]) {
        auto it = out.try_emplace(k, 0).first;
        it->second += ci * cj * ck;
        if (it->second == 0) out.erase(it);
      }
  return out;
}

AlgebraElement algebra_identity(const AlgebraData& A) {
  AlgebraElement e;
  for (int idx : A.component_identity) e[idx] += 1;
  return e;
}

TWIndex transpose_tuple(const OmegaCtx& oc, const TWIndex& t) {
  return tuple_of_span(oc, transpose_class(span_of_tuple(oc, t)));
}

std::map<TWIndex, long long> mackey_formula_product(const OmegaCtx& oc, int H_cls,
                                                    const Subgroup& J, const Subgroup& K) {
  const GroupCtx& ctx = oc.omega.ctx();
  const FiniteGroup& G = ctx.group();
  validate_subgroup_of_rep(ctx, H_cls, J, "mackey_formula_product: J");
  validate_subgroup_of_rep(ctx, H_cls, K, "mackey_formula_product: K");

  int jc = ctx.class_of(J.elements);
  int kc = ctx.class_of(K.elements);
  Elt aj = ctx.conjugator_to_rep(J.elements);
  Elt ak = ctx.conjugator_to_rep(K.elements);
  const GSet& TJ = oc.components[jc];
  const GSet& TK = oc.components[kc];

  // Double cosets J\H/K, H the component representative.
  std::set<Elt> seen;
  std::map<TWIndex, long long> out;
  for (Elt x : ctx.rep(H_cls).elements) {
    if (seen.count(x)) continue;
    for (Elt j : J.elements)
      for (Elt k : K.elements) seen.insert(G.mul(G.mul(j, x), k));
    Subgroup A = intersect(J, conjugate_subgroup(G, x, K));
    GSet mid = transitive_gset(ctx, A);
    std::vector<int> imt(mid.size()), ims(mid.size());
    for (int p = 0; p < mid.size(); ++p) {
      Elt w = mid.transporter(p);
      imt[p] = oc.offsets[jc] + TJ.act(G.mul(w, G.inv(aj)), 0);
      ims[p] = oc.offsets[kc] + TK.act(G.mul(G.mul(w, x), G.inv(ak)), 0);
    }
    GMap src_leg(mid, oc.omega, std::move(ims));
    GMap tgt_leg(mid, oc.omega, std::move(imt));
    out[tuple_of_span(oc, canonical_class(ctx, mid, src_leg, tgt_leg))] += 1;
  }
  return out;
}

std::map<TWIndex, long long> mackey_formula_product(const OmegaCtx& oc, const TWIndex& r,
                                                    const TWIndex& t) {
  const GroupCtx& ctx = oc.omega.ctx();
  const FiniteGroup& G = ctx.group();
  if (r.L_class != t.H_class)
    throw std::invalid_argument("mackey_formula_product: factors do not meet in a common component");
  int H_cls = r.L_class;
  std::vector<Elt> J_elems;
  for (Elt k : r.K) J_elems.push_back(G.conj(G.inv(r.g), k));
  std::sort(J_elems.begin(), J_elems.end());
  Subgroup J{std::move(J_elems), -1};
  Subgroup K{t.K, -1};
  if (tw_restriction(oc, H_cls, J) != r)
    throw std::invalid_argument("mackey_formula_product: first factor is not a restriction");
  if (tw_transfer(oc, H_cls, K) != t)
    throw std::invalid_argument("mackey_formula_product: second factor is not a transfer");
  return mackey_formula_product(oc, H_cls, J, K);
}

}  // namespace mackey
