#include "mackey/fused_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mackey {

TWIndex fuse_tuple(const GroupCtx& ctx, const TWIndex& t) {
  const FiniteGroup& G = ctx.group();
  const Subgroup& H = ctx.rep(t.H_class);
  const Subgroup& L = ctx.rep(t.L_class);
  Subgroup C = ctx.centralizer(Subgroup{t.K, -1});

  bool first = true;
  Elt bg = 0;
  std::vector<Elt> bK;
  for (Elt h : H.elements) {
    std::vector<Elt> Kc;
    Kc.reserve(t.K.size());
    for (Elt k : t.K) Kc.push_back(G.conj(h, k));
    std::sort(Kc.begin(), Kc.end());
    for (Elt x : C.elements) {
      Elt hxg = G.mul(G.mul(h, x), t.g);
      for (Elt l : L.elements) {
        Elt cand = G.mul(hxg, l);
        if (first || cand < bg || (cand == bg && Kc < bK)) {
          bg = cand;
          bK = Kc;
          first = false;
        }
      }
    }
  }
  return TWIndex{t.H_class, t.L_class, bg, std::move(bK)};
}

std::vector<TWIndex> fused_tw_basis(const GroupCtx& ctx) {
  std::set<TWIndex> out;
  for (const TWIndex& t : tw_basis(ctx)) out.insert(fuse_tuple(ctx, t));
  return std::vector<TWIndex>(out.begin(), out.end());
}

AlgebraData build_fused_algebra(const GroupCtx& ctx, const AlgebraData& mu) {
  AlgebraData F;
  F.ctx = &ctx;
  F.fused = true;
  F.basis = fused_tw_basis(ctx);
  for (size_t i = 0; i < F.basis.size(); ++i)
    F.index_of[F.basis[i]] = static_cast<int>(i);

  F.unfused_to_fused.resize(mu.basis.size());
  std::vector<int> lift(F.basis.size());  // fused index -> unfused index
  for (size_t i = 0; i < mu.basis.size(); ++i) {
    auto it = F.index_of.find(fuse_tuple(ctx, mu.basis[i]));
    if (it == F.index_of.end())
      throw std::logic_error("fused representative missing from fused basis");
    F.unfused_to_fused[i] = it->second;
  }
  for (size_t f = 0; f < F.basis.size(); ++f) {
    // Fused representatives are canonical unfused tuples, so they lift.
    auto it = mu.index_of.find(F.basis[f]);
    if (it == mu.index_of.end())
      throw std::logic_error("fused representative is not an unfused basis tuple");
    lift[f] = it->second;
  }

  const int n = F.rank();
  F.mult.assign(n, std::vector<SparseRow>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (F.basis[i].L_class != F.basis[j].H_class) continue;
      AlgebraElement acc;
      for (const auto& [k, c] : mu.mult[lift[i]][lift[j]]) {
        auto it = acc.try_emplace(F.unfused_to_fused[k], 0).first;
        it->second += c;
        if (it->second == 0) acc.erase(it);
      }
      F.mult[i][j] = SparseRow(acc.begin(), acc.end());
    }

  F.component_identity.resize(ctx.num_classes());
  for (int c = 0; c < ctx.num_classes(); ++c)
    F.component_identity[c] =
        F.unfused_to_fused[mu.component_identity[c]];
  AlgebraElement one = algebra_identity(F);
  for (int i = 0; i < n; ++i) {
    AlgebraElement b{{i, 1}};
    if (algebra_product(F, one, b) != b || algebra_product(F, b, one) != b)
      throw std::logic_error("fused component identities do not sum to an identity");
  }
  return F;
}

AlgebraElement quotient_hom(const AlgebraData& fused, const AlgebraElement& x) {
  if (!fused.fused || fused.unfused_to_fused.empty())
    throw std::invalid_argument("quotient_hom: target is not a fused algebra");
  AlgebraElement out;
  for (const auto& [i, c] : x) {
    auto it = out.try_emplace(fused.unfused_to_fused[i], 0).first;
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
  return out;
}

std::vector<std::pair<int, int>> fusion_kernel_pairs(const GroupCtx& ctx,
                                                     const AlgebraData& mu) {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < mu.basis.size(); ++i) {
    TWIndex f = fuse_tuple(ctx, mu.basis[i]);
    if (f != mu.basis[i]) out.emplace_back(static_cast<int>(i), mu.index_of.at(f));
  }
  return out;
}

}  // namespace mackey
