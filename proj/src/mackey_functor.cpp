#include "mackey/mackey_functor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mackey/fused_cat.hpp"

namespace mackey {

int MackeyModule::component_of_row(Index r) const {
  for (size_t c = 0; c < component_range.size(); ++c)
    if (r >= component_range[c].first &&
        r < component_range[c].first + component_range[c].second)
      return static_cast<int>(c);
  throw std::invalid_argument("row outside every component");
}

namespace {

// Basis spans of Hom(X, omega) sorted component-major (component of the
// target point, then key), with the resulting component ranges.
struct SortedBasis {
  std::vector<SpanKey> keys;
  std::vector<std::pair<Index, Index>> ranges;
  std::map<SpanKey, int> row_of;
};

SortedBasis sort_component_major(const GroupCtx& ctx, const OmegaCtx& oc,
                                 const std::vector<SpanKey>& keys) {
  SortedBasis out;
  out.keys = keys;
  std::stable_sort(out.keys.begin(), out.keys.end(),
                   [&](const SpanKey& a, const SpanKey& b) {
                     int ca = oc.component_of(a.tgt_point);
                     int cb = oc.component_of(b.tgt_point);
                     if (ca != cb) return ca < cb;
                     return a < b;
                   });
  out.ranges.assign(ctx.num_classes(), {0, 0});
  for (size_t i = 0; i < out.keys.size(); ++i) {
    out.row_of[out.keys[i]] = static_cast<int>(i);
    out.ranges[oc.component_of(out.keys[i].tgt_point)].second += 1;
  }
  Index off = 0;
  for (auto& [o, len] : out.ranges) {
    o = off;
    off += len;
  }
  return out;
}

}  // namespace

MackeyModule yoneda_module(const GroupCtx& ctx, const AlgebraData& mu, const GSet& X) {
  OmegaCtx oc(ctx);
  std::vector<SpanClass> hb = hom_basis(ctx, X, oc.omega);
  std::vector<SpanKey> keys;
  for (const SpanClass& s : hb) keys.push_back(s.key);
  SortedBasis sb = sort_component_major(ctx, oc, keys);

  MackeyModule M;
  M.ctx = &ctx;
  M.mu = &mu;
  M.total_rank = static_cast<Index>(sb.keys.size());
  M.component_range = sb.ranges;
  M.basis_keys = sb.keys;
  M.label = "represented";
  M.component_torsion.assign(ctx.num_classes(), {});

  std::vector<MaterializedSpan> col_mats;
  for (const SpanKey& k : sb.keys)
    col_mats.push_back(materialize(SpanClass{k, X, oc.omega}));
  for (const TWIndex& t : mu.basis) {
    MaterializedSpan mt = materialize(span_of_tuple(oc, t));
    IntMatrix A = IntMatrix::Zero(M.total_rank, M.total_rank);
    for (Index j = 0; j < M.total_rank; ++j) {
      BurnsideElement prod = compose_spans(mt, col_mats[j]);
      for (const auto& [k, c] : prod.terms()) A(sb.row_of.at(k), j) = static_cast<long>(c);
    }
    M.action.push_back(std::move(A));
  }
  return M;
}

MackeyModule zero_module(const GroupCtx& ctx, const AlgebraData& mu) {
  MackeyModule M;
  M.ctx = &ctx;
  M.mu = &mu;
  M.total_rank = 0;
  M.component_range.assign(ctx.num_classes(), {0, 0});
  M.component_torsion.assign(ctx.num_classes(), {});
  M.action.assign(mu.basis.size(), IntMatrix::Zero(0, 0));
  M.label = "zero";
  return M;
}

bool respects_structure(const MackeyModule& M) {
  if (!M.has_actions) return false;
  const AlgebraData& mu = *M.mu;
  const int n = mu.rank();
  // Identity acts as identity.
  IntMatrix id_sum = IntMatrix::Zero(M.total_rank, M.total_rank);
  for (int idx : mu.component_identity) id_sum += M.action[idx];
  if (!mat_is_identity(id_sum)) return false;
  // Blocks: a tuple maps the L component into the H component.
  for (int i = 0; i < n; ++i) {
    auto [ho, hl] = M.component_range[mu.basis[i].H_class];
    auto [lo, ll] = M.component_range[mu.basis[i].L_class];
    for (Index r = 0; r < M.total_rank; ++r)
      for (Index c = 0; c < M.total_rank; ++c) {
        if (M.action[i](r, c) == 0) continue;
        if (r < ho || r >= ho + hl || c < lo || c >= lo + ll) return false;
      }
  }
  // Products match the structure constants.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix lhs = M.action[i] * M.action[j];
      IntMatrix rhs = IntMatrix::Zero(M.total_rank, M.total_rank);
      for (const auto& [k, c] : mu.mult[i][j]) rhs += Int(static_cast<long>(c)) * M.action[k];
      if (!mat_equal(lhs, rhs)) return false;
    }
  return true;
}

MackeyModule fuse_module(const MackeyModule& M) {
  if (!M.has_actions)
    throw std::invalid_argument("fuse_module: module carries no actions");
  const GroupCtx& ctx = *M.ctx;
  const AlgebraData& mu = *M.mu;
  auto pairs = fusion_kernel_pairs(ctx, mu);

  // Collect, per component, the columns of (action(i) - action(j)) restricted
  // to the H block of the pair.
  std::vector<std::set<std::vector<Int>>> seen(ctx.num_classes());
  std::vector<std::vector<IntVector>> gens(ctx.num_classes());
  for (const auto& [i, j] : pairs) {
    int hc = mu.basis[i].H_class;
    auto [ho, hl] = M.component_range[hc];
    IntMatrix D = M.action[i] - M.action[j];
    for (Index r = 0; r < M.total_rank; ++r)
      if (r < ho || r >= ho + hl)
        for (Index c = 0; c < M.total_rank; ++c)
          if (D(r, c) != 0)
            throw std::logic_error("kernel difference leaves its component block");
    for (Index c = 0; c < M.total_rank; ++c) {
      IntVector v(hl);
      bool nz = false;
      for (Index r = 0; r < hl; ++r) {
        v(r) = D(ho + r, c);
        if (v(r) != 0) nz = true;
      }
      if (!nz) continue;
      std::vector<Int> key(v.data(), v.data() + v.size());
      if (seen[hc].insert(std::move(key)).second) gens[hc].push_back(std::move(v));
    }
  }

  MackeyModule F;
  F.ctx = &ctx;
  F.mu = &mu;
  F.label = M.label.empty() ? "fused" : M.label + " (fused)";
  F.component_range.assign(ctx.num_classes(), {0, 0});
  F.component_torsion.assign(ctx.num_classes(), {});

  std::vector<QuotientPresentation> q(ctx.num_classes());
  bool torsion_free = true;
  Index off = 0;
  for (int c = 0; c < ctx.num_classes(); ++c) {
    Index len = M.component_range[c].second;
    IntMatrix g = IntMatrix::Zero(len, static_cast<Index>(gens[c].size()));
    for (size_t k = 0; k < gens[c].size(); ++k) g.col(static_cast<Index>(k)) = gens[c][k];
    q[c] = quotient_by_columns(len, g);
    F.component_torsion[c] = q[c].torsion;
    if (!q[c].torsion.empty()) torsion_free = false;
    F.component_range[c] = {off, q[c].free_rank};
    off += q[c].free_rank;
  }
  F.total_rank = off;

  if (!torsion_free) {
    F.has_actions = false;
    return F;
  }

  IntMatrix P = IntMatrix::Zero(F.total_rank, M.total_rank);
  IntMatrix S = IntMatrix::Zero(M.total_rank, F.total_rank);
  for (int c = 0; c < ctx.num_classes(); ++c) {
    auto [fo, fl] = F.component_range[c];
    auto [mo, ml] = M.component_range[c];
    if (fl > 0 && ml > 0) {
      P.block(fo, mo, fl, ml) = q[c].free_projection;
      S.block(mo, fo, ml, fl) = q[c].section;
    }
  }
  for (size_t t = 0; t < mu.basis.size(); ++t)
    F.action.push_back(P * M.action[t] * S);
  F.fusion_projection = std::move(P);
  return F;
}

std::vector<std::pair<int, Elt>> is_fused_witnesses(const MackeyModule& M) {
  if (!M.has_actions)
    throw std::invalid_argument("is_fused: module carries no actions");
  const GroupCtx& ctx = *M.ctx;
  const AlgebraData& mu = *M.mu;
  std::vector<std::pair<int, Elt>> out;
  for (int c = 0; c < ctx.num_classes(); ++c) {
    auto [o, l] = M.component_range[c];
    for (Elt z : ctx.centralizer_of_rep(c).elements) {
      TWIndex t = canonical_tuple(ctx, c, c, z, ctx.rep(c).elements);
      const IntMatrix& A = M.action[mu.index_of.at(t)];
      bool ok = true;
      for (Index r = 0; r < l && ok; ++r)
        for (Index cc = 0; cc < l && ok; ++cc)
          if (A(o + r, o + cc) != (r == cc ? 1 : 0)) ok = false;
      if (!ok) out.emplace_back(c, z);
    }
  }
  return out;
}

bool is_fused(const MackeyModule& M) { return is_fused_witnesses(M).empty(); }

IntMatrix centralizer_action(const MackeyModule& M, int H_cls, Elt c) {
  if (!M.has_actions)
    throw std::invalid_argument("centralizer_action: module carries no actions");
  const GroupCtx& ctx = *M.ctx;
  if (H_cls < 0 || H_cls >= ctx.num_classes())
    throw std::invalid_argument("centralizer_action: no such class");
  if (!ctx.centralizer_of_rep(H_cls).contains(c))
    throw std::invalid_argument("centralizer_action: element does not centralize the representative");
  TWIndex t = canonical_tuple(ctx, H_cls, H_cls, c, ctx.rep(H_cls).elements);
  auto [o, l] = M.component_range[H_cls];
  return M.action[M.mu->index_of.at(t)].block(o, o, l, l);
}

MackeyModule fused_yoneda_module(const GroupCtx& ctx, const AlgebraData& mu, const GSet& X) {
  OmegaCtx oc(ctx);
  FusedHom fh = fused_hom(ctx, X, oc.omega);
  std::vector<SpanKey> keys;
  for (const SpanClass& s : fh.basis) keys.push_back(s.key);
  SortedBasis sb = sort_component_major(ctx, oc, keys);

  MackeyModule M;
  M.ctx = &ctx;
  M.mu = &mu;
  M.total_rank = static_cast<Index>(sb.keys.size());
  M.component_range = sb.ranges;
  M.basis_keys = sb.keys;
  M.label = "fused represented";
  M.component_torsion.assign(ctx.num_classes(), {});

  std::vector<MaterializedSpan> col_mats;
  for (const SpanKey& k : sb.keys)
    col_mats.push_back(materialize(SpanClass{k, X, oc.omega}));
  for (const TWIndex& t : mu.basis) {
    MaterializedSpan mt = materialize(span_of_tuple(oc, t));
    IntMatrix A = IntMatrix::Zero(M.total_rank, M.total_rank);
    for (Index j = 0; j < M.total_rank; ++j) {
      BurnsideElement prod = fuse_element(compose_spans(mt, col_mats[j]));
      for (const auto& [k, c] : prod.terms()) A(sb.row_of.at(k), j) = static_cast<long>(c);
    }
    M.action.push_back(std::move(A));
  }
  return M;
}

MackeyModule module_from_json(const GroupCtx& ctx, const AlgebraData& mu,
                              const nlohmann::json& j) {
  MackeyModule M;
  M.ctx = &ctx;
  M.mu = &mu;
  M.label = j.value("label", "imported");
  const auto& comps = j.at("components");
  if (static_cast<int>(comps.size()) != ctx.num_classes())
    throw std::invalid_argument("module_from_json: one rank per subgroup class required");
  Index off = 0;
  for (const auto& r : comps) {
    Index len = r.get<Index>();
    if (len < 0) throw std::invalid_argument("module_from_json: negative rank");
    M.component_range.emplace_back(off, len);
    off += len;
  }
  M.total_rank = off;
  M.component_torsion.assign(ctx.num_classes(), {});
  const auto& acts = j.at("actions");
  if (static_cast<int>(acts.size()) != mu.rank())
    throw std::invalid_argument("module_from_json: one matrix per basis tuple required");
  for (const auto& a : acts) {
    IntMatrix A = IntMatrix::Zero(M.total_rank, M.total_rank);
    if (static_cast<Index>(a.size()) != M.total_rank)
      throw std::invalid_argument("module_from_json: matrix size mismatch");
    for (Index r = 0; r < M.total_rank; ++r) {
      if (static_cast<Index>(a[r].size()) != M.total_rank)
        throw std::invalid_argument("module_from_json: matrix size mismatch");
      for (Index c = 0; c < M.total_rank; ++c)
        A(r, c) = Int(a[r][c].get<long>());
    }
    M.action.push_back(std::move(A));
  }
  if (!respects_structure(M))
    throw std::invalid_argument("module_from_json: matrices violate the structure constants");
  return M;
}

nlohmann::ordered_json module_to_json(const MackeyModule& M) {
  nlohmann::ordered_json j;
  j["label"] = M.label;
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& [o, l] : M.component_range) j["components"].push_back(l);
  j["actions"] = nlohmann::ordered_json::array();
  for (const IntMatrix& A : M.action) {
    nlohmann::ordered_json m = nlohmann::ordered_json::array();
    for (Index r = 0; r < A.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Index c = 0; c < A.cols(); ++c) row.push_back(A(r, c).get_si());
      m.push_back(row);
    }
    j["actions"].push_back(m);
  }
  return j;
}

}  // namespace mackey
