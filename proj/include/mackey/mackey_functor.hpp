#pragma once
// Mackey functors as finitely generated modules over the algebra: one free
// abelian block per subgroup class and one integer matrix per basis tuple.
// Fusion divides each block by the images of the kernel differences and, when
// the quotients are torsion free, transports the action along a chosen
// section.

#include <string>
#include <vector>

#include <json.hpp>

#include "mackey/fused_algebra.hpp"
#include "mackey/zlattice.hpp"

namespace mackey {

struct MackeyModule {
  const GroupCtx* ctx = nullptr;
  const AlgebraData* mu = nullptr;  // unfused algebra the actions index into
  Index total_rank = 0;
  std::vector<std::pair<Index, Index>> component_range;  // (offset, length) per class
  std::vector<IntMatrix> action;                         // per basis tuple
  std::string label;

  // Set by fuse_module: invariant factors per component and, when every
  // component is torsion free, the projection that produced the new basis.
  std::vector<std::vector<Int>> component_torsion;
  bool has_actions = true;
  IntMatrix fusion_projection;

  // Set for modules with a span-class basis (represented functors): the keys
  // of the basis classes, component-major.
  std::vector<SpanKey> basis_keys;

  int component_of_row(Index r) const;
};

/// The represented functor of a G-set X: basis the span classes X -> omega,
/// grouped by the component of the target leg, action by post-composition.
MackeyModule yoneda_module(const GroupCtx& ctx, const AlgebraData& mu, const GSet& X);
MackeyModule zero_module(const GroupCtx& ctx, const AlgebraData& mu);

/// action(i) action(j) = sum of structure constants times action(k), plus
/// identity and block-support axioms, all checked by enumeration.
bool respects_structure(const MackeyModule& M);

/// Quotient by the fusion kernel acting on the module. Componentwise
/// presentation always; transported actions only when torsion free.
MackeyModule fuse_module(const MackeyModule& M);

/// Whether every conjugation tuple (H, H, c, rep H) with c centralizing the
/// representative acts as the identity on the H block.
bool is_fused(const MackeyModule& M);
/// Failing witnesses (class, centralizer element) of the above, empty iff fused.
std::vector<std::pair<int, Elt>> is_fused_witnesses(const MackeyModule& M);
/// The block of the conjugation tuple for c centralizing rep(H_cls).
IntMatrix centralizer_action(const MackeyModule& M, int H_cls, Elt c);

/// The represented functor of X in the fused category, built directly from
/// fused span classes and fused composition (independent of fuse_module).
MackeyModule fused_yoneda_module(const GroupCtx& ctx, const AlgebraData& mu, const GSet& X);

/// Modules from explicit matrices: {"label": ..., "components": [r_0, ...],
/// "actions": [[[..]..]..]} with one total x total matrix per basis tuple in
/// basis order. Validates respects_structure.
MackeyModule module_from_json(const GroupCtx& ctx, const AlgebraData& mu,
                              const nlohmann::json& j);
nlohmann::ordered_json module_to_json(const MackeyModule& M);

}  // namespace mackey
