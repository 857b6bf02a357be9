#pragma once
// The fused Mackey algebra: quotient of the Mackey algebra by the span
// fusion, with basis the coarser tuple classes (conjugation twists by
// centralizer elements of K allowed between the two legs).

#include <map>
#include <vector>

#include "mackey/mackey_algebra.hpp"

namespace mackey {

/// Canonical representative of the coarser class of a tuple: minimize
/// (h x g l, ^h K) with x running over the centralizer of K.
TWIndex fuse_tuple(const GroupCtx& ctx, const TWIndex& t);
/// All fused basis tuples, sorted. Every fused representative is also an
/// unfused canonical tuple.
std::vector<TWIndex> fused_tw_basis(const GroupCtx& ctx);

/// Build the fused algebra from the unfused one: structure constants are
/// computed on unfused lifts and projected.
AlgebraData build_fused_algebra(const GroupCtx& ctx, const AlgebraData& mu);

/// The quotient map on elements.
AlgebraElement quotient_hom(const AlgebraData& fused, const AlgebraElement& x);
/// Differences basis(i) - basis(fuse(i)) spanning the kernel of the quotient,
/// one per collapsed unfused basis element, as (i, j) index pairs.
std::vector<std::pair<int, int>> fusion_kernel_pairs(const GroupCtx& ctx,
                                                     const AlgebraData& mu);

}  // namespace mackey
