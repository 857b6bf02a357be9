#pragma once
// Named property-check suites over one group: every module contributes a
// handful of invariants that are checked by direct enumeration. Used by the
// CLI `verify` subcommand and by the acceptance harness.

#include <cstdint>
#include <string>
#include <vector>

#include "mackey/mackey_functor.hpp"

namespace mackey {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eed1729ULL;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  int max_order = 8;  // checks that enumerate maps skip larger groups
};

std::vector<std::string> suite_names();
/// Run one suite ("all" for every suite) against a group.
std::vector<CheckResult> run_suite(const GroupCtx& ctx, const std::string& suite,
                                   const VerifyOptions& opts);

/// Orbit count of N(rep) on fixed-point pairs, summed over classes, computed
/// with the counting lemma only (no canonical forms). Equals the Hom rank.
long long hom_rank_by_counting(const GroupCtx& ctx, const GSet& X, const GSet& Y);

/// Identification of fuse(represented X) with the directly built fused
/// represented module through the canonical basis collapse; checks rank
/// agreement, unimodularity and the intertwining relations.
bool fused_yoneda_identified(const GroupCtx& ctx, const AlgebraData& mu, const GSet& X,
                             std::string* detail = nullptr);

}  // namespace mackey
