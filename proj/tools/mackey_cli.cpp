// Command line front end: group loading, G-set expressions, Hom bases,
// algebra ranks and structure constants, functor fusion, verification suites.
// Exit codes: 0 success, 1 failed verification or internal invariant, 2 bad
// input or usage.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mackey/fused_cat.hpp"
#include "mackey/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace mackey;

FiniteGroup load_group(const std::string& spec) {
  namespace fs = std::filesystem;
  bool path_like = spec.find('/') != std::string::npos || spec.ends_with(".json");
  if (path_like || fs::exists(spec)) {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot read group file: " + spec);
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
      throw std::invalid_argument("group file needs \"degree\" and \"generators\"");
    int degree = j.at("degree").get<int>();
    auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
    std::string name = j.value("name", fs::path(spec).stem().string());
    return FiniteGroup::from_generators(degree, gens, name);
  }
  return FiniteGroup::builtin(spec);
}

// Grammar: terms "pt", "Omega", "Gc", "G/<class index>", joined with '+'.
GSet parse_gset(const GroupCtx& ctx, const std::string& spec) {
  std::vector<GSet> parts;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, '+')) {
    size_t b = token.find_first_not_of(" \t");
    size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("empty term in G-set expression: " + spec);
    token = token.substr(b, e - b + 1);
    if (token == "pt") {
      parts.push_back(point_gset(ctx));
    } else if (token == "Omega") {
      parts.push_back(OmegaCtx(ctx).omega);
    } else if (token == "Gc") {
      parts.push_back(conjugation_gset(ctx));
    } else if (token.rfind("G/", 0) == 0) {
      std::string idx = token.substr(2);
      if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("expected a class index after G/ in: " + token);
      int cls = std::stoi(idx);
      if (cls >= ctx.num_classes())
        throw std::invalid_argument("subgroup class index out of range: " + token);
      parts.push_back(transitive_gset(ctx, ctx.rep(cls)));
    } else {
      throw std::invalid_argument("unknown G-set term: " + token);
    }
  }
  if (parts.empty()) throw std::invalid_argument("empty G-set expression");
  GSet out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i)
    out = disjoint_union(out, parts[i]).space;
  return out;
}

MackeyModule parse_functor(const GroupCtx& ctx, const AlgebraData& mu,
                           const std::string& spec) {
  if (spec.rfind("yoneda:", 0) == 0)
    return yoneda_module(ctx, mu, parse_gset(ctx, spec.substr(7)));
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot read functor file: " + spec);
  return module_from_json(ctx, mu, nlohmann::json::parse(in));
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json component_ranks(const MackeyModule& M) {
  ordered_json a = ordered_json::array();
  for (const auto& [off, len] : M.component_range) {
    (void)off;
    a.push_back(len);
  }
  return a;
}

ordered_json torsion_json(const MackeyModule& M) {
  ordered_json a = ordered_json::array();
  for (const auto& comp : M.component_torsion) {
    ordered_json t = ordered_json::array();
    for (const Int& d : comp) t.push_back(d.get_si());
    a.push_back(t);
  }
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral Mackey algebra, fused quotient, and Mackey functor fusion"};
  app.require_subcommand(1);

  std::string group_spec;
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  int max_order = 8;
  app.add_option("--group", group_spec,
                 "Builtin name (Cn, Dn, Sn, An, V4, Q8) or path to a JSON "
                 "presentation {degree, generators, name?}")
      ->required();
  app.add_option("--format", format, "Output format; csv only for structure-constants")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "Seed for randomized verification checks");
  app.add_option("--max-order", max_order,
                 "Verification checks that enumerate maps skip groups above this order");

  int rc = 0;
  auto make_ctx = [&]() { return GroupCtx(load_group(group_spec)); };
  auto require_json = [&](const std::string& cmd) {
    if (format != "json")
      throw std::invalid_argument(cmd + " only supports --format json");
  };

  // ---- subgroups
  app.add_subcommand("subgroups", "Subgroup conjugacy classes of the group")
      ->callback([&] {
    require_json("subgroups");
    GroupCtx ctx = make_ctx();
    ordered_json out;
    out["group"] = ctx.group().name();
    out["order"] = ctx.order();
    out["num_subgroups"] = ctx.subgroups().size();
    ordered_json classes = ordered_json::array();
    for (int c = 0; c < ctx.num_classes(); ++c) {
      const SubgroupClass& cls = ctx.classes()[c];
      ordered_json e;
      e["index"] = c;
      e["order"] = cls.rep.order();
      e["class_size"] = cls.members.size();
      e["representative"] = cls.rep.elements;
      e["normalizer_order"] = ctx.normalizer_of_rep(c).order();
      e["centralizer_order"] = ctx.centralizer_of_rep(c).order();
      classes.push_back(e);
    }
    out["classes"] = classes;
    emit(out);
  });

  // ---- marks
  app.add_subcommand(
      "marks", "Table of marks: fixed points of rep(H) on G/rep(K)")
      ->callback([&] {
    require_json("marks");
    GroupCtx ctx = make_ctx();
    ordered_json rows = ordered_json::array();
    for (int h = 0; h < ctx.num_classes(); ++h) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < ctx.num_classes(); ++k) {
        GSet gk = transitive_gset(ctx, ctx.rep(k));
        row.push_back(fixed_points(gk, ctx.rep(h)).size());
      }
      rows.push_back(row);
    }
    ordered_json out;
    out["group"] = ctx.group().name();
    out["classes"] = ctx.num_classes();
    out["matrix"] = rows;
    emit(out);
  });

  // ---- span-hom
  std::string span_src, span_tgt;
  CLI::App* sub_span = app.add_subcommand(
      "span-hom", "Basis of the span Hom module between two G-set expressions");
  sub_span->add_option("source", span_src, "Source G-set expression")->required();
  sub_span->add_option("target", span_tgt, "Target G-set expression")->required();
  sub_span->callback([&] {
    require_json("span-hom");
    GroupCtx ctx = make_ctx();
    GSet X = parse_gset(ctx, span_src), Y = parse_gset(ctx, span_tgt);
    std::vector<SpanClass> basis = hom_basis(ctx, X, Y);
    ordered_json out;
    out["group"] = ctx.group().name();
    out["source"] = span_src;
    out["target"] = span_tgt;
    out["rank"] = basis.size();
    ordered_json b = ordered_json::array();
    for (const SpanClass& s : basis) {
      ordered_json e;
      e["mid_subgroup_class"] = s.key.mid_class;
      e["src_point"] = s.key.src_point;
      e["tgt_point"] = s.key.tgt_point;
      b.push_back(e);
    }
    out["basis"] = b;
    emit(out);
  });

  // ---- fused-hom
  std::string fused_src, fused_tgt;
  CLI::App* sub_fused = app.add_subcommand(
      "fused-hom", "Fused Hom module between two G-set expressions");
  sub_fused->add_option("source", fused_src, "Source G-set expression")->required();
  sub_fused->add_option("target", fused_tgt, "Target G-set expression")->required();
  sub_fused->callback([&] {
    require_json("fused-hom");
    GroupCtx ctx = make_ctx();
    GSet X = parse_gset(ctx, fused_src), Y = parse_gset(ctx, fused_tgt);
    FusedHom fh = fused_hom(ctx, X, Y);
    ordered_json out;
    out["group"] = ctx.group().name();
    out["source"] = fused_src;
    out["target"] = fused_tgt;
    out["unfused_rank"] = fh.unfused_basis.size();
    out["fused_rank"] = fh.basis.size();
    ordered_json cp = ordered_json::array();
    for (const auto& [i, j] : fh.collapsed_pairs) cp.push_back(ordered_json::array({i, j}));
    out["collapsed_pairs"] = cp;
    emit(out);
  });

  // ---- mackey-rank / fused-rank
  app.add_subcommand("mackey-rank", "Rank of the integral Mackey algebra")
      ->callback([&] {
    require_json("mackey-rank");
    GroupCtx ctx = make_ctx();
    ordered_json out;
    out["rank"] = tw_basis(ctx).size();
    emit(out);
  });
  app.add_subcommand("fused-rank", "Rank of the fused Mackey algebra")
      ->callback([&] {
    require_json("fused-rank");
    GroupCtx ctx = make_ctx();
    ordered_json out;
    out["rank"] = fused_tw_basis(ctx).size();
    emit(out);
  });

  // ---- structure-constants
  bool sc_fused = false;
  CLI::App* sub_sc = app.add_subcommand(
      "structure-constants", "Nonzero structure constants of the (fused) algebra");
  sub_sc->add_flag("--fused", sc_fused, "Use the fused algebra");
  sub_sc->callback([&] {
    GroupCtx ctx = make_ctx();
    AlgebraData A = build_algebra(ctx);
    if (sc_fused) A = build_fused_algebra(ctx, A);
    if (format == "csv") {
      std::ostringstream os;
      os << "i,j,k,coeff\n";
      for (int i = 0; i < A.rank(); ++i)
        for (int j = 0; j < A.rank(); ++j)
          for (const auto& [k, c] : A.mult[i][j])
            os << i << "," << j << "," << k << "," << c << "\n";
      std::cout << os.str();
      return;
    }
    ordered_json out;
    out["group"] = ctx.group().name();
    out["fused"] = sc_fused;
    out["rank"] = A.rank();
    ordered_json entries = ordered_json::array();
    for (int i = 0; i < A.rank(); ++i)
      for (int j = 0; j < A.rank(); ++j)
        for (const auto& [k, c] : A.mult[i][j]) {
          ordered_json e;
          e["i"] = i;
          e["j"] = j;
          e["k"] = k;
          e["coeff"] = c;
          entries.push_back(e);
        }
    out["entries"] = entries;
    emit(out);
  });

  // ---- kernel
  app.add_subcommand(
      "kernel", "Kernel of the projection onto the fused algebra")
      ->callback([&] {
    require_json("kernel");
    GroupCtx ctx = make_ctx();
    AlgebraData A = build_algebra(ctx);
    auto pairs = fusion_kernel_pairs(ctx, A);
    ordered_json out;
    out["group"] = ctx.group().name();
    out["mackey_rank"] = A.rank();
    out["fused_rank"] = A.rank() - static_cast<int>(pairs.size());
    out["kernel_rank"] = pairs.size();
    ordered_json gens = ordered_json::array();
    for (const auto& [i, j] : pairs) {
      ordered_json e;
      e["plus"] = i;
      e["minus"] = j;
      gens.push_back(e);
    }
    out["generators"] = gens;
    emit(out);
  });

  // ---- fuse-functor
  std::string fuse_spec;
  CLI::App* sub_fuse = app.add_subcommand(
      "fuse-functor", "Fuse a Mackey functor and report the quotient presentation");
  sub_fuse->add_option("--functor", fuse_spec,
                       "yoneda:<G-set expression> or path to a module JSON file")
      ->required();
  sub_fuse->callback([&] {
    require_json("fuse-functor");
    GroupCtx ctx = make_ctx();
    AlgebraData mu = build_algebra(ctx);
    MackeyModule M = parse_functor(ctx, mu, fuse_spec);
    MackeyModule F = fuse_module(M);
    ordered_json out;
    out["group"] = ctx.group().name();
    out["functor"] = M.label;
    out["components"] = component_ranks(M);
    out["is_fused"] = is_fused(M);
    ordered_json f;
    f["components"] = component_ranks(F);
    f["torsion"] = torsion_json(F);
    f["has_actions"] = F.has_actions;
    f["is_fused"] = F.has_actions ? ordered_json(is_fused(F)) : ordered_json(nullptr);
    out["fused"] = f;
    emit(out);
  });

  // ---- is-fused
  std::string isf_spec;
  CLI::App* sub_isf = app.add_subcommand(
      "is-fused", "Whether the centralizer conjugations act as the identity");
  sub_isf->add_option("--functor", isf_spec,
                      "yoneda:<G-set expression> or path to a module JSON file")
      ->required();
  sub_isf->callback([&] {
    require_json("is-fused");
    GroupCtx ctx = make_ctx();
    AlgebraData mu = build_algebra(ctx);
    MackeyModule M = parse_functor(ctx, mu, isf_spec);
    auto witnesses = is_fused_witnesses(M);
    ordered_json out;
    out["group"] = ctx.group().name();
    out["functor"] = M.label;
    out["fused"] = witnesses.empty();
    ordered_json w = ordered_json::array();
    for (const auto& [cls, elt] : witnesses) {
      ordered_json e;
      e["class"] = cls;
      e["element"] = elt;
      w.push_back(e);
    }
    out["witnesses"] = w;
    emit(out);
  });

  // ---- verify
  std::string suite = "all";
  CLI::App* sub_verify = app.add_subcommand(
      "verify", "Run a verification suite against the group");
  sub_verify->add_option("--suite", suite, "Suite name or \"all\"");
  sub_verify->callback([&] {
    require_json("verify");
    GroupCtx ctx = make_ctx();
    VerifyOptions opts;
    opts.seed = seed;
    opts.max_order = max_order;
    std::vector<CheckResult> checks = run_suite(ctx, suite, opts);
    bool all_pass = true;
    ordered_json cj = ordered_json::array();
    for (const CheckResult& c : checks) {
      all_pass = all_pass && c.pass;
      ordered_json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      e["detail"] = c.detail;
      cj.push_back(e);
    }
    ordered_json out;
    out["group"] = ctx.group().name();
    out["suite"] = suite;
    out["passed"] = all_pass;
    out["checks"] = cj;
    emit(out);
    if (!all_pass) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
