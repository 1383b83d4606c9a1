// Command-line front end: one JSON document per invocation.
// Exit codes: 0 success, 2 domain error, 3 size-cap error, 64 usage.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpspace/acceptance.hpp"
#include "lpspace/json_io.hpp"
#include "lpspace/lpspace.hpp"

namespace {

using lpspace::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lpspace::DomainError("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

struct Output {
  std::string path;  // empty = stdout

  void emit(const json& j) const {
    if (path.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::ofstream out(path);
      if (!out) throw lpspace::DomainError("cannot open output file: " + path);
      out << j.dump(2) << "\n";
    }
  }
};

std::vector<double> load_coeff_vector(const std::string& path) {
  const json j = load_json(path);
  if (j.is_array()) return j.get<std::vector<double>>();
  return lpspace::tensor_from_json(j).values();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite computations in weighted Lp sequence and function spaces"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--out", out.path, "write the JSON document to a file instead of stdout");

  json result;

  // ---- norm ----
  auto* norm = app.add_subcommand("norm", "evaluate a space norm");
  norm->require_subcommand(1);
  std::string norm_weights, norm_coeffs;
  auto* norm_xpw = norm->add_subcommand("xpw", "max(lp, weighted l2) sequence norm");
  norm_xpw->add_option("--weights", norm_weights, "weight sequence JSON")->required();
  norm_xpw->add_option("--coeffs", norm_coeffs, "coefficient JSON")->required();
  norm_xpw->callback([&] {
    const lpspace::WeightSequence w = lpspace::weights_from_json(load_json(norm_weights));
    const lpspace::CoefficientTensor x = lpspace::tensor_from_json(load_json(norm_coeffs));
    result = lpspace::norm_report_to_json(lpspace::xpw_norm(w, x));
  });
  auto* norm_tensor = norm->add_subcommand("tensor", "tensor-power norm over axis subsets");
  norm_tensor->add_option("--weights", norm_weights, "weight sequence JSON")->required();
  norm_tensor->add_option("--coeffs", norm_coeffs, "coefficient tensor JSON")->required();
  norm_tensor->callback([&] {
    const lpspace::WeightSequence w = lpspace::weights_from_json(load_json(norm_weights));
    const lpspace::CoefficientTensor a = lpspace::tensor_from_json(load_json(norm_coeffs));
    result = lpspace::norm_report_to_json(lpspace::tensor_norm(w, a));
  });
  double norm_p = 4.0;
  auto* norm_bp = norm->add_subcommand("bp", "lp-sum of constant-weight block norms");
  norm_bp->add_option("--p", norm_p, "exponent p > 2")->required();
  norm_bp->add_option("--coeffs", norm_coeffs, "blocks JSON [{\"n\":..,\"coeffs\":[..]}]")
      ->required();
  norm_bp->callback([&] {
    std::vector<lpspace::BpBlock> blocks;
    for (const json& b : load_json(norm_coeffs))
      blocks.push_back({b.at("n").get<std::size_t>(), b.at("coeffs").get<std::vector<double>>()});
    result = lpspace::norm_report_to_json(lpspace::bp_norm(norm_p, blocks));
  });

  // ---- classify ----
  auto* classify = app.add_subcommand("classify", "asymptotic weight classification");
  std::string cls_weights;
  std::vector<double> cls_eps = {0.5, 0.1, 0.01};
  classify->add_option("--weights", cls_weights, "weight sequence JSON")->required();
  classify->add_option("--eps", cls_eps, "epsilon diagnostic grid");
  classify->callback([&] {
    const lpspace::WeightSequence w = lpspace::weights_from_json(load_json(cls_weights));
    const lpspace::ClassificationReport rep = lpspace::classify_weights(w, cls_eps);
    json diags = json::array();
    for (const auto& d : rep.diagnostics)
      diags.push_back({{"epsilon", d.epsilon}, {"partial_sum", d.partial_sum}, {"count", d.count}});
    result = json{{"case", lpspace::to_string(rep.decided)},
                  {"inf_prefix", rep.inf_prefix},
                  {"diagnostics", diags}};
  });

  // ---- blocks ----
  auto* blocks = app.add_subcommand("blocks", "block bases and projections");
  blocks->require_subcommand(1);
  std::string blk_weights, blk_partition, blk_coeffs;
  auto add_blk_common = [&](CLI::App* cmd) {
    cmd->add_option("--weights", blk_weights, "weight sequence JSON")->required();
    cmd->add_option("--partition", blk_partition, "block partition JSON")->required();
  };
  auto* blk_build = blocks->add_subcommand("build", "sigma, induced weights, dual vectors");
  add_blk_common(blk_build);
  blk_build->callback([&] {
    const lpspace::WeightSequence w = lpspace::weights_from_json(load_json(blk_weights));
    const lpspace::BlockSystem sys =
        lpspace::build_blocks(w, lpspace::partition_from_json(load_json(blk_partition)));
    result = json{{"sigma", sys.sigma}, {"v", sys.v}, {"b", sys.b}, {"b_tilde", sys.b_tilde},
                  {"d", sys.d}};
  });
  auto* blk_iso = blocks->add_subcommand("isometry", "both sides of the block isometry");
  add_blk_common(blk_iso);
  blk_iso->add_option("--coeffs", blk_coeffs, "lambda JSON")->required();
  blk_iso->callback([&] {
    const lpspace::WeightSequence w = lpspace::weights_from_json(load_json(blk_weights));
    const lpspace::BlockSystem sys =
        lpspace::build_blocks(w, lpspace::partition_from_json(load_json(blk_partition)));
    const auto [lhs, rhs] = lpspace::block_isometry_check(
        sys, lpspace::CoefficientTensor::vector(load_coeff_vector(blk_coeffs)));
    result = json{{"lhs", lhs}, {"rhs", rhs}, {"abs_diff", std::fabs(lhs - rhs)}};
  });
  auto* blk_greedy = blocks->add_subcommand("greedy", "greedy packing toward target weights");
  std::string blk_targets;
  blk_greedy->add_option("--weights", blk_weights, "weight sequence JSON")->required();
  blk_greedy->add_option("--targets", blk_targets, "target induced weights JSON array")->required();
  blk_greedy->callback([&] {
    const lpspace::WeightSequence w = lpspace::weights_from_json(load_json(blk_weights));
    const lpspace::BlockPartition part =
        lpspace::greedy_partition(w, load_json(blk_targets).get<std::vector<double>>());
    result = lpspace::partition_to_json(part);
  });
  auto* blk_proj = blocks->add_subcommand("project", "norm-one projection onto the block span");
  add_blk_common(blk_proj);
  blk_proj->add_option("--coeffs", blk_coeffs, "x JSON")->required();
  blk_proj->callback([&] {
    const lpspace::WeightSequence w = lpspace::weights_from_json(load_json(blk_weights));
    const lpspace::BlockSystem sys =
        lpspace::build_blocks(w, lpspace::partition_from_json(load_json(blk_partition)));
    const lpspace::CoefficientTensor x =
        lpspace::CoefficientTensor::vector(load_coeff_vector(blk_coeffs));
    const auto [nx, npx] = lpspace::projection_contraction_check(sys, x);
    result = json{{"lambda", lpspace::projection_coefficients(sys, x)},
                  {"projected", lpspace::apply_projection(sys, x)},
                  {"lp_norm_x", nx},
                  {"lp_norm_px", npx}};
  });

  // ---- dualsup ----
  auto* dualsup = app.add_subcommand("dualsup", "dual suprema over the X_{p,v} unit ball");
  double ds_p = 4.0;
  std::size_t ds_n = 4, ds_m = 1;
  std::string ds_mode = "head_sum", ds_lambda;
  std::uint64_t ds_seed = 0;
  dualsup->add_option("--p", ds_p, "exponent p > 2")->required();
  dualsup->add_option("--n", ds_n, "block size n")->required();
  dualsup->add_option("--mode", ds_mode, "head_sum or strip");
  dualsup->add_option("--m", ds_m, "head length M (head_sum mode)");
  dualsup->add_option("--lambda", ds_lambda, "row weights JSON (strip mode)");
  dualsup->add_option("--seed", ds_seed, "optimizer seed");
  dualsup->callback([&] {
    lpspace::AscentOptions opts;
    opts.seed = ds_seed ^ 0x5EED;
    lpspace::DualSupMode mode;
    std::vector<double> lambda;
    if (ds_mode == "head_sum") {
      mode = lpspace::DualSupMode::head_sum;
    } else if (ds_mode == "strip") {
      mode = lpspace::DualSupMode::strip;
      lambda = load_coeff_vector(ds_lambda);
    } else {
      throw lpspace::DomainError("dualsup: unknown mode '" + ds_mode + "'");
    }
    const lpspace::DualSupResult r = lpspace::dual_sup_unit_ball(ds_p, ds_n, mode, ds_m, lambda, opts);
    result = json{{"closed_form", r.closed_form}, {"numeric", r.numeric}, {"seed", ds_seed}};
  });

  // ---- rosenthal ----
  auto* rosenthal = app.add_subcommand("rosenthal", "two-sided moment data for independent sums");
  double rs_p = 4.0;
  std::string rs_family = "rademacher", rs_weights, rs_coeffs;
  std::size_t rs_n = 4, rs_trials = 0;
  std::uint64_t rs_seed = 0;
  rosenthal->add_option("--p", rs_p, "exponent p > 2")->required();
  rosenthal->add_option("--family", rs_family, "rademacher or three_valued");
  rosenthal->add_option("--n", rs_n, "family size (rademacher)");
  rosenthal->add_option("--weights", rs_weights, "weight sequence JSON (three_valued)");
  rosenthal->add_option("--coeffs", rs_coeffs, "coefficient JSON");
  rosenthal->add_option("--trials", rs_trials, "Monte Carlo trials (0 = exact)");
  rosenthal->add_option("--seed", rs_seed, "Monte Carlo seed");
  rosenthal->callback([&] {
    lpspace::RVFamily fam;
    if (rs_family == "rademacher") {
      fam = lpspace::rademacher_family(rs_n);
    } else if (rs_family == "three_valued") {
      const lpspace::WeightSequence w = lpspace::weights_from_json(load_json(rs_weights));
      fam = lpspace::three_valued_family(w.p(), w.weights());
    } else {
      throw lpspace::DomainError("rosenthal: unknown family '" + rs_family + "'");
    }
    std::vector<double> c = rs_coeffs.empty() ? std::vector<double>(fam.size(), 1.0)
                                              : load_coeff_vector(rs_coeffs);
    if (rs_trials == 0) {
      const lpspace::RosenthalReport rep = lpspace::rosenthal_check(fam, c, rs_p);
      result = json{{"lhs", rep.sum_norm}, {"rhs", rep.lower}, {"ratio", rep.ratio},
                    {"mode", "exact"}, {"trials", 0}, {"seed", rs_seed}};
    } else {
      const lpspace::McEstimate est = lpspace::mc_pnorm_of_sum(fam, c, rs_p, rs_trials, rs_seed);
      result = json{{"lhs", est.estimate}, {"stderr_moment", est.stderr_moment},
                    {"mode", "mc"}, {"trials", est.trials}, {"seed", est.seed}};
    }
  });

  // ---- khintchine ----
  auto* khintchine = app.add_subcommand("khintchine", "exact Rademacher p-norm vs l2");
  double kh_p = 4.0;
  std::string kh_coeffs;
  khintchine->add_option("--p", kh_p, "moment exponent")->required();
  khintchine->add_option("--coeffs", kh_coeffs, "coefficient JSON")->required();
  khintchine->callback([&] {
    const lpspace::KhintchineReport rep =
        lpspace::khintchine_check(load_coeff_vector(kh_coeffs), kh_p);
    result = json{{"lhs", rep.norm}, {"rhs", rep.l2}, {"ratio", rep.ratio},
                  {"mode", "exact"}, {"trials", 0}, {"seed", 0}};
  });

  // ---- stepfn ----
  auto* stepfn = app.add_subcommand("stepfn", "exact step-function computations");
  stepfn->require_subcommand(1);
  std::string sf_file, sf_file2;
  double sf_r = 1.0, sf_k = 1.0, sf_p = 4.0;
  auto* sf_norm = stepfn->add_subcommand("norm", "Lr norm");
  sf_norm->add_option("--fn", sf_file, "step function JSON")->required();
  sf_norm->add_option("--r", sf_r, "norm exponent r >= 1")->required();
  sf_norm->callback([&] {
    result = json{{"value", lpspace::lp_norm(lpspace::stepfn_from_json(load_json(sf_file)), sf_r)}};
  });
  auto* sf_int = stepfn->add_subcommand("integrate", "exact integral");
  sf_int->add_option("--fn", sf_file, "step function JSON")->required();
  sf_int->callback([&] {
    result = json{{"value", lpspace::stepfn_from_json(load_json(sf_file)).integrate()}};
  });
  auto* sf_squeeze = stepfn->add_subcommand("squeeze", "measure-squeeze operator");
  sf_squeeze->add_option("--fn", sf_file, "step function JSON")->required();
  sf_squeeze->add_option("--k", sf_k, "squeeze factor in (0,1]")->required();
  sf_squeeze->add_option("--p", sf_p, "normalization exponent")->required();
  sf_squeeze->callback([&] {
    result = lpspace::stepfn_to_json(
        lpspace::squeeze(lpspace::stepfn_from_json(load_json(sf_file)), sf_k, sf_p));
  });
  auto* sf_cond = stepfn->add_subcommand("condexp", "conditional expectation onto coordinates");
  std::vector<std::size_t> sf_coords;
  sf_cond->add_option("--fn", sf_file, "step function JSON")->required();
  sf_cond->add_option("--coords", sf_coords, "coordinate subset");
  sf_cond->callback([&] {
    result = lpspace::stepfn_to_json(
        lpspace::cond_expect(lpspace::stepfn_from_json(load_json(sf_file)), sf_coords));
  });
  auto* sf_sum = stepfn->add_subcommand("disjoint-sum", "Lp disjoint sum of two functions");
  sf_sum->add_option("--fn", sf_file, "first step function JSON")->required();
  sf_sum->add_option("--fn2", sf_file2, "second step function JSON")->required();
  sf_sum->add_option("--p", sf_p, "sum exponent")->required();
  sf_sum->callback([&] {
    result = lpspace::stepfn_to_json(
        lpspace::disjoint_sum(lpspace::stepfn_from_json(load_json(sf_file)),
                              lpspace::stepfn_from_json(load_json(sf_file2)), sf_p));
  });
  auto* sf_haar = stepfn->add_subcommand("haar", "martingale-difference ladder");
  sf_haar->add_option("--fn", sf_file, "step function JSON")->required();
  sf_haar->callback([&] {
    json arr = json::array();
    for (const lpspace::StepFunction& part :
         lpspace::haar_decompose(lpspace::stepfn_from_json(load_json(sf_file))))
      arr.push_back(lpspace::stepfn_to_json(part));
    result = json{{"components", arr}};
  });

  // ---- tree ----
  auto* tree = app.add_subcommand("tree", "prefix order, ordinal index, CFRE trees");
  tree->require_subcommand(1);
  std::string tr_rel, tr_tree, tr_cnf;
  std::uint64_t tr_m = 1, tr_n = 1;
  auto* tr_hindex = tree->add_subcommand("hindex", "ordinal index of a finite relation");
  tr_hindex->add_option("--rel", tr_rel, "relation JSON")->required();
  tr_hindex->callback([&] {
    const lpspace::HIndexResult h = lpspace::h_index(lpspace::relation_from_json(load_json(tr_rel)));
    result = json{{"h", h.h}, {"stable", h.stable}};
  });
  auto* tr_dot = tree->add_subcommand("dotprec", "prefix order on positive integers");
  tr_dot->add_option("--m", tr_m, "left argument")->required();
  tr_dot->add_option("--n", tr_n, "right argument")->required();
  tr_dot->callback([&] { result = json{{"dotprec", lpspace::dotprec(tr_m, tr_n)}}; });
  auto* tr_branch = tree->add_subcommand("branch", "branch, level, and side sets of n");
  tr_branch->add_option("--n", tr_n, "node")->required();
  tr_branch->callback([&] {
    result = json{{"lambda", lpspace::lambda_of(tr_n)},
                  {"branch", lpspace::branch(tr_n)},
                  {"level_set", lpspace::level_set(tr_n)},
                  {"left_set", lpspace::left_set(tr_n)},
                  {"right_set", lpspace::right_set(tr_n)}};
  });
  auto* tr_embed = tree->add_subcommand("embed", "order embedding into dyadic strings");
  tr_embed->add_option("--tree", tr_tree, "tree JSON")->required();
  tr_embed->callback([&] {
    json codes = json::object();
    for (const auto& [node, code] : lpspace::embed_cfre(lpspace::tree_from_json(load_json(tr_tree))))
      codes[std::to_string(node)] = code.to_string();
    result = json{{"codes", codes}};
  });
  auto* tr_rank = tree->add_subcommand("rank", "height rank of a finite tree");
  tr_rank->add_option("--tree", tr_tree, "tree JSON")->required();
  tr_rank->callback([&] {
    result = json{{"rank", lpspace::tree_rank(lpspace::tree_from_json(load_json(tr_tree)))}};
  });
  auto* tr_talpha = tree->add_subcommand("talpha", "truncated T_alpha construction");
  std::size_t tr_depth = 8, tr_width = 4;
  tr_talpha->add_option("--cnf", tr_cnf, "ordinal CNF JSON")->required();
  tr_talpha->add_option("--depth", tr_depth, "limit-stage recursion cap");
  tr_talpha->add_option("--width", tr_width, "fundamental-sequence truncation");
  tr_talpha->callback([&] {
    const lpspace::CfreTree t = lpspace::build_T_alpha(
        lpspace::cnf_from_json(load_json(tr_cnf)), tr_depth, tr_width);
    result = lpspace::tree_to_json(t);
    result["rank"] = lpspace::tree_rank(t);
  });

  // ---- suite ----
  auto* suite = app.add_subcommand("suite", "acceptance report");
  suite->require_subcommand(1);
  auto* suite_acc = suite->add_subcommand("acceptance", "run all acceptance criteria");
  std::uint64_t suite_seed = 0;
  suite_acc->add_option("--seed", suite_seed, "suite seed");
  suite_acc->callback([&] {
    const std::vector<lpspace::CriterionResult> results = lpspace::run_acceptance(suite_seed);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    result = json{{"seed", suite_seed}, {"all_pass", all},
                  {"criteria", lpspace::criteria_to_json(results)}};
  });

  try {
    app.parse(argc, argv);
    out.emit(result);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << app.help() << "\n";
    return 64;
  } catch (const lpspace::SizeCapError& e) {
    out.emit(json{{"error", {{"kind", "size_cap"}, {"detail", e.what()}}}});
    return 3;
  } catch (const lpspace::DomainError& e) {
    out.emit(json{{"error", {{"kind", "domain"}, {"detail", e.what()}}}});
    return 2;
  } catch (const std::exception& e) {
    out.emit(json{{"error", {{"kind", "domain"}, {"detail", e.what()}}}});
    return 2;
  }
  return 0;
}
