// Run records and plan resolution shared by the command line tool and the
// test suites. Machine output is deterministic: identical resolved inputs
// produce identical bytes (timings appear only in the human format).
#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "kmlie/config.hpp"
#include "kmlie/serialize.hpp"

namespace kmlie {

struct RunRecord {
  std::string command;  // resolved input echo
  std::string machine;  // machine payload lines
  std::string human;    // human payload
  std::string verdict;  // optional verdict line (machine format)
  long elapsed_ms = 0;  // human format only
};

inline std::string emit(const RunRecord& r, bool machine) {
  if (machine) {
    std::string out = std::string(format_version()) + " run command=\"" + r.command + "\"\n";
    out += r.machine;
    out += r.verdict;
    return out;
  }
  std::ostringstream os;
  os << "# " << r.command << "\n" << r.human;
  if (!r.verdict.empty()) os << r.verdict;
  os << "# elapsed " << r.elapsed_ms << " ms\n";
  return os.str();
}

// resolve the subset of an experiment plan (S-construction or explicit flag)
inline ParabolicSubset resolve_subset(const ExperimentPlan& plan, const Gcm& g) {
  if (plan.S && plan.flag) throw std::invalid_argument("plan: 'S' and 'flag' are mutually exclusive");
  if (plan.flag) {
    std::vector<VecQ> funcs;
    for (const auto& expr : *plan.flag) funcs.push_back(parse_functional(expr, g.n));
    return subset_from_flag(make_flag(g, funcs));
  }
  if (!plan.S) throw std::invalid_argument("plan: one of 'S' or 'flag' is required");
  int a0 = plan.alpha0;
  if (a0 < 0) {
    auto nodes = admissible_alpha0_nodes(g);
    if (nodes.empty()) throw std::invalid_argument("plan: no admissible alpha_0 node");
    a0 = nodes.front();
  }
  return subset_from_S(g, a0, *plan.S);
}

struct ResolvedInduction {
  std::shared_ptr<const StructureTable> table;
  PseudoParabolicData pseudo;
  std::shared_ptr<WeightModule> top;
  std::shared_ptr<InducedModule> module;
};

// build the induced module a plan describes: type-II subset required, the top
// is the Levi Verma of the plan's highest weight at the plan's depth
inline ResolvedInduction resolve_induction(const ExperimentPlan& plan) {
  if (!plan.lambda || !plan.charge)
    throw std::invalid_argument("plan: 'weights' (lambda, charge) are required for induction runs");
  auto table = std::make_shared<StructureTable>(plan.type);
  ParabolicSubset subset = resolve_subset(plan, table->affine);
  PseudoParabolicData pseudo = pseudo_parabolic(subset);
  if (static_cast<int>(plan.lambda->size()) != table->finite_rank())
    throw std::invalid_argument("plan: 'weights.lambda' must have one value per finite node (" +
                                std::to_string(table->finite_rank()) + ")");
  HighestWeightSpec spec{*plan.lambda, *plan.charge};
  auto top = levi_verma(table, pseudo, spec, plan.depth);
  auto module = induce(table, pseudo, top, plan.window);
  return {table, std::move(pseudo), top, module};
}

inline std::string serialize_structure(const ChevalleyTable& t) {
  std::ostringstream os;
  std::vector<VecZ> all;
  for (const auto& r : t.sys.positive) {
    all.push_back(r);
    all.push_back(-r);
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      VecZ sum = a + b;
      if (is_zero(sum) || !t.sys.is_root(sum)) continue;
      os << "nconst a=(" << vec_str(a) << ") b=(" << vec_str(b) << ") n=" << t.n_constant(a, b).get_str()
         << "\n";
    }
  for (const auto& r : t.sys.positive) {
    os << "coroot a=(" << vec_str(r) << ") h=(" << vec_str(t.coroot(r)) << ")"
       << " formx=" << rat_str(t.form_x(r)) << "\n";
  }
  return os.str();
}

}  // namespace kmlie
