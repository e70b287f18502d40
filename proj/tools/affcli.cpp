// affcli: exact combinatorics of affine root systems and parabolic induction
// from the command line.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kmlie/cli_io.hpp"

using namespace kmlie;

namespace {

long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
      .count();
}

ExperimentPlan load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void finish(const RunRecord& rec, bool machine, const std::string& out_dir, const std::string& name) {
  std::cout << emit(rec, machine);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(out_dir + "/" + name + ".txt");
    out << emit(rec, /*machine=*/true);
  }
}

std::vector<int> parse_node_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact affine root systems, parabolic subalgebras and truncated induction"};
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  std::string out_dir;
  app.add_flag("--machine", machine, "machine-readable output");
  app.add_option("--out", out_dir, "also write machine output into this directory");

  std::string type_str, flag_str, s_str, config_path;
  long bound = 4;
  int alpha0 = -1;
  bool do_jacobi = false, do_structure = false, do_catalog = false;

  auto* roots_cmd = app.add_subcommand("roots", "enumerate a root window");
  roots_cmd->add_option("--type", type_str, "affine type label, e.g. A2~1")->required();
  roots_cmd->add_option("--bound", bound, "height bound");

  auto* classify_cmd = app.add_subcommand("classify", "classify a parabolic subset");
  classify_cmd->add_option("--type", type_str)->required();
  classify_cmd->add_option("--flag", flag_str, "semicolon-separated functionals, e.g. \"m2-m0;m1\"");
  classify_cmd->add_option("--S", s_str, "comma-separated finite nodes");
  classify_cmd->add_option("--alpha0", alpha0, "alpha_0 node for the S construction");

  auto* levi_cmd = app.add_subcommand("levi", "Levi decomposition of a type-II subset");
  levi_cmd->add_option("--type", type_str)->required();
  levi_cmd->add_option("--S", s_str)->required();
  levi_cmd->add_option("--alpha0", alpha0);

  auto* table_cmd = app.add_subcommand("table", "type-II Levi labels over all connected proper S");
  table_cmd->add_option("--type", type_str)->required();

  bool snapshot = false;
  auto* induce_cmd = app.add_subcommand("induce", "build a truncated induced module");
  induce_cmd->add_option("--config", config_path)->required();
  induce_cmd->add_flag("--snapshot", snapshot, "include basis labels and action matrices");

  auto* character_cmd = app.add_subcommand("character", "basis character vs product formula");
  character_cmd->add_option("--config", config_path)->required();

  auto* primitives_cmd = app.add_subcommand("primitives", "primitive vector search and verdict");
  primitives_cmd->add_option("--config", config_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "self checks and exports");
  verify_cmd->add_flag("--jacobi", do_jacobi, "exhaustive Jacobi/antisymmetry check");
  verify_cmd->add_flag("--structure", do_structure, "dump the finite structure constants");
  verify_cmd->add_flag("--catalog", do_catalog, "dump the affine GCM catalog");
  verify_cmd->add_option("--type", type_str);
  verify_cmd->add_option("--bound", bound);

  CLI11_PARSE(app, argc, argv);
  auto t0 = std::chrono::steady_clock::now();

  try {
    RunRecord rec;
    if (roots_cmd->parsed()) {
      rec.command = "roots --type " + type_str + " --bound " + std::to_string(bound);
      Gcm g = affine_gcm(parse_label(type_str));
      RootSet rs = enumerate_roots(g, Int(bound));
      rec.machine = serialize_roots(rs);
      std::ostringstream os;
      os << rs.roots.size() << " roots of " << type_str << " within |height| <= " << bound << "\n";
      for (const auto& r : rs.roots)
        os << "  (" << vec_str(r.coeffs) << ")  " << (r.imaginary() ? "imaginary" : "real")
           << "  mult " << r.mult.get_str() << "\n";
      rec.human = os.str();
      rec.elapsed_ms = ms_since(t0);
      finish(rec, machine, out_dir, "roots");
    } else if (classify_cmd->parsed()) {
      rec.command = "classify --type " + type_str +
                    (flag_str.empty() ? " --S " + s_str : " --flag \"" + flag_str + "\"");
      Gcm g = affine_gcm(parse_label(type_str));
      ParabolicSubset p = [&] {
        if (!flag_str.empty() && !s_str.empty())
          throw std::invalid_argument("classify: --flag and --S are mutually exclusive");
        if (!flag_str.empty()) {
          std::vector<VecQ> funcs;
          std::stringstream ss(flag_str);
          std::string item;
          while (std::getline(ss, item, ';')) funcs.push_back(parse_functional(item, g.n));
          return subset_from_flag(make_flag(g, funcs));
        }
        if (s_str.empty() && !classify_cmd->count("--S"))
          throw std::invalid_argument("classify: one of --flag or --S is required");
        int a0 = alpha0 >= 0 ? alpha0 : admissible_alpha0_nodes(g).at(0);
        return subset_from_S(g, a0, parse_node_list(s_str));
      }();
      ParabolicKind k = kind(p);
      rec.machine = serialize_flag(p.flag) + serialize_kind(k);
      rec.human = std::string("kind: ") + kind_name(k.kind) +
                  (k.s_index ? " (s = " + std::to_string(*k.s_index) + ")" : "") + "\n";
      rec.elapsed_ms = ms_since(t0);
      finish(rec, machine, out_dir, "classify");
    } else if (levi_cmd->parsed()) {
      rec.command = "levi --type " + type_str + " --S " + s_str;
      Gcm g = affine_gcm(parse_label(type_str));
      int a0 = alpha0 >= 0 ? alpha0 : admissible_alpha0_nodes(g).at(0);
      ParabolicSubset p = subset_from_S(g, a0, parse_node_list(s_str));
      LeviData levi = levi_components(p);
      rec.machine = serialize_levi(levi);
      std::ostringstream os;
      for (const auto& c : levi.components)
        os << "component " << to_string(c.label) << " (delta scale " << c.delta_scale.get_str() << ")\n";
      os << "heisenberg complement rank at k=1: " << levi.complement_rank(Int(1)).get_str() << "\n";
      rec.human = os.str();
      rec.elapsed_ms = ms_since(t0);
      finish(rec, machine, out_dir, "levi");
    } else if (table_cmd->parsed()) {
      rec.command = "table --type " + type_str;
      auto rows = levi_table_rows(parse_label(type_str));
      rec.machine = serialize_table_rows(rows);
      std::set<TypeLabel> labels;
      for (const auto& r : rows) labels.insert(r.recognized);
      std::ostringstream os, ms2;
      os << "levi labels:";
      ms2 << "summary labels=";
      bool first = true;
      for (const auto& l : labels) {
        os << " " << to_string(l);
        ms2 << (first ? "" : ",") << to_string(l);
        first = false;
      }
      os << "\n";
      ms2 << "\n";
      rec.machine += ms2.str();
      rec.human = os.str();
      rec.elapsed_ms = ms_since(t0);
      finish(rec, machine, out_dir, "table");
    } else if (induce_cmd->parsed()) {
      rec.command = "induce --config " + config_path;
      ExperimentPlan plan = load_config(config_path);
      ResolvedInduction run = resolve_induction(plan);
      Character ch = character(*run.module);
      std::ostringstream msr, os;
      for (const auto& [w, c] : ch) msr << "dim weight=" << weight_str(w) << " count=" << c.get_str() << "\n";
      if (snapshot) msr << serialize_snapshot(*run.module, run.module->nilrad_operators(plan.operators));
      rec.machine = msr.str();
      os << "induced module over " << to_string(plan.type) << ": window " << run.module->window().size()
         << " basis vectors, " << ch.size() << " weights\n";
      rec.human = os.str();
      rec.elapsed_ms = ms_since(t0);
      finish(rec, machine, out_dir, "induce");
    } else if (character_cmd->parsed()) {
      rec.command = "character --config " + config_path;
      ExperimentPlan plan = load_config(config_path);
      ResolvedInduction run = resolve_induction(plan);
      Character direct = character(*run.module);
      Character product = pbw_character(*run.module);
      rec.machine = serialize_character(direct, product);
      rec.verdict = std::string("verdict=") + (direct == product ? "EQUAL" : "DIFFER") + "\n";
      rec.human = std::string("basis and product characters ") +
                  (direct == product ? "agree" : "DIFFER") + " on " +
                  std::to_string(direct.size()) + " weights\n";
      rec.elapsed_ms = ms_since(t0);
      finish(rec, machine, out_dir, "character");
    } else if (primitives_cmd->parsed()) {
      rec.command = "primitives --config " + config_path;
      ExperimentPlan plan = load_config(config_path);
      ResolvedInduction run = resolve_induction(plan);
      ReductionVerdict v = check_reduction(*run.module, plan.operators);
      rec.machine = serialize_primitive_report(v.nilrad_report);
      rec.verdict = serialize_verdict(v);
      std::ostringstream os;
      for (const auto& w : v.nilrad_report.windows)
        os << "weight " << weight_str(w.weight) << ": kernel " << w.kernel.size() << " vs 1(x)V "
           << w.top_dim << "\n";
      os << "reduction: " << (v.outcome == ReductionVerdict::PASS ? "PASS" : "INCONCLUSIVE") << " ("
         << v.detail << ")\n";
      rec.human = os.str();
      rec.elapsed_ms = ms_since(t0);
      finish(rec, machine, out_dir, "primitives");
    } else if (verify_cmd->parsed()) {
      if (do_jacobi) {
        rec.command = "verify --jacobi --type " + type_str + " --bound " + std::to_string(bound);
        StructureTable table(parse_label(type_str));
        auto bad = verify_jacobi(table, bound);
        rec.machine = "violations=" + std::to_string(bad.size()) + "\n";
        rec.human = std::to_string(bad.size()) + " violations\n";
      } else if (do_structure) {
        rec.command = "verify --structure --type " + type_str;
        TypeLabel t = parse_label(type_str);
        ChevalleyTable table = chevalley_constants(t.twist == 1 ? TypeLabel{t.series, t.rank, 0} : t);
        rec.machine = serialize_structure(table);
        rec.human = "structure table with " + std::to_string(table.sys.positive.size()) +
                    " positive roots\n";
      } else if (do_catalog) {
        rec.command = "verify --catalog";
        rec.machine = catalog_text();
        rec.human = rec.machine;
      } else {
        throw std::invalid_argument("verify: one of --jacobi, --structure, --catalog is required");
      }
      rec.elapsed_ms = ms_since(t0);
      finish(rec, machine, out_dir, "verify");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
