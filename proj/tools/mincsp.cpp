#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "mincsp/classifier.hpp"
#include "mincsp/generators.hpp"
#include "mincsp/io.hpp"
#include "mincsp/reductions.hpp"
#include "mincsp/solvers.hpp"

using namespace mincsp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitBadInput = 2;

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string witness_string(const Assignment& phi) {
  std::string s;
  for (uint8_t b : phi) s += char('0' + b);
  return s;
}

// ---- classify ----

int run_classify(const std::string& path, const std::string& format) {
  const Language lang = parse_language(read_file(path));
  const TrichotomyClass cls = classify(lang);
  std::string class_name = to_string(cls.dcsp_class);
  if (cls.dcsp_class == DcspClass::ApproxIhsb)
    class_name += "(" + std::to_string(cls.ihs_width) +
                  (cls.ihs_polarity == Polarity::Plus ? ",+" : ",-") + ")";
  if (format == "flat") {
    const PropertyVector& pv = cls.properties;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::cout << "class=" << to_string(cls.dcsp_class) << "\n";
    if (cls.dcsp_class == DcspClass::ApproxIhsb) {
      std::cout << "ihs_width=" << cls.ihs_width << "\n";
      std::cout << "ihs_polarity="
                << (cls.ihs_polarity == Polarity::Plus ? "plus" : "minus")
                << "\n";
    }
    std::cout << "zero_valid=" << flag(pv.zero_valid) << "\n";
    std::cout << "one_valid=" << flag(pv.one_valid) << "\n";
    std::cout << "horn=" << flag(pv.horn) << "\n";
    std::cout << "dual_horn=" << flag(pv.dual_horn) << "\n";
    std::cout << "bijunctive=" << flag(pv.bijunctive) << "\n";
    std::cout << "affine=" << flag(pv.affine) << "\n";
    std::cout << "self_dual=" << flag(pv.self_dual) << "\n";
    std::cout << "irredundant=" << flag(pv.irredundant) << "\n";
    std::cout << "ihs_plus_width="
              << (pv.ihs_plus_width ? std::to_string(*pv.ihs_plus_width)
                                    : "none")
              << "\n";
    std::cout << "ihs_minus_width="
              << (pv.ihs_minus_width ? std::to_string(*pv.ihs_minus_width)
                                     : "none")
              << "\n";
  } else {
    std::cout << "class: " << class_name << "\n";
    for (const std::string& line : cls.narrative)
      std::cout << "  " << line << "\n";
  }
  return kExitOk;
}

// ---- solve ----

int print_outcome(const SolveOutcome& out, const std::string& format,
                  bool parity, bool codeword) {
  if (format == "flat") {
    std::cout << "status=" << to_string(out.status) << "\n";
    std::cout << "cost=" << out.cost << "\n";
    if (parity)
      std::cout << "elements=" << join(out.elements) << "\n";
    else if (codeword)
      std::cout << "solution=" << out.vector_solution.to_string() << "\n";
    else {
      std::cout << "deleted=" << join(out.deleted) << "\n";
      std::cout << "witness=" << witness_string(out.witness) << "\n";
    }
    if (out.status == SolveStatus::WithinRatio)
      std::cout << "ratio=" << out.ratio << "\n";
  } else {
    std::cout << "status: " << to_string(out.status) << "\n";
    if (out.status == SolveStatus::Optimal ||
        out.status == SolveStatus::WithinRatio) {
      std::cout << "cost: " << out.cost << "\n";
      if (parity)
        std::cout << "chosen elements: " << join(out.elements) << "\n";
      else if (codeword)
        std::cout << "solution vector: " << out.vector_solution.to_string()
                  << "\n";
      else {
        std::cout << "deleted constraints: " << join(out.deleted) << "\n";
        std::cout << "witness: " << witness_string(out.witness) << "\n";
      }
      if (out.status == SolveStatus::WithinRatio)
        std::cout << "ratio bound: " << out.ratio << "\n";
    }
    for (const std::string& note : out.notes)
      std::cout << "note: " << note << "\n";
  }
  return (out.status == SolveStatus::Optimal ||
          out.status == SolveStatus::WithinRatio)
             ? kExitOk
             : kExitNoSolution;
}

int run_solve(const std::string& path, int budget, std::string method,
              int width, const std::string& polarity,
              const std::string& format) {
  const std::string text = read_file(path);
  const bool is_odds = path.size() > 5 && path.substr(path.size() - 5) == ".odds";
  const bool is_nc = path.size() > 3 && path.substr(path.size() - 3) == ".nc";
  if (method == "auto" && is_odds) method = "oddset";
  if (method == "auto" && is_nc) method = "nc";

  if (method == "oddset")
    return print_outcome(solve_oddset_exact(parse_oddset(text), budget), format,
                         true, false);
  if (method == "nc")
    return print_outcome(solve_nc_exact(parse_nc(text)), format, false, true);

  const DcspInstance inst = parse_dcsp(text);
  SolveOutcome out;
  if (method == "auto")
    out = solve_auto(inst, budget);
  else if (method == "brute")
    out = brute_force_dcsp(inst);
  else if (method == "valid")
    out = solve_valid(inst);
  else if (method == "bijunctive")
    out = solve_bijunctive(inst, budget);
  else if (method == "ihsb")
    out = approx_ihsb(inst, width,
                      polarity == "minus" ? Polarity::Minus : Polarity::Plus);
  else
    throw std::invalid_argument("unknown method '" + method + "'");
  return print_outcome(out, format, false, false);
}

// ---- reduce ----

int run_reduce(const std::string& from, const std::string& to,
               const std::string& in_path, const std::string& out_path,
               const std::string& def_path, int groups) {
  const std::string text = read_file(in_path);
  const std::string edge = from + "->" + to;
  std::string target_text;

  if (edge == "dcsp-star->dcsp") {
    target_text =
        serialize(std::get<DcspInstance>(eliminate_undeletable(parse_dcsp(text)).target));
  } else if (edge == "dcsp->dcsp-dual") {
    target_text = serialize(std::get<DcspInstance>(dualize(parse_dcsp(text)).target));
  } else if (edge == "dcsp->dcsp") {
    if (def_path.empty())
      throw std::invalid_argument("expansion needs --def <file>");
    // definition file: target/free/exists/atom lines
    PpDefinition def;
    std::istringstream defin(read_file(def_path));
    std::string line;
    std::vector<std::string> names;  // free then existential
    while (std::getline(defin, line)) {
      const size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::string kw;
      if (!(ls >> kw)) continue;
      if (kw == "target") {
        ls >> def.target;
      } else if (kw == "free" || kw == "exists") {
        std::string v;
        while (ls >> v) {
          names.push_back(v);
          (kw == "free" ? def.num_free : def.num_existential)++;
        }
      } else if (kw == "equality") {
        std::string mode;
        ls >> mode;
        def.equality_allowed = (mode == "on");
      } else if (kw == "atom") {
        PpAtom atom;
        ls >> atom.relation;
        std::string v;
        while (ls >> v) {
          const auto it = std::find(names.begin(), names.end(), v);
          if (it == names.end())
            throw std::invalid_argument("unknown definition variable '" + v + "'");
          atom.args.push_back(int(it - names.begin()));
        }
        def.atoms.push_back(std::move(atom));
      } else {
        throw std::invalid_argument("unknown definition keyword '" + kw + "'");
      }
    }
    target_text = serialize(std::get<DcspInstance>(pp_expand(parse_dcsp(text), def).target));
  } else if (edge == "evenodd->oddset") {
    target_text = serialize(
        std::get<EvenOddSetInstance>(evenodd_to_odd(parse_oddset(text)).target));
  } else if (edge == "nc->oddset") {
    target_text = serialize(
        std::get<EvenOddSetInstance>(nc_to_oddset(parse_nc(text)).target));
  } else if (edge == "oddset->dcsp-b2") {
    target_text = serialize(
        std::get<DcspInstance>(oddset_to_dcsp_b2(parse_oddset(text)).target));
  } else if (edge == "dcsp-b2->dcsp-b3") {
    target_text = serialize(
        std::get<DcspInstance>(dcsp_b2_to_b3(parse_dcsp(text)).target));
  } else if (edge == "dcsp-b3->nc") {
    target_text =
        serialize(std::get<NcInstance>(dcsp_b3_to_nc(parse_dcsp(text)).target));
  } else if (edge == "mcirc->dcsp") {
    target_text = serialize(
        std::get<DcspInstance>(circuit_to_dcsp(parse_circuit(text)).target));
  } else if (edge == "oddset->oddset-squared") {
    target_text = serialize(std::get<EvenOddSetInstance>(
        oddset_self_improve(parse_oddset(text)).target));
  } else if (edge == "cnf->oddset") {
    target_text = serialize(max3sat_to_oddset(parse_cnf(text), groups).instance);
  } else {
    throw std::invalid_argument("no reduction for " + edge);
  }
  write_file(out_path, target_text);
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

// ---- verify ----

struct SuiteStats {
  int passed = 0;
  int skipped = 0;
  int failed = 0;
  std::string first_failure;

  void add(const VerifyReport& report) {
    if (!report.passed) {
      ++failed;
      if (first_failure.empty()) first_failure = report.detail;
    } else if (report.skipped_infeasible) {
      ++skipped;
    } else {
      ++passed;
    }
  }
};

int run_verify(const std::string& name, int seeds, const std::string& format) {
  const Oracle oracle = exact_oracle();
  SuiteStats stats;

  for (int seed = 1; seed <= seeds; ++seed) {
    Rng rng(uint64_t(seed) * 7919);
    try {
      if (name == "eliminate-undeletable") {
        const Language lang({rel_implies(), rel_or(2), rel_one(), rel_zero()});
        const DcspInstance inst =
            random_dcsp(lang, 4 + int(rng.below(5)), 5 + int(rng.below(6)),
                        rng.next(), 1 + int(rng.below(3)));
        try {
          stats.add(verify_reduction(eliminate_undeletable(inst), inst, oracle,
                                     oracle));
        } catch (const InfeasibleSourceError&) {
          ++stats.skipped;
        }
      } else if (name == "add-constants") {
        const Language lang({rel_even(4), rel_xor(), rel_one(), rel_zero()});
        const DcspInstance inst = random_dcsp(
            lang, 3 + int(rng.below(4)), 4 + int(rng.below(5)), rng.next());
        stats.add(
            verify_reduction(add_constants(inst, language_b3()), inst, oracle, oracle));
      } else if (name == "evenodd-to-odd") {
        const EvenOddSetInstance inst = random_oddset(
            3 + int(rng.below(8)), 1 + int(rng.below(5)), 4, rng.next(), true);
        stats.add(verify_reduction(evenodd_to_odd(inst), inst, oracle, oracle));
      } else if (name == "nc-to-oddset") {
        const NcInstance inst =
            random_nc(2 + int(rng.below(7)), 2 + int(rng.below(7)), rng.next());
        stats.add(verify_reduction(nc_to_oddset(inst), inst, oracle, oracle));
      } else if (name == "oddset-to-dcsp-b2") {
        const EvenOddSetInstance inst = random_oddset(
            3 + int(rng.below(3)), 1 + int(rng.below(3)), 3, rng.next());
        try {
          stats.add(
              verify_reduction(oddset_to_dcsp_b2(inst), inst, oracle, oracle));
        } catch (const InfeasibleSourceError&) {
          ++stats.skipped;
        }
      } else if (name == "dcsp-b2-to-b3") {
        const DcspInstance inst = random_dcsp(
            language_b2(), 3 + int(rng.below(4)), 4 + int(rng.below(4)), rng.next());
        stats.add(verify_reduction(dcsp_b2_to_b3(inst), inst, oracle, oracle));
      } else if (name == "dcsp-b3-to-nc") {
        const DcspInstance inst = random_dcsp(
            language_b3(), 3 + int(rng.below(4)), 4 + int(rng.below(4)), rng.next());
        stats.add(verify_reduction(dcsp_b3_to_nc(inst), inst, oracle, oracle));
      } else if (name == "dualize") {
        const Language lang(
            {rel_nand_nand_or(), rel_one(), rel_zero(), rel_implies()});
        const DcspInstance inst =
            random_dcsp(lang, 4 + int(rng.below(4)), 5 + int(rng.below(5)),
                        rng.next(), int(rng.below(2)));
        stats.add(verify_reduction(dualize(inst), inst, oracle, oracle));
      } else if (name == "self-improve") {
        const EvenOddSetInstance inst = random_oddset(
            1 + int(rng.below(4)), 1 + int(rng.below(4)), 3, rng.next());
        stats.add(
            verify_reduction(oddset_self_improve(inst), inst, oracle, oracle));
      } else if (name == "circuit-to-dcsp") {
        const MonotoneCircuit circuit =
            random_circuit(4 + int(rng.below(7)), rng.next());
        const ReductionArtifact art = circuit_to_dcsp(circuit);
        const auto target = oracle(art.target);
        VerifyReport report;
        int best = -1;
        const std::vector<int> inputs = circuit.input_indices();
        for (uint32_t mask = 0; mask < (uint32_t(1) << inputs.size()); ++mask) {
          std::vector<int> chosen;
          for (size_t i = 0; i < inputs.size(); ++i)
            if ((mask >> i) & 1) chosen.push_back(inputs[i]);
          if (circuit.evaluate(chosen) &&
              (best < 0 || int(chosen.size()) < best))
            best = int(chosen.size());
        }
        report.passed = target.has_value() && target->opt == best;
        if (report.passed) {
          const auto pulled = art.pull_back(target->best);
          const auto& chosen = std::get<SubsetSolution>(pulled);
          report.passed = circuit.evaluate(chosen.elements) &&
                          int(chosen.elements.size()) == best;
        }
        if (!report.passed) report.detail = "circuit gadget mismatch";
        stats.add(report);
      } else if (name == "pp-expand") {
        PpDefinition def;
        def.target = "xor";
        def.num_free = 2;
        def.num_existential = 2;
        def.atoms.push_back({"even4", {0, 1, 2, 3}});
        def.atoms.push_back({"zero", {2}});
        def.atoms.push_back({"one", {3}});
        const Language lang({rel_even(4), rel_one(), rel_zero(), rel_xor()});
        const DcspInstance inst = random_dcsp(lang, 5, 6, rng.next());
        stats.add(
            verify_reduction(pp_expand(inst, def), inst, oracle, oracle, 10, seed));
      } else {
        throw std::invalid_argument("unknown reduction '" + name + "'");
      }
    } catch (const std::invalid_argument&) {
      throw;
    }
  }

  if (format == "flat") {
    std::cout << "reduction=" << name << "\n";
    std::cout << "seeds=" << seeds << "\n";
    std::cout << "passed=" << stats.passed << "\n";
    std::cout << "skipped=" << stats.skipped << "\n";
    std::cout << "failed=" << stats.failed << "\n";
  } else {
    std::cout << name << ": " << stats.passed << " passed, " << stats.skipped
              << " skipped, " << stats.failed << " failed\n";
    if (stats.failed) std::cout << stats.first_failure << "\n";
  }
  return stats.failed == 0 ? kExitOk : kExitNoSolution;
}

// ---- gen ----

Language preset_language(const std::string& name) {
  if (name == "parity-units") return language_b2();
  if (name == "parity-xor") return language_b3();
  if (name == "nae") return Language({rel_nae()});
  if (name == "implications") return Language({rel_xor(), rel_implies()});
  if (name == "hitting3")
    return Language({rel_or(3), rel_one(), rel_zero(), rel_implies()});
  if (name == "cohitting3")
    return Language({rel_nand(3), rel_one(), rel_zero(), rel_implies()});
  if (name == "hitting2") return Language({rel_or(2), rel_zero(), rel_implies()});
  if (name == "monotone3") return language_iv2();
  if (name == "antimonotone3")
    return Language({rel_nand_nand_or(), rel_one(), rel_zero()});
  if (name == "units") return Language({rel_one(), rel_zero()});
  throw std::invalid_argument("unknown preset '" + name + "'");
}

// ---- experiment ----

struct MkdsResult {
  int edges = -1;
  std::vector<int> vertices;
};

MkdsResult best_multicolored_tuple(const ColoredGraph& graph) {
  // One guess per subset of class pairs; reconstruct and count every time.
  const int k = graph.num_classes;
  std::vector<std::pair<int, int>> all_pairs;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) all_pairs.emplace_back(i, j);

  const auto classes = graph.class_members();
  MkdsResult best;
  for (uint32_t guess = 0; guess < (uint32_t(1) << all_pairs.size()); ++guess) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t p = 0; p < all_pairs.size(); ++p)
      if ((guess >> p) & 1) pairs.push_back(all_pairs[p]);
    const MkdsGadget gadget = mkds_guess_to_oddset(graph, pairs);
    const SolveOutcome out = solve_oddset_exact(
        gadget.instance, k + int(pairs.size()), OddsetEngine::Auto);
    if (out.status == SolveStatus::Infeasible ||
        out.status == SolveStatus::BudgetExceeded)
      continue;

    // Chosen vertex per class: the least selected vertex element, or the
    // first vertex of an untouched class.
    std::vector<int> chosen(k + 1, -1);
    for (int e : out.elements) {
      const int v = gadget.element_vertex[e - 1];
      if (v >= 0 && chosen[graph.vertex_class[v]] < 0)
        chosen[graph.vertex_class[v]] = v;
    }
    std::vector<int> tuple;
    bool complete = true;
    for (int c = 1; c <= k; ++c) {
      if (chosen[c] < 0) {
        if (classes[c].empty()) {
          complete = false;
          break;
        }
        chosen[c] = classes[c][0];
      }
      tuple.push_back(chosen[c]);
    }
    if (!complete) continue;
    int edges = 0;
    for (size_t i = 0; i < tuple.size(); ++i)
      for (size_t j = i + 1; j < tuple.size(); ++j)
        edges += graph.has_edge(tuple[i], tuple[j]);
    if (edges > best.edges) {
      best.edges = edges;
      best.vertices = tuple;
    }
  }
  return best;
}

int run_experiment(const std::string& path, int recolor, int k, uint64_t seed,
                   const std::string& format) {
  ColoredGraph graph = parse_colored_graph(read_file(path));
  MkdsResult best;
  if (recolor > 0) {
    for (const ColoredGraph& colored : kds_color_coding(graph, k, seed, recolor)) {
      if (colored.num_classes > 4)
        throw std::invalid_argument("at most 4 classes are supported");
      const MkdsResult r = best_multicolored_tuple(colored);
      if (r.edges > best.edges) best = r;
    }
  } else {
    if (graph.num_classes > 4)
      throw std::invalid_argument("at most 4 classes are supported");
    best = best_multicolored_tuple(graph);
  }
  if (best.edges < 0) {
    std::cout << "no feasible tuple\n";
    return kExitNoSolution;
  }
  std::string names;
  for (size_t i = 0; i < best.vertices.size(); ++i) {
    if (i) names += ",";
    names += graph.vertices[best.vertices[i]];
  }
  if (format == "flat") {
    std::cout << "edges=" << best.edges << "\n";
    std::cout << "vertices=" << names << "\n";
  } else {
    std::cout << "best induced edges: " << best.edges << "\n";
    std::cout << "vertices: " << names << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classify, solve, and transform minimum-deletion CSP instances"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "output mode")
      ->check(CLI::IsMember({"human", "flat"}));

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify a language file");
  std::string classify_path;
  classify_cmd->add_option("file", classify_path)->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  std::string solve_path, method = "auto", polarity = "plus";
  int budget = 0, width = 2;
  solve_cmd->add_option("file", solve_path)->required();
  solve_cmd->add_option("--k", budget, "deletion budget");
  solve_cmd->add_option("--method", method)
      ->check(CLI::IsMember(
          {"auto", "brute", "valid", "bijunctive", "ihsb", "oddset", "nc"}));
  solve_cmd->add_option("--width", width, "clause width for --method ihsb");
  solve_cmd->add_option("--polarity", polarity)
      ->check(CLI::IsMember({"plus", "minus"}));

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "apply a reduction");
  std::string from, to, reduce_in, reduce_out, def_path;
  int groups = 2;
  reduce_cmd->add_option("--from", from)->required();
  reduce_cmd->add_option("--to", to)->required();
  reduce_cmd->add_option("input", reduce_in)->required();
  reduce_cmd->add_option("output", reduce_out)->required();
  reduce_cmd->add_option("--def", def_path, "pp definition file");
  reduce_cmd->add_option("--groups", groups, "clause groups for cnf->oddset");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a reduction suite");
  std::string reduction_name;
  int seeds = 20;
  verify_cmd->add_option("--reduction", reduction_name)->required();
  verify_cmd->add_option("--seeds", seeds);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  std::string out_path, lang_path, preset;
  uint64_t seed = 1;
  int vars = 6, constraints = 8, undeletable = 0;
  int universe = 6, sets = 4, max_size = 3;
  bool allow_even = false, satisfiable = false;
  int rows = 6, cols = 8, gates = 7, clauses = 6, vertices = 9, classes = 3,
      edge_count = 10;

  auto* gen_lang = gen_cmd->add_subcommand("lang", "write a preset language");
  gen_lang->add_option("--preset", preset)->required();
  gen_lang->add_option("-o,--output", out_path)->required();

  auto* gen_dcsp = gen_cmd->add_subcommand("dcsp");
  gen_dcsp->add_option("--lang", lang_path, "language file (or preset name)")
      ->required();
  gen_dcsp->add_option("--vars", vars);
  gen_dcsp->add_option("--constraints", constraints);
  gen_dcsp->add_option("--undeletable", undeletable);
  gen_dcsp->add_option("--seed", seed);
  gen_dcsp->add_option("-o,--output", out_path)->required();

  auto* gen_odds = gen_cmd->add_subcommand("oddset");
  gen_odds->add_option("--universe", universe);
  gen_odds->add_option("--sets", sets);
  gen_odds->add_option("--max-size", max_size);
  gen_odds->add_flag("--even", allow_even, "mix in even parity targets");
  gen_odds->add_option("--seed", seed);
  gen_odds->add_option("-o,--output", out_path)->required();

  auto* gen_nc = gen_cmd->add_subcommand("nc");
  gen_nc->add_option("--rows", rows);
  gen_nc->add_option("--cols", cols);
  gen_nc->add_option("--seed", seed);
  gen_nc->add_option("-o,--output", out_path)->required();

  auto* gen_circ = gen_cmd->add_subcommand("circuit");
  gen_circ->add_option("--gates", gates);
  gen_circ->add_option("--seed", seed);
  gen_circ->add_option("-o,--output", out_path)->required();

  auto* gen_cnf = gen_cmd->add_subcommand("cnf");
  gen_cnf->add_option("--vars", vars);
  gen_cnf->add_option("--clauses", clauses);
  gen_cnf->add_flag("--satisfiable", satisfiable);
  gen_cnf->add_option("--seed", seed);
  gen_cnf->add_option("-o,--output", out_path)->required();

  auto* gen_mkds = gen_cmd->add_subcommand("mkds");
  gen_mkds->add_option("--vertices", vertices);
  gen_mkds->add_option("--classes", classes);
  gen_mkds->add_option("--edges", edge_count);
  gen_mkds->add_option("--seed", seed);
  gen_mkds->add_option("-o,--output", out_path)->required();

  // experiment-mkds
  auto* exp_cmd = app.add_subcommand(
      "experiment-mkds", "exhaustive pair-guess search for the densest tuple");
  std::string exp_path;
  int recolor = 0, exp_k = 3;
  exp_cmd->add_option("file", exp_path)->required();
  exp_cmd->add_option("--recolor", recolor, "random recolorings (0 = use file)");
  exp_cmd->add_option("--k", exp_k, "classes when recoloring");
  exp_cmd->add_option("--seed", seed);

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* inner :
         sub->get_subcommands([](const CLI::App*) { return true; }))
      inner->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) return run_classify(classify_path, format);
    if (*solve_cmd)
      return run_solve(solve_path, budget, method, width, polarity, format);
    if (*reduce_cmd)
      return run_reduce(from, to, reduce_in, reduce_out, def_path, groups);
    if (*verify_cmd) return run_verify(reduction_name, seeds, format);
    if (*exp_cmd) return run_experiment(exp_path, recolor, exp_k, seed, format);
    if (*gen_cmd) {
      if (*gen_lang) {
        write_file(out_path, serialize(preset_language(preset)));
      } else if (*gen_dcsp) {
        Language lang;
        try {
          lang = preset_language(lang_path);
        } catch (const std::invalid_argument&) {
          lang = parse_language(read_file(lang_path));
        }
        write_file(out_path, serialize(random_dcsp(lang, vars, constraints,
                                                   seed, undeletable)));
      } else if (*gen_odds) {
        write_file(out_path, serialize(random_oddset(universe, sets, max_size,
                                                     seed, allow_even)));
      } else if (*gen_nc) {
        write_file(out_path, serialize(random_nc(rows, cols, seed)));
      } else if (*gen_circ) {
        write_file(out_path, serialize(random_circuit(gates, seed)));
      } else if (*gen_cnf) {
        write_file(out_path,
                   serialize(random_cnf3(vars, clauses, seed, satisfiable)));
      } else if (*gen_mkds) {
        write_file(out_path, serialize(random_colored_graph(
                                 vertices, classes, edge_count, seed)));
      }
      std::cout << "wrote " << out_path << "\n";
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InfeasibleSourceError& e) {
    std::cerr << "infeasible source: " << e.what() << "\n";
    return kExitNoSolution;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
