// Acceptance suite: one pass/fail line per criterion.  Every expected value
// is pinned here; report strings are timing-free so that reruns can be
// compared byte for byte.

#include <chrono>
#include <iostream>
#include <sstream>

#include "mincsp/classifier.hpp"
#include "mincsp/generators.hpp"
#include "mincsp/io.hpp"
#include "mincsp/reductions.hpp"
#include "mincsp/solvers.hpp"
#include "oracles.hpp"

using namespace mincsp;
using namespace mincsp::testing;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;
  std::string (*run)();
  std::string report;
  bool passed = false;
  double seconds = 0;
};

// Reports start with "ok" on success; anything else is a failure.

// ---- 1: classifier roster ----

std::string criterion_classifier_roster() {
  struct Entry {
    Language lang;
    DcspClass expected;
    int width;
    Polarity polarity;
  };
  const std::vector<Entry> roster = {
      {Language({rel_zero()}), DcspClass::PolyValid, 0, Polarity::Plus},
      {Language({rel_one()}), DcspClass::PolyValid, 0, Polarity::Plus},
      {Language({rel_implies()}), DcspClass::PolyValid, 0, Polarity::Plus},
      {Language({rel_xor(), rel_implies()}), DcspClass::FptBijunctive, 0,
       Polarity::Plus},
      {Language({rel_or(3), rel_one(), rel_zero(), rel_implies()}),
       DcspClass::ApproxIhsb, 3, Polarity::Plus},
      {Language({rel_nand(3), rel_one(), rel_zero(), rel_implies()}),
       DcspClass::ApproxIhsb, 3, Polarity::Minus},
      {Language({rel_even(4), rel_one(), rel_zero()}),
       DcspClass::OddsetEquivalent, 0, Polarity::Plus},
      {Language({rel_even(4), rel_xor()}), DcspClass::OddsetEquivalent, 0,
       Polarity::Plus},
      {Language({rel_or_or_not(), rel_one(), rel_zero()}), DcspClass::HardWp, 0,
       Polarity::Plus},
      {Language({rel_nand_nand_or(), rel_one(), rel_zero()}), DcspClass::HardWp,
       0, Polarity::Plus},
      {Language({rel_nae()}), DcspClass::HardNp, 0, Polarity::Plus},
  };
  std::ostringstream out;
  for (size_t i = 0; i < roster.size(); ++i) {
    const TrichotomyClass got = classify(roster[i].lang);
    if (got.dcsp_class != roster[i].expected)
      return "language " + std::to_string(i + 1) + ": got " +
             to_string(got.dcsp_class) + ", expected " +
             to_string(roster[i].expected);
    if (roster[i].expected == DcspClass::ApproxIhsb &&
        (got.ihs_width != roster[i].width ||
         got.ihs_polarity != roster[i].polarity))
      return "language " + std::to_string(i + 1) + ": wrong width or polarity";
    out << to_string(got.dcsp_class) << " ";
  }
  return "ok " + out.str();
}

// ---- 2: exact solver oracle equivalence ----

std::string criterion_exact_solvers() {
  const Language bij({rel_xor(), rel_implies(), rel_or(2), rel_one(), rel_zero()});
  int total_cost = 0;
  for (int seed = 1; seed <= 100; ++seed) {
    Rng rng{uint64_t(seed)};
    const DcspInstance inst =
        random_dcsp(bij, 4 + int(rng.below(9)), 6 + int(rng.below(19)),
                    rng.next(), int(rng.below(3)));
    const SolveOutcome expected = brute_force_dcsp(inst);
    const SolveOutcome got = solve_bijunctive(inst, int(inst.constraints.size()));
    if (expected.status != got.status)
      return "bijunctive seed " + std::to_string(seed) + ": status mismatch";
    if (expected.status == SolveStatus::Optimal) {
      if (expected.cost != got.cost)
        return "bijunctive seed " + std::to_string(seed) + ": cost " +
               std::to_string(got.cost) + " vs " + std::to_string(expected.cost);
      if (!check_deletion_set(inst, got.deleted, got.witness))
        return "bijunctive seed " + std::to_string(seed) + ": bad certificate";
      total_cost += got.cost;
    }
  }

  for (int seed = 1; seed <= 100; ++seed) {
    Rng rng(uint64_t(seed) * 101);
    const EvenOddSetInstance inst = random_oddset(
        3 + int(rng.below(10)), 1 + int(rng.below(8)), 4, rng.next());
    const SolveOutcome a =
        solve_oddset_exact(inst, inst.universe, OddsetEngine::Subsets);
    const SolveOutcome b =
        solve_oddset_exact(inst, inst.universe, OddsetEngine::Linear);
    if (a.status != b.status)
      return "odd set seed " + std::to_string(seed) + ": engine status mismatch";
    if (a.status == SolveStatus::Optimal &&
        (a.cost != b.cost || a.elements != b.elements))
      return "odd set seed " + std::to_string(seed) + ": engines disagree";
  }

  for (int seed = 1; seed <= 100; ++seed) {
    const NcInstance inst = random_nc(8, 6, uint64_t(seed) * 1009);
    const SolveOutcome a = solve_nc_exact(inst, NcEngine::Exhaustive);
    const SolveOutcome b = solve_nc_exact(inst, NcEngine::Syndrome);
    if (a.cost != b.cost)
      return "codeword seed " + std::to_string(seed) + ": engines disagree";
    if (nc_distance(inst, a.vector_solution) != a.cost ||
        nc_distance(inst, b.vector_solution) != b.cost)
      return "codeword seed " + std::to_string(seed) + ": bad solution vector";
  }
  return "ok total bijunctive cost " + std::to_string(total_cost);
}

// ---- 3: approximation ratio ----

std::string criterion_approx_ratio() {
  const Language ihs2({rel_zero(), rel_implies(), rel_or(2)});
  int worst_num = 0, worst_den = 1;
  for (int seed = 1; seed <= 200; ++seed) {
    Rng rng(uint64_t(seed) * 31);
    const DcspInstance inst =
        random_dcsp(ihs2, 4 + int(rng.below(9)), 6 + int(rng.below(19)),
                    rng.next(), int(rng.below(3)));
    SolveOutcome expected = brute_force_dcsp(inst);
    SolveOutcome got;
    try {
      got = approx_ihsb(inst, 2, Polarity::Plus);
    } catch (const std::exception& e) {
      return "seed " + std::to_string(seed) + ": " + e.what();
    }
    if (expected.status == SolveStatus::Infeasible) {
      if (got.status != SolveStatus::Infeasible)
        return "seed " + std::to_string(seed) + ": missed infeasibility";
      continue;
    }
    if (got.status != SolveStatus::WithinRatio)
      return "seed " + std::to_string(seed) + ": unexpected status";
    if (got.ratio != 3)
      return "seed " + std::to_string(seed) + ": declared ratio is " +
             std::to_string(got.ratio) + ", clause language expects 3";
    if (got.cost > 3 * expected.cost)
      return "seed " + std::to_string(seed) + ": cost " +
             std::to_string(got.cost) + " breaks 3 * " +
             std::to_string(expected.cost);
    if (got.lp_optimum > Rational(expected.cost))
      return "seed " + std::to_string(seed) + ": relaxation above the optimum";
    if (!check_deletion_set(inst, got.deleted, got.witness))
      return "seed " + std::to_string(seed) + ": bad certificate";
    if (expected.cost > 0 && got.cost * worst_den > worst_num * expected.cost) {
      worst_num = got.cost;
      worst_den = expected.cost;
    }
  }
  return "ok worst ratio " + std::to_string(worst_num) + "/" +
         std::to_string(worst_den);
}

// ---- 4: the four-problem equivalence cycle ----

// Exact optimum of a codeword instance whose rows marked hard must hold.
// Any solution breaking a hard row group costs more than all soft rows
// together, so restricting to the hard-row coset is exact.
std::optional<std::pair<int, Gf2Vector>> constrained_nc_opt(
    const NcInstance& inst, const std::vector<bool>& hard) {
  const int n = inst.a.cols();
  int hard_count = 0;
  for (bool h : hard) hard_count += h;
  Gf2Matrix hm(hard_count, std::max(n, 1));
  Gf2Vector hrhs(hard_count);
  int row = 0;
  for (int r = 0; r < inst.a.rows(); ++r) {
    if (!hard[r]) continue;
    for (int c = 0; c < n; ++c)
      if (inst.a.get(r, c)) hm.set(row, c, true);
    hrhs.set(row, inst.b.get(r));
    ++row;
  }
  const auto base = solve_linear_system(hm, hrhs);
  if (!base) return std::nullopt;
  const RowReduction rr = row_reduce(hm);
  std::vector<bool> pivot(n, false);
  for (int c : rr.pivot_cols) pivot[c] = true;
  std::vector<Gf2Vector> kernel;
  for (int f = 0; f < n; ++f) {
    if (pivot[f]) continue;
    Gf2Vector k(n);
    k.set(f, true);
    for (int pr = 0; pr < rr.rank; ++pr)
      if (rr.reduced.get(pr, f)) k.set(rr.pivot_cols[pr], true);
    kernel.push_back(std::move(k));
  }
  if (kernel.size() > 24) throw std::length_error("coset too large");

  std::optional<std::pair<int, Gf2Vector>> best;
  Gf2Vector x = *base;
  uint32_t gray_prev = 0;
  for (uint64_t i = 0; i < (uint64_t(1) << kernel.size()); ++i) {
    if (i) {
      const uint32_t gray = uint32_t(i ^ (i >> 1));
      x.xor_with(kernel[std::countr_zero(gray ^ gray_prev)]);
      gray_prev = gray;
    }
    const int d = nc_distance(inst, x);
    if (!best || d < best->first) best = {d, x};
  }
  return best;
}

std::string criterion_cycle() {
  for (int seed = 1; seed <= 50; ++seed) {
    const NcInstance nc0 = random_nc(6, 8, uint64_t(seed) * 733);
    const int opt = nc_opt(nc0)->opt;
    const std::string tag = "seed " + std::to_string(seed) + ": ";

    const ReductionArtifact a1 = nc_to_oddset(nc0);
    const auto& odds = std::get<EvenOddSetInstance>(a1.target);
    const auto odds_opt = oddset_opt(odds);
    if (!odds_opt || odds_opt->opt != opt) return tag + "odd set station differs";

    const ReductionArtifact a2 = oddset_to_dcsp_b2(odds, false);
    const auto& b2 = std::get<DcspInstance>(a2.target);
    const auto b2_opt = affine_dcsp_opt(b2);
    if (!b2_opt || b2_opt->opt != opt) return tag + "first deletion station differs";

    const ReductionArtifact a3 = dcsp_b2_to_b3(b2);
    const auto& b3 = std::get<DcspInstance>(a3.target);
    const auto b3_opt = affine_dcsp_opt(b3);
    if (!b3_opt || b3_opt->opt != opt) return tag + "second deletion station differs";

    const ReductionArtifact a4 = eliminate_undeletable(b3);
    const auto& plain = std::get<DcspInstance>(a4.target);
    const ReductionArtifact a5 = dcsp_b3_to_nc(plain);
    const auto& nc1 = std::get<NcInstance>(a5.target);

    // Rows copied from undeletable constraints must hold in any optimum:
    // breaking one violates more rows than all soft rows together.
    std::vector<bool> hard;
    const int m = int(b3.constraints.size());
    int soft_rows = 0;
    for (const ConstraintInstance& c : b3.constraints)
      for (int k = 0; k < (c.undeletable ? m + 1 : 1); ++k) {
        hard.push_back(c.undeletable);
        soft_rows += !c.undeletable;
      }
    if (soft_rows > m) return tag + "internal row accounting is off";
    const auto terminal = constrained_nc_opt(nc1, hard);
    if (!terminal || terminal->first != opt)
      return tag + "terminal station differs";

    // Pull the optimal terminal solution back through every artifact.
    const SolutionValue s_plain = a5.pull_back(VectorSolution{terminal->second});
    if (solution_cost(s_plain, AnyInstance{plain}) != opt)
      return tag + "pull-back lost optimality at the eliminated station";
    const SolutionValue s_b3 = a4.pull_back(s_plain);
    if (!solution_feasible(s_b3, AnyInstance{b3}) ||
        solution_cost(s_b3, AnyInstance{b3}) != opt)
      return tag + "pull-back lost optimality at the second deletion station";
    const SolutionValue s_b2 = a3.pull_back(s_b3);
    if (!solution_feasible(s_b2, AnyInstance{b2}) ||
        solution_cost(s_b2, AnyInstance{b2}) != opt)
      return tag + "pull-back lost optimality at the first deletion station";
    const SolutionValue s_odds = a2.pull_back(s_b2);
    if (!solution_feasible(s_odds, AnyInstance{odds}) ||
        solution_cost(s_odds, AnyInstance{odds}) != opt)
      return tag + "pull-back lost optimality at the odd set station";
    const SolutionValue s_nc = a1.pull_back(s_odds);
    if (!solution_feasible(s_nc, AnyInstance{nc0}) ||
        solution_cost(s_nc, AnyInstance{nc0}) != opt)
      return tag + "pull-back lost optimality at the source";
  }
  return "ok all 50 cycles preserve the optimum";
}

// ---- 5: reduction suites plus the mutation test ----

std::string criterion_reductions() {
  const Oracle oracle = exact_oracle();
  int verified = 0, skipped = 0;

  for (int seed = 1; seed <= 50; ++seed) {
    Rng rng(uint64_t(seed) * 13);
    const std::string tag = "seed " + std::to_string(seed) + ": ";

    {
      const Language lang({rel_implies(), rel_or(2), rel_one(), rel_zero()});
      const DcspInstance inst =
          random_dcsp(lang, 4 + int(rng.below(6)), 5 + int(rng.below(6)),
                      rng.next(), 1 + int(rng.below(3)));
      try {
        const VerifyReport r =
            verify_reduction(eliminate_undeletable(inst), inst, oracle, oracle);
        if (!r.passed) return tag + "undeletable elimination: " + r.detail;
        verified += !r.skipped_infeasible;
      } catch (const InfeasibleSourceError&) {
        ++skipped;
      }
    }
    {
      const Language lang({rel_even(4), rel_xor(), rel_one(), rel_zero()});
      const DcspInstance inst = random_dcsp(
          lang, 3 + int(rng.below(5)), 4 + int(rng.below(5)), rng.next());
      const VerifyReport r = verify_reduction(add_constants(inst, language_b3()),
                                              inst, oracle, oracle);
      if (!r.passed) return tag + "constant adding: " + r.detail;
    }
    {
      const EvenOddSetInstance inst = random_oddset(
          3 + int(rng.below(8)), 1 + int(rng.below(5)), 4, rng.next(), true);
      const VerifyReport r =
          verify_reduction(evenodd_to_odd(inst), inst, oracle, oracle);
      if (!r.passed) return tag + "parity folding: " + r.detail;
    }
    {
      const MonotoneCircuit circuit =
          random_circuit(4 + int(rng.below(7)), rng.next());
      const ReductionArtifact art = circuit_to_dcsp(circuit);
      const auto target = oracle(art.target);
      const auto source = circuit_opt(circuit);
      if (!target || !source || target->opt != source->first)
        return tag + "circuit gadget: optimum mismatch";
      const auto pulled = art.pull_back(target->best);
      const auto& chosen = std::get<SubsetSolution>(pulled);
      if (!circuit.evaluate(chosen.elements) ||
          int(chosen.elements.size()) != source->first)
        return tag + "circuit gadget: pull-back mismatch";
    }
    {
      const Language lang(
          {rel_nand_nand_or(), rel_one(), rel_zero(), rel_implies()});
      const DcspInstance inst =
          random_dcsp(lang, 4 + int(rng.below(6)), 5 + int(rng.below(5)),
                      rng.next(), int(rng.below(2)));
      const VerifyReport r = verify_reduction(dualize(inst), inst, oracle, oracle);
      if (!r.passed) return tag + "dualize: " + r.detail;
    }
  }

  // Mutation: one copy instead of m+1 must be caught.
  DcspInstance bait;
  bait.language = Language({rel_one(), rel_zero()});
  bait.variables = {"a"};
  bait.constraints.push_back({"zero", {0}, true});
  bait.constraints.push_back({"one", {0}, false});
  bait.constraints.push_back({"one", {0}, false});
  bait.constraints.push_back({"one", {0}, false});
  ReductionArtifact mutated = eliminate_undeletable(bait);
  DcspInstance corrupted = std::get<DcspInstance>(mutated.target);
  corrupted.constraints.erase(corrupted.constraints.begin() + 1,
                              corrupted.constraints.begin() + 5);
  mutated.target = corrupted;
  if (verify_reduction(mutated, bait, oracle, oracle).passed)
    return "the corrupted copy count was not caught";

  return "ok " + std::to_string(verified) + " verified, " +
         std::to_string(skipped) + " infeasible sources skipped, mutation caught";
}

// ---- 6: the squaring law ----

std::string criterion_self_improvement() {
  for (int seed = 1; seed <= 50; ++seed) {
    Rng rng(uint64_t(seed) * 17);
    const EvenOddSetInstance inst = random_oddset(
        1 + int(rng.below(4)), 1 + int(rng.below(4)), 4, rng.next());
    const auto source = oddset_opt(inst);
    const ReductionArtifact art = oddset_self_improve(inst);
    const auto target = oddset_opt(std::get<EvenOddSetInstance>(art.target));
    if (!source) {
      if (target)
        return "seed " + std::to_string(seed) +
               ": infeasible source, feasible square";
      continue;
    }
    const int k = source->opt;
    if (!target || target->opt != 1 + k + k * k)
      return "seed " + std::to_string(seed) + ": square is " +
             (target ? std::to_string(target->opt) : "infeasible") +
             ", expected " + std::to_string(1 + k + k * k);
    const auto pulled = art.pull_back(target->best);
    if (!solution_feasible(pulled, AnyInstance{inst}) ||
        solution_cost(pulled, AnyInstance{inst}) != k)
      return "seed " + std::to_string(seed) + ": pulled solution not optimal";
  }
  return "ok squaring law holds on all 50 instances";
}

// ---- 7: the guess gadget recovers the densest tuple ----

struct TupleSearch {
  int edges = -1;
  std::vector<int> tuple;
};

TupleSearch exhaustive_densest(const ColoredGraph& g) {
  const auto classes = g.class_members();
  TupleSearch best;
  std::vector<int> tuple(g.num_classes);
  auto rec = [&](auto&& self, int c) -> void {
    if (c > g.num_classes) {
      int edges = 0;
      for (int i = 0; i < g.num_classes; ++i)
        for (int j = i + 1; j < g.num_classes; ++j)
          edges += g.has_edge(tuple[i], tuple[j]);
      if (edges > best.edges) {
        best.edges = edges;
        best.tuple = tuple;
      }
      return;
    }
    for (int v : classes[c]) {
      tuple[c - 1] = v;
      self(self, c + 1);
    }
  };
  rec(rec, 1);
  return best;
}

// Mirrors the experiment driver: loop every guess, solve, reconstruct.
int gadget_best_edges(const ColoredGraph& g, const TupleSearch& best,
                      std::string* error) {
  std::vector<std::pair<int, int>> all_pairs;
  for (int i = 1; i <= g.num_classes; ++i)
    for (int j = i + 1; j <= g.num_classes; ++j) all_pairs.emplace_back(i, j);

  // The correct guess: pairs realized by an optimal tuple.
  std::vector<std::pair<int, int>> correct;
  std::set<int> touched;
  for (size_t i = 0; i < best.tuple.size(); ++i)
    for (size_t j = i + 1; j < best.tuple.size(); ++j)
      if (g.has_edge(best.tuple[i], best.tuple[j])) {
        correct.emplace_back(int(i) + 1, int(j) + 1);
        touched.insert(int(i) + 1);
        touched.insert(int(j) + 1);
      }
  {
    const MkdsGadget gadget = mkds_guess_to_oddset(g, correct);
    const auto opt = oddset_opt(gadget.instance);
    const int expected = int(touched.size()) + best.edges;
    if (!opt || opt->opt != expected) {
      *error = "correct guess optimum is " +
               (opt ? std::to_string(opt->opt) : "infeasible") + ", expected " +
               std::to_string(expected);
      return -1;
    }
  }

  const auto classes = g.class_members();
  int best_edges = -1;
  for (uint32_t guess = 0; guess < (uint32_t(1) << all_pairs.size()); ++guess) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t p = 0; p < all_pairs.size(); ++p)
      if ((guess >> p) & 1) pairs.push_back(all_pairs[p]);
    const MkdsGadget gadget = mkds_guess_to_oddset(g, pairs);
    const SolveOutcome out = solve_oddset_exact(
        gadget.instance, g.num_classes + int(pairs.size()));
    if (out.status != SolveStatus::Optimal) continue;
    std::vector<int> chosen(g.num_classes + 1, -1);
    for (int e : out.elements) {
      const int v = gadget.element_vertex[e - 1];
      if (v >= 0 && chosen[g.vertex_class[v]] < 0) chosen[g.vertex_class[v]] = v;
    }
    int edges = 0;
    std::vector<int> tuple;
    for (int c = 1; c <= g.num_classes; ++c)
      tuple.push_back(chosen[c] >= 0 ? chosen[c] : classes[c][0]);
    for (size_t i = 0; i < tuple.size(); ++i)
      for (size_t j = i + 1; j < tuple.size(); ++j)
        edges += g.has_edge(tuple[i], tuple[j]);
    best_edges = std::max(best_edges, edges);
  }
  return best_edges;
}

std::string criterion_mkds() {
  ColoredGraph rainbow;
  rainbow.num_classes = 3;
  rainbow.vertices = {"a", "b", "c"};
  rainbow.vertex_class = {1, 2, 3};
  rainbow.edges = {{0, 1}, {1, 2}, {0, 2}};
  std::string error;
  if (gadget_best_edges(rainbow, exhaustive_densest(rainbow), &error) != 3)
    return "rainbow triangle: " + (error.empty() ? "missed an edge" : error);

  for (int seed = 1; seed <= 20; ++seed) {
    Rng rng(uint64_t(seed) * 41);
    const ColoredGraph g =
        random_colored_graph(9, 3, 4 + int(rng.below(14)), rng.next());
    const TupleSearch best = exhaustive_densest(g);
    error.clear();
    const int got = gadget_best_edges(g, best, &error);
    if (got != best.edges)
      return "seed " + std::to_string(seed) + ": gadget found " +
             std::to_string(got) + ", exhaustive search found " +
             std::to_string(best.edges) +
             (error.empty() ? "" : " (" + error + ")");
  }
  return "ok gadget matches exhaustive search on all 21 graphs";
}

// ---- 8: the partition gadget ----

std::string criterion_max3sat() {
  for (int seed = 1; seed <= 20; ++seed) {
    const Cnf3 cnf = random_cnf3(4, 3 + int(Rng(seed).below(4)),
                                 uint64_t(seed) * 97, true);
    const Max3SatGadget gadget = max3sat_to_oddset(cnf, 2);
    const SolveOutcome out =
        solve_oddset_exact(gadget.instance, 2, OddsetEngine::Subsets);
    if (out.status != SolveStatus::Optimal || out.cost != 2)
      return "seed " + std::to_string(seed) + ": optimum is not 2";
    const auto assignment =
        max3sat_extract_assignment(gadget, cnf, out.elements);
    if (!assignment) return "seed " + std::to_string(seed) + ": no assignment";
    if (!cnf.satisfied(*assignment))
      return "seed " + std::to_string(seed) +
             ": reconstructed assignment misses a clause";
  }
  return "ok all 20 formulas certified satisfiable through the gadget";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"classifier-roster", 1.0, criterion_classifier_roster},
      {"exact-solver-oracle-equivalence", 120.0, criterion_exact_solvers},
      {"approximation-ratio", 300.0, criterion_approx_ratio},
      {"equivalence-cycle", 300.0, criterion_cycle},
      {"reduction-verification", 180.0, criterion_reductions},
      {"self-improvement-law", 180.0, criterion_self_improvement},
      {"densest-tuple-gadget", 180.0, criterion_mkds},
      {"partition-gadget", 180.0, criterion_max3sat},
  };

  bool all_passed = true;
  for (Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    try {
      c.report = c.run();
    } catch (const std::exception& e) {
      c.report = std::string("exception: ") + e.what();
    }
    c.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    c.passed = c.report.rfind("ok", 0) == 0 && c.seconds <= c.limit_seconds;
    all_passed = all_passed && c.passed;
  }

  // Criterion 9: rerunning any criterion yields a byte-identical report.
  bool deterministic = true;
  std::string determinism_note = "ok all reports identical on a second run";
  for (Criterion& c : criteria) {
    std::string second;
    try {
      second = c.run();
    } catch (const std::exception& e) {
      second = std::string("exception: ") + e.what();
    }
    if (second != c.report) {
      deterministic = false;
      determinism_note = c.name + " changed between runs";
      break;
    }
  }
  all_passed = all_passed && deterministic;

  int index = 1;
  for (const Criterion& c : criteria) {
    std::printf("[%s] %d %s (%.2fs): %s\n", c.passed ? "PASS" : "FAIL", index++,
                c.name.c_str(), c.seconds, c.report.c_str());
  }
  std::printf("[%s] %d determinism: %s\n", deterministic ? "PASS" : "FAIL",
              index, determinism_note.c_str());
  return all_passed ? 0 : 1;
}
