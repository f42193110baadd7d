#include "doctest.h"
#include "mincsp/generators.hpp"
#include "mincsp/io.hpp"
#include "mincsp/solvers.hpp"

using namespace mincsp;

namespace {

DcspInstance unit_pair(bool undeletable_both) {
  DcspInstance inst;
  inst.language = Language({rel_one(), rel_zero()});
  inst.variables = {"a"};
  inst.constraints.push_back({"one", {0}, undeletable_both});
  inst.constraints.push_back({"zero", {0}, undeletable_both});
  return inst;
}

DcspInstance xor_triangle() {
  DcspInstance inst;
  inst.language = Language({rel_xor(), rel_implies()});
  inst.variables = {"a", "b", "c"};
  inst.constraints.push_back({"xor", {0, 1}, false});
  inst.constraints.push_back({"xor", {1, 2}, false});
  inst.constraints.push_back({"xor", {0, 2}, false});
  return inst;
}

}  // namespace

TEST_CASE("brute_force_dcsp basics") {
  const SolveOutcome contradictory = brute_force_dcsp(unit_pair(false));
  CHECK(contradictory.status == SolveStatus::Optimal);
  CHECK(contradictory.cost == 1);
  CHECK(contradictory.deleted == std::vector<int>{0});  // lex-least tie break

  CHECK(brute_force_dcsp(unit_pair(true)).status == SolveStatus::Infeasible);

  const SolveOutcome tri = brute_force_dcsp(xor_triangle());
  CHECK(tri.cost == 1);
}

TEST_CASE("solve_valid") {
  DcspInstance zero_side;
  zero_side.language = Language({rel_implies(), rel_zero()});
  zero_side.variables = {"a", "b"};
  zero_side.constraints.push_back({"imp", {0, 1}, false});
  zero_side.constraints.push_back({"zero", {0}, false});
  const SolveOutcome z = solve_valid(zero_side);
  CHECK(z.cost == 0);
  CHECK(check_deletion_set(zero_side, z.deleted, z.witness));

  DcspInstance one_side;
  one_side.language = Language({rel_implies(), rel_one()});
  one_side.variables = {"a", "b"};
  one_side.constraints.push_back({"imp", {0, 1}, false});
  one_side.constraints.push_back({"one", {0}, false});
  const SolveOutcome o = solve_valid(one_side);
  CHECK(o.cost == 0);
  CHECK(check_deletion_set(one_side, o.deleted, o.witness));

  CHECK_THROWS_AS(solve_valid(unit_pair(false)), std::invalid_argument);
}

TEST_CASE("solve_bijunctive examples") {
  const SolveOutcome tri = solve_bijunctive(xor_triangle(), 1);
  REQUIRE(tri.status == SolveStatus::Optimal);
  CHECK(tri.cost == 1);

  DcspInstance sat;
  sat.language = Language({rel_xor(), rel_implies()});
  sat.variables = {"a", "b"};
  sat.constraints.push_back({"xor", {0, 1}, false});
  sat.constraints.push_back({"imp", {0, 1}, false});
  const SolveOutcome s = solve_bijunctive(sat, 0);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.cost == 0);

  CHECK(solve_bijunctive(xor_triangle(), 0).status ==
        SolveStatus::BudgetExceeded);

  DcspInstance stuck = xor_triangle();
  for (auto& c : stuck.constraints) c.undeletable = true;
  CHECK(solve_bijunctive(stuck, 3).status == SolveStatus::Infeasible);
}

TEST_CASE("solve_bijunctive handles repeated scope variables") {
  DcspInstance inst;
  inst.language = Language({rel_xor(), rel_implies()});
  inst.variables = {"a"};
  inst.constraints.push_back({"xor", {0, 0}, false});  // never satisfiable
  const SolveOutcome out = solve_bijunctive(inst, 1);
  REQUIRE(out.status == SolveStatus::Optimal);
  CHECK(out.cost == 1);
}

TEST_CASE("solve_bijunctive matches brute force on random instances") {
  const Language lang({rel_xor(), rel_implies(), rel_or(2), rel_one(), rel_zero()});
  Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const DcspInstance inst =
        random_dcsp(lang, 4 + int(rng.below(7)), 6 + int(rng.below(12)),
                    rng.next(), int(rng.below(3)));
    const SolveOutcome expected = brute_force_dcsp(inst);
    const SolveOutcome got =
        solve_bijunctive(inst, int(inst.constraints.size()));
    REQUIRE(got.status == expected.status);
    if (expected.status == SolveStatus::Optimal) {
      CHECK(got.cost == expected.cost);
      CHECK(check_deletion_set(inst, got.deleted, got.witness));
    }
  }
}

TEST_CASE("approx_ihsb on a satisfiable instance deletes nothing") {
  DcspInstance inst;
  inst.language = Language({rel_implies(), rel_zero(), rel_or(2)});
  inst.variables = {"a", "b"};
  inst.constraints.push_back({"imp", {0, 1}, false});
  inst.constraints.push_back({"or2", {0, 1}, false});
  const SolveOutcome out = approx_ihsb(inst, 2, Polarity::Plus);
  REQUIRE(out.status == SolveStatus::WithinRatio);
  CHECK(out.cost == 0);
  CHECK(out.deleted.empty());
}

TEST_CASE("approx_ihsb chain example stays within the bound") {
  // one(a), a->b, b->c, zero(c): optimum 1, width-1 ratio bound 2.
  DcspInstance inst;
  inst.language = Language({rel_implies(), rel_one(), rel_zero()});
  inst.variables = {"a", "b", "c"};
  inst.constraints.push_back({"one", {0}, false});
  inst.constraints.push_back({"imp", {0, 1}, false});
  inst.constraints.push_back({"imp", {1, 2}, false});
  inst.constraints.push_back({"zero", {2}, false});
  const SolveOutcome out = approx_ihsb(inst, 1, Polarity::Plus);
  REQUIRE(out.status == SolveStatus::WithinRatio);
  CHECK(out.ratio == 2);
  const SolveOutcome expected = brute_force_dcsp(inst);
  CHECK(expected.cost == 1);
  CHECK(out.cost <= out.ratio * expected.cost);
  CHECK(check_deletion_set(inst, out.deleted, out.witness));
}

TEST_CASE("approx_ihsb respects undeletable constraints") {
  DcspInstance inst;
  inst.language = Language({rel_implies(), rel_one(), rel_zero()});
  inst.variables = {"a", "b"};
  inst.constraints.push_back({"one", {0}, true});
  inst.constraints.push_back({"imp", {0, 1}, true});
  inst.constraints.push_back({"zero", {1}, false});
  const SolveOutcome out = approx_ihsb(inst, 1, Polarity::Plus);
  REQUIRE(out.status == SolveStatus::WithinRatio);
  CHECK(out.cost == 1);
  CHECK(out.deleted == std::vector<int>{2});

  DcspInstance impossible;
  impossible.language = Language({rel_one(), rel_zero()});
  impossible.variables = {"a"};
  impossible.constraints.push_back({"one", {0}, true});
  impossible.constraints.push_back({"zero", {0}, true});
  CHECK(approx_ihsb(impossible, 1, Polarity::Plus).status ==
        SolveStatus::Infeasible);
}

TEST_CASE("approx_ihsb ratio sweep, both polarities") {
  const Language plus({rel_zero(), rel_implies(), rel_or(2)});
  const Language minus({rel_one(), rel_implies(), rel_nand(2)});
  Rng rng(57);
  for (int trial = 0; trial < 30; ++trial) {
    const DcspInstance inst =
        random_dcsp(plus, 4 + int(rng.below(7)), 6 + int(rng.below(12)),
                    rng.next());
    const SolveOutcome expected = brute_force_dcsp(inst);
    const SolveOutcome got = approx_ihsb(inst, 2, Polarity::Plus);
    REQUIRE(got.status == SolveStatus::WithinRatio);
    CHECK(got.ratio == 3);
    CHECK(got.cost <= 3 * expected.cost);
    CHECK(got.lp_optimum <= Rational(expected.cost));
    CHECK(check_deletion_set(inst, got.deleted, got.witness));

    const DcspInstance dual_inst =
        random_dcsp(minus, 4 + int(rng.below(7)), 6 + int(rng.below(12)),
                    rng.next());
    const SolveOutcome dual_expected = brute_force_dcsp(dual_inst);
    const SolveOutcome dual_got = approx_ihsb(dual_inst, 2, Polarity::Minus);
    REQUIRE(dual_got.status == SolveStatus::WithinRatio);
    CHECK(dual_got.cost <= 3 * dual_expected.cost);
    CHECK(check_deletion_set(dual_inst, dual_got.deleted, dual_got.witness));
  }
}

TEST_CASE("solve_oddset_exact examples") {
  EvenOddSetInstance units;
  units.universe = 2;
  units.sets.push_back({{1}, ParityTarget::Odd});
  units.sets.push_back({{2}, ParityTarget::Odd});
  const SolveOutcome out = solve_oddset_exact(units, 2);
  REQUIRE(out.status == SolveStatus::Optimal);
  CHECK(out.cost == 2);
  CHECK(out.elements == std::vector<int>{1, 2});

  EvenOddSetInstance empty_odd;
  empty_odd.universe = 3;
  empty_odd.sets.push_back({{}, ParityTarget::Odd});
  CHECK(solve_oddset_exact(empty_odd, 3).status == SolveStatus::Infeasible);

  CHECK(solve_oddset_exact(units, 1).status == SolveStatus::BudgetExceeded);
}

TEST_CASE("odd set engines agree") {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const EvenOddSetInstance inst = random_oddset(
        3 + int(rng.below(8)), 1 + int(rng.below(6)), 4, rng.next(), true);
    const SolveOutcome a =
        solve_oddset_exact(inst, inst.universe, OddsetEngine::Subsets);
    const SolveOutcome b =
        solve_oddset_exact(inst, inst.universe, OddsetEngine::Linear);
    CHECK(a.status == b.status);
    if (a.status == SolveStatus::Optimal) {
      CHECK(a.cost == b.cost);
      CHECK(a.elements == b.elements);
    }
  }
}

TEST_CASE("solve_nc_exact examples") {
  NcInstance inst;
  inst.a = Gf2Matrix(2, 1);
  inst.a.set(0, 0, true);
  inst.a.set(1, 0, true);
  inst.b = Gf2Vector::from_string("10");
  const SolveOutcome out = solve_nc_exact(inst);
  CHECK(out.cost == 1);

  const NcInstance planted = random_nc(6, 4, 77);
  NcInstance exact = planted;
  Gf2Vector x0(4);
  x0.set(1, true);
  x0.set(3, true);
  exact.b = exact.a.multiply(x0);
  CHECK(solve_nc_exact(exact).cost == 0);
}

TEST_CASE("nearest codeword engines agree") {
  Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const NcInstance inst = random_nc(8, 6, rng.next());
    const SolveOutcome a = solve_nc_exact(inst, NcEngine::Exhaustive);
    const SolveOutcome b = solve_nc_exact(inst, NcEngine::Syndrome);
    CHECK(a.cost == b.cost);
    CHECK(nc_distance(inst, a.vector_solution) == a.cost);
    CHECK(nc_distance(inst, b.vector_solution) == b.cost);
  }
}

TEST_CASE("solve_auto dispatches each class correctly") {
  Rng rng(71);

  // 0-valid language
  const Language valid({rel_implies(), rel_zero()});
  // bijunctive
  const Language bij({rel_xor(), rel_implies()});
  // width-3 hitting language
  const Language ihs({rel_zero(), rel_implies(), rel_or(3)});
  // parity chain class
  const Language affine({rel_even(4), rel_one(), rel_zero()});
  // hard
  const Language hard({rel_or_or_not(), rel_one(), rel_zero()});
  const Language nae({rel_nae()});

  for (const Language& lang : {valid, bij, affine, hard, nae}) {
    for (int trial = 0; trial < 5; ++trial) {
      const DcspInstance inst = random_dcsp(lang, 5, 6, rng.next());
      const SolveOutcome expected = brute_force_dcsp(inst);
      const SolveOutcome got = solve_auto(inst, int(inst.constraints.size()));
      REQUIRE(got.status == SolveStatus::Optimal);
      CHECK(got.cost == expected.cost);
      CHECK(check_deletion_set(inst, got.deleted, got.witness));
    }
  }
  for (int trial = 0; trial < 5; ++trial) {
    const DcspInstance inst = random_dcsp(ihs, 5, 6, rng.next());
    const SolveOutcome expected = brute_force_dcsp(inst);
    const SolveOutcome got = solve_auto(inst, int(inst.constraints.size()));
    REQUIRE(got.status == SolveStatus::WithinRatio);
    CHECK(got.cost <= got.ratio * expected.cost);
    CHECK(check_deletion_set(inst, got.deleted, got.witness));
  }
}

TEST_CASE("solve_auto on an undeletable affine instance") {
  DcspInstance inst;
  inst.language = Language({rel_even(4), rel_one(), rel_zero()});
  inst.variables = {"a", "b", "c", "d"};
  inst.constraints.push_back({"even4", {0, 1, 2, 3}, true});
  inst.constraints.push_back({"one", {0}, false});
  inst.constraints.push_back({"one", {1}, false});
  inst.constraints.push_back({"one", {2}, false});
  inst.constraints.push_back({"one", {3}, false});
  inst.constraints.push_back({"zero", {0}, false});
  const SolveOutcome expected = brute_force_dcsp(inst);
  const SolveOutcome got = solve_auto(inst, 6);
  REQUIRE(got.status == SolveStatus::Optimal);
  CHECK(got.cost == expected.cost);
  CHECK(check_deletion_set(inst, got.deleted, got.witness));

  DcspInstance stuck;
  stuck.language = Language({rel_even(4), rel_one(), rel_zero()});
  stuck.variables = {"a"};
  stuck.constraints.push_back({"one", {0}, true});
  stuck.constraints.push_back({"zero", {0}, true});
  CHECK(solve_auto(stuck, 2).status == SolveStatus::Infeasible);
}
