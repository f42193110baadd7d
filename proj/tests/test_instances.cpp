#include "doctest.h"
#include "mincsp/generators.hpp"
#include "mincsp/instances.hpp"
#include "mincsp/io.hpp"

using namespace mincsp;

namespace {

DcspInstance unit_pair() {
  DcspInstance inst;
  inst.language = Language({rel_one(), rel_zero()});
  inst.variables = {"a"};
  inst.constraints.push_back({"one", {0}, false});
  inst.constraints.push_back({"zero", {0}, false});
  return inst;
}

DcspInstance xor_triangle() {
  DcspInstance inst;
  inst.language = Language({rel_xor()});
  inst.variables = {"a", "b", "c"};
  inst.constraints.push_back({"xor", {0, 1}, false});
  inst.constraints.push_back({"xor", {1, 2}, false});
  inst.constraints.push_back({"xor", {0, 2}, false});
  return inst;
}

}  // namespace

TEST_CASE("evaluate") {
  const DcspInstance inst = unit_pair();
  CHECK(evaluate(inst, {0}) == std::vector<int>{0});
  CHECK(evaluate(inst, {1}) == std::vector<int>{1});

  DcspInstance sat;
  sat.language = Language({rel_implies()});
  sat.variables = {"a", "b"};
  sat.constraints.push_back({"imp", {0, 1}, false});
  CHECK(evaluate(sat, {0, 1}).empty());

  const DcspInstance tri = xor_triangle();
  for (uint32_t a = 0; a < 8; ++a) {
    const Assignment phi{uint8_t(a & 1), uint8_t((a >> 1) & 1),
                         uint8_t((a >> 2) & 1)};
    const size_t violated = evaluate(tri, phi).size();
    CHECK((violated == 1 || violated == 3));
  }
}

TEST_CASE("violated count conserves the constraint list") {
  Rng rng(3);
  const Language lang({rel_implies(), rel_xor(), rel_or(2)});
  for (int trial = 0; trial < 20; ++trial) {
    const DcspInstance inst = random_dcsp(lang, 5, 9, rng.next());
    Assignment phi(5);
    for (auto& b : phi) b = rng.coin();
    int satisfied = 0;
    for (size_t i = 0; i < inst.constraints.size(); ++i) {
      uint32_t t = 0;
      for (int v : inst.constraints[i].scope) t = (t << 1) | phi[v];
      satisfied += inst.language.at(inst.constraints[i].relation).contains(t);
    }
    CHECK(evaluate(inst, phi).size() + satisfied == inst.constraints.size());
  }
}

TEST_CASE("check_deletion_set") {
  const DcspInstance inst = unit_pair();
  CHECK(check_deletion_set(inst, {0}, {0}));
  CHECK(!check_deletion_set(inst, {1}, {0}));
  CHECK_THROWS_AS(check_deletion_set(inst, {0, 0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(check_deletion_set(inst, {5}, {0}), std::invalid_argument);

  DcspInstance hard = unit_pair();
  hard.constraints[0].undeletable = true;
  CHECK_THROWS_AS(check_deletion_set(hard, {0}, {1}), std::invalid_argument);

  // Brute-force witness search: some witness must certify the deletion set.
  const DcspInstance tri = xor_triangle();
  bool witnessed = false;
  for (uint32_t a = 0; a < 8 && !witnessed; ++a)
    witnessed = check_deletion_set(
        tri, {2}, {uint8_t(a & 1), uint8_t((a >> 1) & 1), uint8_t((a >> 2) & 1)});
  CHECK(witnessed);
}

TEST_CASE("check_parity_solution") {
  EvenOddSetInstance inst;
  inst.universe = 3;
  inst.sets.push_back({{1, 2}, ParityTarget::Odd});
  inst.sets.push_back({{2, 3}, ParityTarget::Odd});
  CHECK(check_parity_solution(inst, {1, 3}));
  CHECK(!check_parity_solution(inst, {2, 3}));

  EvenOddSetInstance empty_set;
  empty_set.universe = 2;
  empty_set.sets.push_back({{}, ParityTarget::Odd});
  CHECK(!check_parity_solution(empty_set, {}));
  CHECK(!check_parity_solution(empty_set, {1, 2}));
}

TEST_CASE("serialization round trips") {
  const Language lang({rel_even(4), rel_one(), rel_zero()});
  CHECK(serialize(parse_language(serialize(lang))) == serialize(lang));

  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const DcspInstance inst = random_dcsp(lang, 4, 6, rng.next(), 2);
    CHECK(serialize(parse_dcsp(serialize(inst))) == serialize(inst));

    const EvenOddSetInstance odds = random_oddset(6, 4, 3, rng.next(), true);
    CHECK(serialize(parse_oddset(serialize(odds))) == serialize(odds));

    const NcInstance nc = random_nc(4, 5, rng.next());
    CHECK(serialize(parse_nc(serialize(nc))) == serialize(nc));

    const MonotoneCircuit circ = random_circuit(7, rng.next());
    CHECK(serialize(parse_circuit(serialize(circ))) == serialize(circ));

    const ColoredGraph graph = random_colored_graph(6, 3, 7, rng.next());
    CHECK(serialize(parse_colored_graph(serialize(graph))) == serialize(graph));

    const Cnf3 cnf = random_cnf3(4, 5, rng.next());
    CHECK(serialize(parse_cnf(serialize(cnf))) == serialize(cnf));
  }
}

TEST_CASE("generators are reproducible and respect arities") {
  const Language lang({rel_implies(), rel_or(3)});
  const DcspInstance a = random_dcsp(lang, 4, 6, 7);
  const DcspInstance b = random_dcsp(lang, 4, 6, 7);
  CHECK(serialize(a) == serialize(b));
  const DcspInstance c = random_dcsp(lang, 4, 6, 8);
  CHECK(serialize(a) != serialize(c));

  Rng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const DcspInstance inst = random_dcsp(lang, 5, 4, rng.next());
    for (const ConstraintInstance& ci : inst.constraints)
      CHECK(ci.scope.size() == size_t(inst.language.at(ci.relation).arity()));
  }
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_language("relation r 2\n01\nbroken line here\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_oddset("universe 3\nset odd 5\n"), ParseError);
  CHECK_THROWS_AS(parse_nc("matrix 2 2\n11\n"), ParseError);
  CHECK_THROWS_AS(parse_cnf("p cnf 2 1\n1 -5 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("input a\nand g a b\noutput g\n"), ParseError);
  CHECK_THROWS_AS(parse_dcsp("relation r 1\n1\nend\nvar a\nconstraint r b\n"),
                  ParseError);
}

TEST_CASE("complement_instance is an involution") {
  const Language lang({rel_nand_nand_or(), rel_one(), rel_zero()});
  Rng rng(41);
  const DcspInstance inst = random_dcsp(lang, 5, 6, rng.next());
  const DcspInstance twice = complement_instance(complement_instance(inst));
  CHECK(serialize(twice) == serialize(inst));
  CHECK(complement_relation(rel_nand_nand_or()).same_table(rel_or_or_not()));
}

TEST_CASE("monotone circuit evaluation") {
  MonotoneCircuit c;
  c.gates.push_back({"i1", GateKind::Input, -1, -1});
  c.gates.push_back({"i2", GateKind::Input, -1, -1});
  c.gates.push_back({"g", GateKind::And, 0, 1});
  c.output = 2;
  c.validate();
  CHECK(c.evaluate({0, 1}));
  CHECK(!c.evaluate({0}));
  CHECK(!c.evaluate({}));
}
