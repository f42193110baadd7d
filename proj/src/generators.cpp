#include "mincsp/generators.hpp"

#include <algorithm>
#include <set>

namespace mincsp {

uint64_t Rng::next() {
  // splitmix64
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t n) {
  if (n == 0) return 0;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

DcspInstance random_dcsp(const Language& lang, int num_vars, int num_constraints,
                         uint64_t seed, int num_undeletable) {
  Rng rng(seed);
  DcspInstance inst;
  inst.language = lang;
  for (int i = 0; i < num_vars; ++i)
    inst.variables.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < num_constraints; ++i) {
    const Relation& r =
        lang.relations()[rng.below(lang.relations().size())];
    ConstraintInstance c;
    c.relation = r.name();
    for (int j = 0; j < r.arity(); ++j)
      c.scope.push_back(int(rng.below(num_vars)));
    c.undeletable = i < num_undeletable;
    inst.constraints.push_back(std::move(c));
  }
  inst.validate();
  return inst;
}

EvenOddSetInstance random_oddset(int universe, int num_sets, int max_set_size,
                                 uint64_t seed, bool allow_even) {
  Rng rng(seed);
  EvenOddSetInstance inst;
  inst.universe = universe;
  for (int i = 0; i < num_sets; ++i) {
    const int size = 1 + int(rng.below(std::min(max_set_size, universe)));
    std::set<int> elems;
    while (int(elems.size()) < size) elems.insert(1 + int(rng.below(universe)));
    ParitySet s;
    s.elements.assign(elems.begin(), elems.end());
    s.target = (allow_even && rng.coin()) ? ParityTarget::Even : ParityTarget::Odd;
    inst.sets.push_back(std::move(s));
  }
  inst.validate();
  return inst;
}

NcInstance random_nc(int rows, int cols, uint64_t seed) {
  Rng rng(seed);
  NcInstance inst;
  inst.a = Gf2Matrix(rows, cols);
  inst.b = Gf2Vector(rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) inst.a.set(r, c, rng.coin());
    inst.b.set(r, rng.coin());
  }
  return inst;
}

MonotoneCircuit random_circuit(int num_gates, uint64_t seed) {
  if (num_gates < 3)
    throw std::invalid_argument("need at least three gates");
  Rng rng(seed);
  MonotoneCircuit circuit;
  const int inputs = std::max(2, num_gates / 3);
  for (int i = 0; i < inputs; ++i)
    circuit.gates.push_back({"i" + std::to_string(i + 1), GateKind::Input, -1, -1});
  for (int i = inputs; i < num_gates; ++i) {
    Gate g;
    g.id = "g" + std::to_string(i + 1);
    g.kind = rng.coin() ? GateKind::And : GateKind::Or;
    g.left = int(rng.below(i));
    g.right = int(rng.below(i));
    circuit.gates.push_back(std::move(g));
  }
  circuit.output = num_gates - 1;
  circuit.validate();
  return circuit;
}

ColoredGraph random_colored_graph(int num_vertices, int num_classes,
                                  int num_edges, uint64_t seed) {
  Rng rng(seed);
  ColoredGraph g;
  g.num_classes = num_classes;
  for (int i = 0; i < num_vertices; ++i) {
    g.vertices.push_back("u" + std::to_string(i + 1));
    // Spread classes evenly so that every class is inhabited.
    g.vertex_class.push_back(1 + i % num_classes);
  }
  std::set<std::pair<int, int>> chosen;
  int guard = 0;
  while (int(chosen.size()) < num_edges && ++guard < 100000) {
    int u = int(rng.below(num_vertices));
    int v = int(rng.below(num_vertices));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    chosen.insert({u, v});
  }
  g.edges.assign(chosen.begin(), chosen.end());
  g.validate();
  return g;
}

Cnf3 random_cnf3(int num_vars, int num_clauses, uint64_t seed,
                 bool satisfiable_only) {
  Rng rng(seed);
  for (;;) {
    Cnf3 cnf;
    cnf.num_vars = num_vars;
    for (int i = 0; i < num_clauses; ++i) {
      std::set<int> vars;
      while (int(vars.size()) < std::min(3, num_vars))
        vars.insert(1 + int(rng.below(num_vars)));
      std::vector<int> clause;
      for (int v : vars) clause.push_back(rng.coin() ? v : -v);
      cnf.clauses.push_back(std::move(clause));
    }
    cnf.validate();
    if (!satisfiable_only) return cnf;
    for (uint32_t a = 0; a < (uint32_t(1) << num_vars); ++a) {
      Assignment phi(num_vars);
      for (int v = 0; v < num_vars; ++v) phi[v] = (a >> v) & 1;
      if (cnf.satisfied(phi)) return cnf;
    }
  }
}

Language random_language(int num_relations, int max_arity, uint64_t seed) {
  Rng rng(seed);
  std::vector<Relation> relations;
  for (int i = 0; i < num_relations; ++i) {
    const int arity = 1 + int(rng.below(max_arity));
    const uint32_t table_size = uint32_t(1) << arity;
    std::vector<uint32_t> members;
    while (members.empty()) {
      members.clear();
      for (uint32_t t = 0; t < table_size; ++t)
        if (rng.coin()) members.push_back(t);
    }
    relations.push_back(Relation::from_indices(
        arity, members, "r" + std::to_string(i + 1)));
  }
  return Language(std::move(relations));
}

}  // namespace mincsp
