#pragma once

#include <cstdint>

#include "mincsp/instances.hpp"

namespace mincsp {

/// Deterministic generator state; identical seeds give identical instances
/// on every platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next();
  /// Uniform in [0, n).
  uint64_t below(uint64_t n);
  bool coin() { return next() & 1; }

private:
  uint64_t state_;
};

DcspInstance random_dcsp(const Language& lang, int num_vars, int num_constraints,
                         uint64_t seed, int num_undeletable = 0);

EvenOddSetInstance random_oddset(int universe, int num_sets, int max_set_size,
                                 uint64_t seed, bool allow_even = false);

NcInstance random_nc(int rows, int cols, uint64_t seed);

MonotoneCircuit random_circuit(int num_gates, uint64_t seed);

ColoredGraph random_colored_graph(int num_vertices, int num_classes,
                                  int num_edges, uint64_t seed);

/// Random 3-CNF; when satisfiable_only is set, draws are repeated (still
/// deterministically) until a satisfiable formula appears.
Cnf3 random_cnf3(int num_vars, int num_clauses, uint64_t seed,
                 bool satisfiable_only = false);

/// Random language of the given size with relation arities up to max_arity.
Language random_language(int num_relations, int max_arity, uint64_t seed);

}  // namespace mincsp
