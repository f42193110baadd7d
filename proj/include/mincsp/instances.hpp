#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincsp/gf2.hpp"
#include "mincsp/relation.hpp"

namespace mincsp {

using Assignment = std::vector<uint8_t>;  // one 0/1 value per variable

struct ConstraintInstance {
  std::string relation;
  std::vector<int> scope;  // variable indices, repeats allowed
  bool undeletable = false;
};

/// A deletion-CSP instance; the undeletable subset may be empty.
struct DcspInstance {
  Language language;
  std::vector<std::string> variables;
  std::vector<ConstraintInstance> constraints;

  int var_index(const std::string& name) const;
  void validate() const;  // scope arities and ranges
  bool has_undeletable() const;
};

/// Violated constraint indices under a full assignment.
std::vector<int> evaluate(const DcspInstance& inst, const Assignment& phi);

/// True iff the witness satisfies every constraint outside the deletion set.
/// Throws if the deletion set is invalid (bad index, duplicate, undeletable).
bool check_deletion_set(const DcspInstance& inst, const std::vector<int>& deleted,
                        const Assignment& witness);

enum class ParityTarget { Odd, Even };

struct ParitySet {
  std::vector<int> elements;  // 1-based, strictly increasing
  ParityTarget target = ParityTarget::Odd;
};

/// Set system over universe {1..n} with per-set parity targets; an Odd Set
/// instance is the all-odd special case.
struct EvenOddSetInstance {
  int universe = 0;
  std::vector<ParitySet> sets;

  void validate() const;
  bool all_odd() const;
};

/// True iff the intersection size with every set has the requested parity.
bool check_parity_solution(const EvenOddSetInstance& inst,
                           const std::vector<int>& chosen);

/// Nearest codeword instance: matrix A and target vector b, minimize the
/// Hamming distance between Ax and b.
struct NcInstance {
  Gf2Matrix a;
  Gf2Vector b;

  void validate() const;
};

int nc_distance(const NcInstance& inst, const Gf2Vector& x);

enum class GateKind { Input, And, Or };

struct Gate {
  std::string id;
  GateKind kind = GateKind::Input;
  int left = -1, right = -1;  // operand gate indices for And/Or
};

/// Monotone circuit with fan-in two; gates listed in topological order.
struct MonotoneCircuit {
  std::vector<Gate> gates;
  int output = -1;

  void validate() const;
  std::vector<int> input_indices() const;
  /// Evaluates with the given input gates set to one.
  bool evaluate(const std::vector<int>& true_inputs) const;
};

struct ColoredGraph {
  int num_classes = 0;
  std::vector<std::string> vertices;
  std::vector<int> vertex_class;         // 1-based class id per vertex
  std::vector<std::pair<int, int>> edges;  // vertex indices, no self loops

  void validate() const;
  std::vector<std::vector<int>> class_members() const;
  bool has_edge(int u, int v) const;
};

struct Cnf3 {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // nonzero literals, |lit| <= num_vars

  void validate() const;
  bool satisfied(const Assignment& phi) const;
};

/// Relation with every tuple complemented; Horn <-> dual-Horn and so on.
Relation complement_relation(const Relation& r);

/// Same structure over the complemented language; witnesses correspond by
/// global complement.
DcspInstance complement_instance(const DcspInstance& inst);

}  // namespace mincsp
