#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mincsp/instances.hpp"

namespace mincsp {

/// One atom of a primitive positive formula; relation "=" is the equality
/// marker.  Argument i in [0, num_free) is a free variable, the rest are
/// existential.
struct PpAtom {
  std::string relation;
  std::vector<int> args;
};

struct PpDefinition {
  std::string target;
  int num_free = 0;
  int num_existential = 0;
  bool equality_allowed = false;
  std::vector<PpAtom> atoms;
};

/// Exhaustively verifies that the formula defines R over the language.
bool check_pp_definition(const Relation& r, const Language& lang,
                         const PpDefinition& d);

/// Definition of odd parity on `arity` coordinates over {even4, one, zero},
/// flattened from the inductive two-at-a-time construction.
PpDefinition odd_parity_definition(int arity);

// Solutions of the instance families connected by reductions.
struct DcspSolution {
  std::vector<int> deleted;
  Assignment witness;
};
struct SubsetSolution {
  std::vector<int> elements;
};
struct VectorSolution {
  Gf2Vector bits;
};
using SolutionValue = std::variant<DcspSolution, SubsetSolution, VectorSolution>;

using AnyInstance = std::variant<DcspInstance, EvenOddSetInstance, NcInstance>;

int solution_cost(const SolutionValue& sol, const AnyInstance& inst);
bool solution_feasible(const SolutionValue& sol, const AnyInstance& inst);

enum class ReductionKind { CostPreserving, AReduction, SelfImprovement };

/// A transformed instance bundled with a mapping from feasible target
/// solutions back to feasible source solutions.
struct ReductionArtifact {
  std::string name;
  ReductionKind kind = ReductionKind::CostPreserving;
  int alpha = 1;  // ratio constant for AReduction
  AnyInstance target;
  std::function<SolutionValue(const SolutionValue&)> pull_back;
};

/// Raised when a transformation is undefined because the source instance
/// has no feasible solution.
class InfeasibleSourceError : public std::runtime_error {
public:
  explicit InfeasibleSourceError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Replaces each undeletable constraint with (m+1) deletable copies.
ReductionArtifact eliminate_undeletable(const DcspInstance& inst);

/// Replaces every constraint over the defined relation with the definition's
/// atoms on fresh existential variables; alpha = atom count.
ReductionArtifact pp_expand(const DcspInstance& inst, const PpDefinition& def);

/// For a self-dual target language containing xor: encodes unit constraints
/// through two anchor variables tied by an undeletable xor.
ReductionArtifact add_constants(const DcspInstance& inst,
                                const Language& target_language);

/// Folds even-parity sets into odd ones via symmetric difference with the
/// first odd set.
ReductionArtifact evenodd_to_odd(const EvenOddSetInstance& inst);

/// Nearest codeword to parity hitting: sets from the rows of the orthogonal
/// complement, then evenodd_to_odd.
ReductionArtifact nc_to_oddset(const NcInstance& inst);

/// Odd Set to deletion CSP over {even4, one, zero}: undeletable parity
/// constraints per set (expanded from the inductive odd definition) plus one
/// deletable zero-unit per appearing element.  With eliminate=false the
/// undeletable constraints are kept instead of being replaced by copies.
ReductionArtifact oddset_to_dcsp_b2(const EvenOddSetInstance& inst,
                                    bool eliminate = true);

/// add_constants specialised to {even4, xor}.
ReductionArtifact dcsp_b2_to_b3(const DcspInstance& inst);

/// Parity instance over {even4, xor}, all deletable, as a nearest codeword
/// instance: one matrix row per constraint, repeated scope entries fold away.
ReductionArtifact dcsp_b3_to_nc(const DcspInstance& inst);

/// Monotone circuit satisfiability to deletion CSP over {x v y v -z, one,
/// zero}: undeletable gate constraints, deletable zero-units on the inputs.
ReductionArtifact circuit_to_dcsp(const MonotoneCircuit& circuit);

/// Complements every relation; witnesses map by global complement.
ReductionArtifact dualize(const DcspInstance& inst);

/// Squares a parity hitting instance; the optimum maps k to 1 + k + k^2.
ReductionArtifact oddset_self_improve(const EvenOddSetInstance& inst);

/// Densest multicolored subgraph gadget for one guess of inhabited class
/// pairs.
struct MkdsGadget {
  EvenOddSetInstance instance;
  std::vector<int> element_vertex;  // element id - 1 -> vertex index or -1
  std::vector<int> element_edge;    // element id - 1 -> edge index or -1
};
MkdsGadget mkds_guess_to_oddset(const ColoredGraph& graph,
                                const std::vector<std::pair<int, int>>& pairs);

/// Uniformly random recolorings for reducing the uncolored problem to the
/// multicolored one.
std::vector<ColoredGraph> kds_color_coding(const ColoredGraph& graph, int k,
                                           uint64_t seed, int repetitions);

/// Partition gadget: clauses split round-robin into k groups, one element
/// per satisfying partial assignment, agreement sets per shared variable.
struct Max3SatGadget {
  EvenOddSetInstance instance;
  int groups = 0;
  std::vector<std::vector<int>> group_vars;     // 1-based, ascending
  std::vector<std::vector<int>> group_clauses;  // clause indices per group
  // element id - 1 -> (group, assignment bits over group_vars positions)
  std::vector<std::pair<int, uint32_t>> element_assignment;
};
Max3SatGadget max3sat_to_oddset(const Cnf3& cnf, int k);

/// Merges the per-group assignments certified by an exactly-k solution;
/// nullopt when the solution does not pick one element per group.
std::optional<Assignment> max3sat_extract_assignment(const Max3SatGadget& gadget,
                                                     const Cnf3& cnf,
                                                     const std::vector<int>& chosen);

struct OracleResult {
  int opt = 0;
  SolutionValue best;
};
/// nullopt means the instance has no feasible solution.
using Oracle = std::function<std::optional<OracleResult>(const AnyInstance&)>;

struct VerifyReport {
  bool passed = false;
  bool skipped_infeasible = false;
  std::string detail;
};

/// Checks the declared cost law of an artifact against exact oracles:
/// equal optima and pull-back optimality for cost-preserving reductions,
/// the pointwise alpha bound on sampled solutions for A-reductions, and the
/// 1 + k + k^2 law for the self-improvement.
VerifyReport verify_reduction(const ReductionArtifact& artifact,
                              const AnyInstance& source,
                              const Oracle& source_oracle,
                              const Oracle& target_oracle,
                              int sampled_solutions = 0, uint64_t seed = 1);

// The languages the constructive reductions target.
Language language_b2();  // {even4, one, zero}
Language language_b3();  // {even4, xor}
Language language_iv2(); // {x v y v -z, one, zero}

}  // namespace mincsp
