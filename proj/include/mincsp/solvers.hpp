#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mincsp/classifier.hpp"
#include "mincsp/instances.hpp"
#include "mincsp/rational_lp.hpp"
#include "mincsp/reductions.hpp"

namespace mincsp {

enum class SolveStatus { Optimal, WithinRatio, BudgetExceeded, Infeasible };

std::string to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  int cost = 0;
  std::vector<int> deleted;    // deleted constraint indices (DCSP)
  Assignment witness;          // satisfying assignment of the rest (DCSP)
  std::vector<int> elements;   // chosen elements (parity instances)
  Gf2Vector vector_solution;   // solution vector (nearest codeword)
  int ratio = 1;               // declared bound when status is WithinRatio
  Rational lp_optimum = 0;     // LP relaxation value (approx solver only)
  std::vector<std::string> notes;
};

/// Exhaustive optimum over all assignments; ties broken by lexicographically
/// least deletion set.  Throws for more than 24 variables.
SolveOutcome brute_force_dcsp(const DcspInstance& inst);

/// For 0-valid or 1-valid languages: the constant assignment, zero deletions.
SolveOutcome solve_valid(const DcspInstance& inst);

/// Exact minimum deletion for bijunctive languages within the given budget,
/// by certificate-driven branch and bound over grouped binary clauses.
SolveOutcome solve_bijunctive(const DcspInstance& inst, int budget);

/// LP rounding approximation for languages decomposing into units,
/// implications, and width-<=B positive (negative, after dualizing) clauses.
/// Returns within_ratio(c * (B+1)) where c is the largest clause group.
SolveOutcome approx_ihsb(const DcspInstance& inst, int width, Polarity polarity);

enum class OddsetEngine { Auto, Subsets, Linear };

/// Exact minimum parity hitting set, two interchangeable engines:
/// subset enumeration by increasing size, or GF(2) minimum-weight solving.
SolveOutcome solve_oddset_exact(const EvenOddSetInstance& inst, int budget,
                                OddsetEngine engine = OddsetEngine::Auto);

enum class NcEngine { Auto, Exhaustive, Syndrome };

/// Exact nearest codeword, by exhaustive codeword walk or by minimum-weight
/// syndrome decoding; engines agree on the distance.
SolveOutcome solve_nc_exact(const NcInstance& inst, NcEngine engine = NcEngine::Auto);

/// Classifies the language and dispatches to the class solver; hard classes
/// fall back to brute force with a warning note.
SolveOutcome solve_auto(const DcspInstance& inst, int budget);

/// Brute-force oracle over any instance kind, for reduction verification.
Oracle exact_oracle();

}  // namespace mincsp
