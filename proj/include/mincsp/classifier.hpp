#pragma once

#include <string>
#include <vector>

#include "mincsp/relation.hpp"

namespace mincsp {

enum class DcspClass {
  PolyValid,        // 0-valid or 1-valid: trivially solvable
  FptBijunctive,    // reducible to 2-clause deletion
  ApproxIhsb,       // constant-factor approximable via LP rounding
  OddsetEquivalent, // affine: equivalent to parity hitting problems
  HardWp,           // no approximation expected (W[P]-hard territory)
  HardNp,           // even deciding cost zero is NP-hard
};

std::string to_string(DcspClass c);

struct TrichotomyClass {
  DcspClass dcsp_class = DcspClass::HardWp;
  PropertyVector properties;
  // Which predicates passed or failed, and why the class was chosen.
  std::vector<std::string> narrative;
  // Set for ApproxIhsb only.
  int ihs_width = 0;
  Polarity ihs_polarity = Polarity::Plus;
};

/// First-match decision over the property vector: valid, bijunctive,
/// IHS-width, affine, self-dual, else hard.
TrichotomyClass classify(const Language& lang);

}  // namespace mincsp
