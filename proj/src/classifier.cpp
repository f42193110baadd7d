#include "mincsp/classifier.hpp"

namespace mincsp {

std::string to_string(DcspClass c) {
  switch (c) {
    case DcspClass::PolyValid: return "POLY_VALID";
    case DcspClass::FptBijunctive: return "FPT_BIJUNCTIVE";
    case DcspClass::ApproxIhsb: return "APPROX_IHSB";
    case DcspClass::OddsetEquivalent: return "ODDSET_EQUIVALENT";
    case DcspClass::HardWp: return "HARD_WP";
    case DcspClass::HardNp: return "HARD_NP";
  }
  return "?";
}

namespace {

void note(std::vector<std::string>& n, const std::string& what, bool value) {
  n.push_back(what + ": " + (value ? "yes" : "no"));
}

}  // namespace

TrichotomyClass classify(const Language& lang) {
  TrichotomyClass out;
  const PropertyVector pv = property_vector(lang);
  out.properties = pv;

  std::vector<std::string>& n = out.narrative;
  note(n, "0-valid", pv.zero_valid);
  note(n, "1-valid", pv.one_valid);
  note(n, "bijunctive", pv.bijunctive);
  if (pv.ihs_plus_width)
    n.push_back("ihs-plus width: " + std::to_string(*pv.ihs_plus_width));
  else
    n.push_back("ihs-plus width: none");
  if (pv.ihs_minus_width)
    n.push_back("ihs-minus width: " + std::to_string(*pv.ihs_minus_width));
  else
    n.push_back("ihs-minus width: none");
  note(n, "horn", pv.horn);
  note(n, "dual-horn", pv.dual_horn);
  note(n, "affine", pv.affine);
  note(n, "self-dual", pv.self_dual);

  if (pv.zero_valid || pv.one_valid) {
    out.dcsp_class = DcspClass::PolyValid;
    n.push_back(pv.zero_valid ? "the all-zero assignment satisfies everything"
                              : "the all-one assignment satisfies everything");
  } else if (pv.bijunctive) {
    out.dcsp_class = DcspClass::FptBijunctive;
    n.push_back("every relation decomposes into binary clauses");
  } else if (pv.ihs_plus_width || pv.ihs_minus_width) {
    out.dcsp_class = DcspClass::ApproxIhsb;
    if (pv.ihs_plus_width) {
      out.ihs_width = *pv.ihs_plus_width;
      out.ihs_polarity = Polarity::Plus;
    } else {
      out.ihs_width = *pv.ihs_minus_width;
      out.ihs_polarity = Polarity::Minus;
    }
    n.push_back("units, implications and width-" +
                std::to_string(out.ihs_width) +
                (out.ihs_polarity == Polarity::Plus ? " positive" : " negative") +
                " clauses suffice");
  } else if (pv.affine) {
    out.dcsp_class = DcspClass::OddsetEquivalent;
    n.push_back("affine and not in any easier class: equivalent to minimum "
                "parity hitting");
  } else if (pv.self_dual) {
    out.dcsp_class = DcspClass::HardNp;
    n.push_back("self-dual and not in any easier class: deciding cost zero "
                "is already NP-hard");
  } else {
    out.dcsp_class = DcspClass::HardWp;
    n.push_back("no tractable predicate holds: no approximation expected");
  }
  return out;
}

}  // namespace mincsp
