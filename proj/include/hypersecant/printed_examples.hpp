#pragma once

// The worked master-polynomial examples as printed, with their signs.

#include "hypersecant/master.hpp"
#include "hypersecant/poly.hpp"

#include <string>
#include <vector>

namespace hypersecant {

inline constexpr const char* kPrintedCubic =
    "+1*x[1,2]*x[3,4]*x[5,6] "
    "-1*x[1,2]*x[3,5]*x[4,6] -1*x[1,3]*x[2,4]*x[5,6] -1*x[1,5]*x[2,6]*x[3,4] "
    "+1*x[1,3]*x[2,5]*x[4,6] +1*x[1,4]*x[2,6]*x[3,5] +1*x[1,5]*x[2,4]*x[3,6] "
    "-1*x[1,4]*x[2,5]*x[3,6]";

inline constexpr const char* kPrintedPentad =
    "+1*x[1,2]*x[1,5]*x[2,3]*x[3,4]*x[4,5] -1*x[1,2]*x[1,3]*x[2,5]*x[3,4]*x[4,5] "
    "-1*x[1,2]*x[1,4]*x[2,3]*x[3,5]*x[4,5] +1*x[1,2]*x[1,4]*x[2,5]*x[3,4]*x[3,5] "
    "+1*x[1,2]*x[1,3]*x[2,4]*x[3,5]*x[4,5] -1*x[1,2]*x[1,5]*x[2,4]*x[3,4]*x[3,5] "
    "+1*x[1,3]*x[1,4]*x[2,3]*x[2,5]*x[4,5] -1*x[1,3]*x[1,4]*x[2,4]*x[2,5]*x[3,5] "
    "-1*x[1,3]*x[1,5]*x[2,3]*x[2,4]*x[4,5] +1*x[1,3]*x[1,5]*x[2,4]*x[2,5]*x[3,4] "
    "-1*x[1,4]*x[1,5]*x[2,3]*x[2,5]*x[3,4] +1*x[1,4]*x[1,5]*x[2,3]*x[2,4]*x[3,5]";

inline constexpr std::size_t kPrintedGenericQuinticTerms = 32;

struct ReproductionResult {
  std::string name;
  bool match = false;
  std::vector<std::string> differences;  // "+term" = extra in computed, "-term" = missing
};

/// Term-by-term diff of computed against expected.
inline std::vector<std::string> diff_terms(const Polynomial& computed, const Polynomial& expected) {
  std::vector<std::string> out;
  for (const auto& [m, c] : (computed - expected)) {
    const Integer want = expected.coefficient(m);
    const Integer got = computed.coefficient(m);
    out.push_back(m.to_string() + ": computed " + got.str() + ", expected " + want.str());
  }
  return out;
}

inline std::vector<ReproductionResult> reproduce_printed_examples() {
  std::vector<ReproductionResult> out;
  {
    const Polynomial f = master_polynomial(AdmissibleSequence({1, 3, 5}, {2, 4, 6}));
    auto d = diff_terms(f, parse_polynomial(kPrintedCubic));
    out.push_back({"eight-term cubic i=(1,3,5) j=(2,4,6)", d.empty(), std::move(d)});
  }
  {
    const Polynomial f = master_polynomial(AdmissibleSequence({1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}));
    auto d = diff_terms(f, parse_polynomial(kPrintedPentad));
    out.push_back({"twelve-term pentad i=j=(1,2,3,4,5)", d.empty(), std::move(d)});
  }
  {
    const Polynomial f = master_polynomial(AdmissibleSequence({1, 3, 5, 7, 9}, {2, 4, 6, 8, 10}));
    std::vector<std::string> d;
    if (f.term_count() != kPrintedGenericQuinticTerms)
      d.push_back("term count " + std::to_string(f.term_count()) + ", expected " +
                  std::to_string(kPrintedGenericQuinticTerms));
    for (const auto& [m, c] : f)
      if (c != 1 && c != -1) d.push_back(m.to_string() + ": coefficient " + c.str() + " is not +-1");
    out.push_back({"generic quintic i=(1,3,5,7,9) j=(2,4,6,8,10) term count", d.empty(), std::move(d)});
  }
  return out;
}

}  // namespace hypersecant
