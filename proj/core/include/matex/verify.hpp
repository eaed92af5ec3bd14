#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace matex {

struct VerifyOutcome {
  std::string lemma;
  int trials = 0;
  int passed = 0;
  std::vector<std::string> failures;
  bool ok = false;
  std::string to_json() const;
};

// Randomized spot checks of the proved statements, one named batch per lemma:
//   Q               the marker matrix of an avoiding host avoids the pattern
//   counts          block/chunk audits stay within their stated bounds
//   homo            multiplier (x) witness avoids; super-homogeneity inequality
//   liminf          certified floor values for the identity pattern
//   heavy-recursion the heavy-row recursion on exact small values
//   corner          corner construction avoidance and exact ones count
//   deletion        deletion construction output exactly avoids its target
// Unknown names throw std::invalid_argument.
VerifyOutcome verify_lemma(const std::string& lemma, int trials, std::uint64_t seed);

std::vector<std::string> verify_lemma_names();

}  // namespace matex
