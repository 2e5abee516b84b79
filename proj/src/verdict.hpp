#pragma once

#include <string>
#include <vector>

namespace bce {

// Outcome of one mathematical check. `detail` carries a witness (basis
// vector, degree pair, rank numbers) when the check fails, and optional
// context (raw ranks) when it passes.
struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline Verdict pass_verdict(std::string name, std::string detail = "") {
  return Verdict{std::move(name), true, std::move(detail)};
}

inline Verdict fail_verdict(std::string name, std::string detail) {
  return Verdict{std::move(name), false, std::move(detail)};
}

inline bool all_pass(const std::vector<Verdict>& vs) {
  for (const Verdict& v : vs)
    if (!v.pass) return false;
  return true;
}

}  // namespace bce
