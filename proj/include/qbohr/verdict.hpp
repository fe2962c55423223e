#pragma once

#include <string>
#include <utility>

namespace qbohr {

/// Outcome of a property check: pass/fail, the numerical residual backing the
/// decision, and (on failure) a short description of where it failed.
struct Verdict {
  bool pass = false;
  double defect = 0.0;
  std::string witness;

  explicit operator bool() const { return pass; }

  static Verdict ok(double defect = 0.0) { return {true, defect, {}}; }
  static Verdict fail(std::string witness, double defect = 0.0) {
    return {false, defect, std::move(witness)};
  }

  /// Combine: pass iff both pass; keeps the first failure witness and the
  /// worst defect.
  Verdict& merge(const Verdict& other) {
    if (pass && !other.pass) witness = other.witness;
    pass = pass && other.pass;
    if (other.defect > defect) defect = other.defect;
    return *this;
  }
};

}  // namespace qbohr
