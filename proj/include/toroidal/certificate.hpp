#pragma once

#include <string>
#include <vector>

#include "toroidal/resolution.hpp"

namespace toroidal {

struct VerifyReport {
  // Each entry reads "check: detail", naming the failed check.
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Independent re-verification of a certificate against its input. Stages are
// replayed from the recorded centers (no selection), every recorded number is
// recomputed and compared, and the final checks run from scratch; stored
// flags are compared against the recomputed ones, never trusted.
VerifyReport verify_certificate(const ResolutionCertificate& certificate, const Complex& input,
                                const std::vector<IntMatrix>& elements);

}  // namespace toroidal
