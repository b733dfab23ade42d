#pragma once

#include <vector>

namespace rpdecay {

// Friedlander radiation field extracted along u = const rows by Richardson
// extrapolation in 1/r over dyadic radius ladders.
struct RadiationField {
  std::vector<double> u;
  std::vector<double> value;        // Phi_{I+}(u)
  std::vector<double> error;        // last-two-extrapolant differences
  std::vector<double> transversal;  // r d_r(Omega phi) at the largest radius
  bool transversal_bounded = true;
};

}  // namespace rpdecay
