#pragma once

#include <string>
#include <vector>

namespace rpdecay {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The ten acceptance checks, in canonical order.
std::vector<std::string> acceptance_names();

// Run one named check; artifacts land in outdir when nonempty.
CheckResult run_acceptance_check(const std::string& name, const std::string& outdir);

// Run a list of checks (all when empty) with up to `jobs` workers; results
// are merged in declaration order regardless of worker count.
std::vector<CheckResult> run_acceptance(const std::vector<std::string>& names,
                                        const std::string& outdir, int jobs);

}  // namespace rpdecay
