#pragma once

#include <string>
#include <vector>

#include "rpdecay/energies.hpp"
#include "rpdecay/verify.hpp"

namespace rpdecay {

// All floats are written with 17 significant digits.
std::string format_g17(double x);

void write_field_csv(const std::string& path, const BackgroundSpec& bg, const ModeField& field);
void write_slice_csv(const std::string& path, const Slice& slice);
void write_energy_csv(const std::string& path, const std::vector<EnergyReport>& reports);
void write_inequality_csv(const std::string& path, const std::vector<InequalityReport>& reports);
void write_decay_csv(const std::string& path, const std::string& series_name,
                     const std::vector<DecayFit>& fits);

}  // namespace rpdecay
