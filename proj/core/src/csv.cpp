#include "rpdecay/csv.hpp"

#include <cstdio>
#include <fstream>

namespace rpdecay {

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

namespace {
std::ofstream open_or_throw(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open output file: " + path);
  return os;
}
}  // namespace

void write_field_csv(const std::string& path, const BackgroundSpec& bg, const ModeField& field) {
  std::ofstream os = open_or_throw(path);
  os << "u,v,r,psi,dpsi_du,dpsi_dv\n";
  const NullGrid& g = field.grid();
  for (std::size_t i = 0; i < g.nu; ++i)
    for (std::size_t j = 0; j < g.nv; ++j) {
      double r;
      try {
        r = areal_radius(bg, g.u(i), g.v(j));
      } catch (const DomainError&) {
        r = 0.0;  // below-axis node of a triangular grid
      }
      os << format_g17(g.u(i)) << ',' << format_g17(g.v(j)) << ',' << format_g17(r) << ','
         << format_g17(field.at(i, j)) << ',' << format_g17(field.du_at(i, j)) << ','
         << format_g17(field.dv_at(i, j)) << '\n';
    }
}

void write_slice_csv(const std::string& path, const Slice& slice) {
  std::ofstream os = open_or_throw(path);
  os << "tau,v,u,r,psi,dpsi_du,dpsi_dv,w,theta\n";
  for (const SliceSample& s : slice.samples) {
    os << format_g17(slice.tau) << ',' << format_g17(s.v) << ',' << format_g17(s.u) << ','
       << format_g17(s.r) << ',' << format_g17(s.psi) << ',' << format_g17(s.du) << ','
       << format_g17(s.dv) << ',' << format_g17(s.w) << ',' << format_g17(s.theta) << '\n';
  }
}

void write_energy_csv(const std::string& path, const std::vector<EnergyReport>& reports) {
  std::ofstream os = open_or_throw(path);
  os << "tau,p,delta,eta,ell,name,value,h\n";
  for (const EnergyReport& r : reports)
    for (const auto& [name, value] : r.values)
      os << format_g17(r.tau) << ',' << format_g17(r.p) << ',' << format_g17(r.delta) << ','
         << format_g17(r.eta) << ',' << r.ell << ',' << name << ',' << format_g17(value) << ','
         << format_g17(r.quadrature_h) << '\n';
}

void write_inequality_csv(const std::string& path,
                          const std::vector<InequalityReport>& reports) {
  std::ofstream os = open_or_throw(path);
  os << "name,p,delta,eta,R,tau1,tau2,h,lhs,rhs,ratio\n";
  for (const InequalityReport& r : reports)
    os << r.name << ',' << format_g17(r.p) << ',' << format_g17(r.delta) << ','
       << format_g17(r.eta) << ',' << format_g17(r.R) << ',' << format_g17(r.tau1) << ','
       << format_g17(r.tau2) << ',' << format_g17(r.h) << ',' << format_g17(r.lhs) << ','
       << format_g17(r.rhs) << ',' << format_g17(r.ratio) << '\n';
}

void write_decay_csv(const std::string& path, const std::string& series_name,
                     const std::vector<DecayFit>& fits) {
  std::ofstream os = open_or_throw(path);
  os << "series,window_a,window_b,exponent,stderr\n";
  for (const DecayFit& f : fits)
    os << series_name << ',' << format_g17(f.window_a) << ',' << format_g17(f.window_b) << ','
       << format_g17(f.exponent) << ',' << format_g17(f.stderr_exponent) << '\n';
}

}  // namespace rpdecay
