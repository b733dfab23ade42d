#pragma once

#include <vector>

#include "rpdecay/grid.hpp"

namespace rpdecay {

// One point of a hyperboloidal slice {tbar = tau}, sampled on a grid column.
// Carries everything the energy quadratures need: field values, first and
// second null derivatives, foliation Jacobians, coarea weight and the inner
// cutoff value.
struct SliceSample {
  double v = 0.0;
  double u = 0.0;
  double r = 0.0;
  double psi = 0.0;
  double du = 0.0;   // d_u psi
  double dv = 0.0;   // d_v psi
  double duu = 0.0;   // d_u^2 psi
  double duv = 0.0;   // d_u d_v psi
  double dvv = 0.0;   // d_v^2 psi
  double duuu = 0.0;  // d_u^3 psi (higher-order bulk norms)
  double w = 0.0;      // coarea weight Omega^2 / (d tbar/du)
  double theta = 0.0;  // smoothstep cutoff s(r - R_cut)
  double tu = 0.0;     // d tbar/du
  double tv = 0.0;     // d tbar/dv
  double drdu = 0.0;
  double drdv = 0.0;
  double vpot = 0.0;  // effective mode potential at the point
};

struct Slice {
  double tau = 0.0;
  double eta_prime = 1.0;
  double r_cut = 10.0;
  int ell = 0;
  int dimension = 3;
  double dv_spacing = 0.0;  // grid column spacing
  std::vector<SliceSample> samples;

  bool empty() const { return samples.empty(); }
};

// Smoothstep cutoff: 0 for r <= R, 1 for r >= R+1, 3x^2-2x^3 between.
double smoothstep_cutoff(double r, double R);
double smoothstep_cutoff_deriv(double r, double R);

// Solves u - 1/(1+r(u,v)^{eta'}) = tau per grid column by safeguarded
// Newton, interpolates field data bilinearly, drops samples with
// r < R_cut - 1 and columns whose root exits the grid.
Slice extract_slice(const BackgroundSpec& bg, const ModeField& field, double tau,
                    double eta_prime, double r_cut);

// w = Omega^2(r) / (d tbar/du); throws DegenerateSlice when dtbar_du <= 0.
double coarea_weight(const BackgroundSpec& bg, double u, double v, double eta_prime);

// sup over samples of r^q (psi/Omega)^2, optionally restricted to
// r in [r_min, r_max].
double sup_weighted(const Slice& slice, double q);
double sup_weighted(const Slice& slice, double q, double r_min, double r_max);

// Exact slice point at a target radius: u = tau + 1/(1+r^eta'),
// v from the background's null labels. Used for lens corners.
struct SlicePoint {
  double u = 0.0;
  double v = 0.0;
};
SlicePoint slice_point_at_radius(const BackgroundSpec& bg, double tau, double eta_prime,
                                 double r_target);

// Trapezoid integral of a per-sample integrand over the slice columns.
template <typename F>
double slice_integral(const Slice& s, F&& integrand) {
  if (s.samples.size() < 2) return 0.0;
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < s.samples.size(); ++k) {
    const double dv = s.samples[k + 1].v - s.samples[k].v;
    acc += 0.5 * dv * (integrand(s.samples[k]) + integrand(s.samples[k + 1]));
  }
  return acc;
}

}  // namespace rpdecay
