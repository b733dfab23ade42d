#pragma once

#include <map>
#include <string>

#include "rpdecay/radiation.hpp"
#include "rpdecay/slices.hpp"

namespace rpdecay {

// Named functional values at one tau, ready for CSV export.
struct EnergyReport {
  double tau = 0.0;
  double p = 0.0;
  double delta = 0.5;
  double eta = 0.5;
  int ell = 0;
  double quadrature_h = 0.0;
  std::map<std::string, double> values;
};

// T-current of the mode system (psi-level): P^u = (d_v psi)^2 + V psi^2,
// P^v = (d_u psi)^2 + V psi^2 with d_u P^u + d_v P^v = psi^2 (d_u+d_v)V.
// Slice flux contracts with the foliation: integrand P^u + P^v tbar_v/tbar_u.
double jt_flux_integrand(const SliceSample& s);

// Flux of the T-current through the slice; nonnegative. The cutoff variant
// weights the integrand with theta_R.
double jt_flux(const Slice& slice, int ell);
double jt_flux_cut(const Slice& slice, int ell, double R);

// E_bound^{(p)} with cutoff at R: r^p-weighted outgoing derivative plus the
// suppressed angular/zeroth blocks plus the theta-weighted T-flux.
double bound_energy(const Slice& slice, double p, double delta, double R, int ell);

// Slice density of E_bulk^{(p-1)}: includes the 1/tbar_u coarea factor so a
// tau-trapezoid of densities equals the du dv spacetime integral.
double bulk_energy_density(const Slice& slice, double p, double delta, double eta, double R,
                           int ell);

// Higher-order E^{(p,k)} norms (k <= 2) and their bulk densities. The plain
// forms cut at the slice's own r_cut; the _cut forms take an explicit R.
double higher_energy(const Slice& slice, double p, int k, double delta, int ell);
double higher_energy_cut(const Slice& slice, double p, int k, double delta, double R, int ell);
double higher_bulk_density(const Slice& slice, double p, int k, double delta, double eta,
                           int ell);
double higher_bulk_density_cut(const Slice& slice, double p, int k, double delta, double eta,
                               double R, int ell);

// Nondegenerate energy on the slice, m in {1,2}.
double nondeg_energy(const Slice& slice, int ell, int m);

// I+ energy of the extracted radiation field: sum_{k1+k2=k} of the mode
// reduction of int r^{p-2k}|d_sigma^{k1} d_u^{k2} Phi|^2 du with the
// convention r^{p-2k}|_{I+} = 1 for p = 2k and 0 for p < 2k.
double radiation_energy(const RadiationField& field, double u_lo, double u_hi, double p, int k,
                        int ell, int dimension);

// Morawetz estimate sides over a tau window.
enum class MorawetzVariant { Basic, Improved };
struct MorawetzPair {
  double lhs = 0.0;
  double rhs = 0.0;
  double rhs_without_radiating = 0.0;  // droppable-term variant
};
MorawetzPair morawetz_pair(const BackgroundSpec& bg, const ModeField& field, double tau1,
                           double tau2, double eta, double R, MorawetzVariant variant,
                           double r_c, std::size_t n_tau);

// Signed flux of the T-current through the wall r = r_wall between the tau1
// and tau2 slice crossings (positive when P^u - P^v > 0).
double wall_flux(const BackgroundSpec& bg, const ModeField& field, int ell, double r_wall,
                 double tau1, double tau2, double eta_prime);

// Discrete divergence theorem defect over the lens [tau1,tau2] x [r_a,r_b]:
// |flux(tau2) - flux(tau1) - wall(r_b) + wall(r_a) - bulk deformation term|.
// Static backgrounds have zero deformation term.
struct LensBalance {
  double flux_lo = 0.0;
  double flux_hi = 0.0;
  double wall_inner = 0.0;
  double wall_outer = 0.0;
  double deformation = 0.0;
  double residual = 0.0;
  double scale = 0.0;  // normalizer: energy passing through the lens
};
LensBalance lens_balance(const BackgroundSpec& bg, const ModeField& field, int ell, double tau1,
                         double tau2, double r_a, double r_b, double eta_prime);

// Spacetime integral over {tau1 <= tbar <= tau2} of a per-sample integrand
// in the du dv measure (1/tbar_u Jacobian included), by tau-trapezoid.
template <typename F>
double lens_integral(const BackgroundSpec& bg, const ModeField& field, double tau1, double tau2,
                     double eta_prime, double r_cut, std::size_t n_tau, F&& integrand) {
  if (n_tau < 2) throw ParamError("lens_integral: need at least 2 tau samples");
  const double dtau = (tau2 - tau1) / static_cast<double>(n_tau - 1);
  double acc = 0.0;
  for (std::size_t k = 0; k < n_tau; ++k) {
    const Slice s = extract_slice(bg, field, tau1 + dtau * static_cast<double>(k), eta_prime,
                                  r_cut);
    const double layer =
        slice_integral(s, [&](const SliceSample& q) { return integrand(q) / q.tu; });
    acc += (k == 0 || k + 1 == n_tau) ? 0.5 * layer : layer;
  }
  return acc * dtau;
}

// Single sample of the slice data at an arbitrary in-grid point.
SliceSample make_sample(const BackgroundSpec& bg, const ModeField& field, double u, double v,
                        double eta_prime, double r_cut);

}  // namespace rpdecay
