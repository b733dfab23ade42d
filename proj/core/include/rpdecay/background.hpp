#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "rpdecay/errors.hpp"

namespace rpdecay {

// Model spacetimes in double-null coordinates with t = u + v, r* = v - u.
// On Schwarzschild this makes the 2D block exactly -4(1-2M/r) du dv, so the
// metric coefficients of the radiative form are reproduced without O(1)
// rescalings. The conformal factor is taken as Omega = r^{(d-1)/2} exactly.

enum class BackgroundKind { Minkowski, Schwarzschild, GluedVaidya };

struct MassStep {
  double u;  // junction retarded time; first step uses -inf
  double mass;
};

struct BackgroundSpec {
  BackgroundKind kind = BackgroundKind::Minkowski;
  int dimension = 3;
  double mass = 0.0;                  // Schwarzschild
  std::vector<MassStep> mass_steps;   // GluedVaidya, masses non-increasing
  double eta_prime = 1.0;             // hyperboloid steepness, 0 < eta' < 1+a
  double a = 1.0;                     // asymptotic decay exponent in (0,1]
  double eps_hor_rel = 1e-3;          // domain cut at r = 2M(1 + eps_hor_rel)

  static BackgroundSpec minkowski(int d = 3, double eta_prime = 1.0);
  static BackgroundSpec schwarzschild(double mass, double eta_prime = 1.0);
  static BackgroundSpec glued_vaidya(std::vector<MassStep> steps, double eta_prime = 1.0);

  void validate() const;  // throws DomainError on invariant violations
  double horizon_floor(double mass_local) const { return 2.0 * mass_local * (1.0 + eps_hor_rel); }
};

struct MetricSample {
  double r = 0.0;         // areal radius
  double g_uv = 0.0;      // metric component, -2 on Minkowski
  double omega = 0.0;     // Omega = r^{(d-1)/2}
  double lapse_sq = 0.0;  // -g(N,N) with N = T / dtbar(T)
  double dtbar_du = 0.0;  // d tbar / du at fixed v (true Jacobian)
};

// Tortoise coordinate r*(r) = r + 2M ln(r/2M - 1) and its Newton inverse.
double tortoise(const BackgroundSpec& bg, double r);
double tortoise(double mass, double r);
double invert_tortoise(const BackgroundSpec& bg, double rstar);
double invert_tortoise(double mass, double rstar, double r_floor);
// Floor-free inverse: saturates smoothly at r -> 2M for very negative r*
// (the asymptotic inverse is exact to double precision there). This is what
// the evolution kernel uses so deep ingoing cells degenerate to V = 0 free
// advection instead of leaving the chart.
double invert_tortoise_raw(double mass, double rstar);

// Patch index for GluedVaidya: largest j with mass_steps[j].u <= u.
std::size_t patch_index(const BackgroundSpec& bg, double u);
double mass_at(const BackgroundSpec& bg, double u);

// Outgoing-null relabeling for GluedVaidya. v is the global outgoing
// coordinate (patch 0 chart); in patch j the intrinsic tortoise value of the
// null line labeled v is vmap(j, v) - u. vmap is built so r is continuous
// across every junction u = u_j. Returns vmap and d(vmap)/dv.
double vaidya_vmap(const BackgroundSpec& bg, std::size_t patch, double v);
double vaidya_vmap_deriv(const BackgroundSpec& bg, std::size_t patch, double v);

double areal_radius(const BackgroundSpec& bg, double u, double v);
// Horizon-floor-free variant used internally by the kernels.
double areal_radius_raw(const BackgroundSpec& bg, double u, double v);
double conformal_factor(const BackgroundSpec& bg, double r);
double hyperboloid_time(double u, double r, double eta_prime);

// dr/du and dr/dv at fixed companion coordinate.
double dr_du(const BackgroundSpec& bg, double u, double v, double r);
double dr_dv(const BackgroundSpec& bg, double u, double v, double r);

// d tbar/du at fixed v and d tbar/dv at fixed u (exact Jacobians of the
// foliation; these are what the coarea weight and slice root-find use).
double dtbar_du(const BackgroundSpec& bg, double u, double v, double r);
double dtbar_dv(const BackgroundSpec& bg, double u, double v, double r);

// Mode potential. The static form V(r) is valid on Minkowski/Schwarzschild;
// the pointwise form folds in the GluedVaidya patch mass and the d(vmap)/dv
// factor so that the mode equation reads d_u d_v psi = -V psi everywhere.
double angular_eigenvalue(int ell, int dimension);  // ell(ell+d-2)
double potential(const BackgroundSpec& bg, int ell, double r);
double potential_at(const BackgroundSpec& bg, int ell, double u, double v);

// First and second r-derivatives of the static potential (commutators).
double potential_dr(const BackgroundSpec& bg, int ell, double r);
double potential_drr(const BackgroundSpec& bg, int ell, double r);

MetricSample metric_sample(const BackgroundSpec& bg, double u, double v);

}  // namespace rpdecay
