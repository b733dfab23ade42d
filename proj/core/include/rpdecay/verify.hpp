#pragma once

#include <string>
#include <vector>

#include "rpdecay/energies.hpp"
#include "rpdecay/radiation.hpp"

namespace rpdecay {

struct InequalityReport {
  std::string name;
  double p = 0.0;
  double delta = 0.5;
  double eta = 0.5;
  double R = 10.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double h = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs, +inf if rhs = 0 < lhs, 0 when both vanish
  bool vacuous = false;
  double extra = 0.0;  // op-specific side channel (I+ proxy, no-bulk ratio, ...)
};

struct DecayFit {
  std::vector<double> tau;
  std::vector<double> value;
  double window_a = 0.0;
  double window_b = 0.0;
  double exponent = 0.0;
  double stderr_exponent = 0.0;
  double intercept = 0.0;
  std::size_t points_used = 0;
};

double finite_ratio(double lhs, double rhs);

// One report per (p, tau-pair): lhs = E_bound(tau2) + int bulk + I+ proxy,
// rhs = E_bound(tau1) + cutoff-region term. The I+ proxy (outermost-column
// energy) also lands in `extra` so the ratio can be recomputed without it.
struct HierarchyParams {
  std::vector<double> p_list;
  std::vector<std::pair<double, double>> tau_pairs;
  double delta = 0.5;
  double eta = 0.5;
  double R = 10.0;
  int k = 1;
  std::size_t n_tau = 33;  // tau-quadrature samples for the bulk integral
};
std::vector<InequalityReport> check_hierarchy(const BackgroundSpec& bg, const ModeField& field,
                                              const HierarchyParams& params);

// Lemma-4.5-type boundedness: flux(tau2) <= C (flux(tau1) + radiating bulk +
// cutoff terms). `extra` carries the no-radiating-bulk ratio (the droppable
// term when d_u M <= 0).
InequalityReport check_boundedness(const BackgroundSpec& bg, const ModeField& field, double tau1,
                                   double tau2, double R, std::size_t n_tau = 33);

InequalityReport check_morawetz(const BackgroundSpec& bg, const ModeField& field, double tau1,
                                double tau2, double eta, double R, MorawetzVariant variant,
                                double r_c = 0.0, std::size_t n_tau = 33);

// OLS fit of log(value) against log(tau) inside [window_a, window_b].
DecayFit fit_decay(const std::vector<double>& tau, const std::vector<double>& value,
                   double window_a, double window_b);

// Richardson extrapolation of psi(u, v) in 1/r along u = const rows using
// three dyadic radii r_base, 2 r_base, 4 r_base.
RadiationField extract_radiation_field(const BackgroundSpec& bg, const ModeField& field,
                                       const std::vector<double>& u_list, double r_base);

double divergence_residual(const BackgroundSpec& bg, const ModeField& field, int ell,
                           double tau1, double tau2, double r_a, double r_b);

// ---- Hardy quadrature checks (Appendix-C shapes) ----

enum class HardyKind { C1, C2, C3, C4 };

struct HardyParams {
  double a_lo = 1.0;   // C1 interval
  double b_hi = 10.0;  // C1 interval
  double g_power = 1.0;  // C1 weight g(x) = x^s
  int k = 1;           // C2/C3 derivative count (<= 2)
  double a_weight = 0.0;  // C2/C3 radial weight exponent
  int dimension = 3;
  double R1 = 1.0;
  double R2 = 100.0;
  double R = 10.0;       // C4 inner radius
  double r_far = 1e6;    // C3/C4 truncation radius
  std::size_t nodes = 10000;
};

// Documented constants the ratios are compared against.
double hardy_documented_constant(HardyKind kind, const HardyParams& params);

// Test-function family for the Hardy suite; 12 named members.
struct HardyTestFunction {
  std::string name;
  // value and first/second derivative
  double (*f)(double, double);
  double (*df)(double, double);
  double (*ddf)(double, double);
  double param = 0.0;
};
const std::vector<HardyTestFunction>& hardy_test_family();

InequalityReport hardy(HardyKind kind, const HardyParams& params, const HardyTestFunction& fn);

}  // namespace rpdecay
