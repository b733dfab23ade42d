#include "rpdecay/slices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rpdecay {

double smoothstep_cutoff(double r, double R) {
  const double x = r - R;
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * (3.0 - 2.0 * x);
}

double smoothstep_cutoff_deriv(double r, double R) {
  const double x = r - R;
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return 6.0 * x * (1.0 - x);
}

double coarea_weight(const BackgroundSpec& bg, double u, double v, double eta_prime) {
  BackgroundSpec b = bg;
  b.eta_prime = eta_prime;
  const double r = areal_radius_raw(b, u, v);
  const double tu = dtbar_du(b, u, v, r);
  if (tu <= 0.0) throw DegenerateSlice("coarea_weight: dtbar_du <= 0");
  const double om = conformal_factor(b, r);
  return om * om / tu;
}

namespace {

// Root of tbar(u, v) - tau = 0 in u on [ulo, uhi]; monotone increasing.
double solve_column(const BackgroundSpec& bg, double v, double tau, double ulo, double uhi,
                    double guess) {
  auto value = [&](double u) {
    const double r = areal_radius_raw(bg, u, v);
    return hyperboloid_time(u, r, bg.eta_prime) - tau;
  };
  double flo = value(ulo);
  double fhi = value(uhi);
  if (flo > 0.0 || fhi < 0.0) throw RootFindError("solve_column: no bracket");
  double u = std::clamp(guess, ulo, uhi);
  for (int it = 0; it < 60; ++it) {
    const double r = areal_radius_raw(bg, u, v);
    const double f = hyperboloid_time(u, r, bg.eta_prime) - tau;
    const double df = dtbar_du(bg, u, v, r);
    double un = (df > 0.0) ? u - f / df : u;
    if (!(un > ulo && un < uhi)) un = 0.5 * (ulo + uhi);  // bisection safeguard
    if (f > 0.0)
      uhi = u;
    else
      ulo = u;
    if (std::abs(un - u) < 1e-14 * std::max(1.0, std::abs(un))) {
      return un;
    }
    u = un;
  }
  throw RootFindError("solve_column: Newton did not converge in 60 iterations");
}

}  // namespace

Slice extract_slice(const BackgroundSpec& bg, const ModeField& field, double tau,
                    double eta_prime, double r_cut) {
  BackgroundSpec b = bg;
  b.eta_prime = eta_prime;
  const NullGrid& g = field.grid();
  Slice s;
  s.tau = tau;
  s.eta_prime = eta_prime;
  s.r_cut = r_cut;
  s.ell = field.ell();
  s.dimension = b.dimension;
  s.dv_spacing = g.h;
  s.samples.reserve(g.nv);

  // tbar lies between u-1 and u, so the slice misses the grid entirely when
  // tau is outside [u0 - 1, u_max].
  if (tau < g.u0 - 1.0 || tau > g.u_max())
    throw EmptySlice("extract_slice: tau outside the grid's tbar range");

  double guess = 0.5 * (g.u0 + g.u_max());
  for (std::size_t j = 0; j < g.nv; ++j) {
    const double v = g.v(j);
    double u;
    try {
      u = solve_column(b, v, tau, g.u0, g.u_max(), guess);
    } catch (const RootFindError&) {
      continue;  // slice exits the grid on this column
    } catch (const DomainError&) {
      continue;
    }
    guess = u;
    const double r = areal_radius_raw(b, u, v);
    if (r < r_cut - 1.0) continue;

    SliceSample smp;
    smp.v = v;
    smp.u = u;
    smp.r = r;
    smp.psi = field.interpolate(u, v);
    smp.du = field.interpolate_du(u, v);
    smp.dv = field.interpolate_dv(u, v);
    smp.duu = field.interpolate_deriv(u, v, 2, 0);
    smp.duv = field.interpolate_deriv(u, v, 1, 1);
    smp.dvv = field.interpolate_deriv(u, v, 0, 2);
    smp.duuu = field.interpolate_deriv(u, v, 3, 0);
    smp.tu = dtbar_du(b, u, v, r);
    smp.tv = dtbar_dv(b, u, v, r);
    if (smp.tu <= 0.0) throw DegenerateSlice("extract_slice: dtbar_du <= 0 on sample");
    const double om = conformal_factor(b, r);
    smp.w = om * om / smp.tu;
    smp.theta = smoothstep_cutoff(r, r_cut);
    smp.drdu = dr_du(b, u, v, r);
    smp.drdv = dr_dv(b, u, v, r);
    smp.vpot = potential_at(b, field.ell(), u, v);
    s.samples.push_back(smp);
  }
  if (s.samples.empty()) throw EmptySlice("extract_slice: no column intersects the slice");
  return s;
}

double sup_weighted(const Slice& slice, double q) {
  return sup_weighted(slice, q, 0.0, std::numeric_limits<double>::infinity());
}

double sup_weighted(const Slice& slice, double q, double r_min, double r_max) {
  if (slice.empty()) throw EmptySlice("sup_weighted: empty slice");
  double best = 0.0;
  const double half = 0.5 * (slice.dimension - 1);
  for (const SliceSample& s : slice.samples) {
    if (s.r < r_min || s.r > r_max) continue;
    const double om = std::pow(s.r, half);
    const double phi = s.psi / om;
    best = std::max(best, std::pow(s.r, q) * phi * phi);
  }
  return best;
}

SlicePoint slice_point_at_radius(const BackgroundSpec& bg, double tau, double eta_prime,
                                 double r_target) {
  if (bg.kind == BackgroundKind::GluedVaidya)
    throw UnsupportedError("slice_point_at_radius: GluedVaidya walls not supported");
  SlicePoint p;
  p.u = tau + 1.0 / (1.0 + std::pow(r_target, eta_prime));
  p.v = p.u + tortoise(bg, r_target);
  return p;
}

}  // namespace rpdecay
