#include "rpdecay/background.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rpdecay {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

BackgroundSpec BackgroundSpec::minkowski(int d, double eta_prime) {
  BackgroundSpec bg;
  bg.kind = BackgroundKind::Minkowski;
  bg.dimension = d;
  bg.eta_prime = eta_prime;
  bg.validate();
  return bg;
}

BackgroundSpec BackgroundSpec::schwarzschild(double mass, double eta_prime) {
  BackgroundSpec bg;
  bg.kind = BackgroundKind::Schwarzschild;
  bg.dimension = 3;
  bg.mass = mass;
  bg.eta_prime = eta_prime;
  bg.validate();
  return bg;
}

BackgroundSpec BackgroundSpec::glued_vaidya(std::vector<MassStep> steps, double eta_prime) {
  BackgroundSpec bg;
  bg.kind = BackgroundKind::GluedVaidya;
  bg.dimension = 3;
  bg.mass_steps = std::move(steps);
  bg.eta_prime = eta_prime;
  bg.validate();
  return bg;
}

void BackgroundSpec::validate() const {
  if (dimension < 3) throw DomainError("background: dimension must be >= 3");
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("background: a must lie in (0,1]");
  if (!(eta_prime > 0.0 && eta_prime < 1.0 + a))
    throw DomainError("background: eta' must lie in (0, 1+a)");
  switch (kind) {
    case BackgroundKind::Minkowski:
      if (mass != 0.0) throw DomainError("Minkowski has mass 0");
      break;
    case BackgroundKind::Schwarzschild:
      if (dimension != 3) throw DomainError("Schwarzschild requires d = 3");
      if (!(mass > 0.0)) throw DomainError("Schwarzschild requires mass > 0");
      break;
    case BackgroundKind::GluedVaidya: {
      if (dimension != 3) throw DomainError("GluedVaidya requires d = 3");
      if (mass_steps.size() < 2) throw DomainError("GluedVaidya requires >= 2 mass steps");
      if (mass_steps.front().u != -kInf)
        throw DomainError("GluedVaidya: first step must start at u = -inf");
      for (std::size_t j = 0; j + 1 < mass_steps.size(); ++j) {
        if (!(mass_steps[j].u < mass_steps[j + 1].u))
          throw DomainError("GluedVaidya: junction times must increase");
        if (!(mass_steps[j + 1].mass < mass_steps[j].mass))
          throw DomainError("GluedVaidya: masses must strictly decrease");
      }
      if (mass_steps.back().mass < 0.0) throw DomainError("GluedVaidya: final mass < 0");
      break;
    }
  }
}

double tortoise(double mass, double r) {
  if (mass == 0.0) return r;
  return r + 2.0 * mass * std::log(r / (2.0 * mass) - 1.0);
}

double tortoise(const BackgroundSpec& bg, double r) {
  if (bg.kind == BackgroundKind::GluedVaidya)
    throw DomainError("tortoise: GluedVaidya needs a patch, use per-mass overload");
  double m = bg.mass;
  if (m > 0.0 && r <= bg.horizon_floor(m))
    throw DomainError("tortoise: r at or below horizon floor");
  if (m == 0.0 && r <= 0.0) throw DomainError("tortoise: r <= 0 on Minkowski");
  return tortoise(m, r);
}

double invert_tortoise_raw(double mass, double rstar) {
  if (mass == 0.0) return rstar;
  const double m2 = 2.0 * mass;
  // Near the horizon the asymptotic inverse r = 2M(1 + e^{(r*-2M)/2M}) is
  // exact to double precision (the correction is O(e^{2(r*-2M)/2M})); it also
  // covers the regime where r - 2M underflows and the log form is unusable.
  const double delta = std::exp((rstar - m2) / m2);
  if (delta < 1e-10) return m2 * (1.0 + delta);
  double r = (rstar > 2.0 * m2) ? rstar : m2 * (1.0 + delta);
  for (int it = 0; it < 100; ++it) {
    const double f = tortoise(mass, r) - rstar;
    const double df = 1.0 / (1.0 - m2 / r);  // dr*/dr
    double rn = r - f / df;
    if (rn <= m2) rn = 0.5 * (r + m2);  // keep iterates outside the horizon
    if (std::abs(rn - r) <= 1e-13 * std::max(1.0, std::abs(rn))) return rn;
    r = rn;
  }
  throw ConvergenceError("invert_tortoise: Newton did not converge in 100 steps");
}

double invert_tortoise(double mass, double rstar, double r_floor) {
  const double r = invert_tortoise_raw(mass, rstar);
  if (mass > 0.0 && r < r_floor)
    throw DomainError("invert_tortoise: inversion fell below horizon floor");
  return r;
}

double invert_tortoise(const BackgroundSpec& bg, double rstar) {
  if (bg.kind == BackgroundKind::GluedVaidya)
    throw DomainError("invert_tortoise: GluedVaidya needs a patch, use per-mass overload");
  if (bg.mass == 0.0) {
    if (rstar <= 0.0) throw DomainError("invert_tortoise: r <= 0 on Minkowski");
    return rstar;
  }
  return invert_tortoise(bg.mass, rstar, bg.horizon_floor(bg.mass));
}

std::size_t patch_index(const BackgroundSpec& bg, double u) {
  if (bg.kind != BackgroundKind::GluedVaidya) return 0;
  std::size_t j = 0;
  while (j + 1 < bg.mass_steps.size() && u >= bg.mass_steps[j + 1].u) ++j;
  return j;
}

double mass_at(const BackgroundSpec& bg, double u) {
  switch (bg.kind) {
    case BackgroundKind::Minkowski: return 0.0;
    case BackgroundKind::Schwarzschild: return bg.mass;
    case BackgroundKind::GluedVaidya: return bg.mass_steps[patch_index(bg, u)].mass;
  }
  return 0.0;
}

// vmap(j, v): tortoise label of the outgoing null v in patch j's chart plus
// u_j, built recursively so that r matches on each junction u = u_j. The
// composition only involves exact tortoise maps, so junction continuity is
// limited by the Newton tolerance alone.
double vaidya_vmap(const BackgroundSpec& bg, std::size_t patch, double v) {
  double w = v;
  for (std::size_t j = 1; j <= patch; ++j) {
    const double uj = bg.mass_steps[j].u;
    const double m_prev = bg.mass_steps[j - 1].mass;
    const double m_next = bg.mass_steps[j].mass;
    const double r_junction = invert_tortoise_raw(m_prev, w - uj);
    w = uj + tortoise(m_next, r_junction);
  }
  return w;
}

double vaidya_vmap_deriv(const BackgroundSpec& bg, std::size_t patch, double v) {
  double w = v;
  double dw = 1.0;
  for (std::size_t j = 1; j <= patch; ++j) {
    const double uj = bg.mass_steps[j].u;
    const double m_prev = bg.mass_steps[j - 1].mass;
    const double m_next = bg.mass_steps[j].mass;
    const double r_junction = invert_tortoise_raw(m_prev, w - uj);
    // dr/dw = 1 - 2m_prev/r, d(w')/dr = 1/(1 - 2m_next/r)
    dw *= (1.0 - 2.0 * m_prev / r_junction) / (1.0 - 2.0 * m_next / r_junction);
    w = uj + tortoise(m_next, r_junction);
  }
  return dw;
}

double areal_radius_raw(const BackgroundSpec& bg, double u, double v) {
  switch (bg.kind) {
    case BackgroundKind::Minkowski: {
      const double r = v - u;
      if (r <= 0.0) throw DomainError("areal_radius: v <= u on Minkowski");
      return r;
    }
    case BackgroundKind::Schwarzschild:
      return invert_tortoise_raw(bg.mass, v - u);
    case BackgroundKind::GluedVaidya: {
      const std::size_t j = patch_index(bg, u);
      const double m = bg.mass_steps[j].mass;
      const double w = vaidya_vmap(bg, j, v);
      if (m == 0.0) {
        const double r = w - u;
        if (r <= 0.0) throw DomainError("areal_radius: r <= 0 in massless patch");
        return r;
      }
      return invert_tortoise_raw(m, w - u);
    }
  }
  throw DomainError("areal_radius: unknown background");
}

double areal_radius(const BackgroundSpec& bg, double u, double v) {
  const double r = areal_radius_raw(bg, u, v);
  const double m = mass_at(bg, u);
  if (m > 0.0 && r < bg.horizon_floor(m))
    throw DomainError("areal_radius: r below the horizon floor");
  return r;
}

double conformal_factor(const BackgroundSpec& bg, double r) {
  if (r <= 0.0) throw DomainError("conformal_factor: r <= 0");
  return std::pow(r, 0.5 * (bg.dimension - 1));
}

double hyperboloid_time(double u, double r, double eta_prime) {
  if (r <= 0.0) throw DomainError("hyperboloid_time: r <= 0");
  return u - 1.0 / (1.0 + std::pow(r, eta_prime));
}

double dr_du(const BackgroundSpec& bg, double u, double /*v*/, double r) {
  const double m = mass_at(bg, u);
  return -(1.0 - 2.0 * m / std::max(r, 1e-300));
}

double dr_dv(const BackgroundSpec& bg, double u, double v, double r) {
  const double m = mass_at(bg, u);
  double f = 1.0 - 2.0 * m / std::max(r, 1e-300);
  if (bg.kind == BackgroundKind::GluedVaidya)
    f *= vaidya_vmap_deriv(bg, patch_index(bg, u), v);
  return f;
}

namespace {
// d tbar/dr at fixed u, divided by dr: eta' r^{eta'-1} / (1+r^eta')^2
double foliation_slope(double r, double eta_prime) {
  const double rp = std::pow(r, eta_prime);
  const double denom = (1.0 + rp) * (1.0 + rp);
  return eta_prime * rp / (r * denom);
}
}  // namespace

double dtbar_du(const BackgroundSpec& bg, double u, double v, double r) {
  return 1.0 + foliation_slope(r, bg.eta_prime) * dr_du(bg, u, v, r);
}

double dtbar_dv(const BackgroundSpec& bg, double u, double v, double r) {
  return foliation_slope(r, bg.eta_prime) * dr_dv(bg, u, v, r);
}

double angular_eigenvalue(int ell, int dimension) {
  if (ell < 0) throw DomainError("angular_eigenvalue: ell < 0");
  return static_cast<double>(ell) * (ell + dimension - 2);
}

double potential(const BackgroundSpec& bg, int ell, double r) {
  if (r <= 0.0) throw DomainError("potential: r <= 0");
  const double lam = angular_eigenvalue(ell, bg.dimension);
  const double d = bg.dimension;
  switch (bg.kind) {
    case BackgroundKind::Minkowski:
      return (lam + 0.25 * (d - 1.0) * (d - 3.0)) / (r * r);
    case BackgroundKind::Schwarzschild: {
      if (r <= bg.horizon_floor(bg.mass))
        throw DomainError("potential: r at or below horizon floor");
      const double f = 1.0 - 2.0 * bg.mass / r;
      return f * (lam / (r * r) + 2.0 * bg.mass / (r * r * r));
    }
    case BackgroundKind::GluedVaidya:
      throw DomainError("potential(r): GluedVaidya is u-dependent, use potential_at");
  }
  throw DomainError("potential: unknown background");
}

double potential_at(const BackgroundSpec& bg, int ell, double u, double v) {
  const double r = areal_radius_raw(bg, u, v);
  const double lam = angular_eigenvalue(ell, bg.dimension);
  if (bg.kind == BackgroundKind::Minkowski) {
    const double d = bg.dimension;
    return (lam + 0.25 * (d - 1.0) * (d - 3.0)) / (r * r);
  }
  const double m = mass_at(bg, u);
  const double f = 1.0 - 2.0 * m / r;  // 0 at the saturated deep cells
  double vmap_deriv = 1.0;
  if (bg.kind == BackgroundKind::GluedVaidya)
    vmap_deriv = vaidya_vmap_deriv(bg, patch_index(bg, u), v);
  // d(vmap)/dv rescales the mode equation in the global chart.
  return vmap_deriv * f * (lam / (r * r) + 2.0 * m / (r * r * r));
}

double potential_dr(const BackgroundSpec& bg, int ell, double r) {
  const double lam = angular_eigenvalue(ell, bg.dimension);
  const double d = bg.dimension;
  switch (bg.kind) {
    case BackgroundKind::Minkowski:
      return -2.0 * (lam + 0.25 * (d - 1.0) * (d - 3.0)) / (r * r * r);
    case BackgroundKind::Schwarzschild: {
      const double m = bg.mass;
      const double f = 1.0 - 2.0 * m / r;
      const double w = lam / (r * r) + 2.0 * m / (r * r * r);
      const double fp = 2.0 * m / (r * r);
      const double wp = -2.0 * lam / (r * r * r) - 6.0 * m / (r * r * r * r);
      return fp * w + f * wp;
    }
    case BackgroundKind::GluedVaidya:
      throw UnsupportedError("potential_dr: not provided for GluedVaidya");
  }
  throw DomainError("potential_dr: unknown background");
}

double potential_drr(const BackgroundSpec& bg, int ell, double r) {
  const double lam = angular_eigenvalue(ell, bg.dimension);
  const double d = bg.dimension;
  switch (bg.kind) {
    case BackgroundKind::Minkowski:
      return 6.0 * (lam + 0.25 * (d - 1.0) * (d - 3.0)) / (r * r * r * r);
    case BackgroundKind::Schwarzschild: {
      const double m = bg.mass;
      const double f = 1.0 - 2.0 * m / r;
      const double w = lam / (r * r) + 2.0 * m / (r * r * r);
      const double fp = 2.0 * m / (r * r);
      const double fpp = -4.0 * m / (r * r * r);
      const double wp = -2.0 * lam / (r * r * r) - 6.0 * m / (r * r * r * r);
      const double wpp = 6.0 * lam / (r * r * r * r) + 24.0 * m / (r * r * r * r * r);
      return fpp * w + 2.0 * fp * wp + f * wpp;
    }
    case BackgroundKind::GluedVaidya:
      throw UnsupportedError("potential_drr: not provided for GluedVaidya");
  }
  throw DomainError("potential_drr: unknown background");
}

MetricSample metric_sample(const BackgroundSpec& bg, double u, double v) {
  MetricSample s;
  s.r = areal_radius(bg, u, v);
  const double m = mass_at(bg, u);
  double kappa = 1.0 - 2.0 * m / s.r;
  if (bg.kind == BackgroundKind::GluedVaidya)
    kappa *= vaidya_vmap_deriv(bg, patch_index(bg, u), v);
  s.g_uv = -2.0 * kappa;
  s.omega = conformal_factor(bg, s.r);
  s.dtbar_du = dtbar_du(bg, u, v, s.r);
  const double tu = s.dtbar_du;
  const double tv = dtbar_dv(bg, u, v, s.r);
  if (tu <= 0.0) throw DomainError("metric_sample: slice is not a graph over v here");
  // N = T / dtbar(T) with T = d_u + d_v; -g(N,N) = 4 kappa / (tbar_u + tbar_v)^2.
  s.lapse_sq = 4.0 * kappa / ((tu + tv) * (tu + tv));
  return s;
}

}  // namespace rpdecay
