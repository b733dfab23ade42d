#include "rpdecay/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rpdecay {

double finite_ratio(double lhs, double rhs) {
  if (rhs > 0.0) return lhs / rhs;
  if (lhs > 0.0) return std::numeric_limits<double>::infinity();
  return 0.0;
}

namespace {

// Energy through the outermost usable column between the two slice
// crossings: stand-in for the I+ boundary energy on the truncated grid.
double iplus_proxy(const BackgroundSpec& bg, const ModeField& field, double tau1, double tau2,
                   double p, double delta, int k, int ell) {
  const NullGrid& g = field.grid();
  const std::size_t jc = g.nv - 3;  // keep one-sided stencils off the edge
  const double v = g.v(jc);
  const double d = bg.dimension;
  const double lam = angular_eigenvalue(ell, bg.dimension);

  // u-range between slice crossings on this column, clipped by the grid.
  auto u_of_tau = [&](double tau) {
    double ulo = g.u0, uhi = g.u_max();
    for (int it = 0; it < 200; ++it) {
      const double um = 0.5 * (ulo + uhi);
      const double r = areal_radius_raw(bg, um, v);
      if (hyperboloid_time(um, r, bg.eta_prime) < tau)
        ulo = um;
      else
        uhi = um;
    }
    return 0.5 * (ulo + uhi);
  };
  const double ua = std::max(u_of_tau(tau1), g.u0);
  const double ub = std::min(u_of_tau(tau2), g.u_max());
  if (ub <= ua) return 0.0;

  const std::size_t n = std::max<std::size_t>(3, static_cast<std::size_t>((ub - ua) / g.h) + 1);
  double acc = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    const double u = ua + t * (ub - ua);
    const double r = areal_radius_raw(bg, u, v);
    const double psi = field.interpolate(u, v);
    const double du = field.interpolate_du(u, v);
    const double vpot = potential_at(bg, ell, u, v);
    const double drop = 2.0 * (k - 1);
    double val = std::pow(r, p - 2.0 - drop) * lam * psi * psi;
    val += ((d - 3.0) * std::pow(r, p - 2.0 - drop) +
            std::min(std::pow(r, p - 2.0 - drop), std::pow(r, -delta - drop))) *
           psi * psi;
    val += du * du + vpot * psi * psi;  // outgoing T-flux through v = const
    if (i > 0) acc += 0.5 * (prev + val) * (ub - ua) / static_cast<double>(n - 1);
    prev = val;
  }
  return acc;
}

}  // namespace

std::vector<InequalityReport> check_hierarchy(const BackgroundSpec& bg, const ModeField& field,
                                              const HierarchyParams& prm) {
  std::vector<InequalityReport> out;
  const int ell = field.ell();
  const double etp = bg.eta_prime;
  const double lam = angular_eigenvalue(ell, bg.dimension);

  for (auto [tau1, tau2] : prm.tau_pairs) {
    // slices are shared by every p in the matrix
    std::vector<Slice> slices;
    slices.reserve(prm.n_tau);
    const double dtau = (tau2 - tau1) / static_cast<double>(prm.n_tau - 1);
    for (std::size_t i = 0; i < prm.n_tau; ++i)
      slices.push_back(
          extract_slice(bg, field, tau1 + dtau * static_cast<double>(i), etp, prm.R - 1.0));

    for (double p : prm.p_list) {
      InequalityReport rep;
      rep.name = (prm.k == 1) ? "hierarchy" : "hierarchy_k2";
      rep.p = p;
      rep.delta = prm.delta;
      rep.eta = prm.eta;
      rep.R = prm.R;
      rep.tau1 = tau1;
      rep.tau2 = tau2;
      rep.h = field.grid().h;

      const Slice& s1 = slices.front();
      const Slice& s2 = slices.back();
      double e1, e2;
      if (prm.k == 1) {
        e2 = bound_energy(s2, p, prm.delta, prm.R, ell);
        e1 = bound_energy(s1, p, prm.delta, prm.R, ell);
      } else {
        e2 = higher_energy_cut(s2, p, prm.k, prm.delta, prm.R, ell);
        e1 = higher_energy_cut(s1, p, prm.k, prm.delta, prm.R, ell);
      }

      double bulk = 0.0;
      double cutoff = 0.0;
      for (std::size_t i = 0; i < prm.n_tau; ++i) {
        const Slice& s = slices[i];
        const double wgt = (i == 0 || i + 1 == prm.n_tau) ? 0.5 : 1.0;
        const double den = (prm.k == 1)
                               ? bulk_energy_density(s, p, prm.delta, prm.eta, prm.R, ell)
                               : higher_bulk_density_cut(s, p, prm.k, prm.delta, prm.eta,
                                                         prm.R, ell);
        bulk += wgt * den;
        // cutoff-region cost term: |d theta_R| (r^p |d phi|^2 + r^{p-2} phi^2)
        cutoff += wgt * slice_integral(s, [&](const SliceSample& q) {
          const double thp = smoothstep_cutoff_deriv(q.r, prm.R);
          if (thp == 0.0) return 0.0;
          const double om2 = q.w * q.tu;
          const double om = std::sqrt(om2);
          const double n = 0.5 * (bg.dimension - 1);
          const double phi = q.psi / om;
          const double pdu = (q.du - n * q.psi * q.drdu / q.r) / om;
          const double pdv = (q.dv - n * q.psi * q.drdv / q.r) / om;
          const double grad = pdu * pdu + pdv * pdv + lam / (q.r * q.r) * phi * phi;
          return thp * (std::abs(q.drdu) + std::abs(q.drdv)) *
                 (std::pow(q.r, p) * grad + std::pow(q.r, p - 2.0) * phi * phi) * om2 / q.tu;
        });
      }
      bulk *= dtau;
      cutoff *= dtau;

      const double iplus = iplus_proxy(bg, field, tau1, tau2, p, prm.delta, prm.k, ell);

      rep.lhs = e2 + bulk + iplus;
      rep.rhs = e1 + cutoff;
      rep.ratio = finite_ratio(rep.lhs, rep.rhs);
      rep.vacuous = rep.lhs == 0.0 && rep.rhs == 0.0;
      rep.extra = iplus;
      out.push_back(rep);
    }
  }
  return out;
}

InequalityReport check_boundedness(const BackgroundSpec& bg, const ModeField& field, double tau1,
                                   double tau2, double R, std::size_t n_tau) {
  const int ell = field.ell();
  const double etp = bg.eta_prime;
  InequalityReport rep;
  rep.name = "boundedness";
  rep.R = R;
  rep.tau1 = tau1;
  rep.tau2 = tau2;
  rep.h = field.grid().h;

  const Slice s1 = extract_slice(bg, field, tau1, etp, R);
  const Slice s2 = extract_slice(bg, field, tau2, etp, R);
  rep.lhs = jt_flux_cut(s2, ell, R);
  const double flux1 = jt_flux_cut(s1, ell, R);

  const double lam = angular_eigenvalue(ell, bg.dimension);
  const int d = bg.dimension;
  const double radiating =
      lens_integral(bg, field, tau1, tau2, etp, R - 1.0, n_tau, [&](const SliceSample& q) {
        const double th = smoothstep_cutoff(q.r, R);
        if (th == 0.0) return 0.0;
        const double om = std::pow(q.r, 0.5 * (d - 1));
        const double n = 0.5 * (d - 1);
        const double phi = q.psi / om;
        const double pdv = (q.dv - n * q.psi * q.drdv / q.r) / om;
        return th / q.r *
               (pdv * pdv + lam / (q.r * q.r) * phi * phi + phi * phi / (q.r * q.r)) * om * om;
      });
  const double cutoff =
      lens_integral(bg, field, tau1, tau2, etp, R - 1.0, n_tau, [&](const SliceSample& q) {
        const double thp = smoothstep_cutoff_deriv(q.r, R);
        if (thp == 0.0) return 0.0;
        const double om = std::pow(q.r, 0.5 * (d - 1));
        const double n = 0.5 * (d - 1);
        const double phi = q.psi / om;
        const double pdu = (q.du - n * q.psi * q.drdu / q.r) / om;
        const double pdv = (q.dv - n * q.psi * q.drdv / q.r) / om;
        const double grad = pdu * pdu + pdv * pdv + lam / (q.r * q.r) * phi * phi;
        return thp * (std::abs(q.drdu) + std::abs(q.drdv)) *
               (grad + phi * phi / q.r) * om * om;
      });

  rep.rhs = flux1 + radiating + cutoff;
  rep.ratio = finite_ratio(rep.lhs, rep.rhs);
  rep.vacuous = rep.lhs == 0.0 && rep.rhs == 0.0;
  rep.extra = finite_ratio(rep.lhs, flux1 + cutoff);  // no-radiating-bulk variant
  return rep;
}

InequalityReport check_morawetz(const BackgroundSpec& bg, const ModeField& field, double tau1,
                                double tau2, double eta, double R, MorawetzVariant variant,
                                double r_c, std::size_t n_tau) {
  if (r_c <= 0.0) r_c = 2.0 * R;
  InequalityReport rep;
  rep.name = (variant == MorawetzVariant::Basic) ? "morawetz" : "morawetz_improved";
  rep.eta = eta;
  rep.R = R;
  rep.tau1 = tau1;
  rep.tau2 = tau2;
  rep.h = field.grid().h;
  const MorawetzPair mp = morawetz_pair(bg, field, tau1, tau2, eta, R, variant, r_c, n_tau);
  rep.lhs = mp.lhs;
  rep.rhs = mp.rhs;
  rep.ratio = finite_ratio(mp.lhs, mp.rhs);
  rep.vacuous = mp.lhs == 0.0 && mp.rhs == 0.0;
  rep.extra = finite_ratio(mp.lhs, mp.rhs_without_radiating);
  return rep;
}

DecayFit fit_decay(const std::vector<double>& tau, const std::vector<double>& value,
                   double window_a, double window_b) {
  if (tau.size() != value.size()) throw ShapeError("fit_decay: series length mismatch");
  DecayFit fit;
  fit.tau = tau;
  fit.value = value;
  fit.window_a = window_a;
  fit.window_b = window_b;

  std::vector<double> x, y;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] < window_a || tau[i] > window_b) continue;
    if (!(value[i] > 0.0))
      throw NonpositiveValue("fit_decay: nonpositive value inside fit window");
    if (!(tau[i] > 0.0)) throw NonpositiveValue("fit_decay: nonpositive tau inside fit window");
    x.push_back(std::log(tau[i]));
    y.push_back(std::log(value[i]));
  }
  const std::size_t n = x.size();
  if (n < 8) throw InsufficientData("fit_decay: need at least 8 points in the window");

  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (fit.intercept + fit.exponent * x[i]);
    ss += e * e;
  }
  fit.stderr_exponent = (n > 2) ? std::sqrt(ss / (static_cast<double>(n - 2) * sxx)) : 0.0;
  fit.points_used = n;
  return fit;
}

RadiationField extract_radiation_field(const BackgroundSpec& bg, const ModeField& field,
                                       const std::vector<double>& u_list, double r_base) {
  const NullGrid& g = field.grid();
  RadiationField out;

  for (double u : u_list) {
    // require the largest rung 4 r_base on this row
    const double radii[3] = {r_base, 2.0 * r_base, 4.0 * r_base};
    double samples[3];
    for (int m = 0; m < 3; ++m) {
      const double rstar = (bg.kind == BackgroundKind::Minkowski) ? radii[m]
                                                                  : tortoise(bg, radii[m]);
      const double v = u + rstar;
      if (!field.in_grid(u, v))
        throw InsufficientRadius("extract_radiation_field: grid does not reach 4*r_base");
      samples[m] = field.interpolate(u, v);
    }
    // Richardson in 1/r with ratio 2: first kill 1/r, then 1/r^2.
    const double e1a = 2.0 * samples[1] - samples[0];
    const double e1b = 2.0 * samples[2] - samples[1];
    const double e2 = (4.0 * e1b - e1a) / 3.0;
    out.u.push_back(u);
    out.value.push_back(e2);
    out.error.push_back(std::abs(e2 - e1b));

    // transversal limit check: r d_r psi ~ r d_v psi / (dr/dv)
    const double rstar_top = (bg.kind == BackgroundKind::Minkowski)
                                 ? radii[2]
                                 : tortoise(bg, radii[2]);
    const double v_top = u + rstar_top;
    const double dv = field.interpolate_dv(u, v_top);
    const double drdv_top = dr_dv(bg, u, v_top, radii[2]);
    out.transversal.push_back(radii[2] * dv / drdv_top);
  }

  // flag growth of the transversal quantity across rows as unboundedness
  double tmax = 0.0;
  for (double t : out.transversal) tmax = std::max(tmax, std::abs(t));
  double psimax = 0.0;
  for (std::size_t i = 0; i < g.nu * g.nv; ++i)
    psimax = std::max(psimax, std::abs(field.values()[i]));
  out.transversal_bounded = tmax <= 100.0 * std::max(psimax, 1e-30);
  return out;
}

double divergence_residual(const BackgroundSpec& bg, const ModeField& field, int ell,
                           double tau1, double tau2, double r_a, double r_b) {
  return lens_balance(bg, field, ell, tau1, tau2, r_a, r_b, bg.eta_prime).residual;
}

}  // namespace rpdecay
