#include "rpdecay/energies.hpp"

#include <cmath>

namespace rpdecay {

namespace {

// Angular multiplicity of |grad_S^m Y|^2 for unit-normalized modes; m = 2
// uses the Bochner value lambda(lambda - (d-2)).
double angular_mu(int m, double lam, int d) {
  switch (m) {
    case 0: return 1.0;
    case 1: return lam;
    case 2: return lam * (lam - static_cast<double>(d - 2));
    default: throw UnsupportedError("angular multiplicity beyond grad_S^2");
  }
}

// psi-derivative lookup, a + b <= 3 with only (3,0) stored at third order.
double dpsi(const SliceSample& s, int a, int b) {
  if (a == 0 && b == 0) return s.psi;
  if (a == 1 && b == 0) return s.du;
  if (a == 0 && b == 1) return s.dv;
  if (a == 2 && b == 0) return s.duu;
  if (a == 1 && b == 1) return s.duv;
  if (a == 0 && b == 2) return s.dvv;
  if (a == 3 && b == 0) return s.duuu;
  throw UnsupportedError("dpsi: derivative order not stored on slice");
}

double omega_of(const SliceSample& s, int d) { return std::pow(s.r, 0.5 * (d - 1)); }

// First derivatives of phi = psi / r^n with n = (d-1)/2.
struct PhiDerivs {
  double phi, du, dv;
};
PhiDerivs phi_derivs(const SliceSample& s, int d) {
  const double n = 0.5 * (d - 1);
  const double om = omega_of(s, d);
  PhiDerivs p;
  p.phi = s.psi / om;
  p.du = (s.du - n * s.psi * s.drdu / s.r) / om;
  p.dv = (s.dv - n * s.psi * s.drdv / s.r) / om;
  return p;
}

}  // namespace

double jt_flux_integrand(const SliceSample& s) {
  const double pu = s.dv * s.dv + s.vpot * s.psi * s.psi;
  const double pv = s.du * s.du + s.vpot * s.psi * s.psi;
  return pu + pv * (s.tv / s.tu);
}

double jt_flux(const Slice& slice, int ell) {
  if (slice.ell != ell) throw ShapeError("jt_flux: slice was extracted for another mode");
  return slice_integral(slice, [](const SliceSample& s) { return jt_flux_integrand(s); });
}

double jt_flux_cut(const Slice& slice, int ell, double R) {
  if (slice.ell != ell) throw ShapeError("jt_flux_cut: slice/mode mismatch");
  return slice_integral(slice, [&](const SliceSample& s) {
    return smoothstep_cutoff(s.r, R) * jt_flux_integrand(s);
  });
}

namespace {

double higher_energy_impl(const Slice& slice, double p, int k, double delta, double R, int ell) {
  if (k < 1 || k > 2) throw ParamError("higher_energy: k must be 1 or 2");
  if (!(p > 2.0 * k - 2.0 && p <= 2.0 * k))
    throw ParamError("higher_energy: p outside (2k-2, 2k]");
  if (!(delta > 0.0 && delta < 1.0)) throw ParamError("higher_energy: delta outside (0,1)");
  const int d = slice.dimension;
  const double lam = angular_eigenvalue(ell, d);
  const double etap = slice.eta_prime;

  double acc = 0.0;
  for (int j = 1; j <= k; ++j) {
    const double drop = 2.0 * (k - j);  // r-weight reduction of lower rungs
    for (int k1 = 0; k1 + 1 <= j; ++k1)
      for (int k2 = 0; k1 + k2 + 1 <= j; ++k2) {
        const int k3 = (j - 1) - k1 - k2;
        const double mu = angular_mu(k2, lam, d);
        const double mu_ang = angular_mu(k2 + 1, lam, d);
        acc += slice_integral(slice, [&](const SliceSample& s) {
          const double th = smoothstep_cutoff(s.r, R);
          if (th == 0.0) return 0.0;
          const double r = s.r;
          const double scale = std::pow(r, -2.0 * (k2 + k3));
          const double b1 = mu * scale * std::pow(dpsi(s, k3, k1 + 1), 2);
          const double b2 = mu_ang * scale / (r * r) * std::pow(dpsi(s, k3, k1), 2);
          const double b0 = mu * scale * std::pow(dpsi(s, k3, k1), 2);
          const double w_main = std::pow(r, p - drop);
          const double w_zero = (d - 3) * std::pow(r, p - 2.0 - drop) +
                                std::min(std::pow(r, p - 2.0 - drop), std::pow(r, -delta - drop));
          double val = w_main * b1 + std::pow(r, -1.0 - etap) * (w_main * b2 + w_zero * b0);
          // T-flux of the commuted field xi = r^{-k2} (mode derivative)
          const double amp = std::sqrt(mu) * std::pow(r, -k2);
          const double c = amp * dpsi(s, k3, k1);
          const double cu = amp * (dpsi(s, k3 + 1, k1) - k2 * s.drdu / r * dpsi(s, k3, k1));
          const double cv = amp * (dpsi(s, k3, k1 + 1) - k2 * s.drdv / r * dpsi(s, k3, k1));
          const double pu = cv * cv + s.vpot * c * c;
          const double pv = cu * cu + s.vpot * c * c;
          val += pu + pv * (s.tv / s.tu);
          return th * val;
        });
      }
  }
  return acc;
}

}  // namespace

double bound_energy(const Slice& slice, double p, double delta, double R, int ell) {
  if (!(p > 0.0 && p <= 2.0)) throw ParamError("bound_energy: p outside (0,2]");
  return higher_energy_impl(slice, p, 1, delta, R, ell);
}

double higher_energy(const Slice& slice, double p, int k, double delta, int ell) {
  return higher_energy_impl(slice, p, k, delta, slice.r_cut, ell);
}

double higher_energy_cut(const Slice& slice, double p, int k, double delta, double R, int ell) {
  return higher_energy_impl(slice, p, k, delta, R, ell);
}

double bulk_energy_density(const Slice& slice, double p, double delta, double eta, double R,
                           int ell) {
  if (!(p > 0.0 && p <= 2.0)) throw ParamError("bulk_energy_density: p outside (0,2]");
  if (!(eta > 0.0)) throw ParamError("bulk_energy_density: eta must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw ParamError("bulk_energy_density: delta outside (0,1)");
  const int d = slice.dimension;
  const double lam = angular_eigenvalue(ell, d);
  return slice_integral(slice, [&](const SliceSample& s) {
    const double th = smoothstep_cutoff(s.r, R);
    if (th == 0.0) return 0.0;
    const double r = s.r;
    const double ang = lam / (r * r) * s.psi * s.psi;
    const double zero = s.psi * s.psi;
    double val = p * std::pow(r, p - 1.0) * s.dv * s.dv;
    val += ((2.0 - p) * std::pow(r, p - 1.0) + std::pow(r, p - 1.0 - delta)) * ang;
    val += ((2.0 - p) * (d - 3) * std::pow(r, p - 3.0) +
            std::min(std::pow(r, p - 3.0), std::pow(r, -1.0 - delta))) *
           zero;
    val += std::pow(r, -1.0 - eta) * s.du * s.du;
    return th * val / s.tu;  // coarea factor: tau-trapezoids equal du dv integrals
  });
}

double higher_bulk_density(const Slice& slice, double p, int k, double delta, double eta,
                           int ell) {
  return higher_bulk_density_cut(slice, p, k, delta, eta, slice.r_cut, ell);
}

double higher_bulk_density_cut(const Slice& slice, double p, int k, double delta, double eta,
                               double R, int ell) {
  if (k < 1 || k > 2) throw ParamError("higher_bulk_density: k must be 1 or 2");
  if (!(p > 2.0 * k - 2.0 && p <= 2.0 * k))
    throw ParamError("higher_bulk_density: p outside (2k-2, 2k]");
  const int d = slice.dimension;
  const double lam = angular_eigenvalue(ell, d);
  double acc = 0.0;
  for (int j = 1; j <= k; ++j) {
    const double drop = 2.0 * (k - j);
    for (int k1 = 0; k1 + 1 <= j; ++k1)
      for (int k2 = 0; k1 + k2 + 1 <= j; ++k2) {
        const int k3 = (j - 1) - k1 - k2;
        const double mu = angular_mu(k2, lam, d);
        const double mu_ang = angular_mu(std::min(k1 + k2 + 1, 2), lam, d);
        acc += slice_integral(slice, [&](const SliceSample& s) {
          const double th = smoothstep_cutoff(s.r, R);
          if (th == 0.0) return 0.0;
          const double r = s.r;
          const double scale = std::pow(r, -2.0 * (k2 + k3));
          double val = p * std::pow(r, p - 1.0 - drop) * scale * mu *
                       std::pow(dpsi(s, k3, k1 + 1), 2);
          // angular bulk block carries all tangential derivatives as grad_S
          val += ((2.0 * k - p) * std::pow(r, p - 1.0 - drop) +
                  std::pow(r, p - 1.0 - delta - drop)) *
                 mu_ang * std::pow(r, -2.0 * (k + 1)) * std::pow(dpsi(s, k3, 0), 2);
          val += ((2.0 * k - p) * (d - 3) * std::pow(r, p - 3.0 - drop) +
                  std::min(std::pow(r, p - 3.0 - drop), std::pow(r, -1.0 - delta - drop))) *
                 mu * scale * std::pow(dpsi(s, k3, k1), 2);
          return th * val / s.tu;
        });
      }
    acc += slice_integral(slice, [&](const SliceSample& s) {
      const double th = smoothstep_cutoff(s.r, R);
      if (th == 0.0) return 0.0;
      return th * std::pow(s.r, -1.0 - eta) * std::pow(dpsi(s, j + 1, 0), 2) / s.tu;
    });
  }
  return acc;
}

double nondeg_energy(const Slice& slice, int ell, int m) {
  if (m < 1 || m > 2) throw ParamError("nondeg_energy: m must be 1 or 2");
  const int d = slice.dimension;
  const double lam = angular_eigenvalue(ell, d);
  const std::size_t n = slice.samples.size();
  if (n < 3) throw EmptySlice("nondeg_energy: slice too small");

  // First-order blocks per sample.
  std::vector<double> dsl(n), nphi(n), phi0(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SliceSample& s = slice.samples[i];
    const PhiDerivs pd = phi_derivs(s, d);
    dsl[i] = pd.dv - (s.tv / s.tu) * pd.du;
    nphi[i] = (pd.du + pd.dv) / (s.tu + s.tv);
    phi0[i] = pd.phi;
  }

  double acc = 0.0;
  auto trap = [&](auto&& f) {
    double a = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double dv = slice.samples[i + 1].v - slice.samples[i].v;
      a += 0.5 * dv * (f(i) + f(i + 1));
    }
    return a;
  };

  acc += trap([&](std::size_t i) {
    const SliceSample& s = slice.samples[i];
    const double r2 = s.r * s.r;
    const double grad = dsl[i] * dsl[i] + lam / r2 * phi0[i] * phi0[i];
    return (grad + (nphi[i] * nphi[i] + phi0[i] * phi0[i]) / r2) * s.w;
  });

  if (m == 2) {
    // Second tangential derivatives by differencing the sampled arrays along
    // the slice (columns are equidistant in v).
    auto slice_diff = [&](const std::vector<double>& arr, std::size_t i) {
      if (i == 0) return (arr[1] - arr[0]) / (slice.samples[1].v - slice.samples[0].v);
      if (i + 1 == n)
        return (arr[n - 1] - arr[n - 2]) / (slice.samples[n - 1].v - slice.samples[n - 2].v);
      return (arr[i + 1] - arr[i - 1]) / (slice.samples[i + 1].v - slice.samples[i - 1].v);
    };
    acc += trap([&](std::size_t i) {
      const SliceSample& s = slice.samples[i];
      const double r2 = s.r * s.r;
      const double d2 = slice_diff(dsl, i);
      const double dn = slice_diff(nphi, i);
      // N(N phi) via chart second derivatives; on static backgrounds
      // tbar_u + tbar_v = 1 so N = d_u + d_v.
      const double nrm = s.tu + s.tv;
      const double npsi2 = (s.duu + 2.0 * s.duv + s.dvv);
      const double nn = npsi2 / (nrm * nrm);  // psi-level proxy, Omega-corrections subleading
      const double grad2 = d2 * d2 + lam / r2 * (dsl[i] * dsl[i] + nphi[i] * nphi[i]) +
                           angular_mu(2, lam, d) / (r2 * r2) * phi0[i] * phi0[i];
      return (grad2 + dn * dn + (nn * nn) / (r2 * omega_of(s, d) * omega_of(s, d))) * s.w;
    });
  }
  return acc;
}

double radiation_energy(const RadiationField& field, double u_lo, double u_hi, double p, int k,
                        int ell, int dimension) {
  if (k < 0) throw ParamError("radiation_energy: k < 0");
  if (p > 2.0 * k) throw ParamError("radiation_energy: p > 2k");
  if (p < 2.0 * k) return 0.0;  // r^{p-2k}|_{I+} = 0 convention
  const std::size_t n = field.u.size();
  if (n < 3) throw InsufficientData("radiation_energy: too few samples");
  const double lam = angular_eigenvalue(ell, dimension);

  // d_u^m Phi by repeated centered differences on the u-samples.
  std::vector<double> cur = field.value;
  std::vector<std::vector<double>> derivs{cur};
  for (int m = 1; m <= k; ++m) {
    std::vector<double> next(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i)
      next[i] = (derivs.back()[i + 1] - derivs.back()[i - 1]) /
                (field.u[i + 1] - field.u[i - 1]);
    if (n >= 3) {
      next[0] = next[1];
      next[n - 1] = next[n - 2];
    }
    derivs.push_back(next);
  }

  double acc = 0.0;
  for (int k1 = 0; k1 <= k; ++k1) {
    const int k2 = k - k1;
    const double mu = angular_mu(std::min(k1, 2), lam, dimension);
    if (k1 > 2 && lam != 0.0) throw UnsupportedError("radiation_energy: k1 > 2 angular power");
    double piece = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double um = field.u[i], up = field.u[i + 1];
      if (up < u_lo || um > u_hi) continue;
      const double a = derivs[k2][i], b = derivs[k2][i + 1];
      piece += 0.5 * (up - um) * (a * a + b * b);
    }
    acc += mu * piece;
  }
  return acc;
}

SliceSample make_sample(const BackgroundSpec& bg, const ModeField& field, double u, double v,
                        double eta_prime, double r_cut) {
  BackgroundSpec b = bg;
  b.eta_prime = eta_prime;
  SliceSample s;
  s.u = u;
  s.v = v;
  s.r = areal_radius_raw(b, u, v);
  s.psi = field.interpolate(u, v);
  s.du = field.interpolate_du(u, v);
  s.dv = field.interpolate_dv(u, v);
  s.duu = field.interpolate_deriv(u, v, 2, 0);
  s.duv = field.interpolate_deriv(u, v, 1, 1);
  s.dvv = field.interpolate_deriv(u, v, 0, 2);
  s.duuu = field.interpolate_deriv(u, v, 3, 0);
  s.tu = dtbar_du(b, u, v, s.r);
  s.tv = dtbar_dv(b, u, v, s.r);
  const double om = conformal_factor(b, s.r);
  s.w = om * om / s.tu;
  s.theta = smoothstep_cutoff(s.r, r_cut);
  s.drdu = dr_du(b, u, v, s.r);
  s.drdv = dr_dv(b, u, v, s.r);
  s.vpot = potential_at(b, field.ell(), u, v);
  return s;
}

double wall_flux(const BackgroundSpec& bg, const ModeField& field, int ell, double r_wall,
                 double tau1, double tau2, double eta_prime) {
  if (field.ell() != ell) throw ShapeError("wall_flux: field/mode mismatch");
  const SlicePoint lo = slice_point_at_radius(bg, tau1, eta_prime, r_wall);
  const SlicePoint hi = slice_point_at_radius(bg, tau2, eta_prime, r_wall);
  const double h = field.grid().h;
  const std::size_t n = std::max<std::size_t>(3, static_cast<std::size_t>(
                                                     std::ceil((hi.v - lo.v) / h)) +
                                                     1);
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    const double v = lo.v + t * (hi.v - lo.v);
    const double u = v - (lo.v - lo.u);  // along the diagonal r* = const
    const SliceSample s = make_sample(bg, field, u, v, eta_prime, 0.0);
    const double pu = s.dv * s.dv + s.vpot * s.psi * s.psi;
    const double pv = s.du * s.du + s.vpot * s.psi * s.psi;
    const double integrand = pu - pv;
    if (i > 0) acc += 0.5 * (prev + integrand) * (hi.v - lo.v) / static_cast<double>(n - 1);
    prev = integrand;
  }
  return acc;
}

namespace {

// Slice flux clipped to [r_a, r_b] with exact partial end segments.
double clipped_flux(const BackgroundSpec& bg, const ModeField& field, const Slice& s, double r_a,
                    double r_b, double eta_prime) {
  double acc = 0.0;
  const auto& smp = s.samples;
  for (std::size_t i = 0; i + 1 < smp.size(); ++i) {
    const SliceSample &A = smp[i], &B = smp[i + 1];
    if (B.r <= r_a || A.r >= r_b) continue;
    SliceSample left = A, right = B;
    if (A.r < r_a) {
      const SlicePoint p = slice_point_at_radius(bg, s.tau, eta_prime, r_a);
      left = make_sample(bg, field, p.u, p.v, eta_prime, s.r_cut);
    }
    if (B.r > r_b) {
      const SlicePoint p = slice_point_at_radius(bg, s.tau, eta_prime, r_b);
      right = make_sample(bg, field, p.u, p.v, eta_prime, s.r_cut);
    }
    acc += 0.5 * (right.v - left.v) * (jt_flux_integrand(left) + jt_flux_integrand(right));
  }
  return acc;
}

}  // namespace

LensBalance lens_balance(const BackgroundSpec& bg, const ModeField& field, int ell, double tau1,
                         double tau2, double r_a, double r_b, double eta_prime) {
  if (bg.kind == BackgroundKind::GluedVaidya)
    throw UnsupportedError("lens_balance: GluedVaidya deformation term not supported");
  LensBalance out;
  const Slice s1 = extract_slice(bg, field, tau1, eta_prime, 0.0);
  const Slice s2 = extract_slice(bg, field, tau2, eta_prime, 0.0);
  out.flux_lo = clipped_flux(bg, field, s1, r_a, r_b, eta_prime);
  out.flux_hi = clipped_flux(bg, field, s2, r_a, r_b, eta_prime);
  out.wall_inner = wall_flux(bg, field, ell, r_a, tau1, tau2, eta_prime);
  out.wall_outer = wall_flux(bg, field, ell, r_b, tau1, tau2, eta_prime);
  out.deformation = 0.0;  // T is Killing on the static backgrounds
  out.residual = std::abs(out.flux_hi - out.flux_lo - out.wall_outer + out.wall_inner -
                          out.deformation);
  out.scale = out.flux_lo + std::abs(out.wall_inner) + std::abs(out.wall_outer);
  return out;
}

MorawetzPair morawetz_pair(const BackgroundSpec& bg, const ModeField& field, double tau1,
                           double tau2, double eta, double R, MorawetzVariant variant,
                           double r_c, std::size_t n_tau) {
  if (!(eta > 0.0 && eta < bg.a)) throw ParamError("morawetz_pair: eta outside (0, a)");
  if (!(tau2 > tau1)) throw ParamError("morawetz_pair: tau2 <= tau1");
  const int d = bg.dimension;
  const double lam = angular_eigenvalue(field.ell(), d);
  const double etp = bg.eta_prime;

  auto phi_blocks = [&](const SliceSample& s, double& du2, double& dv2, double& ang,
                        double& zero) {
    const PhiDerivs pd = phi_derivs(s, d);
    du2 = pd.du * pd.du;
    dv2 = pd.dv * pd.dv;
    ang = lam / (s.r * s.r) * pd.phi * pd.phi;
    zero = pd.phi * pd.phi;
  };

  MorawetzPair out;
  // LHS
  out.lhs = lens_integral(bg, field, tau1, tau2, etp, 0.0, n_tau, [&](const SliceSample& s) {
    const double th = smoothstep_cutoff(s.r, R);
    if (th == 0.0) return 0.0;
    double du2, dv2, ang, zero;
    phi_blocks(s, du2, dv2, ang, zero);
    const double om2 = s.w * s.tu;
    double val;
    if (variant == MorawetzVariant::Basic) {
      val = std::pow(s.r, -1.0 - eta) * (du2 + dv2) + ang / s.r +
            std::pow(s.r, -3.0 - eta) * zero;
    } else {
      if (s.r <= r_c)
        val = du2 + dv2 + ang + zero / (s.r * s.r);
      else
        val = r_c * (std::pow(s.r, -1.0 - eta) * (du2 + dv2) + ang / s.r +
                     std::pow(s.r, -3.0 - eta) * zero);
    }
    return th * val * om2;
  });

  // RHS slice terms
  double slice_terms = 0.0;
  for (double tau : {tau1, tau2}) {
    const Slice s = extract_slice(bg, field, tau, etp, 0.0);
    slice_terms += slice_integral(s, [&](const SliceSample& q) {
      const double th = smoothstep_cutoff(q.r, R);
      if (th == 0.0) return 0.0;
      double du2, dv2, ang, zero;
      phi_blocks(q, du2, dv2, ang, zero);
      const double om2 = q.w * q.tu;
      return th * (dv2 + ang + std::pow(q.r, -1.0 - etp) * du2 + zero / (q.r * q.r)) * om2;
    });
  }

  // cutoff-region term, |d theta| supported in [R, R+1]
  const double cutoff_term =
      lens_integral(bg, field, tau1, tau2, etp, 0.0, n_tau, [&](const SliceSample& s) {
        const double thp = smoothstep_cutoff_deriv(s.r, R);
        if (thp == 0.0) return 0.0;
        double du2, dv2, ang, zero;
        phi_blocks(s, du2, dv2, ang, zero);
        const double om2 = s.w * s.tu;
        const double grad = du2 + dv2 + ang;
        const double rfac = (variant == MorawetzVariant::Improved) ? s.r : 1.0;
        return thp * (std::abs(s.drdu) + std::abs(s.drdv)) * rfac *
               (grad + zero / (s.r * s.r)) * om2;
      });

  // radiating-error term
  const double radiating =
      lens_integral(bg, field, tau1, tau2, etp, 0.0, n_tau, [&](const SliceSample& s) {
        const double th = smoothstep_cutoff(s.r, R);
        if (th == 0.0) return 0.0;
        double du2, dv2, ang, zero;
        phi_blocks(s, du2, dv2, ang, zero);
        const double om2 = s.w * s.tu;
        const double rcfac = (variant == MorawetzVariant::Improved) ? r_c : 1.0;
        return th * rcfac * (dv2 + ang + zero / (s.r * s.r)) / s.r * om2;
      });

  out.rhs_without_radiating = slice_terms + cutoff_term;
  out.rhs = out.rhs_without_radiating + radiating;
  return out;
}

}  // namespace rpdecay
