#include "rpdecay/waveop.hpp"

#include <cmath>

namespace rpdecay {

double OperatorResidual::max_abs() const {
  double m = 0.0;
  for (double x : values) m = std::max(m, std::abs(x));
  return m;
}

namespace {

// Effective potential at a node, static-background fast path.
double veff(const BackgroundSpec& bg, int ell, double u, double v) {
  return potential_at(bg, ell, u, v);
}

// Node-centered diamond: d_u d_v psi over the 2h x 2h cell around (i,j).
double cross_diamond(const ModeField& f, std::size_t i, std::size_t j) {
  const double h = f.grid().h;
  return (f.at(i + 1, j + 1) - f.at(i + 1, j - 1) - f.at(i - 1, j + 1) + f.at(i - 1, j - 1)) /
         (4.0 * h * h);
}

struct Grid2 {
  std::size_t nu = 0, nv = 0;
  std::vector<double> v;
  double& at(std::size_t i, std::size_t j) { return v[i * nv + j]; }
  double at(std::size_t i, std::size_t j) const { return v[i * nv + j]; }
};

Grid2 make_grid(std::size_t nu, std::size_t nv) {
  Grid2 g;
  g.nu = nu;
  g.nv = nv;
  g.v.assign(nu * nv, 0.0);
  return g;
}

double cross_diamond_from(const Grid2& f, std::size_t i, std::size_t j, double h) {
  return (f.at(i + 1, j + 1) - f.at(i + 1, j - 1) - f.at(i - 1, j + 1) + f.at(i - 1, j - 1)) /
         (4.0 * h * h);
}

// Centered difference along u or v of a full grid; edges left at zero (the
// closure residual is only read on the deep interior).
Grid2 diff(const Grid2& g, double h, bool along_u) {
  Grid2 out = make_grid(g.nu, g.nv);
  for (std::size_t i = 1; i + 1 < g.nu; ++i)
    for (std::size_t j = 1; j + 1 < g.nv; ++j)
      out.at(i, j) = along_u ? (g.at(i + 1, j) - g.at(i - 1, j)) / (2.0 * h)
                             : (g.at(i, j + 1) - g.at(i, j - 1)) / (2.0 * h);
  return out;
}

}  // namespace

OperatorResidual residual(const BackgroundSpec& bg, int ell, const ModeField& field) {
  const NullGrid& g = field.grid();
  if (g.nu < 3 || g.nv < 3) throw ShapeError("residual: grid too small for interior stencil");
  OperatorResidual res;
  res.nu = g.nu - 2;
  res.nv = g.nv - 2;
  res.values.assign(res.nu * res.nv, 0.0);
  for (std::size_t i = 1; i + 1 < g.nu; ++i) {
    for (std::size_t j = 1; j + 1 < g.nv; ++j) {
      const double V = veff(bg, ell, g.u(i), g.v(j));
      const double r = cross_diamond(field, i, j) + V * field.at(i, j);
      if (!std::isfinite(r)) throw ShapeError("residual: non-finite entry");
      res.values[(i - 1) * res.nv + (j - 1)] = r;
    }
  }
  return res;
}

namespace {

// d^j V along v (or u with sign flips) on static backgrounds, exact in r.
double dV_dv(const BackgroundSpec& bg, int ell, double r, int order, bool along_u) {
  const double m = mass_at(bg, 0.0);
  const double f = 1.0 - 2.0 * m / r;
  const double s = along_u ? -1.0 : 1.0;  // d_u r = -f, d_v r = +f
  if (order == 1) return s * f * potential_dr(bg, ell, r);
  // d_v^2 V = f (f' V' + f V''); same for d_u^2 (two sign flips).
  const double fp = 2.0 * m / (r * r);
  return f * (fp * potential_dr(bg, ell, r) + f * potential_drr(bg, ell, r));
}

void require_commutable(const BackgroundSpec& bg, int l) {
  if (l < 1 || l > 2) throw UnsupportedError("commuted correction: l must be 1 or 2");
  if (bg.kind == BackgroundKind::GluedVaidya)
    throw UnsupportedError("commuted correction: GluedVaidya not supported");
}

}  // namespace

CommutedGrid commuted_correction_dv(const BackgroundSpec& bg, int ell, int l,
                                    const ModeField& field) {
  require_commutable(bg, l);
  const NullGrid& g = field.grid();
  CommutedGrid out;
  out.nu = g.nu;
  out.nv = g.nv;
  out.values.assign(g.nu * g.nv, 0.0);
  for (std::size_t i = 0; i < g.nu; ++i)
    for (std::size_t j = 0; j < g.nv; ++j) {
      const double r = areal_radius(bg, g.u(i), g.v(j));
      double c = 0.0;
      if (l == 1) {
        c = dV_dv(bg, ell, r, 1, false) * field.at(i, j);
      } else {
        c = 2.0 * dV_dv(bg, ell, r, 1, false) * field.deriv_at(i, j, 0, 1) +
            dV_dv(bg, ell, r, 2, false) * field.at(i, j);
      }
      out.values[i * g.nv + j] = c;
    }
  return out;
}

CommutedGrid commuted_correction_du(const BackgroundSpec& bg, int ell, int l,
                                    const ModeField& field) {
  require_commutable(bg, l);
  const NullGrid& g = field.grid();
  CommutedGrid out;
  out.nu = g.nu;
  out.nv = g.nv;
  out.values.assign(g.nu * g.nv, 0.0);
  for (std::size_t i = 0; i < g.nu; ++i)
    for (std::size_t j = 0; j < g.nv; ++j) {
      const double r = areal_radius(bg, g.u(i), g.v(j));
      double c = 0.0;
      if (l == 1) {
        c = dV_dv(bg, ell, r, 1, true) * field.at(i, j);
      } else {
        c = 2.0 * dV_dv(bg, ell, r, 1, true) * field.deriv_at(i, j, 1, 0) +
            dV_dv(bg, ell, r, 2, true) * field.at(i, j);
      }
      out.values[i * g.nv + j] = c;
    }
  return out;
}

CommutedGrid commuted_correction_dsigma(const BackgroundSpec& bg, int ell, int l,
                                        const ModeField& field) {
  require_commutable(bg, l);
  const NullGrid& g = field.grid();
  const double lam = angular_eigenvalue(ell, bg.dimension);
  const double amp = std::pow(lam, 0.5 * l);  // each grad_S carries sqrt(lambda)
  CommutedGrid out;
  out.nu = g.nu;
  out.nv = g.nv;
  out.values.assign(g.nu * g.nv, 0.0);
  if (lam == 0.0) return out;  // angular gradient of the ell = 0 mode vanishes
  const double m = mass_at(bg, 0.0);
  const double dl = static_cast<double>(l);
  for (std::size_t i = 0; i < g.nu; ++i)
    for (std::size_t j = 0; j < g.nv; ++j) {
      const double r = areal_radius(bg, g.u(i), g.v(j));
      const double f = 1.0 - 2.0 * m / r;
      const double fp = 2.0 * m / (r * r);
      const double rl1 = std::pow(r, -dl - 1.0);
      const double psi = amp * field.at(i, j);
      const double pu = amp * field.deriv_at(i, j, 1, 0);
      const double pv = amp * field.deriv_at(i, j, 0, 1);
      out.values[i * g.nv + j] = dl * f * rl1 * (pu - pv) +
                                 (dl * (dl + 1.0) * f * f * rl1 / r - dl * f * fp * rl1) * psi;
    }
  return out;
}

double commuted_closure_residual(const BackgroundSpec& bg, int ell, int l, CommuteDirection dir,
                                 const ModeField& field) {
  require_commutable(bg, l);
  const NullGrid& g = field.grid();
  const std::size_t margin = static_cast<std::size_t>(l) + 2;
  if (g.nu < 2 * margin + 3 || g.nv < 2 * margin + 3)
    throw ShapeError("commuted_closure_residual: grid too small");
  const double h = g.h;
  const double lam = angular_eigenvalue(ell, bg.dimension);

  // L psi at nodes
  Grid2 Lpsi = make_grid(g.nu, g.nv);
  for (std::size_t i = 1; i + 1 < g.nu; ++i)
    for (std::size_t j = 1; j + 1 < g.nv; ++j)
      Lpsi.at(i, j) =
          -cross_diamond(field, i, j) - veff(bg, ell, g.u(i), g.v(j)) * field.at(i, j);

  // commuted object chi and D^l (L psi)
  Grid2 chi = make_grid(g.nu, g.nv);
  Grid2 DlL = Lpsi;
  if (dir == CommuteDirection::Dv || dir == CommuteDirection::Du) {
    const bool along_u = dir == CommuteDirection::Du;
    for (std::size_t i = 0; i < g.nu; ++i)
      for (std::size_t j = 0; j < g.nv; ++j)
        chi.at(i, j) = along_u ? field.deriv_at(i, j, l, 0) : field.deriv_at(i, j, 0, l);
    for (int k = 0; k < l; ++k) DlL = diff(DlL, h, along_u);
  } else {
    const double amp = std::pow(lam, 0.5 * l);
    for (std::size_t i = 0; i < g.nu; ++i)
      for (std::size_t j = 0; j < g.nv; ++j) {
        const double r = areal_radius(bg, g.u(i), g.v(j));
        const double scale = amp * std::pow(r, -static_cast<double>(l));
        chi.at(i, j) = scale * field.at(i, j);
        DlL.at(i, j) = scale * Lpsi.at(i, j);
      }
  }

  CommutedGrid corr;
  switch (dir) {
    case CommuteDirection::Dv: corr = commuted_correction_dv(bg, ell, l, field); break;
    case CommuteDirection::Du: corr = commuted_correction_du(bg, ell, l, field); break;
    case CommuteDirection::Dsigma: corr = commuted_correction_dsigma(bg, ell, l, field); break;
  }

  double worst = 0.0;
  for (std::size_t i = margin; i + margin < g.nu; ++i)
    for (std::size_t j = margin; j + margin < g.nv; ++j) {
      const double Lchi =
          -cross_diamond_from(chi, i, j, h) - veff(bg, ell, g.u(i), g.v(j)) * chi.at(i, j);
      const double res = Lchi - DlL.at(i, j) - corr.at(i, j);
      worst = std::max(worst, std::abs(res));
    }
  return worst;
}

std::array<ErrSlot, 9> err_envelope(const BackgroundSpec& bg, double u, double v, int ell) {
  const double r = areal_radius(bg, u, v);
  const double a = bg.a;
  const double d = bg.dimension;
  const double lam = angular_eigenvalue(ell, bg.dimension);
  const double v_flat = (lam + 0.25 * (d - 1.0) * (d - 3.0)) / (r * r);
  const double v_exact = potential_at(bg, ell, u, v);

  auto slot = [&](const char* name, double power, double actual) {
    ErrSlot s;
    s.name = name;
    s.power = static_cast<int>(std::lround(power));
    s.envelope = std::pow(r, -power);
    s.actual = actual;
    return s;
  };
  // The exact mode operator is -d_u d_v - V_exact: relative to the flat model
  // operator only the zeroth-order slot is populated.
  return {
      slot("du2", 2.0 + a, 0.0),    slot("dv2", 1.0, 0.0),
      slot("dudsigma", 2.0 + a, 0.0), slot("dvdsigma", 2.0, 0.0),
      slot("dsigma2", 3.0 + a, 0.0), slot("du", 2.0 + a, 0.0),
      slot("dv", 1.0 + a, 0.0),     slot("dsigma", 2.0 + a, 0.0),
      slot("phi", 3.0, std::abs(v_exact - v_flat)),
  };
}

}  // namespace rpdecay
