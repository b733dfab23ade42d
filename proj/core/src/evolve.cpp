#include "rpdecay/evolve.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

namespace rpdecay {

void NullGrid::validate() const {
  if (!(h > 0.0)) throw DomainError("grid: h must be positive");
  if (nu < 2 || nv < 2) throw DomainError("grid: need at least 2 nodes per direction");
}

CharacteristicData CharacteristicData::gaussian(double amplitude, double center, double width) {
  CharacteristicData d;
  d.on_v_axis = [=](double v) {
    const double x = (v - center) / width;
    return amplitude * std::exp(-0.5 * x * x);
  };
  d.on_u_axis = [](double) { return 0.0; };
  return d;
}

CharacteristicData CharacteristicData::compact_bump(double amplitude, double center, double width) {
  CharacteristicData d;
  d.on_v_axis = [=](double v) {
    const double x = (v - center) / width;
    if (std::abs(x) >= 1.0) return 0.0;
    return amplitude * std::exp(1.0 - 1.0 / (1.0 - x * x));
  };
  d.on_u_axis = [](double) { return 0.0; };
  return d;
}

CharacteristicData CharacteristicData::dalembert(std::function<double(double)> g) {
  CharacteristicData d;
  d.on_v_axis = [g](double v) { return g(v); };
  d.on_u_axis = [g](double u) { return -g(u); };
  return d;
}

CharacteristicData CharacteristicData::zero() {
  CharacteristicData d;
  d.on_v_axis = [](double) { return 0.0; };
  d.on_u_axis = [](double) { return 0.0; };
  return d;
}

ModeField::ModeField(int ell, NullGrid grid) : ell_(ell), grid_(grid) {
  grid_.validate();
  values_.assign(grid_.nu * grid_.nv, 0.0);
}

double ModeField::du_at(std::size_t i, std::size_t j) const {
  const double h = grid_.h;
  if (i == 0)
    return (-3.0 * at(0, j) + 4.0 * at(1, j) - at(2, j)) / (2.0 * h);
  if (i == grid_.nu - 1)
    return (3.0 * at(i, j) - 4.0 * at(i - 1, j) + at(i - 2, j)) / (2.0 * h);
  return (at(i + 1, j) - at(i - 1, j)) / (2.0 * h);
}

double ModeField::dv_at(std::size_t i, std::size_t j) const {
  const double h = grid_.h;
  if (j == 0)
    return (-3.0 * at(i, 0) + 4.0 * at(i, 1) - at(i, 2)) / (2.0 * h);
  if (j == grid_.nv - 1)
    return (3.0 * at(i, j) - 4.0 * at(i, j - 1) + at(i, j - 2)) / (2.0 * h);
  return (at(i, j + 1) - at(i, j - 1)) / (2.0 * h);
}

double ModeField::deriv_at(std::size_t i, std::size_t j, int a, int b) const {
  if (a + b > 3 || a < 0 || b < 0) throw UnsupportedError("deriv_at: order > 3");
  if (a == 0 && b == 0) return at(i, j);
  if (a > 0) {
    // recurse on the u-difference of the (a-1,b) derivative
    const double h = grid_.h;
    auto d = [&](std::size_t ii) { return deriv_at(ii, j, a - 1, b); };
    if (i == 0) return (-3.0 * d(0) + 4.0 * d(1) - d(2)) / (2.0 * h);
    if (i == grid_.nu - 1) return (3.0 * d(i) - 4.0 * d(i - 1) + d(i - 2)) / (2.0 * h);
    return (d(i + 1) - d(i - 1)) / (2.0 * h);
  }
  const double h = grid_.h;
  auto d = [&](std::size_t jj) { return deriv_at(i, jj, a, b - 1); };
  if (j == 0) return (-3.0 * d(0) + 4.0 * d(1) - d(2)) / (2.0 * h);
  if (j == grid_.nv - 1) return (3.0 * d(j) - 4.0 * d(j - 1) + d(j - 2)) / (2.0 * h);
  return (d(j + 1) - d(j - 1)) / (2.0 * h);
}

bool ModeField::in_grid(double u, double v) const {
  const double eps = 1e-9 * grid_.h;
  return u >= grid_.u0 - eps && u <= grid_.u_max() + eps && v >= grid_.v0 - eps &&
         v <= grid_.v_max() + eps;
}

template <typename F>
double ModeField::bilinear(double u, double v, F&& node_value) const {
  if (!in_grid(u, v)) throw DomainError("interpolate: point outside grid");
  const double fu = (u - grid_.u0) / grid_.h;
  const double fv = (v - grid_.v0) / grid_.h;
  std::size_t i = static_cast<std::size_t>(std::max(0.0, std::floor(fu)));
  std::size_t j = static_cast<std::size_t>(std::max(0.0, std::floor(fv)));
  if (i >= grid_.nu - 1) i = grid_.nu - 2;
  if (j >= grid_.nv - 1) j = grid_.nv - 2;
  const double su = fu - static_cast<double>(i);
  const double sv = fv - static_cast<double>(j);
  const double w00 = node_value(i, j);
  const double w10 = node_value(i + 1, j);
  const double w01 = node_value(i, j + 1);
  const double w11 = node_value(i + 1, j + 1);
  return (1.0 - su) * ((1.0 - sv) * w00 + sv * w01) + su * ((1.0 - sv) * w10 + sv * w11);
}

double ModeField::interpolate(double u, double v) const {
  return bilinear(u, v, [&](std::size_t i, std::size_t j) { return at(i, j); });
}

double ModeField::interpolate_du(double u, double v) const {
  return bilinear(u, v, [&](std::size_t i, std::size_t j) { return du_at(i, j); });
}

double ModeField::interpolate_dv(double u, double v) const {
  return bilinear(u, v, [&](std::size_t i, std::size_t j) { return dv_at(i, j); });
}

double ModeField::interpolate_deriv(double u, double v, int a, int b) const {
  return bilinear(u, v, [&](std::size_t i, std::size_t j) { return deriv_at(i, j, a, b); });
}

DerivativeGrids derivatives(const ModeField& field) {
  const NullGrid& g = field.grid();
  DerivativeGrids out;
  out.du.resize(g.nu * g.nv);
  out.dv.resize(g.nu * g.nv);
  for (std::size_t i = 0; i < g.nu; ++i)
    for (std::size_t j = 0; j < g.nv; ++j) {
      out.du[i * g.nv + j] = field.du_at(i, j);
      out.dv[i * g.nv + j] = field.dv_at(i, j);
    }
  return out;
}

namespace {

bool touches_axis(const BackgroundSpec& bg, const NullGrid& g) {
  return bg.kind == BackgroundKind::Minkowski && g.v0 - g.u_max() <= 0.0;
}

// True when the potential vanishes identically, making the free-wave update
// exact and r-independent.
bool potential_free(const BackgroundSpec& bg, int ell) {
  return bg.kind == BackgroundKind::Minkowski && ell == 0 && bg.dimension == 3;
}

}  // namespace

ModeField evolve(const BackgroundSpec& bg, int ell, const NullGrid& grid,
                 const CharacteristicData& data) {
  grid.validate();
  if (ell < 0) throw DomainError("evolve: ell < 0");
  ModeField field(ell, grid);
  const double h = grid.h;
  const std::size_t nu = grid.nu, nv = grid.nv;

  const bool free_wave = potential_free(bg, ell);
  const bool triangular = !free_wave && touches_axis(bg, grid);
  std::int64_t diag0 = 0;  // column index of the axis on row i: j_axis = i - diag0
  if (triangular) {
    const double off = (grid.v0 - grid.u0) / h;
    diag0 = static_cast<std::int64_t>(std::llround(off));
    if (std::abs(off - static_cast<double>(diag0)) > 1e-9)
      throw DomainError("evolve: axis-touching Minkowski grid needs (v0-u0)/h integer");
  }

  const double corner_v = data.on_v_axis(grid.u0);
  const double corner_u = data.on_u_axis(grid.v0);
  if (std::abs(corner_v - corner_u) > 1e-12)
    throw DomainError("evolve: corner compatibility violated");

  auto axis_col = [&](std::size_t i) -> std::int64_t {
    return static_cast<std::int64_t>(i) - diag0;  // j with v_j = u_i
  };

  // Initial data on the two axes. On triangular grids nodes at or below the
  // axis v = u are zero and the u-axis row only carries data above the axis.
  for (std::size_t j = 0; j < nv; ++j) {
    if (triangular && static_cast<std::int64_t>(j) <= axis_col(0))
      field.at(0, j) = 0.0;
    else
      field.at(0, j) = data.on_v_axis(grid.v(j));
  }
  for (std::size_t i = 0; i < nu; ++i) {
    if (triangular && axis_col(i) >= 0) break;
    field.at(i, 0) = data.on_u_axis(grid.u(i));
  }

  // Per-diagonal potential cache for static backgrounds: cell centres on the
  // same diagonal share r* = v - u. GluedVaidya is (u,v)-dependent.
  std::vector<double> vcache;
  const bool static_bg = bg.kind != BackgroundKind::GluedVaidya;
  if (!free_wave && static_bg) {
    vcache.resize(nu + nv, std::numeric_limits<double>::quiet_NaN());
  }

  for (std::size_t i = 1; i < nu; ++i) {
    const double uc = grid.u(i) - 0.5 * h;
    std::size_t j_start = 1;
    if (triangular) {
      const std::int64_t ja = axis_col(i);
      if (ja >= static_cast<std::int64_t>(nv)) continue;  // whole row below axis
      if (ja >= 0) {
        for (std::int64_t j = 0; j <= ja; ++j) field.at(i, static_cast<std::size_t>(j)) = 0.0;
        j_start = static_cast<std::size_t>(ja + 1);
      }
    }
    for (std::size_t j = j_start; j < nv; ++j) {
      const double psi_e = field.at(i - 1, j);
      const double psi_w = field.at(i, j - 1);
      const double psi_s = field.at(i - 1, j - 1);
      double upd;
      if (free_wave) {
        upd = psi_e + psi_w - psi_s;
      } else {
        double vc;
        if (static_bg) {
          // diagonal index of the cell centre: (j - i) + (nu - 1) stays >= 0
          const std::size_t k = j - i + nu - 1;
          vc = vcache[k];
          if (std::isnan(vc)) {
            const double vcv = grid.v(j) - 0.5 * h;
            vc = potential_at(bg, ell, uc, vcv);
            vcache[k] = vc;
          }
        } else {
          vc = potential_at(bg, ell, uc, grid.v(j) - 0.5 * h);
        }
        upd = psi_e + psi_w - psi_s - 0.5 * h * h * vc * (psi_e + psi_w);
      }
      if (!std::isfinite(upd)) {
        std::ostringstream os;
        os << "evolve: non-finite value at node (" << i << "," << j << ")";
        throw NumericalError(os.str());
      }
      field.at(i, j) = upd;
    }
  }
  return field;
}

double convergence_order(const BackgroundSpec& bg, int ell, const CharacteristicData& data,
                         const NullGrid& base_grid) {
  NullGrid g1 = base_grid;
  NullGrid g2 = base_grid;
  g2.h = g1.h / 2.0;
  g2.nu = 2 * (g1.nu - 1) + 1;
  g2.nv = 2 * (g1.nv - 1) + 1;
  NullGrid g4 = base_grid;
  g4.h = g1.h / 4.0;
  g4.nu = 4 * (g1.nu - 1) + 1;
  g4.nv = 4 * (g1.nv - 1) + 1;

  const ModeField f1 = evolve(bg, ell, g1, data);
  const ModeField f2 = evolve(bg, ell, g2, data);
  const ModeField f4 = evolve(bg, ell, g4, data);

  double d12 = 0.0, d24 = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < g1.nu; ++i)
    for (std::size_t j = 0; j < g1.nv; ++j) {
      const double a = f1.at(i, j);
      const double b = f2.at(2 * i, 2 * j);
      const double c = f4.at(4 * i, 4 * j);
      d12 = std::max(d12, std::abs(a - b));
      d24 = std::max(d24, std::abs(b - c));
      scale = std::max(scale, std::abs(a));
    }
  if (d12 <= 64.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0))
    return std::numeric_limits<double>::infinity();  // exact scheme, flagged
  if (d24 == 0.0) return std::numeric_limits<double>::infinity();
  return std::log2(d12 / d24);
}

}  // namespace rpdecay
