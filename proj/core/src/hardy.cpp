#include <cmath>
#include <map>
#include <tuple>

#include "rpdecay/verify.hpp"

namespace rpdecay {

namespace {

double f_const(double, double) { return 1.0; }
double df_zero(double, double) { return 0.0; }

double f_linear(double x, double) { return x; }
double df_one(double, double) { return 1.0; }

double f_invr(double r, double) { return 1.0 / r; }
double df_invr(double r, double) { return -1.0 / (r * r); }
double ddf_invr(double r, double) { return 2.0 / (r * r * r); }

double f_invr32(double r, double) { return std::pow(r, -1.5); }
double df_invr32(double r, double) { return -1.5 * std::pow(r, -2.5); }
double ddf_invr32(double r, double) { return 3.75 * std::pow(r, -3.5); }

double f_invr2(double r, double) { return 1.0 / (r * r); }
double df_invr2(double r, double) { return -2.0 / (r * r * r); }
double ddf_invr2(double r, double) { return 6.0 / (r * r * r * r); }

double gauss(double r, double c, double s) {
  const double z = (r - c) / s;
  return std::exp(-0.5 * z * z);
}
double dgauss(double r, double c, double s) { return -((r - c) / (s * s)) * gauss(r, c, s); }
double ddgauss(double r, double c, double s) {
  const double z = (r - c) / s;
  return (z * z - 1.0) / (s * s) * gauss(r, c, s);
}
double f_g30(double r, double) { return gauss(r, 30.0, 5.0); }
double df_g30(double r, double) { return dgauss(r, 30.0, 5.0); }
double ddf_g30(double r, double) { return ddgauss(r, 30.0, 5.0); }
double f_g80(double r, double) { return gauss(r, 80.0, 10.0); }
double df_g80(double r, double) { return dgauss(r, 80.0, 10.0); }
double ddf_g80(double r, double) { return ddgauss(r, 80.0, 10.0); }

double bump(double r, double c, double s) {
  const double x = (r - c) / s;
  if (std::abs(x) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - x * x));
}
double dbump(double r, double c, double s) {
  const double x = (r - c) / s;
  if (std::abs(x) >= 1.0) return 0.0;
  const double q = 1.0 - x * x;
  return bump(r, c, s) * (-2.0 * x / (q * q)) / s;
}
double ddbump(double r, double c, double s) {
  const double x = (r - c) / s;
  if (std::abs(x) >= 1.0) return 0.0;
  const double q = 1.0 - x * x;
  const double gp = -2.0 * x / (q * q);
  const double gpp = -2.0 / (q * q) - 8.0 * x * x / (q * q * q);
  return bump(r, c, s) * (gp * gp + gpp) / (s * s);
}
double f_b40(double r, double) { return bump(r, 40.0, 20.0); }
double df_b40(double r, double) { return dbump(r, 40.0, 20.0); }
double ddf_b40(double r, double) { return ddbump(r, 40.0, 20.0); }
double f_b10(double r, double) { return bump(r, 10.0, 5.0); }
double df_b10(double r, double) { return dbump(r, 10.0, 5.0); }
double ddf_b10(double r, double) { return ddbump(r, 10.0, 5.0); }

double f_logtail(double r, double) { return 1.0 / std::log(r + M_E); }
double df_logtail(double r, double) {
  const double L = std::log(r + M_E);
  return -1.0 / ((r + M_E) * L * L);
}
double ddf_logtail(double r, double) {
  const double L = std::log(r + M_E);
  return (1.0 + 2.0 / L) / ((r + M_E) * (r + M_E) * L * L);
}

// psi_{R0}(r) = log(R0) / (log r + log R0), the C4 sharpness family.
double f_logsharp(double r, double R0) {
  const double A = std::log(R0);
  return A / (std::log(r) + A);
}
double df_logsharp(double r, double R0) {
  const double A = std::log(R0);
  const double S = std::log(r) + A;
  return -A / (r * S * S);
}
double ddf_logsharp(double r, double R0) {
  const double A = std::log(R0);
  const double S = std::log(r) + A;
  return A * (1.0 + 2.0 / S) / (r * r * S * S);
}

double f_sindecay(double r, double) { return (1.0 + 0.3 * std::sin(std::log(r))) / (r * r); }
double df_sindecay(double r, double) {
  const double L = std::log(r);
  return (-2.0 - 0.6 * std::sin(L) + 0.3 * std::cos(L)) / (r * r * r);
}
double ddf_sindecay(double r, double) {
  const double L = std::log(r);
  return (6.0 + 1.5 * std::sin(L) - 1.5 * std::cos(L)) / (r * r * r * r);
}

}  // namespace

const std::vector<HardyTestFunction>& hardy_test_family() {
  static const std::vector<HardyTestFunction> family = {
      {"const", f_const, df_zero, df_zero, 0.0},
      {"linear", f_linear, df_one, df_zero, 0.0},
      {"inv_r", f_invr, df_invr, ddf_invr, 0.0},
      {"inv_r32", f_invr32, df_invr32, ddf_invr32, 0.0},
      {"inv_r2", f_invr2, df_invr2, ddf_invr2, 0.0},
      {"gauss30", f_g30, df_g30, ddf_g30, 0.0},
      {"gauss80", f_g80, df_g80, ddf_g80, 0.0},
      {"bump40", f_b40, df_b40, ddf_b40, 0.0},
      {"bump10", f_b10, df_b10, ddf_b10, 0.0},
      {"log_tail", f_logtail, df_logtail, ddf_logtail, 0.0},
      {"log_sharp", f_logsharp, df_logsharp, ddf_logsharp, 1e6},
      {"sin_decay", f_sindecay, df_sindecay, ddf_sindecay, 0.0},
  };
  return family;
}

namespace {

template <typename F>
double trapz(double lo, double hi, std::size_t n, F&& f) {
  if (n < 2) throw ParamError("hardy quadrature: need >= 2 nodes");
  const double dx = (hi - lo) / static_cast<double>(n - 1);
  double acc = 0.5 * (f(lo) + f(hi));
  for (std::size_t i = 1; i + 1 < n; ++i) acc += f(lo + dx * static_cast<double>(i));
  return acc * dx;
}

// log-spaced trapezoid on [lo, hi]: substitute r = e^x.
template <typename F>
double trapz_log(double lo, double hi, std::size_t n, F&& f) {
  return trapz(std::log(lo), std::log(hi), n, [&](double x) {
    const double r = std::exp(x);
    return f(r) * r;
  });
}

int hardy_jmax_all(const HardyParams& p) {
  return static_cast<int>(std::floor(0.5 * (p.dimension - 1 + p.a_weight)));
}

// k-th derivative of the test function, k <= 2.
double fn_deriv(const HardyTestFunction& fn, double r, int k) {
  switch (k) {
    case 0: return fn.f(r, fn.param);
    case 1: return fn.df(r, fn.param);
    case 2: return fn.ddf(r, fn.param);
    default: throw ParamError("hardy: derivative order > 2");
  }
}

std::pair<double, double> hardy_sides(HardyKind kind, const HardyParams& p,
                                      const HardyTestFunction& fn) {
  switch (kind) {
    case HardyKind::C1: {
      const double s = p.g_power;
      if (!(s > 0.0)) throw ParamError("hardy C1: weight power must be positive");
      auto g = [&](double x) { return std::pow(x, s); };
      auto gp = [&](double x) { return s * std::pow(x, s - 1.0); };
      const double lhs = trapz(p.a_lo, p.b_hi, p.nodes,
                               [&](double x) {
                                 const double u = fn.f(x, fn.param);
                                 return gp(x) * u * u;
                               }) +
                         g(p.a_lo) * std::pow(fn.f(p.a_lo, fn.param), 2);
      const double rhs = trapz(p.a_lo, p.b_hi, p.nodes,
                               [&](double x) {
                                 const double up = fn.df(x, fn.param);
                                 return g(x) * g(x) / gp(x) * up * up;
                               }) +
                         g(p.b_hi) * std::pow(fn.f(p.b_hi, fn.param), 2);
      return {lhs, rhs};
    }
    case HardyKind::C2:
    case HardyKind::C3: {
      if (p.k < 1 || p.k > 2) throw ParamError("hardy C2/C3: k must be 1 or 2");
      const int jall = hardy_jmax_all(p);
      if (jall < 1) throw ParamError("hardy C2/C3: floor((d-1+a)/2) < 1");
      const int jmax = std::min(jall, p.k);
      const double dm1 = p.dimension - 1;
      const bool to_infinity = kind == HardyKind::C3;
      const double r_hi = to_infinity ? p.r_far : p.R2;

      double lhs = 0.0;
      for (int j = 1; j <= jmax; ++j) {
        const double w = p.a_weight - 2.0 * j;
        lhs += trapz_log(p.R1, r_hi, p.nodes, [&](double r) {
          const double x = fn_deriv(fn, r, p.k - j);
          return std::pow(r, w + dm1) * x * x;
        });
        const double xb = fn_deriv(fn, p.R1, p.k - j);
        lhs += std::pow(p.R1, p.a_weight + 1.0 - 2.0 * j + dm1) * xb * xb;
      }
      double rhs = trapz_log(p.R1, r_hi, p.nodes, [&](double r) {
        const double x = fn_deriv(fn, r, p.k);
        return std::pow(r, p.a_weight + dm1) * x * x;
      });
      if (!to_infinity) {
        for (int j = 1; j <= jmax; ++j) {
          const double xb = fn_deriv(fn, p.R2, p.k - j);
          rhs += std::pow(p.R2, p.a_weight + 1.0 - 2.0 * j + dm1) * xb * xb;
        }
      }
      return {lhs, rhs};
    }
    case HardyKind::C4: {
      const double lhs = trapz_log(p.R, 2.0 * p.R, p.nodes, [&](double r) {
        const double x = fn.f(r, fn.param);
        return x * x / r;
      });
      const double i1 = trapz_log(p.R, p.r_far, p.nodes, [&](double r) {
        const double x = fn.f(r, fn.param);
        return x * x / r;
      });
      const double i2 = trapz_log(p.R, p.r_far, p.nodes, [&](double r) {
        const double x = fn.df(r, fn.param);
        return r * x * x;
      });
      return {lhs, std::sqrt(i1) * std::sqrt(i2)};
    }
  }
  throw ParamError("hardy: unknown kind");
}

}  // namespace

double hardy_documented_constant(HardyKind kind, const HardyParams& params) {
  if (kind == HardyKind::C1) return 4.0;
  if (kind == HardyKind::C4) return 2.0;
  // C2/C3: maximize the ratio over the test family, cached per (k, a, d).
  static std::map<std::tuple<int, int, double, int>, double> cache;
  const auto key = std::make_tuple(kind == HardyKind::C2 ? 2 : 3, params.k, params.a_weight,
                                   params.dimension);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  double cmax = 0.0;
  for (const HardyTestFunction& fn : hardy_test_family()) {
    try {
      const auto [lhs, rhs] = hardy_sides(kind, params, fn);
      if (rhs > 0.0 && std::isfinite(lhs)) cmax = std::max(cmax, lhs / rhs);
    } catch (const NonpositiveValue&) {
    }
  }
  cmax *= 1.0 + 1e-9;  // guard the maximizer itself against rounding
  cache[key] = cmax;
  return cmax;
}

InequalityReport hardy(HardyKind kind, const HardyParams& params, const HardyTestFunction& fn) {
  InequalityReport rep;
  switch (kind) {
    case HardyKind::C1: rep.name = "hardy_C1"; break;
    case HardyKind::C2: rep.name = "hardy_C2"; break;
    case HardyKind::C3: rep.name = "hardy_C3"; break;
    case HardyKind::C4: rep.name = "hardy_C4"; break;
  }
  rep.name += ":" + fn.name;
  const auto [lhs, rhs] = hardy_sides(kind, params, fn);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.ratio = finite_ratio(lhs, rhs);
  rep.vacuous = lhs == 0.0 && rhs == 0.0;
  rep.extra = hardy_documented_constant(kind, params);
  return rep;
}

}  // namespace rpdecay
