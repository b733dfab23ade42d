#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "rpdecay/background.hpp"
#include "rpdecay/errors.hpp"

namespace rpdecay {

// Rectangular double-null grid. Node (i,j) sits at (u0 + i h, v0 + j h).
struct NullGrid {
  double u0 = 0.0;
  double v0 = 0.0;
  double h = 0.05;
  std::size_t nu = 2;
  std::size_t nv = 2;

  double u(std::size_t i) const { return u0 + h * static_cast<double>(i); }
  double v(std::size_t j) const { return v0 + h * static_cast<double>(j); }
  double u_max() const { return u(nu - 1); }
  double v_max() const { return v(nv - 1); }
  void validate() const;
};

// Characteristic data on the two null axes: psi(u0, v) and psi(u, v0).
struct CharacteristicData {
  std::function<double(double)> on_v_axis;  // psi(u0, .)
  std::function<double(double)> on_u_axis;  // psi(., v0)

  static CharacteristicData gaussian(double amplitude, double center, double width);
  static CharacteristicData compact_bump(double amplitude, double center, double width);
  // Free-wave pair psi(u,v) = G(v) - G(u) (d'Alembert with reflection closure).
  static CharacteristicData dalembert(std::function<double(double)> g);
  static CharacteristicData zero();
};

class ModeField {
 public:
  ModeField() = default;
  ModeField(int ell, NullGrid grid);

  int ell() const { return ell_; }
  const NullGrid& grid() const { return grid_; }

  double& at(std::size_t i, std::size_t j) { return values_[i * grid_.nv + j]; }
  double at(std::size_t i, std::size_t j) const { return values_[i * grid_.nv + j]; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  // Centered O(h^2) differences, one-sided at edges. du_at/dv_at evaluate a
  // single node without materializing the full derivative grid.
  double du_at(std::size_t i, std::size_t j) const;
  double dv_at(std::size_t i, std::size_t j) const;
  // Repeated first differences: d_u^a d_v^b psi at a node, a + b <= 3.
  double deriv_at(std::size_t i, std::size_t j, int a, int b) const;

  // Bilinear interpolation of psi and of FD derivative values at (u, v).
  double interpolate(double u, double v) const;
  double interpolate_du(double u, double v) const;
  double interpolate_dv(double u, double v) const;
  double interpolate_deriv(double u, double v, int a, int b) const;

  bool in_grid(double u, double v) const;

 private:
  int ell_ = 0;
  NullGrid grid_;
  std::vector<double> values_;

  template <typename F>
  double bilinear(double u, double v, F&& node_value) const;
};

// Full derivative grids (the derivatives() operation).
struct DerivativeGrids {
  std::vector<double> du;
  std::vector<double> dv;
};
DerivativeGrids derivatives(const ModeField& field);

}  // namespace rpdecay
