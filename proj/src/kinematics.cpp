#include "shipsim/kinematics.hpp"

#include <algorithm>
#include <numbers>

#include "shipsim/errors.hpp"

namespace shipsim {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

void ShipGeometry::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) {
      throw ConfigError(std::string("geometry.") + name + " must be > 0");
    }
  };
  positive(L_pp, "L_pp");
  positive(L_OA, "L_OA");
  positive(d, "d");
  positive(A_T, "A_T");
  positive(A_L, "A_L");
  positive(rho, "rho");
  positive(rho_A, "rho_A");
  if (L_OA < L_pp) {
    throw ConfigError("geometry.L_OA must be >= geometry.L_pp");
  }
}

double wrap_angle(double a) {
  double y = std::fmod(a + kPi, kTwoPi);
  if (y <= 0.0) y += kTwoPi;
  return y - kPi;
}

double wrap_two_pi(double a) {
  double y = std::fmod(a, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  return y;
}

double resultant_speed(double u, double v) { return std::hypot(u, v); }

double drift_angle(double u, double v, double eps) {
  const double U = std::hypot(u, v);
  if (U < eps) return 0.0;
  return -std::asin(std::clamp(v / U, -1.0, 1.0));
}

namespace {
double force_scale(const ShipGeometry& g, double U) {
  if (!(U > 0.0)) throw ModelError("zero reference speed");
  return 0.5 * g.rho * U * U * g.L_pp * g.d;
}
double moment_scale(const ShipGeometry& g, double U) {
  if (!(U > 0.0)) throw ModelError("zero reference speed");
  return 0.5 * g.rho * U * U * g.L_pp * g.L_pp * g.d;
}
}  // namespace

double nondim_force(double force, const ShipGeometry& g, double U) {
  return force / force_scale(g, U);
}
double redim_force(double force_nd, const ShipGeometry& g, double U) {
  return force_nd * force_scale(g, U);
}
double nondim_moment(double moment, const ShipGeometry& g, double U) {
  return moment / moment_scale(g, U);
}
double redim_moment(double moment_nd, const ShipGeometry& g, double U) {
  return moment_nd * moment_scale(g, U);
}

EarthRates body_to_earth_rates(const ShipState& s) {
  const double c = std::cos(s.psi);
  const double sn = std::sin(s.psi);
  return {s.u * c - s.v_m * sn, s.u * sn + s.v_m * c, s.r};
}

ApparentWind apparent_wind(const ShipState& s, const TrueWind& w) {
  // Wind velocity (direction the air moves) in the earth frame.
  const double wx = -w.U_T * std::cos(w.gamma_T);
  const double wy = -w.U_T * std::sin(w.gamma_T);
  const EarthRates v = body_to_earth_rates(s);
  const double rx = wx - v.dx0;
  const double ry = wy - v.dy0;
  // Rotate into the body frame.
  const double c = std::cos(s.psi);
  const double sn = std::sin(s.psi);
  const double ax = c * rx + sn * ry;
  const double ay = -sn * rx + c * ry;
  ApparentWind out;
  out.U_A = std::hypot(ax, ay);
  out.gamma_A = (out.U_A > 0.0) ? wrap_two_pi(std::atan2(-ay, -ax)) : 0.0;
  return out;
}

}  // namespace shipsim
