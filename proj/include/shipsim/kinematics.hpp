#pragma once

#include <cmath>

namespace shipsim {

/// Default threshold below which the resultant speed is treated as zero
/// (drift angle and non-dimensional velocities are undefined at U = 0).
inline constexpr double kSpeedEps = 1e-9;

/// Ship motion state. Pose is earth-fixed (x0 north-equivalent, y0 to its
/// right, psi clockwise seen from above); velocities are body-fixed at
/// midship: u surge (+fwd), v_m sway (+starboard), r yaw rate (+clockwise).
struct ShipState {
  double x0 = 0.0;   ///< earth-frame position [m]
  double y0 = 0.0;   ///< earth-frame position [m]
  double psi = 0.0;  ///< heading, normalized to (-pi, pi] [rad]
  double u = 0.0;    ///< surge velocity [m/s]
  double v_m = 0.0;  ///< sway velocity at midship [m/s]
  double r = 0.0;    ///< yaw rate [rad/s]
};

/// Principal dimensions and fluid densities shared by all force models.
struct ShipGeometry {
  double L_pp = 0.0;    ///< length between perpendiculars [m]
  double L_OA = 0.0;    ///< overall length [m]
  double d = 0.0;       ///< draft [m]
  double A_T = 0.0;     ///< projected transverse (frontal) area [m^2]
  double A_L = 0.0;     ///< projected lateral area [m^2]
  double rho = 1025.0;  ///< water density [kg/m^3]
  double rho_A = 1.225; ///< air density [kg/m^3]

  void validate() const;  // throws ConfigError
};

/// True wind in the earth frame. gamma_T is the direction the wind blows
/// FROM, measured from the x0 axis, positive in the same rotational sense
/// as psi (clockwise seen from above). This "blows from" convention is a
/// project decision; see README.
struct TrueWind {
  double U_T = 0.0;      ///< speed [m/s], >= 0
  double gamma_T = 0.0;  ///< direction wind comes from [rad], in [0, 2pi)
};

/// Wind relative to the moving ship, in the body frame. gamma_A = 0 means
/// wind from dead ahead, increasing clockwise seen from above (pi/2 = wind
/// from starboard).
struct ApparentWind {
  double U_A = 0.0;      ///< speed [m/s], >= 0
  double gamma_A = 0.0;  ///< angle off the bow [rad], in [0, 2pi)
};

/// Earth-frame pose rates produced by a body-frame velocity state.
struct EarthRates {
  double dx0 = 0.0;
  double dy0 = 0.0;
  double dpsi = 0.0;
};

/// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

/// Wrap an angle to [0, 2pi).
double wrap_two_pi(double a);

/// Resultant speed U = sqrt(u^2 + v^2).
double resultant_speed(double u, double v);

/// Drift angle beta = -asin(v/U); defined as 0 when U < eps.
double drift_angle(double u, double v, double eps = kSpeedEps);

/// Non-dimensionalize a force by (1/2) rho U^2 L_pp d. Throws on U <= 0.
double nondim_force(double force, const ShipGeometry& geom, double U);
double redim_force(double force_nd, const ShipGeometry& geom, double U);

/// Non-dimensionalize a moment by (1/2) rho U^2 L_pp^2 d. Throws on U <= 0.
double nondim_moment(double moment, const ShipGeometry& geom, double U);
double redim_moment(double moment_nd, const ShipGeometry& geom, double U);

/// Kinematic closure: body velocities to earth-frame pose rates.
EarthRates body_to_earth_rates(const ShipState& s);

/// Apparent wind = true wind vector minus ship velocity vector, expressed
/// in the body frame under the conventions documented on the types.
ApparentWind apparent_wind(const ShipState& s, const TrueWind& w);

}  // namespace shipsim
