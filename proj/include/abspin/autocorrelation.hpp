#pragma once

#include <string>
#include <vector>

#include "abspin/matrix2.hpp"
#include "abspin/spin_algebra.hpp"
#include "abspin/spin_dynamics.hpp"

namespace abspin {

// Spin autocorrelation operators for a constant field B zhat:
//   C(t) = 1/4 [sx(0) sx(t) + sy(0) sy(t) + h.c.]
//   S(t) = 1/4 [sx(0) sy(t) - sy(0) sx(t) + h.c.]
// Both come out proportional to the identity; c_value and s_value are the
// coefficients (cos(omega t) and -sin(omega t)).
struct AutocorrResult {
    double t;
    SpinOperator C;
    SpinOperator S;
    double c_value;
    double s_value;
    double theta; // atan2(-s_value, c_value), principal value
};

AutocorrResult autocorrelation(const Particle& particle, double field_magnitude, double t);

// Central-difference residuals of the autocorrelation equations of motion at
// step dt. The implemented pair is dC/dt = omega S, dS/dt = -omega C; the
// +omega C sign variant is reported alongside because it is not solved by
// C = cos(omega t), S = -sin(omega t).
struct EomResidual {
    double c_residual;                // || dC/dt - omega S ||
    double s_residual;                // || dS/dt + omega C ||
    double s_residual_sign_variant;   // || dS/dt - omega C ||
};

EomResidual autocorr_eom_residual(const Particle& particle, double field_magnitude, double t,
                                  double dt);

// Relative precession angle of the transverse spin projections after time tau:
// theta(tau) = omega tau, which is exactly twice the interferometer phase
// delta_phi = mu B tau / hbar.
double correlation_angle(const Particle& particle, double field_magnitude, double tau);

// Unwraps a sequence of principal-value angles into a continuous branch.
std::vector<double> unwrap_angles(const std::vector<double>& wrapped);

// Torque L = mu sigma x B as spin operators.
struct TorqueOperator {
    SpinOperator x;
    SpinOperator y;
    SpinOperator z;
};

TorqueOperator torque_operator(const Particle& particle, const Vec3& field);

struct TorqueStats {
    double mean_x;
    double mean_y;
    double var_x;
    double var_y;
};

TorqueStats torque_fluctuations(const SpinState& state, const Particle& particle,
                                const Vec3& field);

// Diagnostic notes attached to results whenever the corresponding code paths
// run (see runner).
const std::string& torque_moment_note();
const std::string& autocorr_sign_note();

} // namespace abspin
