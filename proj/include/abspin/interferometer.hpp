#pragma once

#include <variant>
#include <vector>

#include "abspin/matrix2.hpp"
#include "abspin/spin_algebra.hpp"
#include "abspin/spin_dynamics.hpp"

namespace abspin {

// Arm elements. Each is a timed station in one interferometer arm.

struct FieldPulse {
    double magnitude;
    Vec3 direction;
    double duration;
};

// Potential step DV applied while the particle is inside a shielded region;
// contributes the spin-independent phase e DV tau / hbar.
struct ShieldedPotential {
    double delta_v;
    double duration;
};

// Time-programmed refractive phase: piecewise-constant phase rate.
struct PhaseRamp {
    double rate; // phase per unit time
    double duration;
};

struct OpticalPhase {
    std::vector<PhaseRamp> ramps;
};

struct FreeFlight {
    double duration;
};

using ArmElement = std::variant<FieldPulse, ShieldedPotential, OpticalPhase, FreeFlight>;
using Arm = std::vector<ArmElement>;

void validate_arm(const Arm& arm);

// Composed effect of one arm: spin unitary (field pulses, in order) and the
// accumulated spin-independent phase. duration feeds the kinetic phase in
// energy scans.
struct ArmUnitary {
    SpinOperator spin = SpinOperator::Identity();
    double scalar_phase = 0.0;
    double duration = 0.0;

    Mat2 total() const { return std::exp(Complex(0.0, scalar_phase)) * spin; }
};

ArmUnitary arm_unitary(const Arm& arm, const Particle& particle);

// Balanced Mach-Zehnder output. Port 1 is the constructive port for
// identical arms. relative_phase is arg tr(rho V2^dag V1) (the accumulated
// relative phase for spin-diagonal arms); visibility is |tr(rho V2^dag V1)|,
// the fringe swing of I1 under an auxiliary phase sweep.
struct BeamOutput {
    double intensity_1;
    double intensity_2;
    double relative_phase;
    double visibility;
};

BeamOutput run_mach_zehnder(const Arm& arm_1, const Arm& arm_2, const SpinState& beam,
                            const Particle& particle);

// As above but with the arm unitaries already composed (used by path-phase
// experiments where arms are pure scalar phases).
BeamOutput run_mach_zehnder(const ArmUnitary& u1, const ArmUnitary& u2, const SpinState& beam);

// Runs the two-arm +/-B pulse experiment twice, once with the full spin
// Hamiltonian and once with the spin replaced by the number +1 (pure phase
// arms), and reports both outputs. Valid only for the sigma_z = +1 beam.
struct ScalarReductionReport {
    BeamOutput full_spin;
    BeamOutput scalar;
    double max_abs_difference;
};

ScalarReductionReport scalar_reduction_check(double field_magnitude, double tau,
                                             const Particle& particle, const SpinState& beam);

// Relative phase for each kinetic energy with the arm timing held fixed.
// The kinetic phase exp(-i E T_k / hbar) is applied to each arm; for arms of
// equal duration it cancels and the listed phases are identical.
std::vector<double> energy_independence_scan(const Arm& arm_1, const Arm& arm_2,
                                             const SpinState& beam, const Particle& particle,
                                             const std::vector<double>& kinetic_energies);

} // namespace abspin
