#pragma once

#include <functional>
#include <vector>

#include "abspin/errors.hpp"
#include "abspin/matrix2.hpp"
#include "abspin/spin_algebra.hpp"

namespace abspin {

// Particle constants in the scenario's unit system. Natural units with
// hbar = c = 1 are the default; only the combinations mu*B*tau/hbar, omega*t,
// e*V*tau/hbar ever reach an observable.
struct Particle {
    double mu;          // magnetic moment (energy per field unit; negative for the neutron)
    double mass = 1.0;
    double hbar = 1.0;
    double c = 1.0;
    double charge = 1.0;

    void validate() const;
};

// One piecewise-constant field interval: magnitude B along unit direction n
// for a duration tau.
struct FieldSegment {
    double duration;
    double magnitude;
    Vec3 direction;

    Vec3 field_vector() const { return magnitude * direction; }
};

struct FieldProfile {
    std::vector<FieldSegment> segments;

    void validate() const; // durations >= 0, |direction| = 1 within 1e-12
    double total_duration() const;
};

// Time-ordered unitary for H = -mu sigma.B(t): the product of per-segment
// exponentials exp(i mu B_k tau_k (sigma.n_k)/hbar), later segments on the left.
// Uses the closed form exp(i theta sigma.n) = cos(theta) + i sin(theta) sigma.n.
SpinOperator propagator(const Particle& particle, const FieldProfile& profile);

// Same contract, computed independently: each segment is subdivided into
// uniform sub-steps and each sub-step generator is exponentiated by
// scaling-and-squaring Taylor. Agrees with propagator() to round-off for any
// piecewise-constant profile at any step count.
SpinOperator oracle_propagator(const Particle& particle, const FieldProfile& profile,
                               int steps_per_segment);

// Midpoint-rule propagator for a smoothly varying field B(t) (full field
// vector, magnitude included): sample at sub-step midpoints, exponentiate,
// multiply in time order. Second-order accurate in the sub-step size.
using FieldFunction = std::function<Vec3(double)>;
SpinOperator oracle_propagator_smooth(const Particle& particle, const FieldFunction& field,
                                      double t_begin, double t_end, int steps);

// Heisenberg picture: op(t) = U^dagger op U for the propagator U from 0 to t.
SpinOperator heisenberg_evolve(const SpinOperator& op, const SpinOperator& propagator_u);

// omega = 2 mu B / hbar
double precession_frequency(const Particle& particle, double field_magnitude);

// Residual matrix norms of (hbar/2) d sigma/dt - mu sigma(t) x B for a constant
// field B zhat, with the derivative taken by central differences at step dt.
struct PrecessionResidual {
    double x;
    double y;
    double z;
    double max() const { return std::max(x, std::max(y, z)); }
};

PrecessionResidual precession_residual(const Particle& particle, double field_magnitude,
                                       double t, double dt);

} // namespace abspin
