#pragma once

#include <cstdint>
#include <vector>

#include "abspin/matrix2.hpp"
#include "abspin/spin_dynamics.hpp"

namespace abspin {

// Piecewise-linear path in the plane that must keep clear of the flux point.
struct PlanarPath {
    std::vector<Vec2> vertices;
    Vec2 flux_point = Vec2::Zero();
    double clearance = 1e-9;

    void validate() const; // >= 2 vertices, every segment at least `clearance` from flux_point
    bool is_closed(double tol = 1e-12) const;
};

// Smooth localized bump a * exp(-|r-c|^2 / 2w^2) with an analytic gradient;
// finite sums of these form the single-valued gauge functions chi(r).
struct GaugeBump {
    double amplitude;
    Vec2 center;
    double width;

    double value(const Vec2& r) const;
    Vec2 gradient(const Vec2& r) const;
};

// Ideal point solenoid of flux Phi at flux_point plus a gauge term grad(chi).
struct GaugeField {
    double flux = 0.0;
    Vec2 flux_point = Vec2::Zero();
    std::vector<GaugeBump> gauge_bumps;

    double chi(const Vec2& r) const;
};

// A(r) = Phi/(2 pi |r-r0|) azimuthal + grad chi. Throws PhysicsError within
// 1e-9 of the flux point.
Vec2 vector_potential(const GaugeField& field, const Vec2& point);

// Line integral of A along the path: the solenoid term exactly via summed
// subtended angles, the gauge term by composite midpoint sampling.
double line_integral(const GaugeField& field, const PlanarPath& path, int samples_per_segment);

// Total signed angle subtended about the flux point, radians.
double total_subtended_angle(const PlanarPath& path);

// Integer circuit count about the flux point; requires a closed path.
int winding_number(const PlanarPath& path);

// (e/hbar c) (integral over path1 - integral over path2) for a pure solenoid
// of the given flux. Paths must share endpoints; the value is checked against
// delta_n * e Phi / (hbar c) with delta_n the winding of path1 + reversed path2.
double ab_phase_difference(const PlanarPath& path_1, const PlanarPath& path_2, double flux,
                           const Particle& particle);

// Behavior of path integrals under randomized single-valued gauge terms:
// open-path values shift, closed loops and same-endpoint differences do not.
struct PathShift {
    bool closed;
    double base_integral;
    double max_shift;
};

struct GaugeInvarianceReport {
    std::vector<PathShift> per_path;
    double max_closed_shift = 0.0;      // over all closed paths and gauge terms
    double max_pair_difference_shift = 0.0; // over all same-endpoint open-path pairs
    double max_open_shift = 0.0;        // largest single open-path shift seen
    int gauge_terms = 0;
};

GaugeInvarianceReport gauge_invariance_report(const GaugeField& field,
                                              const std::vector<PlanarPath>& paths,
                                              int gauge_terms, std::uint64_t seed,
                                              int samples_per_segment);

// Rest-frame field seen by a moving magnetic moment in an electric field:
// B = (p / m c) x E.
Vec3 ac_effective_field(const Particle& particle, const Vec3& momentum, const Vec3& e_field);

} // namespace abspin
