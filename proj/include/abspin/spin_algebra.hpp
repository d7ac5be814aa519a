#pragma once

#include "abspin/errors.hpp"
#include "abspin/matrix2.hpp"

namespace abspin {

enum class Axis { X, Y, Z };

// Standard representation, sigma_z diagonal.
SpinOperator pauli(Axis axis);

inline SpinOperator pauli_x() { return pauli(Axis::X); }
inline SpinOperator pauli_y() { return pauli(Axis::Y); }
inline SpinOperator pauli_z() { return pauli(Axis::Z); }

// sigma . n for a unit 3-vector n.
SpinOperator spin_along(const Vec3& n);

inline SpinOperator commutator(const SpinOperator& a, const SpinOperator& b) {
    return a * b - b * a;
}

/**
 * Pure spinor or 2x2 density matrix. Pure states keep their spinor and
 * promote to a density matrix on demand, so mixed-state operations work on
 * every state.
 */
class SpinState {
  public:
    // Unit-norm spinor (checked to 1e-12).
    static SpinState pure(const Vec2c& spinor);
    // Hermitian, unit-trace, positive-semidefinite matrix (checked).
    static SpinState density(const Mat2& rho);
    static SpinState from_bloch(const Vec3& b);
    static SpinState unpolarized() { return from_bloch(Vec3::Zero()); }

    // Eigenstates of sigma_axis with the given sign (+1 or -1).
    static SpinState eigenstate(Axis axis, int sign);

    bool is_pure() const { return pure_; }
    const Vec2c& spinor() const;
    Mat2 density_matrix() const;
    Vec3 bloch_vector() const;

  private:
    SpinState() = default;
    bool pure_ = false;
    Vec2c spinor_ = Vec2c::Zero();
    Mat2 rho_ = Mat2::Zero();
};

// trace(rho * op) for a Hermitian op; throws ValidationError otherwise.
double expectation(const SpinState& state, const SpinOperator& op);

// First and second moments of the transverse spin components.  The second
// moments are identically 1 for every state (sigma^2 = 1), so the vanishing
// of the first moments never makes the components themselves vanish.
struct TransverseSpinReport {
    double sx;
    double sy;
    double sx_sq;
    double sy_sq;
    bool condition_satisfiable; // sigma_x = sigma_y = 0 as operators: always false
};

TransverseSpinReport check_transverse_spin(const SpinState& state);

} // namespace abspin
