#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace abspin {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2c = Eigen::Vector2cd;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// A 2x2 complex matrix acting on spin space. Observables are Hermitian,
// propagators unitary; both live in this one type and are checked where the
// distinction matters.
using SpinOperator = Mat2;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-12;

inline double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

inline bool is_hermitian(const Mat2& m, double tol = kHermitianTol) {
    return max_abs(m - m.adjoint()) <= tol;
}

inline bool is_unitary(const Mat2& m, double tol = kUnitaryTol) {
    return max_abs(m.adjoint() * m - Mat2::Identity()) <= tol;
}

// Eigenvalues of a Hermitian 2x2 matrix, closed form, ascending order.
// For [[a, b], [conj(b), d]]: mean ± sqrt(((a-d)/2)^2 + |b|^2).
inline std::array<double, 2> hermitian_eigenvalues(const Mat2& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double dev = 0.5 * (a - d);
    const double r = std::sqrt(dev * dev + std::norm(m(0, 1)));
    return {mean - r, mean + r};
}

// exp(M) by scaling and squaring with a Taylor series. Used as the
// trig-identity-free route for propagator cross-checks.
Mat2 taylor_exp(const Mat2& m);

} // namespace abspin
