#pragma once

#include <cmath>

#include "ksflow/vec.hpp"

namespace ksflow {

/// Element of the quaternion algebra, stored in the coordinates
/// (z0, z1, z2, z3) of R^4 used by the Kustaanheimo-Stiefel machinery.
/// The matrix picture is
///
///     Z = [ w1  -w2 ]     with  w1 = z0 + i*z3,  w2 = z2 + i*z1,
///         [ w2*  w1* ]
///
/// and the basis elements I0..I3 (identity, diag(i,-i), [[0,1],[-1,0]],
/// [[0,-i],[-i,0]]) correspond to the tuples returned by the factory
/// functions below. Multiplication is the 2x2 complex matrix product
/// re-expressed in these coordinates.
struct Quaternion {
    double z0 = 0.0, z1 = 0.0, z2 = 0.0, z3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a, double b, double c, double d) : z0(a), z1(b), z2(c), z3(d) {}
    explicit constexpr Quaternion(const Vec4& v) : z0(v[0]), z1(v[1]), z2(v[2]), z3(v[3]) {}

    constexpr Vec4 vec() const { return Vec4{{z0, z1, z2, z3}}; }

    friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.z0 + b.z0, a.z1 + b.z1, a.z2 + b.z2, a.z3 + b.z3};
    }
    friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.z0 - b.z0, a.z1 - b.z1, a.z2 - b.z2, a.z3 - b.z3};
    }
    friend constexpr Quaternion operator*(double s, const Quaternion& a) {
        return {s * a.z0, s * a.z1, s * a.z2, s * a.z3};
    }
    friend constexpr Quaternion operator-(const Quaternion& a) {
        return {-a.z0, -a.z1, -a.z2, -a.z3};
    }
    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.z0 == b.z0 && a.z1 == b.z1 && a.z2 == b.z2 && a.z3 == b.z3;
    }
};

constexpr Quaternion quat_i0() { return {1.0, 0.0, 0.0, 0.0}; }
constexpr Quaternion quat_i1() { return {0.0, 0.0, 0.0, 1.0}; }
constexpr Quaternion quat_i2() { return {0.0, 0.0, -1.0, 0.0}; }
constexpr Quaternion quat_i3() { return {0.0, 1.0, 0.0, 0.0}; }

/// Matrix product of the algebra; derived from
/// (w1, w2)*(v1, v2) = (w1 v1 - w2 conj(v2), w1 v2 + w2 conj(v1)).
constexpr Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return {a.z0 * b.z0 - a.z1 * b.z1 - a.z2 * b.z2 - a.z3 * b.z3,
            a.z0 * b.z1 + a.z1 * b.z0 + a.z3 * b.z2 - a.z2 * b.z3,
            a.z0 * b.z2 + a.z2 * b.z0 + a.z1 * b.z3 - a.z3 * b.z1,
            a.z0 * b.z3 + a.z3 * b.z0 + a.z2 * b.z1 - a.z1 * b.z2};
}

/// Conjugation X -> X* (transpose-conjugate of the matrix).
constexpr Quaternion quat_conj(const Quaternion& a) { return {a.z0, -a.z1, -a.z2, -a.z3}; }

/// Real part, i.e. half the matrix trace.
constexpr double quat_re(const Quaternion& a) { return a.z0; }

constexpr double quat_norm_sq(const Quaternion& a) {
    return a.z0 * a.z0 + a.z1 * a.z1 + a.z2 * a.z2 + a.z3 * a.z3;
}

inline double quat_norm(const Quaternion& a) { return std::sqrt(quat_norm_sq(a)); }

/// exp(theta*I1), a unit quaternion generating the circle action.
inline Quaternion quat_exp_i1(double theta) {
    return {std::cos(theta), 0.0, 0.0, std::sin(theta)};
}

/// Left multiplication by exp(theta*I1). In the complex pairs
/// w1 = z0 + i z3 and w2 = z2 + i z1 this rotates both by e^{i theta}.
inline Quaternion circle_act(double theta, const Quaternion& z) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * z.z0 - s * z.z3, c * z.z1 + s * z.z2, c * z.z2 - s * z.z1, c * z.z3 + s * z.z0};
}

/// The same rotation applied to a raw 4-vector (the cotangent lift acts on
/// the momentum with the identical matrix).
inline Vec4 circle_act(double theta, const Vec4& v) {
    const double c = std::cos(theta), s = std::sin(theta);
    return Vec4{{c * v[0] - s * v[3], c * v[1] + s * v[2], c * v[2] - s * v[1],
                 c * v[3] + s * v[0]}};
}

} // namespace ksflow
