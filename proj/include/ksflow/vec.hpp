#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace ksflow {

/// Minimal fixed-size real vectors. Only the operations the dynamics and
/// analysis code actually needs; everything is value-semantic and constexpr
/// where possible.
template <std::size_t N>
struct Vec {
    std::array<double, N> v{};

    constexpr double& operator[](std::size_t i) { return v[i]; }
    constexpr double operator[](std::size_t i) const { return v[i]; }

    constexpr Vec& operator+=(const Vec& o) {
        for (std::size_t i = 0; i < N; ++i) v[i] += o.v[i];
        return *this;
    }
    constexpr Vec& operator-=(const Vec& o) {
        for (std::size_t i = 0; i < N; ++i) v[i] -= o.v[i];
        return *this;
    }
    constexpr Vec& operator*=(double s) {
        for (std::size_t i = 0; i < N; ++i) v[i] *= s;
        return *this;
    }

    friend constexpr Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend constexpr Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend constexpr Vec operator*(double s, Vec a) { return a *= s; }
    friend constexpr Vec operator*(Vec a, double s) { return a *= s; }
    friend constexpr Vec operator/(Vec a, double s) { return a *= 1.0 / s; }
    friend constexpr Vec operator-(const Vec& a) {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.v[i] = -a.v[i];
        return r;
    }
    friend constexpr bool operator==(const Vec& a, const Vec& b) { return a.v == b.v; }
};

using Vec3 = Vec<3>;
using Vec4 = Vec<4>;

template <std::size_t N>
constexpr double dot(const Vec<N>& a, const Vec<N>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
    return s;
}

template <std::size_t N>
constexpr double norm_sq(const Vec<N>& a) {
    return dot(a, a);
}

template <std::size_t N>
inline double norm(const Vec<N>& a) {
    return std::sqrt(norm_sq(a));
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return Vec3{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

template <std::size_t N>
inline Vec<N> normalized(const Vec<N>& a) {
    return a / norm(a);
}

/// a*b - c*d with one rounding's worth of error, via fused multiply-add.
inline double diff_of_products(double a, double b, double c, double d) {
    const double w = c * d;
    const double e = std::fma(c, d, -w);
    const double f = std::fma(a, b, -w);
    return f - e;
}

/// a*b + c*d, same scheme.
inline double sum_of_products(double a, double b, double c, double d) {
    return diff_of_products(a, b, -c, d);
}

} // namespace ksflow
