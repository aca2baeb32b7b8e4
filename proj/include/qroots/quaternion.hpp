#pragma once

#include <cmath>

#include "qroots/errors.hpp"

namespace qroots {

/// A real quaternion s + x*i + y*j + z*k.
///
/// Immutable value type; all algebra below is pure. Componentwise
/// comparison is exact -- tests that need tolerance compare moduli of
/// differences instead.
struct Quaternion {
    double s{0.0};  ///< scalar part
    double x{0.0};  ///< i component
    double y{0.0};  ///< j component
    double z{0.0};  ///< k component

    constexpr Quaternion() = default;
    constexpr Quaternion(double s_, double x_, double y_, double z_)
        : s(s_), x(x_), y(y_), z(z_) {}

    /// Embeds a real number.
    static constexpr Quaternion real(double v) { return {v, 0.0, 0.0, 0.0}; }

    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr bool is_zero() const {
        return s == 0.0 && x == 0.0 && y == 0.0 && z == 0.0;
    }

    constexpr double scalar_part() const { return s; }

    double vec_norm() const { return std::sqrt(x * x + y * y + z * z); }

    constexpr double modulus_sq() const {
        return s * s + x * x + y * y + z * z;
    }

    double modulus() const { return std::sqrt(modulus_sq()); }

    constexpr Quaternion conj() const { return {s, -x, -y, -z}; }

    constexpr Quaternion operator-() const { return {-s, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        s += o.s;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }

    constexpr Quaternion& operator-=(const Quaternion& o) {
        s -= o.s;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }

    constexpr Quaternion& operator*=(double c) {
        s *= c;
        x *= c;
        y *= c;
        z *= c;
        return *this;
    }

    constexpr Quaternion& operator/=(double c) {
        s /= c;
        x /= c;
        y /= c;
        z /= c;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double c) { return a *= c; }
constexpr Quaternion operator*(double c, Quaternion a) { return a *= c; }
constexpr Quaternion operator/(Quaternion a, double c) { return a /= c; }

/// Hamilton product under i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.s * b.s - a.x * b.x - a.y * b.y - a.z * b.z,
            a.s * b.x + a.x * b.s + a.y * b.z - a.z * b.y,
            a.s * b.y - a.x * b.z + a.y * b.s + a.z * b.x,
            a.s * b.z + a.x * b.y - a.y * b.x + a.z * b.s};
}

constexpr Quaternion conj(const Quaternion& w) { return w.conj(); }

/// Euclidean scalar product of the component 4-vectors. Satisfies
/// w*conj(v) + v*conj(w) = 2*dot(w, v) as a real quaternion.
constexpr double dot(const Quaternion& w, const Quaternion& v) {
    return w.s * v.s + w.x * v.x + w.y * v.y + w.z * v.z;
}

/// Scalar part, vector-part norm, and modulus of a quaternion, with
/// modulus^2 = scalar^2 + vec_norm^2.
struct Decomposition {
    double scalar;
    double vec_norm;
    double modulus;
};

inline Decomposition decompose(const Quaternion& w) {
    return {w.scalar_part(), w.vec_norm(), w.modulus()};
}

/// Multiplicative inverse conj(w)/|w|^2. Throws ZeroDivisorError on w = 0.
inline Quaternion inverse(const Quaternion& w) {
    const double n2 = w.modulus_sq();
    if (n2 == 0.0) throw ZeroDivisorError{};
    return w.conj() / n2;
}

}  // namespace qroots
