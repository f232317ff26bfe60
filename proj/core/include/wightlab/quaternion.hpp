// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace wightlab {

/// x0 + x1 i + x2 j + x3 k.
struct Quaternion {
    double x0 = 0, x1 = 0, x2 = 0, x3 = 0;

    constexpr double real() const { return x0; }
    constexpr double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
    double norm() const { return std::sqrt(norm2()); }
    constexpr Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
    constexpr double& operator[](int i) { return i == 0 ? x0 : i == 1 ? x1 : i == 2 ? x2 : x3; }
    constexpr double operator[](int i) const {
        return i == 0 ? x0 : i == 1 ? x1 : i == 2 ? x2 : x3;
    }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        x0 += o.x0, x1 += o.x1, x2 += o.x2, x3 += o.x3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        x0 -= o.x0, x1 -= o.x1, x2 -= o.x2, x3 -= o.x3;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        x0 *= s, x1 *= s, x2 *= s, x3 *= s;
        return *this;
    }
    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kQuatOne{1, 0, 0, 0};
inline constexpr Quaternion kQuatI{0, 1, 0, 0};
inline constexpr Quaternion kQuatJ{0, 0, 1, 0};
inline constexpr Quaternion kQuatK{0, 0, 0, 1};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3,
            p.x0 * q.x1 + p.x1 * q.x0 + p.x2 * q.x3 - p.x3 * q.x2,
            p.x0 * q.x2 - p.x1 * q.x3 + p.x2 * q.x0 + p.x3 * q.x1,
            p.x0 * q.x3 + p.x1 * q.x2 - p.x2 * q.x1 + p.x3 * q.x0};
}

constexpr Quaternion quaternion_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

}  // namespace wightlab
