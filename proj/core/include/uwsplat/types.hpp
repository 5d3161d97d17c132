#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace uwsplat {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

// All color triples are RGB order.
using Rgb = Vec3;

inline double sigmoid(double x) {
    return 1.0 / (1.0 + std::exp(-x));
}

inline double logit(double p) {
    return std::log(p / (1.0 - p));
}

// Numerically stable softplus: log(1 + e^x).
inline double softplus(double x) {
    if (x > 30.0) return x;
    if (x < -30.0) return std::exp(x);
    return std::log1p(std::exp(x));
}

// Inverse of softplus for y > 0.
inline double softplus_inverse(double y) {
    if (y > 30.0) return y;
    return std::log(std::expm1(y));
}

inline Vec3 softplus(const Vec3& v) { return {softplus(v.x()), softplus(v.y()), softplus(v.z())}; }
inline Vec3 sigmoid(const Vec3& v) { return {sigmoid(v.x()), sigmoid(v.y()), sigmoid(v.z())}; }

}  // namespace uwsplat
