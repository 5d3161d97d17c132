#pragma once

#include <cstddef>
#include <vector>

#include "uwsplat/types.hpp"

namespace uwsplat {

/// Decoded per-primitive water-medium sample.
struct MediumCoeffs {
    Rgb beta_d;  // direct attenuation, >= 0 per channel
    Rgb beta_b;  // backscatter rate, >= 0 per channel
    Rgb veil;    // veiling light, in [0,1] per channel
};

// Structure-of-arrays store for all primitive parameters. Raw (pre-decode)
// values are what the optimizer touches; decode helpers map them into their
// physical ranges:
//   opacity = sigmoid(opacity_logit)         in (0,1)
//   scale   = exp(log_scale)                 > 0
//   beta_d  = softplus(atten_raw)            >= 0
//   beta_b  = softplus(backsc_raw)           >= 0
//   veil    = sigmoid(veil_raw)              in [0,1]
// Quaternions are stored unnormalized and normalized at read time.
struct GaussianCloud {
    size_t count = 0;
    std::vector<double> positions;       // 3N, world units
    std::vector<double> rotations;       // 4N, quaternion (w, x, y, z)
    std::vector<double> log_scales;      // 3N
    std::vector<double> opacity_logits;  // N
    std::vector<double> base_colors;     // 3N, RGB in [0,1]
    std::vector<double> atten_raw;       // 3N
    std::vector<double> backsc_raw;      // 3N
    std::vector<double> veil_raw;        // 3N

    static GaussianCloud zeros(size_t n);

    void resize(size_t n);
    /// Throws ContractViolation if attribute array lengths disagree with count.
    void check_consistent() const;

    Vec3 position(size_t i) const { return {positions[3 * i], positions[3 * i + 1], positions[3 * i + 2]}; }
    Vec4 rotation(size_t i) const {
        return {rotations[4 * i], rotations[4 * i + 1], rotations[4 * i + 2], rotations[4 * i + 3]};
    }
    Vec3 log_scale(size_t i) const { return {log_scales[3 * i], log_scales[3 * i + 1], log_scales[3 * i + 2]}; }
    Vec3 scale(size_t i) const { return log_scale(i).array().exp(); }
    double opacity(size_t i) const { return sigmoid(opacity_logits[i]); }
    Rgb base_color(size_t i) const { return {base_colors[3 * i], base_colors[3 * i + 1], base_colors[3 * i + 2]}; }

    void set_position(size_t i, const Vec3& p);
    void set_rotation(size_t i, const Vec4& q);
    void set_log_scale(size_t i, const Vec3& s);
    void set_base_color(size_t i, const Rgb& c);
    void set_atten_raw(size_t i, const Rgb& v);
    void set_backsc_raw(size_t i, const Rgb& v);
    void set_veil_raw(size_t i, const Rgb& v);
};

/// Decoded medium coefficients for primitive `index`; throws ArgumentError when out of range.
MediumCoeffs decode_medium(const GaussianCloud& cloud, size_t index);

/// Rotation matrix from the normalized quaternion (w, x, y, z).
/// Throws NumericalError on a zero-norm quaternion.
Mat3 rotation_matrix(const Vec4& q);

/// World-space covariance R * diag(s)^2 * R^T of primitive `index`.
Mat3 covariance_of(const GaussianCloud& cloud, size_t index);

}  // namespace uwsplat
