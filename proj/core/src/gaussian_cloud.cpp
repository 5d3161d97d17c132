#include "uwsplat/gaussian_cloud.hpp"

#include <string>

#include "uwsplat/errors.hpp"

namespace uwsplat {

GaussianCloud GaussianCloud::zeros(size_t n) {
    GaussianCloud c;
    c.resize(n);
    return c;
}

void GaussianCloud::resize(size_t n) {
    count = n;
    positions.resize(3 * n, 0.0);
    rotations.resize(4 * n, 0.0);
    log_scales.resize(3 * n, 0.0);
    opacity_logits.resize(n, 0.0);
    base_colors.resize(3 * n, 0.0);
    atten_raw.resize(3 * n, 0.0);
    backsc_raw.resize(3 * n, 0.0);
    veil_raw.resize(3 * n, 0.0);
}

void GaussianCloud::check_consistent() const {
    auto bad = [&](const char* name) {
        throw ContractViolation("GaussianCloud: attribute array '" + std::string(name) +
                                "' length disagrees with count=" + std::to_string(count));
    };
    if (positions.size() != 3 * count) bad("positions");
    if (rotations.size() != 4 * count) bad("rotations");
    if (log_scales.size() != 3 * count) bad("log_scales");
    if (opacity_logits.size() != count) bad("opacity_logits");
    if (base_colors.size() != 3 * count) bad("base_colors");
    if (atten_raw.size() != 3 * count) bad("atten_raw");
    if (backsc_raw.size() != 3 * count) bad("backsc_raw");
    if (veil_raw.size() != 3 * count) bad("veil_raw");
}

namespace {
inline void write3(std::vector<double>& v, size_t i, const Vec3& x) {
    v[3 * i] = x.x();
    v[3 * i + 1] = x.y();
    v[3 * i + 2] = x.z();
}
}  // namespace

void GaussianCloud::set_position(size_t i, const Vec3& p) { write3(positions, i, p); }
void GaussianCloud::set_rotation(size_t i, const Vec4& q) {
    rotations[4 * i] = q(0);
    rotations[4 * i + 1] = q(1);
    rotations[4 * i + 2] = q(2);
    rotations[4 * i + 3] = q(3);
}
void GaussianCloud::set_log_scale(size_t i, const Vec3& s) { write3(log_scales, i, s); }
void GaussianCloud::set_base_color(size_t i, const Rgb& c) { write3(base_colors, i, c); }
void GaussianCloud::set_atten_raw(size_t i, const Rgb& v) { write3(atten_raw, i, v); }
void GaussianCloud::set_backsc_raw(size_t i, const Rgb& v) { write3(backsc_raw, i, v); }
void GaussianCloud::set_veil_raw(size_t i, const Rgb& v) { write3(veil_raw, i, v); }

MediumCoeffs decode_medium(const GaussianCloud& cloud, size_t index) {
    if (index >= cloud.count)
        throw ArgumentError("decode_medium: index " + std::to_string(index) + " out of range (count=" +
                            std::to_string(cloud.count) + ")");
    MediumCoeffs m;
    m.beta_d = softplus(Vec3(cloud.atten_raw[3 * index], cloud.atten_raw[3 * index + 1], cloud.atten_raw[3 * index + 2]));
    m.beta_b =
        softplus(Vec3(cloud.backsc_raw[3 * index], cloud.backsc_raw[3 * index + 1], cloud.backsc_raw[3 * index + 2]));
    m.veil = sigmoid(Vec3(cloud.veil_raw[3 * index], cloud.veil_raw[3 * index + 1], cloud.veil_raw[3 * index + 2]));
    return m;
}

Mat3 rotation_matrix(const Vec4& q) {
    const double norm = q.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw NumericalError("rotation_matrix: zero-norm or non-finite quaternion");
    const double w = q(0) / norm, x = q(1) / norm, y = q(2) / norm, z = q(3) / norm;
    Mat3 r;
    r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
         2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return r;
}

Mat3 covariance_of(const GaussianCloud& cloud, size_t index) {
    if (index >= cloud.count)
        throw ArgumentError("covariance_of: index " + std::to_string(index) + " out of range");
    const Mat3 r = rotation_matrix(cloud.rotation(index));
    const Vec3 s = cloud.scale(index);
    const Mat3 m = r * s.asDiagonal();
    return m * m.transpose();
}

}  // namespace uwsplat
