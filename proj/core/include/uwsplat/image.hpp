#pragma once

#include <cstddef>
#include <vector>

#include "uwsplat/errors.hpp"
#include "uwsplat/types.hpp"

namespace uwsplat {

/// Row-major interleaved image with `channels` doubles per pixel.
template <int Channels>
struct Image {
    int width = 0;
    int height = 0;
    std::vector<double> data;  // height * width * Channels

    Image() = default;
    Image(int w, int h, double fill = 0.0) : width(w), height(h), data(static_cast<size_t>(w) * h * Channels, fill) {}

    static constexpr int channels() { return Channels; }
    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
    size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }

    double* pixel(int y, int x) { return data.data() + (static_cast<size_t>(y) * width + x) * Channels; }
    const double* pixel(int y, int x) const { return data.data() + (static_cast<size_t>(y) * width + x) * Channels; }

    double& at(int y, int x, int c = 0) { return data[(static_cast<size_t>(y) * width + x) * Channels + c]; }
    double at(int y, int x, int c = 0) const { return data[(static_cast<size_t>(y) * width + x) * Channels + c]; }

    bool same_shape(const Image& o) const { return width == o.width && height == o.height; }
};

using ImageRGB = Image<3>;
using ImageGray = Image<1>;

inline void require_same_shape(const ImageRGB& a, const ImageRGB& b, const char* where) {
    if (!a.same_shape(b)) throw ArgumentError(std::string(where) + ": image shapes differ");
}

inline void require_same_shape(const ImageGray& a, const ImageGray& b, const char* where) {
    if (!a.same_shape(b)) throw ArgumentError(std::string(where) + ": image shapes differ");
}

inline Rgb pixel_rgb(const ImageRGB& img, int y, int x) {
    const double* p = img.pixel(y, x);
    return {p[0], p[1], p[2]};
}

inline void set_pixel_rgb(ImageRGB& img, int y, int x, const Rgb& v) {
    double* p = img.pixel(y, x);
    p[0] = v.x();
    p[1] = v.y();
    p[2] = v.z();
}

}  // namespace uwsplat
