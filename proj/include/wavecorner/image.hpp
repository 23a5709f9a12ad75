#pragma once

#include <cstddef>
#include <vector>

#include "wavecorner/matrix.hpp"

namespace wavecorner {

// Grayscale raster. Intensities are real-valued in [0, 255]; quantization to
// 8-bit samples happens only at PGM write time, so denoised images keep
// sub-integer precision for metric computation.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels; // row-major, width * height

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    // x is the column, y the row.
    double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

    bool same_size(const GrayImage& o) const { return width == o.width && height == o.height; }
};

inline double clip255(double v) { return v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v); }
inline double clip01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// [0,255] intensities -> [0,1] raster (rows = height, cols = width).
Matrix to_unit(const GrayImage& img);

// [0,1] raster -> intensities, times 255 and clipped to [0,255].
GrayImage from_unit(const Matrix& unit);

// Reinterpret intensities as a coefficient matrix (no scaling).
Matrix as_matrix(const GrayImage& img);

// Matrix -> image, clipping each entry to [0,255].
GrayImage image_from_matrix(const Matrix& m);

} // namespace wavecorner
