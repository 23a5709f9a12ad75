#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wavecorner/image.hpp"
#include "wavecorner/matrix.hpp"

namespace wavecorner {

struct HarrisParams {
    double k = 0.04;            // response constant
    double window_sigma = 1.0;  // Gaussian window std-dev, pixels
    int window_radius = 3;      // 7x7 window
    double rel_threshold = 0.01; // fraction of the max response
    std::optional<double> abs_threshold; // absolute cutoff; overrides rel_threshold
    int nms_radius = 1;         // 3x3 non-maximum suppression
};

// Throws ValidationError unless k > 0, window_radius >= 1,
// 0 < rel_threshold < 1 and nms_radius >= 1.
void validate(const HarrisParams& params);

struct Corner {
    int x = 0; // column
    int y = 0; // row
    double response = 0.0;
};

struct CornerSet {
    std::vector<Corner> corners;
    int count() const { return static_cast<int>(corners.size()); }
};

struct GradientPair {
    Matrix ix, iy;
};

// Central differences without the 1/2 factor: ix = I(x+1,y) - I(x-1,y),
// iy likewise down the columns. Borders replicate the edge pixel.
// Requires width, height >= 3.
GradientPair gradients(const GrayImage& img);

struct StructureTensor {
    Matrix a; // windowed sum of ix^2
    Matrix b; // windowed sum of ix*iy
    Matrix c; // windowed sum of iy^2
};

// Gaussian-weighted windowed sums of the gradient products, weights
// normalized to sum 1 over the window; out-of-bounds taps clamp to the
// nearest pixel. Accumulation order is part of the contract so results are
// reproducible bit for bit: offsets are grouped by squared distance, each
// group is summed in row-major order, and the weighted group sums are added
// in ascending-distance order. For integer-valued gradients the group sums
// are exact, which makes the maps invariant under 90-degree image rotation.
StructureTensor structure_tensor(const Matrix& ix, const Matrix& iy, const HarrisParams& params);

// H = (A*C - B^2) - k*(A + C)^2, from determinant and trace; no explicit
// eigendecomposition.
Matrix corner_response(const StructureTensor& t, const HarrisParams& params);

// Local maxima of the response map. A pixel is a corner iff
//   - it lies at least window_radius away from every image border,
//   - H > 0 and H > threshold (rel_threshold * max H, or abs_threshold),
//   - no pixel within Chebyshev distance nms_radius beats it: a neighbor
//     with strictly greater H suppresses it, and among exact ties the first
//     pixel in row-major order wins.
// Corners are sorted by descending response, ties by (row, column).
CornerSet detect_corners(const Matrix& response, const HarrisParams& params);

// gradients -> structure_tensor -> corner_response -> detect_corners.
CornerSet harris(const GrayImage& img, const HarrisParams& params);

} // namespace wavecorner
