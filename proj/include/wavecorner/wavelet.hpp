#pragma once

#include <vector>

#include "wavecorner/image.hpp"
#include "wavecorner/matrix.hpp"

namespace wavecorner {

// Orthonormal 2D Haar transform. Conventions, fixed because they vary
// across libraries:
//   - analysis filters are (a,b) -> ((a+b)/sqrt2, (a-b)/sqrt2), so the
//     transform is orthonormal and noise variance is preserved per band;
//   - rows are filtered first, then columns;
//   - hl = high-pass rows / low-pass columns (horizontal detail),
//     lh = low-pass rows / high-pass columns (vertical detail);
//   - a constant image gains a factor 2 in LL per level;
//   - odd dimensions are handled by replicating the last row/column to even
//     size before each analysis step and cropping after synthesis.

struct SubbandSet {
    Matrix ll, lh, hl, hh;
};

struct DetailBands {
    Matrix lh, hl, hh;
};

// N-level decomposition: one approximation band plus N detail triples,
// ordered finest (level 1) to coarsest (level N). 3N+1 sub-bands in total.
struct WaveletPyramid {
    int levels = 0;
    Matrix approx; // LL_N
    std::vector<DetailBands> details;
    int orig_width = 0;
    int orig_height = 0;
};

// Single-level analysis. Band dimensions are ceil(input/2) per axis.
// Throws ValidationError on an empty matrix.
SubbandSet dwt2_haar(const Matrix& m);

// Exact inverse of dwt2_haar up to the crop of a padded row/column.
// out_rows/out_cols select the crop; they must be 2*band or 2*band-1 per
// axis. Throws ValidationError on mismatched band dimensions.
Matrix idwt2_haar(const SubbandSet& bands, int out_rows, int out_cols);

// Recursive analysis of the LL chain. Requires 2^levels <= min(width,
// height); throws ValidationError otherwise.
WaveletPyramid decompose(const GrayImage& img, int levels);

// Full synthesis without clipping (for round-trip checks and band math).
Matrix reconstruct_matrix(const WaveletPyramid& p);

// Full synthesis, clipped to [0,255]. Throws ValidationError on a pyramid
// whose band dimensions are inconsistent with orig_width/orig_height.
GrayImage reconstruct(const WaveletPyramid& p);

} // namespace wavecorner
