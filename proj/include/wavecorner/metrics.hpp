#pragma once

#include "wavecorner/image.hpp"

namespace wavecorner {

struct QualityReport {
    double mse = 0.0;     // intensity^2 units
    double psnr_db = 0.0; // +infinity when mse == 0
};

// Mean squared intensity difference, computed on unquantized real
// intensities. Throws ValidationError on mismatched dimensions.
double mse(const GrayImage& f, const GrayImage& g);

// 10 * log10(255^2 / mse); +infinity for identical images. The peak value
// is fixed at 255 even though intensities are real-valued.
double psnr(const GrayImage& f, const GrayImage& g);

QualityReport compare(const GrayImage& f, const GrayImage& g);

} // namespace wavecorner
