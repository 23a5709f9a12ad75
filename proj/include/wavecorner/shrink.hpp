#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavecorner/image.hpp"
#include "wavecorner/matrix.hpp"
#include "wavecorner/wavelet.hpp"

namespace wavecorner {

enum class ThresholdKind { hard, soft, bayes_soft };

struct ThresholdRule {
    ThresholdKind kind = ThresholdKind::bayes_soft;
    double lambda = 0.0; // hard/soft only, must be >= 0
};

// Per-subband estimates in coefficient units. sigma_s is a standard
// deviation: sqrt(max(sigma_w^2 - sigma_noise^2, 0)).
struct SubbandStats {
    double sigma_noise = 0.0; // noise std-dev
    double sigma_w = 0.0;     // observed std-dev of the band
    double sigma_s = 0.0;     // signal std-dev
    double lambda = 0.0;      // resulting threshold
};

// Keep-or-kill: u -> u if |u| > lambda, else 0.
Matrix hard_threshold(const Matrix& coeffs, double lambda);

// Shrinkage: u -> sgn(u) * max(0, |u| - lambda).
Matrix soft_threshold(const Matrix& coeffs, double lambda);

// Median estimator on the finest diagonal band: median(|coeff|) / 0.6745.
// An even count takes the mean of the two middle order statistics.
// Throws ValidationError on an empty band.
double estimate_noise_sigma(const Matrix& hh1);

// BayesShrink threshold for one band: sigma_w^2 is the mean squared
// coefficient, lambda = sigma_noise^2 / sigma_s. When the band is noise
// dominated (sigma_s == 0), lambda = max|coeff| so soft thresholding zeroes
// the band.
SubbandStats bayes_threshold(const Matrix& subband, double sigma_noise);

struct BandReport {
    int level = 0;     // 1 = finest
    std::string band;  // "lh", "hl" or "hh"
    SubbandStats stats;
    std::int64_t zeroed = 0; // nonzero coefficients that became zero
};

struct DenoiseResult {
    GrayImage image;
    std::vector<BandReport> bands;
};

// decompose -> threshold every detail band (LL is never touched) ->
// reconstruct. For bayes_soft the noise sigma is estimated once from the
// level-1 HH band and reused at all levels; hard/soft apply the rule's
// fixed lambda. Returns the denoised image plus per-band stats.
DenoiseResult denoise(const GrayImage& img, int levels, const ThresholdRule& rule);

// "bayes-soft", "soft:<lambda>" or "hard:<lambda>".
std::string to_string(const ThresholdRule& rule);
ThresholdRule parse_threshold_rule(const std::string& text);

} // namespace wavecorner
