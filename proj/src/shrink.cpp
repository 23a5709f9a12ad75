#include "wavecorner/shrink.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "wavecorner/csv.hpp"
#include "wavecorner/errors.hpp"

namespace wavecorner {

Matrix hard_threshold(const Matrix& coeffs, double lambda) {
    if (lambda < 0.0) throw ValidationError("hard_threshold: lambda must be >= 0");
    Matrix out = coeffs;
    for (double& u : out.values) {
        if (std::abs(u) <= lambda) u = 0.0;
    }
    return out;
}

Matrix soft_threshold(const Matrix& coeffs, double lambda) {
    if (lambda < 0.0) throw ValidationError("soft_threshold: lambda must be >= 0");
    Matrix out = coeffs;
    for (double& u : out.values) {
        const double mag = std::abs(u);
        u = mag > lambda ? std::copysign(mag - lambda, u) : 0.0;
    }
    return out;
}

double estimate_noise_sigma(const Matrix& hh1) {
    if (hh1.empty()) throw ValidationError("estimate_noise_sigma: empty band");
    std::vector<double> mags(hh1.values.size());
    for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(hh1.values[i]);
    std::sort(mags.begin(), mags.end());
    const std::size_t n = mags.size();
    const double median = (n % 2 == 1) ? mags[n / 2] : 0.5 * (mags[n / 2 - 1] + mags[n / 2]);
    return median / 0.6745;
}

SubbandStats bayes_threshold(const Matrix& subband, double sigma_noise) {
    if (subband.empty()) throw ValidationError("bayes_threshold: empty band");
    if (sigma_noise < 0.0) throw ValidationError("bayes_threshold: sigma_noise must be >= 0");

    double sum_sq = 0.0;
    double max_mag = 0.0;
    for (const double u : subband.values) {
        sum_sq += u * u;
        max_mag = std::max(max_mag, std::abs(u));
    }
    SubbandStats s;
    s.sigma_noise = sigma_noise;
    const double var_w = sum_sq / static_cast<double>(subband.values.size());
    s.sigma_w = std::sqrt(var_w);
    s.sigma_s = std::sqrt(std::max(var_w - sigma_noise * sigma_noise, 0.0));
    // Noise-dominated band: threshold at the band maximum so soft
    // thresholding kills every coefficient.
    s.lambda = s.sigma_s > 0.0 ? sigma_noise * sigma_noise / s.sigma_s : max_mag;
    return s;
}

DenoiseResult denoise(const GrayImage& img, int levels, const ThresholdRule& rule) {
    if (rule.kind != ThresholdKind::bayes_soft && rule.lambda < 0.0) {
        throw ValidationError("denoise: lambda must be >= 0");
    }
    WaveletPyramid pyramid = decompose(img, levels);
    const double sigma_noise = estimate_noise_sigma(pyramid.details[0].hh);

    DenoiseResult result;
    for (int level = 1; level <= levels; ++level) {
        DetailBands& bands = pyramid.details[level - 1];
        const std::pair<const char*, Matrix*> named[] = {
            {"lh", &bands.lh}, {"hl", &bands.hl}, {"hh", &bands.hh}};
        for (const auto& [name, band] : named) {
            BandReport report;
            report.level = level;
            report.band = name;
            if (rule.kind == ThresholdKind::bayes_soft) {
                report.stats = bayes_threshold(*band, sigma_noise);
            } else {
                report.stats = bayes_threshold(*band, sigma_noise);
                report.stats.lambda = rule.lambda;
            }
            Matrix shrunk = rule.kind == ThresholdKind::hard
                                ? hard_threshold(*band, report.stats.lambda)
                                : soft_threshold(*band, report.stats.lambda);
            for (std::size_t i = 0; i < band->values.size(); ++i) {
                if (band->values[i] != 0.0 && shrunk.values[i] == 0.0) ++report.zeroed;
            }
            *band = std::move(shrunk);
            result.bands.push_back(std::move(report));
        }
    }
    result.image = reconstruct(pyramid);
    return result;
}

std::string to_string(const ThresholdRule& rule) {
    switch (rule.kind) {
    case ThresholdKind::hard:
        return "hard:" + format_double(rule.lambda);
    case ThresholdKind::soft:
        return "soft:" + format_double(rule.lambda);
    case ThresholdKind::bayes_soft:
        return "bayes-soft";
    }
    return "?";
}

ThresholdRule parse_threshold_rule(const std::string& text) {
    if (text == "bayes-soft" || text == "bayes_soft") {
        return {ThresholdKind::bayes_soft, 0.0};
    }
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        const std::string lambda_text = text.substr(colon + 1);
        double lambda = 0.0;
        const auto [ptr, ec] =
            std::from_chars(lambda_text.data(), lambda_text.data() + lambda_text.size(), lambda);
        if (ec == std::errc() && ptr == lambda_text.data() + lambda_text.size() && lambda >= 0.0) {
            if (kind == "hard") return {ThresholdKind::hard, lambda};
            if (kind == "soft") return {ThresholdKind::soft, lambda};
        }
    }
    throw ValidationError("bad threshold rule (expected hard:<lambda>, soft:<lambda> or bayes-soft): " + text);
}

} // namespace wavecorner
