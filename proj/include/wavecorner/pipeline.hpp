#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wavecorner/harris.hpp"
#include "wavecorner/metrics.hpp"
#include "wavecorner/noise.hpp"
#include "wavecorner/shrink.hpp"

namespace wavecorner {

struct EmitOptions {
    bool noisy_image = true;
    bool denoised_image = true;
    bool stats_csv = true;
    bool corner_csv = true;
    bool annotated_image = true;
    bool dump_bands = false; // per-subband PGMs, rescaled to [0,255]
};

struct RunConfig {
    std::filesystem::path input;
    std::filesystem::path out_dir = ".";
    std::optional<NoiseSpec> noise; // carries the seed
    int levels = 2;
    ThresholdRule rule;             // default bayes_soft
    HarrisParams harris;
    std::uint64_t seed = 1;
    bool denoise_before_corners = false;
    bool ascii_pgm = false;
    EmitOptions emit;
};

struct DenoiseOutcome {
    GrayImage denoised;
    std::optional<QualityReport> noisy_quality;    // vs the clean input
    std::optional<QualityReport> denoised_quality; // vs the clean input
    std::vector<BandReport> bands;
};

struct CornersOutcome {
    CornerSet corners;
};

struct BenchPsnrRow {
    NoiseSpec noise;
    int levels = 0;
    QualityReport noisy;
    QualityReport denoised;
};

struct BenchCornerRow {
    std::string image_type; // "original", "noisy", "denoised"
    std::optional<NoiseSpec> noise;
    int levels = 0; // 0 when no denoising was applied
    int count = 0;
};

struct BenchOutcome {
    std::vector<BenchPsnrRow> psnr_rows;
    std::vector<BenchCornerRow> corner_rows;
};

// Corrupts the input when a noise spec is present, denoises it with the
// configured rule/levels, writes denoised.pgm (+ noisy.pgm, stats.csv,
// band dumps) into out_dir and logs PSNR against the clean input when noise
// was injected here.
DenoiseOutcome cmd_denoise(const RunConfig& config, std::ostream& log);

// Harris corners of the (optionally corrupted, optionally denoised) input.
// Writes corners.csv and annotated.pgm, logs the count.
CornersOutcome cmd_corners(const RunConfig& config, std::ostream& log);

// Fixed evaluation protocol on a clean reference image: for each noise type
// in {gaussian(0, 0.01), speckle(0.04), salt-pepper(0.05)} and each level in
// {1, 2}, denoise with the configured rule and record PSNR plus corner
// counts for the original, noisy and denoised images. Noise seeds are
// config.seed, +1, +2 per noise type, recorded per row. Writes
// bench_psnr.csv and bench_corners.csv; output is byte-stable for a fixed
// config.
BenchOutcome cmd_bench(const RunConfig& config, std::ostream& log);

// Annotates a copy of the image with a 3x3 white cross per corner.
GrayImage annotate_corners(const GrayImage& img, const CornerSet& corners);

// CSV texts, exposed for golden tests.
std::string corner_csv_text(const CornerSet& corners, const RunConfig& config);
std::string stats_csv_text(const std::vector<BandReport>& bands, const RunConfig& config);
std::string bench_psnr_csv_text(const BenchOutcome& out, const RunConfig& config);
std::string bench_corners_csv_text(const BenchOutcome& out, const RunConfig& config);

} // namespace wavecorner
