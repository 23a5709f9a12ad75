#include "wavecorner/pipeline.hpp"

#include <algorithm>
#include <utility>

#include "wavecorner/csv.hpp"
#include "wavecorner/errors.hpp"
#include "wavecorner/pgm.hpp"
#include "wavecorner/wavelet.hpp"

namespace wavecorner {

namespace {

void prepare_out_dir(const RunConfig& config) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + config.out_dir.string());
}

void validate_levels(const RunConfig& config, const GrayImage& img) {
    const int min_dim = std::min(img.width, img.height);
    if (config.levels < 1 || config.levels >= 31 || (1 << config.levels) > min_dim) {
        throw ValidationError("levels=" + std::to_string(config.levels) + " is invalid for a " +
                              std::to_string(img.width) + "x" + std::to_string(img.height) + " image");
    }
}

std::string noise_cell(const std::optional<NoiseSpec>& noise) {
    return noise ? to_string(*noise) : "none";
}

std::string seed_cell(const std::optional<NoiseSpec>& noise) {
    return std::to_string(noise ? noise->seed : 0);
}

std::vector<std::string> harris_cells(const HarrisParams& p) {
    return {format_double(p.k), format_double(p.window_sigma), std::to_string(p.window_radius),
            format_double(p.rel_threshold), std::to_string(p.nms_radius)};
}

void append(std::vector<std::string>& row, std::vector<std::string> tail) {
    for (auto& cell : tail) row.push_back(std::move(cell));
}

std::filesystem::path out_path(const RunConfig& config, const char* name) {
    return config.out_dir / name;
}

void dump_band(const Matrix& band, int level, const char* name, const RunConfig& config,
               std::ostream& log) {
    const auto [lo_it, hi_it] = std::minmax_element(band.values.begin(), band.values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double scale = hi > lo ? 255.0 / (hi - lo) : 0.0;
    GrayImage img(band.cols, band.rows);
    for (std::size_t i = 0; i < band.values.size(); ++i) {
        img.pixels[i] = (band.values[i] - lo) * scale;
    }
    const std::string file = "band_l" + std::to_string(level) + "_" + name + ".pgm";
    write_pgm(img, config.out_dir / file, !config.ascii_pgm);
    log << "band file=" << file << " min=" << format_double(lo) << " max=" << format_double(hi)
        << " scale=" << format_double(scale) << " offset=" << format_double(-lo * scale) << "\n";
}

} // namespace

GrayImage annotate_corners(const GrayImage& img, const CornerSet& corners) {
    GrayImage out = img;
    const auto plot = [&](int x, int y) {
        if (x >= 0 && x < out.width && y >= 0 && y < out.height) out.at(x, y) = 255.0;
    };
    for (const Corner& c : corners.corners) {
        plot(c.x, c.y);
        plot(c.x - 1, c.y);
        plot(c.x + 1, c.y);
        plot(c.x, c.y - 1);
        plot(c.x, c.y + 1);
    }
    return out;
}

std::string corner_csv_text(const CornerSet& corners, const RunConfig& config) {
    CsvTable csv({"x", "y", "response", "noise", "seed", "denoised", "levels", "rule", "harris_k",
                  "harris_sigma", "harris_window_radius", "harris_rel_threshold", "harris_nms_radius"});
    const bool denoised = config.denoise_before_corners;
    for (const Corner& c : corners.corners) {
        std::vector<std::string> row{std::to_string(c.x),
                                     std::to_string(c.y),
                                     format_double(c.response),
                                     noise_cell(config.noise),
                                     seed_cell(config.noise),
                                     denoised ? "1" : "0",
                                     std::to_string(denoised ? config.levels : 0),
                                     denoised ? to_string(config.rule) : "none"};
        append(row, harris_cells(config.harris));
        csv.add_row(std::move(row));
    }
    return csv.text();
}

std::string stats_csv_text(const std::vector<BandReport>& bands, const RunConfig& config) {
    CsvTable csv({"level", "band", "sigma_noise", "sigma_w", "sigma_s", "lambda", "zeroed", "levels",
                  "rule", "noise", "seed"});
    for (const BandReport& b : bands) {
        csv.add_row({std::to_string(b.level), b.band, format_double(b.stats.sigma_noise),
                     format_double(b.stats.sigma_w), format_double(b.stats.sigma_s),
                     format_double(b.stats.lambda), std::to_string(b.zeroed),
                     std::to_string(config.levels), to_string(config.rule), noise_cell(config.noise),
                     seed_cell(config.noise)});
    }
    return csv.text();
}

std::string bench_psnr_csv_text(const BenchOutcome& out, const RunConfig& config) {
    CsvTable csv({"noise", "seed", "wavelet", "rule", "levels", "mse_noisy", "psnr_noisy_db",
                  "mse_denoised", "psnr_denoised_db"});
    for (const BenchPsnrRow& r : out.psnr_rows) {
        csv.add_row({to_string(r.noise), std::to_string(r.noise.seed), "haar", to_string(config.rule),
                     std::to_string(r.levels), format_double(r.noisy.mse),
                     format_double(r.noisy.psnr_db), format_double(r.denoised.mse),
                     format_double(r.denoised.psnr_db)});
    }
    return csv.text();
}

std::string bench_corners_csv_text(const BenchOutcome& out, const RunConfig& config) {
    CsvTable csv({"image", "noise", "seed", "levels", "rule", "count", "harris_k", "harris_sigma",
                  "harris_window_radius", "harris_rel_threshold", "harris_nms_radius"});
    for (const BenchCornerRow& r : out.corner_rows) {
        std::vector<std::string> row{r.image_type,
                                     noise_cell(r.noise),
                                     seed_cell(r.noise),
                                     std::to_string(r.levels),
                                     r.levels > 0 ? to_string(config.rule) : "none",
                                     std::to_string(r.count)};
        append(row, harris_cells(config.harris));
        csv.add_row(std::move(row));
    }
    return csv.text();
}

DenoiseOutcome cmd_denoise(const RunConfig& config, std::ostream& log) {
    const GrayImage clean = load_pgm(config.input);
    validate_levels(config, clean);
    prepare_out_dir(config);

    GrayImage work = clean;
    if (config.noise) {
        work = apply_noise(clean, *config.noise);
        if (config.emit.noisy_image) write_pgm(work, out_path(config, "noisy.pgm"), !config.ascii_pgm);
    }

    DenoiseResult result = denoise(work, config.levels, config.rule);

    DenoiseOutcome outcome;
    outcome.bands = std::move(result.bands);
    outcome.denoised = std::move(result.image);
    if (config.emit.denoised_image) {
        write_pgm(outcome.denoised, out_path(config, "denoised.pgm"), !config.ascii_pgm);
    }
    if (config.emit.stats_csv) {
        write_text_file(stats_csv_text(outcome.bands, config), out_path(config, "stats.csv").string());
    }
    if (config.emit.dump_bands) {
        const WaveletPyramid p = decompose(work, config.levels);
        for (int level = 1; level <= p.levels; ++level) {
            dump_band(p.details[level - 1].lh, level, "lh", config, log);
            dump_band(p.details[level - 1].hl, level, "hl", config, log);
            dump_band(p.details[level - 1].hh, level, "hh", config, log);
        }
        dump_band(p.approx, p.levels, "ll", config, log);
    }

    log << "input=" << config.input.string() << " width=" << clean.width << " height=" << clean.height
        << "\n";
    log << "levels=" << config.levels << " rule=" << to_string(config.rule)
        << " noise=" << noise_cell(config.noise) << " seed=" << seed_cell(config.noise) << "\n";
    if (config.noise) {
        outcome.noisy_quality = compare(clean, work);
        outcome.denoised_quality = compare(clean, outcome.denoised);
        log << "psnr_noisy_db=" << format_double(outcome.noisy_quality->psnr_db)
            << " psnr_denoised_db=" << format_double(outcome.denoised_quality->psnr_db) << "\n";
    }
    return outcome;
}

CornersOutcome cmd_corners(const RunConfig& config, std::ostream& log) {
    validate(config.harris);
    const GrayImage clean = load_pgm(config.input);
    if (config.denoise_before_corners) validate_levels(config, clean);
    prepare_out_dir(config);

    GrayImage work = clean;
    if (config.noise) work = apply_noise(clean, *config.noise);
    if (config.denoise_before_corners) work = denoise(work, config.levels, config.rule).image;

    CornersOutcome outcome{harris(work, config.harris)};
    if (config.emit.corner_csv) {
        write_text_file(corner_csv_text(outcome.corners, config),
                        out_path(config, "corners.csv").string());
    }
    if (config.emit.annotated_image) {
        write_pgm(annotate_corners(work, outcome.corners), out_path(config, "annotated.pgm"),
                  !config.ascii_pgm);
    }
    log << "corners=" << outcome.corners.count() << "\n";
    return outcome;
}

BenchOutcome cmd_bench(const RunConfig& config, std::ostream& log) {
    validate(config.harris);
    const GrayImage clean = load_pgm(config.input);
    // Two levels are benched, so the image must support at least two.
    if (std::min(clean.width, clean.height) < 4) {
        throw ValidationError("bench needs an image of at least 4x4");
    }
    prepare_out_dir(config);

    const NoiseSpec specs[] = {
        {NoiseKind::gaussian, 0.0, 0.01, 0.0, config.seed},
        {NoiseKind::speckle, 0.0, 0.04, 0.0, config.seed + 1},
        {NoiseKind::salt_pepper, 0.0, 0.0, 0.05, config.seed + 2},
    };
    constexpr int kLevels[] = {1, 2};

    BenchOutcome out;
    out.corner_rows.push_back({"original", std::nullopt, 0, harris(clean, config.harris).count()});

    std::vector<BenchCornerRow> denoised_rows;
    for (const NoiseSpec& spec : specs) {
        const GrayImage noisy = apply_noise(clean, spec);
        const QualityReport noisy_q = compare(clean, noisy);
        out.corner_rows.push_back({"noisy", spec, 0, harris(noisy, config.harris).count()});
        for (const int levels : kLevels) {
            const DenoiseResult dn = denoise(noisy, levels, config.rule);
            out.psnr_rows.push_back({spec, levels, noisy_q, compare(clean, dn.image)});
            denoised_rows.push_back({"denoised", spec, levels, harris(dn.image, config.harris).count()});
        }
    }
    for (auto& row : denoised_rows) out.corner_rows.push_back(std::move(row));

    write_text_file(bench_psnr_csv_text(out, config), out_path(config, "bench_psnr.csv").string());
    write_text_file(bench_corners_csv_text(out, config),
                    out_path(config, "bench_corners.csv").string());

    for (const BenchPsnrRow& r : out.psnr_rows) {
        log << "bench noise=" << to_string(r.noise) << " levels=" << r.levels
            << " psnr_noisy_db=" << format_double(r.noisy.psnr_db)
            << " psnr_denoised_db=" << format_double(r.denoised.psnr_db) << "\n";
    }
    for (const BenchCornerRow& r : out.corner_rows) {
        log << "bench corners image=" << r.image_type << " noise=" << noise_cell(r.noise)
            << " levels=" << r.levels << " count=" << r.count << "\n";
    }
    return out;
}

} // namespace wavecorner
