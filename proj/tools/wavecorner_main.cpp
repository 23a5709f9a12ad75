#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "wavecorner/errors.hpp"
#include "wavecorner/pipeline.hpp"

namespace {

// Exit codes: 0 success, 2 usage error, 3 I/O error, 4 validation error.
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitValidation = 4;

struct Options {
    wavecorner::RunConfig config;
    std::string noise_text;
    std::string rule_text = "bayes-soft";
    double harris_abs_threshold = -1.0; // unset sentinel
    bool has_abs_threshold = false;
};

void add_io_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input", opt.config.input, "input PGM (P2 or P5)")->required();
    cmd->add_option("--out-dir", opt.config.out_dir, "output directory (created if missing)");
    cmd->add_option("--seed", opt.config.seed, "base RNG seed");
    cmd->add_option("--noise", opt.noise_text,
                    "corrupt the input first: gaussian:<mean>:<var>, speckle:<var> or salt-pepper:<density>");
    cmd->add_flag("--ascii", opt.config.ascii_pgm, "write P2 instead of P5");
}

void add_denoise_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--levels", opt.config.levels, "decomposition levels (default 2)");
    cmd->add_option("--rule", opt.rule_text, "hard:<lambda>, soft:<lambda> or bayes-soft (default)");
}

void add_harris_flags(CLI::App* cmd, Options& opt) {
    auto& h = opt.config.harris;
    cmd->add_option("--harris-k", h.k, "response constant (default 0.04)");
    cmd->add_option("--harris-sigma", h.window_sigma, "Gaussian window sigma in pixels (default 1)");
    cmd->add_option("--harris-window-radius", h.window_radius, "window radius in pixels (default 3)");
    cmd->add_option("--harris-rel-threshold", h.rel_threshold,
                    "corner cutoff as a fraction of the max response (default 0.01)");
    cmd->add_option("--harris-abs-threshold", opt.harris_abs_threshold,
                    "absolute corner cutoff; overrides the relative one")
        ->each([&opt](const std::string&) { opt.has_abs_threshold = true; });
    cmd->add_option("--harris-nms-radius", h.nms_radius, "non-maximum suppression radius (default 1)");
}

void finish_config(Options& opt) {
    if (!opt.noise_text.empty()) {
        opt.config.noise = wavecorner::parse_noise_spec(opt.noise_text, opt.config.seed);
    }
    opt.config.rule = wavecorner::parse_threshold_rule(opt.rule_text);
    if (opt.has_abs_threshold) opt.config.harris.abs_threshold = opt.harris_abs_threshold;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wavelet-shrinkage image denoising and Harris corner detection"};
    app.require_subcommand(1);

    Options opt;
    bool no_noisy = false, no_stats = false, no_csv = false, no_annotated = false;

    CLI::App* denoise = app.add_subcommand(
        "denoise", "denoise an image; writes denoised.pgm, stats.csv and noisy.pgm when --noise is given");
    add_io_flags(denoise, opt);
    add_denoise_flags(denoise, opt);
    denoise->add_flag("--dump-bands", opt.config.emit.dump_bands,
                      "also write every sub-band as a rescaled PGM");
    denoise->add_flag("--no-noisy-image", no_noisy, "skip noisy.pgm");
    denoise->add_flag("--no-stats-csv", no_stats, "skip stats.csv");

    CLI::App* corners = app.add_subcommand(
        "corners", "detect Harris corners; writes corners.csv and annotated.pgm");
    add_io_flags(corners, opt);
    add_denoise_flags(corners, opt);
    corners->add_flag("--denoise", opt.config.denoise_before_corners,
                      "denoise before detecting (uses --levels/--rule)");
    add_harris_flags(corners, opt);
    corners->add_flag("--no-corner-csv", no_csv, "skip corners.csv");
    corners->add_flag("--no-annotated-image", no_annotated, "skip annotated.pgm");

    CLI::App* bench = app.add_subcommand(
        "bench", "run the full evaluation protocol on a clean reference image; "
                 "writes bench_psnr.csv and bench_corners.csv");
    add_io_flags(bench, opt);
    bench->add_option("--rule", opt.rule_text, "threshold rule used for the denoised rows");
    add_harris_flags(bench, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        finish_config(opt);
        opt.config.emit.noisy_image = !no_noisy;
        opt.config.emit.stats_csv = !no_stats;
        opt.config.emit.corner_csv = !no_csv;
        opt.config.emit.annotated_image = !no_annotated;

        if (denoise->parsed()) {
            wavecorner::cmd_denoise(opt.config, std::cout);
        } else if (corners->parsed()) {
            wavecorner::cmd_corners(opt.config, std::cout);
        } else if (bench->parsed()) {
            wavecorner::cmd_bench(opt.config, std::cout);
        }
        return 0;
    } catch (const wavecorner::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const wavecorner::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
