#include "wavecorner/noise.hpp"

#include <charconv>
#include <cmath>

#include "wavecorner/csv.hpp"
#include "wavecorner/errors.hpp"
#include "wavecorner/rng.hpp"

namespace wavecorner {

namespace {

double parse_param(std::string_view text, const char* what) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ValidationError(std::string("bad noise parameter (") + what + "): " + std::string(text));
    }
    return v;
}

} // namespace

GrayImage add_gaussian(const GrayImage& img, double mean, double variance, std::uint64_t seed) {
    if (variance < 0.0) throw ValidationError("gaussian noise variance must be >= 0");
    const double sigma = std::sqrt(variance);
    Matrix u = to_unit(img);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        u.values[i] += mean + sigma * rng::normal(seed, i);
    }
    return from_unit(u);
}

GrayImage add_speckle(const GrayImage& img, double variance, std::uint64_t seed) {
    if (variance < 0.0) throw ValidationError("speckle noise variance must be >= 0");
    const double half_width = std::sqrt(3.0 * variance);
    Matrix u = to_unit(img);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double n = (2.0 * rng::uniform(seed, i) - 1.0) * half_width;
        u.values[i] += n * u.values[i];
    }
    return from_unit(u);
}

GrayImage add_salt_pepper(const GrayImage& img, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0) throw ValidationError("salt & pepper density must be in [0,1]");
    GrayImage out = img;
    for (std::size_t i = 0; i < out.pixels.size(); ++i) {
        if (rng::uniform(seed, 2 * i) < density) {
            out.pixels[i] = rng::uniform(seed, 2 * i + 1) < 0.5 ? 0.0 : 255.0;
        }
    }
    return out;
}

GrayImage apply_noise(const GrayImage& img, const NoiseSpec& spec) {
    switch (spec.kind) {
    case NoiseKind::gaussian:
        return add_gaussian(img, spec.mean, spec.variance, spec.seed);
    case NoiseKind::speckle:
        return add_speckle(img, spec.variance, spec.seed);
    case NoiseKind::salt_pepper:
        return add_salt_pepper(img, spec.density, spec.seed);
    }
    throw ValidationError("unknown noise kind");
}

std::string to_string(const NoiseSpec& spec) {
    switch (spec.kind) {
    case NoiseKind::gaussian:
        return "gaussian:" + format_double(spec.mean) + ":" + format_double(spec.variance);
    case NoiseKind::speckle:
        return "speckle:" + format_double(spec.variance);
    case NoiseKind::salt_pepper:
        return "salt-pepper:" + format_double(spec.density);
    }
    return "?";
}

NoiseSpec parse_noise_spec(const std::string& text, std::uint64_t seed) {
    std::vector<std::string_view> parts;
    std::string_view rest = text;
    while (true) {
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) {
            parts.push_back(rest);
            break;
        }
        parts.push_back(rest.substr(0, colon));
        rest = rest.substr(colon + 1);
    }

    NoiseSpec spec;
    spec.seed = seed;
    const std::string_view kind = parts[0];
    if (kind == "gaussian") {
        if (parts.size() != 3) throw ValidationError("gaussian noise expects gaussian:<mean>:<variance>");
        spec.kind = NoiseKind::gaussian;
        spec.mean = parse_param(parts[1], "mean");
        spec.variance = parse_param(parts[2], "variance");
        if (spec.variance < 0.0) throw ValidationError("gaussian noise variance must be >= 0");
    } else if (kind == "speckle") {
        if (parts.size() != 2) throw ValidationError("speckle noise expects speckle:<variance>");
        spec.kind = NoiseKind::speckle;
        spec.variance = parse_param(parts[1], "variance");
        if (spec.variance < 0.0) throw ValidationError("speckle noise variance must be >= 0");
    } else if (kind == "salt-pepper" || kind == "salt_pepper") {
        if (parts.size() != 2) throw ValidationError("salt & pepper noise expects salt-pepper:<density>");
        spec.kind = NoiseKind::salt_pepper;
        spec.density = parse_param(parts[1], "density");
        if (spec.density < 0.0 || spec.density > 1.0) {
            throw ValidationError("salt & pepper density must be in [0,1]");
        }
    } else {
        throw ValidationError("unknown noise kind: " + std::string(kind));
    }
    return spec;
}

} // namespace wavecorner
