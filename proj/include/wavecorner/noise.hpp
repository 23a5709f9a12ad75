#pragma once

#include <cstdint>
#include <string>

#include "wavecorner/image.hpp"

namespace wavecorner {

// Synthetic noise injectors. Parameters are expressed in unit scale: an
// image is mapped to [0,1], corrupted, then mapped back and clipped to
// [0,255]. A variance of 0.01 therefore means a standard deviation of about
// 25.5 intensity levels.

enum class NoiseKind { gaussian, speckle, salt_pepper };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::gaussian;
    double mean = 0.0;      // gaussian: unit scale
    double variance = 0.0;  // gaussian/speckle: unit scale squared
    double density = 0.0;   // salt_pepper: fraction in [0,1]
    std::uint64_t seed = 0;
};

// out = clip(img/255 + n) * 255 with n i.i.d. normal(mean, variance) per
// pixel. Two RNG draws per pixel. Throws ValidationError on variance < 0.
GrayImage add_gaussian(const GrayImage& img, double mean, double variance, std::uint64_t seed);

// Multiplicative noise: out = clip(u + n*u) * 255 in unit scale, n i.i.d.
// uniform on [-sqrt(3v), +sqrt(3v)] (mean 0, variance v). One draw per
// pixel. Throws ValidationError on variance < 0.
GrayImage add_speckle(const GrayImage& img, double variance, std::uint64_t seed);

// Each pixel is corrupted independently with probability `density`;
// corrupted pixels become 0 or 255 with equal probability. Two draws per
// pixel. Throws ValidationError when density is outside [0,1].
GrayImage add_salt_pepper(const GrayImage& img, double density, std::uint64_t seed);

GrayImage apply_noise(const GrayImage& img, const NoiseSpec& spec);

// "gaussian:<mean>:<variance>", "speckle:<variance>", "salt-pepper:<density>".
std::string to_string(const NoiseSpec& spec);

// Parses the flag syntax above ("salt_pepper" is accepted too); `seed` is
// attached to the result. Throws ValidationError on anything else.
NoiseSpec parse_noise_spec(const std::string& text, std::uint64_t seed);

} // namespace wavecorner
