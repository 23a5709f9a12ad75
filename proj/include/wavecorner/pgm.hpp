#pragma once

#include <filesystem>

#include "wavecorner/image.hpp"

namespace wavecorner {

// Reads a PGM file, P2 (ASCII) or P5 (binary), maxval <= 255. Header
// comments ("#" to end of line) are skipped. Sample k maps to intensity k
// exactly; no maxval rescaling.
// Throws IoError with a distinct message per failure: missing file,
// malformed header, unsupported maxval, truncated pixel data.
GrayImage load_pgm(const std::filesystem::path& path);

// Writes `img` as P5 (binary=true) or P2 (ASCII), maxval 255, LF line
// endings. Intensities are rounded half away from zero. Throws IoError on
// unwritable paths.
void write_pgm(const GrayImage& img, const std::filesystem::path& path, bool binary = true);

} // namespace wavecorner
