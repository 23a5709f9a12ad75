// Regenerates the PGM assets under assets/. Everything is procedural and
// deterministic, so the shipped files can be reproduced bit for bit.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>

#include "wavecorner/image.hpp"
#include "wavecorner/pgm.hpp"
#include "wavecorner/rng.hpp"

namespace {

using wavecorner::GrayImage;

constexpr double kPi = std::numbers::pi;

void fill_rect(GrayImage& img, int x0, int y0, int w, int h, double v) {
    for (int y = y0; y < y0 + h; ++y) {
        for (int x = x0; x < x0 + w; ++x) {
            img.at(x, y) = v;
        }
    }
}

void fill_disk(GrayImage& img, int cx, int cy, int r, double v) {
    for (int y = cy - r; y <= cy + r; ++y) {
        for (int x = cx - r; x <= cx + r; ++x) {
            const int dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy <= r * r) img.at(x, y) = v;
        }
    }
}

void fill_plus(GrayImage& img, int cx, int cy, int arm, int thick, double v) {
    fill_rect(img, cx - arm, cy - thick / 2, 2 * arm + 1, thick, v);
    fill_rect(img, cx - thick / 2, cy - arm, thick, 2 * arm + 1, v);
}

// 512x512 test scene: smooth background with a grid of rectangles, disks
// and plus shapes, plus faint film grain so detail bands carry the fine
// texture a photograph would have. Sharp, axis-aligned corners throughout.
GrayImage make_scene() {
    const int n = 512;
    GrayImage img(n, n);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            double v = 78.0 + 46.0 * std::sin(2.0 * kPi * x / n + 0.9) * std::cos(2.0 * kPi * y / n - 0.35) +
                       0.09 * x + 0.05 * y;
            v += 24.0 * std::exp(-((x - 400.0) * (x - 400.0) + (y - 120.0) * (y - 120.0)) / (2.0 * 70.0 * 70.0));
            img.at(x, y) = v;
        }
    }

    for (int gi = 0; gi < 5; ++gi) {
        for (int gj = 0; gj < 5; ++gj) {
            const int x0 = 26 + 96 * gj + (gi * 7 + gj * 3) % 11;
            const int y0 = 26 + 96 * gi + (gi * 3 + gj * 5) % 13;
            const int w = 30 + ((gi + 2 * gj) % 4) * 8;
            const int h = 22 + ((2 * gi + gj) % 5) * 6;
            const double v = ((gi + gj) % 2 == 0) ? 225.0 - 6.0 * ((gi * gj) % 4)
                                                  : 28.0 + 7.0 * ((gi + 2 * gj) % 5);
            fill_rect(img, x0, y0, w, h, v);
        }
    }

    for (int m = 0; m < 4; ++m) {
        for (int q = 0; q < 4; ++q) {
            const int cx = 106 + 96 * m;
            const int cy = 106 + 96 * q;
            if ((m + q) % 2 == 0) {
                fill_disk(img, cx, cy, 10 + ((m + q) % 3) * 2, (m % 2 == 0) ? 240.0 : 20.0);
            } else {
                fill_plus(img, cx, cy, 14, 8, (q % 2 == 0) ? 235.0 : 15.0);
            }
        }
    }

    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const double grain = 3.0 * (2.0 * wavecorner::rng::uniform(2024, i) - 1.0);
        img.pixels[i] =
            wavecorner::clip255(std::round(std::min(std::max(img.pixels[i] + grain, 6.0), 249.0)));
    }
    return img;
}

GrayImage make_square() {
    GrayImage img(32, 32, 0.0);
    fill_rect(img, 10, 10, 12, 12, 255.0);
    return img;
}

GrayImage make_checkerboard() {
    GrayImage img(64, 64);
    for (int y = 0; y < 64; ++y) {
        for (int x = 0; x < 64; ++x) {
            img.at(x, y) = ((x / 8 + y / 8) % 2 == 0) ? 0.0 : 255.0;
        }
    }
    return img;
}

GrayImage make_ramp() {
    GrayImage img(64, 64);
    for (int y = 0; y < 64; ++y) {
        for (int x = 0; x < 64; ++x) {
            img.at(x, y) = std::round(x * 255.0 / 63.0);
        }
    }
    return img;
}

} // namespace

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : "assets";
    std::filesystem::create_directories(dir);
    wavecorner::write_pgm(make_scene(), dir / "scene512.pgm");
    wavecorner::write_pgm(make_square(), dir / "square32.pgm");
    wavecorner::write_pgm(make_checkerboard(), dir / "checkerboard64.pgm");
    wavecorner::write_pgm(make_ramp(), dir / "ramp64.pgm");
    std::cout << "wrote 4 assets to " << dir.string() << "\n";
    return 0;
}
