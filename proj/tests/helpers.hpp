#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// are deliberately written as straight loops over the documented contracts,
// not as calls into the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "wavecorner/harris.hpp"
#include "wavecorner/image.hpp"
#include "wavecorner/matrix.hpp"
#include "wavecorner/wavelet.hpp"

namespace testutil {

inline std::filesystem::path asset_path(const std::string& name) {
    return std::filesystem::path(WAVECORNER_ASSET_DIR) / name;
}

inline std::filesystem::path fresh_tmp_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() / ("wavecorner_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

// Small standalone xorshift so test inputs do not depend on the library RNG.
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed ^ 0x1234567890ABCDEFULL) {
        if (state == 0) state = 1;
        next();
    }
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline wavecorner::GrayImage random_image(int w, int h, TestRng& rng) {
    wavecorner::GrayImage img(w, h);
    for (double& p : img.pixels) p = rng.uniform() * 255.0;
    return img;
}

inline wavecorner::Matrix random_matrix(int rows, int cols, TestRng& rng, double scale = 10.0) {
    wavecorner::Matrix m(rows, cols);
    for (double& v : m.values) v = (rng.uniform() * 2.0 - 1.0) * scale;
    return m;
}

inline wavecorner::GrayImage constant_image(int w, int h, double v) {
    return wavecorner::GrayImage(w, h, v);
}

inline wavecorner::GrayImage square_image() {
    wavecorner::GrayImage img(32, 32, 0.0);
    for (int y = 10; y <= 21; ++y)
        for (int x = 10; x <= 21; ++x) img.at(x, y) = 255.0;
    return img;
}

inline wavecorner::GrayImage checkerboard_image() {
    wavecorner::GrayImage img(64, 64);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x) img.at(x, y) = ((x / 8 + y / 8) % 2 == 0) ? 0.0 : 255.0;
    return img;
}

// ---------------------------------------------------------------------------
// Orthonormal Haar matrix oracle.
//
// Single-level analysis of an even r x c matrix M is T_r * M * T_c^T where
// T_n stacks n/2 normalized-sum rows on top of n/2 normalized-difference
// rows. Quadrants of the product: [ll hl; lh hh] (row high-pass ends up in
// the right half because rows are transformed first).

inline std::vector<std::vector<double>> haar_analysis_matrix(int n) {
    std::vector<std::vector<double>> t(n, std::vector<double>(n, 0.0));
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n / 2; ++i) {
        t[i][2 * i] = s;
        t[i][2 * i + 1] = s;
        t[n / 2 + i][2 * i] = s;
        t[n / 2 + i][2 * i + 1] = -s;
    }
    return t;
}

inline wavecorner::SubbandSet haar_oracle(const wavecorner::Matrix& m) {
    const int r = m.rows, c = m.cols;
    const auto tr = haar_analysis_matrix(r);
    const auto tc = haar_analysis_matrix(c);

    // rows: M * Tc^T
    std::vector<std::vector<double>> rowpass(r, std::vector<double>(c, 0.0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            for (int k = 0; k < c; ++k) rowpass[i][j] += m.at(i, k) * tc[j][k];
    // columns: Tr * rowpass
    std::vector<std::vector<double>> full(r, std::vector<double>(c, 0.0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            for (int k = 0; k < r; ++k) full[i][j] += tr[i][k] * rowpass[k][j];

    const int hr = r / 2, hc = c / 2;
    wavecorner::SubbandSet out{wavecorner::Matrix(hr, hc), wavecorner::Matrix(hr, hc),
                               wavecorner::Matrix(hr, hc), wavecorner::Matrix(hr, hc)};
    for (int i = 0; i < hr; ++i) {
        for (int j = 0; j < hc; ++j) {
            out.ll.at(i, j) = full[i][j];
            out.hl.at(i, j) = full[i][j + hc];
            out.lh.at(i, j) = full[i + hr][j];
            out.hh.at(i, j) = full[i + hr][j + hc];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Harris pipeline oracle: an independent straight-loop implementation of the
// documented rules (central differences with replicated edges, distance-
// grouped Gaussian window sums, det/trace response, thresholded NMS with
// row-major tie-breaking).

inline wavecorner::Matrix oracle_response(const wavecorner::GrayImage& img,
                                          const wavecorner::HarrisParams& p) {
    const int w = img.width, h = img.height;
    auto clampi = [](int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); };

    wavecorner::Matrix ix(h, w), iy(h, w);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            ix.at(y, x) = img.at(clampi(x + 1, 0, w - 1), y) - img.at(clampi(x - 1, 0, w - 1), y);
            iy.at(y, x) = img.at(x, clampi(y + 1, 0, h - 1)) - img.at(x, clampi(y - 1, 0, h - 1));
        }
    }

    // weights by squared distance, normalized over the whole window
    std::map<int, std::vector<std::pair<int, int>>> groups;
    double total = 0.0;
    for (int dy = -p.window_radius; dy <= p.window_radius; ++dy) {
        for (int dx = -p.window_radius; dx <= p.window_radius; ++dx) {
            groups[dx * dx + dy * dy].emplace_back(dy, dx);
            total += std::exp(-0.5 * (dx * dx + dy * dy) / (p.window_sigma * p.window_sigma));
        }
    }

    wavecorner::Matrix response(h, w);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double a = 0.0, b = 0.0, c = 0.0;
            for (const auto& [d2, offsets] : groups) {
                const double weight = std::exp(-0.5 * d2 / (p.window_sigma * p.window_sigma)) / total;
                double sa = 0.0, sb = 0.0, sc = 0.0;
                for (const auto& [dy, dx] : offsets) {
                    const int yy = clampi(y + dy, 0, h - 1);
                    const int xx = clampi(x + dx, 0, w - 1);
                    sa += ix.at(yy, xx) * ix.at(yy, xx);
                    sb += ix.at(yy, xx) * iy.at(yy, xx);
                    sc += iy.at(yy, xx) * iy.at(yy, xx);
                }
                a += weight * sa;
                b += weight * sb;
                c += weight * sc;
            }
            const double trace = a + c;
            response.at(y, x) = (a * c - b * b) - p.k * trace * trace;
        }
    }
    return response;
}

inline std::vector<std::pair<int, int>> oracle_corners(const wavecorner::GrayImage& img,
                                                       const wavecorner::HarrisParams& p) {
    const wavecorner::Matrix h = oracle_response(img, p);
    const double max_h = *std::max_element(h.values.begin(), h.values.end());
    std::vector<std::pair<int, int>> found; // (y, x)
    if (max_h <= 0.0 && !p.abs_threshold) return found;
    const double cutoff = p.abs_threshold ? *p.abs_threshold : p.rel_threshold * max_h;

    for (int y = p.window_radius; y < h.rows - p.window_radius; ++y) {
        for (int x = p.window_radius; x < h.cols - p.window_radius; ++x) {
            const double v = h.at(y, x);
            if (v <= 0.0 || v <= cutoff) continue;
            bool keep = true;
            for (int yy = std::max(0, y - p.nms_radius); yy <= std::min(h.rows - 1, y + p.nms_radius) && keep; ++yy) {
                for (int xx = std::max(0, x - p.nms_radius); xx <= std::min(h.cols - 1, x + p.nms_radius); ++xx) {
                    if (yy == y && xx == x) continue;
                    const double o = h.at(yy, xx);
                    if (o > v || (o == v && (yy < y || (yy == y && xx < x)))) {
                        keep = false;
                        break;
                    }
                }
            }
            if (keep) found.emplace_back(y, x);
        }
    }
    return found;
}

} // namespace testutil
