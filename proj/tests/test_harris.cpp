#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "helpers.hpp"
#include "wavecorner/errors.hpp"
#include "wavecorner/harris.hpp"

using namespace wavecorner;

namespace {

GrayImage rotate90_cw(const GrayImage& img) {
    GrayImage out(img.height, img.width);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            out.at(img.height - 1 - y, x) = img.at(x, y);
        }
    }
    return out;
}

std::set<std::pair<int, int>> corner_set(const CornerSet& corners) {
    std::set<std::pair<int, int>> s;
    for (const Corner& c : corners.corners) s.insert({c.y, c.x});
    return s;
}

} // namespace

TEST_CASE("gradients: constant image has zero gradients") {
    const GrayImage img = testutil::constant_image(8, 8, 57.0);
    const GradientPair g = gradients(img);
    for (const double v : g.ix.values) CHECK(v == 0.0);
    for (const double v : g.iy.values) CHECK(v == 0.0);
}

TEST_CASE("gradients: ramp has constant interior slope 2") {
    GrayImage img(8, 6);
    for (int y = 0; y < 6; ++y)
        for (int x = 0; x < 8; ++x) img.at(x, y) = x;
    const GradientPair g = gradients(img);
    for (int y = 0; y < 6; ++y) {
        for (int x = 1; x < 7; ++x) {
            CHECK(g.ix.at(y, x) == 2.0);
        }
        // replicated borders see only one neighbor
        CHECK(g.ix.at(y, 0) == 1.0);
        CHECK(g.ix.at(y, 7) == 1.0);
    }
    for (const double v : g.iy.values) CHECK(v == 0.0);
}

TEST_CASE("gradients: vertical step edge peaks iy on the edge rows") {
    GrayImage img(5, 5);
    for (int y = 0; y < 5; ++y)
        for (int x = 0; x < 5; ++x) img.at(x, y) = y < 2 ? 0.0 : 255.0;
    const GradientPair g = gradients(img);
    for (const double v : g.ix.values) CHECK(v == 0.0);
    for (int x = 0; x < 5; ++x) {
        CHECK(g.iy.at(1, x) == 255.0);
        CHECK(g.iy.at(2, x) == 255.0);
        CHECK(g.iy.at(0, x) == 0.0);
        CHECK(g.iy.at(3, x) == 0.0);
        CHECK(std::abs(g.iy.at(1, x)) >= std::abs(g.iy.at(4, x)));
    }
}

TEST_CASE("gradients rejects images smaller than 3x3") {
    CHECK_THROWS_AS(gradients(testutil::constant_image(2, 5, 0.0)), ValidationError);
}

TEST_CASE("structure_tensor: zero gradients give a zero tensor") {
    const HarrisParams params;
    const GradientPair g = gradients(testutil::constant_image(9, 9, 3.0));
    const StructureTensor t = structure_tensor(g.ix, g.iy, params);
    for (const double v : t.a.values) CHECK(v == 0.0);
    for (const double v : t.b.values) CHECK(v == 0.0);
    for (const double v : t.c.values) CHECK(v == 0.0);
}

TEST_CASE("structure_tensor: constant unit ix gives a = 1 under normalized weights") {
    const HarrisParams params;
    const Matrix ix(9, 9, 1.0);
    const Matrix iy(9, 9, 0.0);
    const StructureTensor t = structure_tensor(ix, iy, params);
    for (const double v : t.a.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    for (const double v : t.b.values) CHECK(v == 0.0);
    for (const double v : t.c.values) CHECK(v == 0.0);
}

TEST_CASE("structure_tensor entries match a direct double-loop weighted sum") {
    HarrisParams params;
    params.window_radius = 1;
    params.window_sigma = 0.9;
    // hand 5x5 gradient field
    Matrix ix(5, 5), iy(5, 5);
    const double ix_vals[] = {0, 1, 2, 1, 0, 1, 3, 5, 3, 1, 0, -2, -4, -2, 0, 1, 0, 1, 0, 1, 2, 2, 2, 2, 2};
    const double iy_vals[] = {1, 1, 1, 1, 1, 0, 2, 4, 2, 0, -1, -3, -5, -3, -1, 0, 0, 0, 0, 0, 1, 2, 3, 2, 1};
    std::copy(std::begin(ix_vals), std::end(ix_vals), ix.values.begin());
    std::copy(std::begin(iy_vals), std::end(iy_vals), iy.values.begin());

    const StructureTensor t = structure_tensor(ix, iy, params);

    const auto clampi = [](int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); };
    double norm = 0.0;
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
            norm += std::exp(-0.5 * (dx * dx + dy * dy) / (0.9 * 0.9));
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 5; ++x) {
            double a = 0.0, b = 0.0, c = 0.0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const double w = std::exp(-0.5 * (dx * dx + dy * dy) / (0.9 * 0.9)) / norm;
                    const int yy = clampi(y + dy, 0, 4), xx = clampi(x + dx, 0, 4);
                    a += w * ix.at(yy, xx) * ix.at(yy, xx);
                    b += w * ix.at(yy, xx) * iy.at(yy, xx);
                    c += w * iy.at(yy, xx) * iy.at(yy, xx);
                }
            }
            CHECK(t.a.at(y, x) == doctest::Approx(a).epsilon(1e-12));
            CHECK(t.b.at(y, x) == doctest::Approx(b).epsilon(1e-12));
            CHECK(t.c.at(y, x) == doctest::Approx(c).epsilon(1e-12));
        }
    }
}

TEST_CASE("structure_tensor matches a direct windowed-sum oracle") {
    testutil::TestRng rng(51);
    HarrisParams params;
    params.window_radius = 2;
    params.window_sigma = 0.8;
    GrayImage img(11, 9);
    for (double& p : img.pixels) p = rng.uniform_int(0, 255);
    const GradientPair g = gradients(img);
    const StructureTensor t = structure_tensor(g.ix, g.iy, params);
    const Matrix h = corner_response(t, params);
    const Matrix oracle = testutil::oracle_response(img, params);
    for (std::size_t i = 0; i < h.values.size(); ++i) {
        CHECK(h.values[i] == doctest::Approx(oracle.values[i]).epsilon(1e-12));
    }
}

TEST_CASE("structure_tensor is positive semidefinite at every pixel") {
    testutil::TestRng rng(52);
    const GrayImage img = testutil::random_image(32, 24, rng);
    const GradientPair g = gradients(img);
    const StructureTensor t = structure_tensor(g.ix, g.iy, HarrisParams{});
    for (std::size_t i = 0; i < t.a.values.size(); ++i) {
        const double a = t.a.values[i], b = t.b.values[i], c = t.c.values[i];
        CHECK(a >= 0.0);
        CHECK(c >= 0.0);
        CHECK(b * b <= a * c + 1e-9 * std::max(1.0, a * c));
    }
}

TEST_CASE("corner_response: hand classification cases") {
    HarrisParams params; // k = 0.04
    StructureTensor t{Matrix(1, 3), Matrix(1, 3), Matrix(1, 3)};
    // uniform region
    t.a.values = {0.0, 1.0, 1.0};
    t.b.values = {0.0, 0.0, 0.0};
    t.c.values = {0.0, 1.0, 0.0};
    const Matrix h = corner_response(t, params);
    CHECK(h.values[0] == 0.0);                                  // uniform
    CHECK(h.values[1] == doctest::Approx(0.84).epsilon(1e-12)); // corner
    CHECK(h.values[2] == doctest::Approx(-0.04).epsilon(1e-12)); // edge
}

TEST_CASE("corner_response det/trace form equals the eigenvalue form") {
    testutil::TestRng rng(53);
    HarrisParams params;
    for (int iter = 0; iter < 1000; ++iter) {
        // assemble a guaranteed-PSD tensor from random gradient samples
        double a = 0.0, b = 0.0, c = 0.0;
        for (int s = 0; s < 3; ++s) {
            const double gx = (rng.uniform() * 2.0 - 1.0) * 10.0;
            const double gy = (rng.uniform() * 2.0 - 1.0) * 10.0;
            a += gx * gx;
            b += gx * gy;
            c += gy * gy;
        }
        const double disc = std::sqrt((a - c) * (a - c) + 4.0 * b * b);
        const double l1 = 0.5 * (a + c + disc);
        const double l2 = 0.5 * (a + c - disc);
        const double via_eigen = l1 * l2 - params.k * (l1 + l2) * (l1 + l2);

        StructureTensor t{Matrix(1, 1, a), Matrix(1, 1, b), Matrix(1, 1, c)};
        const double via_det = corner_response(t, params).values[0];
        const double scale = std::abs(a * c - b * b) + params.k * (a + c) * (a + c) + 1e-12;
        CHECK(std::abs(via_det - via_eigen) <= 1e-9 * scale);
    }
}

TEST_CASE("detect_corners: constant image yields an empty set") {
    const CornerSet set = harris(testutil::constant_image(64, 64, 130.0), HarrisParams{});
    CHECK(set.count() == 0);
}

TEST_CASE("detect_corners: all-nonpositive response yields an empty set") {
    Matrix h(16, 16, -1.0);
    CHECK(detect_corners(h, HarrisParams{}).count() == 0);
}

TEST_CASE("harris: white square has exactly 4 corners at its vertices") {
    const GrayImage img = testutil::square_image();
    const CornerSet set = harris(img, HarrisParams{});
    REQUIRE(set.count() == 4);
    // vertices at (10,10), (21,10), (10,21), (21,21) within 1 pixel
    const std::pair<int, int> expected[] = {{10, 10}, {21, 10}, {10, 21}, {21, 21}};
    for (const auto& [ex, ey] : expected) {
        bool found = false;
        for (const Corner& c : set.corners) {
            if (std::abs(c.x - ex) <= 1 && std::abs(c.y - ey) <= 1) found = true;
        }
        CHECK(found);
    }
    for (const Corner& c : set.corners) CHECK(c.response > 0.0);
}

TEST_CASE("harris: corner set matches the brute-force oracle") {
    const HarrisParams params;
    for (const GrayImage& img : {testutil::square_image(), testutil::checkerboard_image()}) {
        const CornerSet set = harris(img, params);
        const auto got = corner_set(set);
        const auto want = testutil::oracle_corners(img, params);
        REQUIRE(got.size() == want.size());
        for (const auto& yx : want) CHECK(got.count(yx) == 1);
    }
}

TEST_CASE("harris: checkerboard has one corner per interior block crossing") {
    const CornerSet set = harris(testutil::checkerboard_image(), HarrisParams{});
    CHECK(set.count() == 49);
}

TEST_CASE("detect_corners honors nms spacing and ordering") {
    const CornerSet set = harris(testutil::checkerboard_image(), HarrisParams{});
    // no two corners within the NMS radius (Chebyshev)
    for (std::size_t i = 0; i < set.corners.size(); ++i) {
        for (std::size_t j = i + 1; j < set.corners.size(); ++j) {
            const int d = std::max(std::abs(set.corners[i].x - set.corners[j].x),
                                   std::abs(set.corners[i].y - set.corners[j].y));
            CHECK(d > 1);
        }
    }
    // sorted by descending response with (row, col) tie-breaking
    for (std::size_t i = 1; i < set.corners.size(); ++i) {
        const Corner& a = set.corners[i - 1];
        const Corner& b = set.corners[i];
        const bool ordered = a.response > b.response ||
                             (a.response == b.response &&
                              (a.y < b.y || (a.y == b.y && a.x < b.x)));
        CHECK(ordered);
    }
}

TEST_CASE("harris: intensity scaling leaves the corner set unchanged") {
    // H scales by c^4; the relative threshold and NMS only compare ratios.
    GrayImage img = testutil::square_image();
    for (double& p : img.pixels) p = p == 255.0 ? 100.0 : 10.0;
    const CornerSet base = harris(img, HarrisParams{});

    GrayImage scaled = img;
    for (double& p : scaled.pixels) p *= 2.0;
    const CornerSet doubled = harris(scaled, HarrisParams{});

    CHECK(corner_set(base) == corner_set(doubled));
    REQUIRE(base.count() == doubled.count());
    for (int i = 0; i < base.count(); ++i) {
        CHECK(doubled.corners[i].response ==
              doctest::Approx(16.0 * base.corners[i].response).epsilon(1e-9));
    }
}

TEST_CASE("harris: 90-degree rotation rotates the corner set") {
    // Exact on the square asset, whose peaks are strict local maxima.
    const GrayImage img = testutil::square_image();
    const CornerSet base = harris(img, HarrisParams{});
    const CornerSet rotated = harris(rotate90_cw(img), HarrisParams{});

    std::set<std::pair<int, int>> expected;
    for (const Corner& c : base.corners) {
        expected.insert({c.x, img.height - 1 - c.y}); // (y', x') of the CW rotation
    }
    CHECK(corner_set(rotated) == expected);
}

TEST_CASE("harris: rotation equivariance on the checkerboard up to tied plateaus") {
    // Each block crossing is a 2x2 plateau of exactly equal responses, so the
    // row-major tie-break picks a different plateau member after rotation;
    // the rotated corner always lands within Chebyshev distance 1.
    const GrayImage img = testutil::checkerboard_image();
    const CornerSet base = harris(img, HarrisParams{});
    const CornerSet rotated = harris(rotate90_cw(img), HarrisParams{});
    REQUIRE(base.count() == rotated.count());
    for (const Corner& c : base.corners) {
        const int rx = img.height - 1 - c.y;
        const int ry = c.x;
        bool near = false;
        for (const Corner& r : rotated.corners) {
            if (std::abs(r.x - rx) <= 1 && std::abs(r.y - ry) <= 1) near = true;
        }
        CHECK(near);
    }
}

TEST_CASE("harris: absolute threshold mode") {
    const GrayImage img = testutil::square_image();
    HarrisParams params;
    const CornerSet base = harris(img, params);
    REQUIRE(base.count() == 4);
    params.abs_threshold = base.corners[0].response * 2.0; // above every response
    CHECK(harris(img, params).count() == 0);
    params.abs_threshold = base.corners[3].response / 2.0;
    CHECK(harris(img, params).count() == 4);
}

TEST_CASE("harris: parameter validation") {
    const GrayImage img = testutil::square_image();
    HarrisParams params;
    params.k = 0.0;
    CHECK_THROWS_AS(harris(img, params), ValidationError);
    params = HarrisParams{};
    params.rel_threshold = 1.5;
    CHECK_THROWS_AS(harris(img, params), ValidationError);
    params = HarrisParams{};
    params.nms_radius = 0;
    CHECK_THROWS_AS(harris(img, params), ValidationError);
    params = HarrisParams{};
    params.window_radius = 0;
    CHECK_THROWS_AS(harris(img, params), ValidationError);
}

TEST_CASE("detect_corners border exclusion") {
    // a strong response right at the border must not become a corner
    Matrix h(9, 9, 0.0);
    h.at(1, 1) = 100.0; // inside nms but within window_radius (3) of the edge
    h.at(4, 4) = 50.0;
    const CornerSet set = detect_corners(h, HarrisParams{});
    REQUIRE(set.count() == 1);
    CHECK(set.corners[0].x == 4);
    CHECK(set.corners[0].y == 4);
}
