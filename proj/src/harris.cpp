#include "wavecorner/harris.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wavecorner/errors.hpp"

namespace wavecorner {

void validate(const HarrisParams& params) {
    if (!(params.k > 0.0)) throw ValidationError("harris: k must be > 0");
    if (params.window_radius < 1) throw ValidationError("harris: window_radius must be >= 1");
    if (!(params.window_sigma > 0.0)) throw ValidationError("harris: window_sigma must be > 0");
    if (!(params.rel_threshold > 0.0 && params.rel_threshold < 1.0)) {
        throw ValidationError("harris: rel_threshold must be in (0,1)");
    }
    if (params.nms_radius < 1) throw ValidationError("harris: nms_radius must be >= 1");
}

GradientPair gradients(const GrayImage& img) {
    if (img.width < 3 || img.height < 3) {
        throw ValidationError("gradients: image must be at least 3x3");
    }
    GradientPair g{Matrix(img.height, img.width), Matrix(img.height, img.width)};
    for (int y = 0; y < img.height; ++y) {
        const int ym = y > 0 ? y - 1 : 0;
        const int yp = y < img.height - 1 ? y + 1 : img.height - 1;
        for (int x = 0; x < img.width; ++x) {
            const int xm = x > 0 ? x - 1 : 0;
            const int xp = x < img.width - 1 ? x + 1 : img.width - 1;
            g.ix.at(y, x) = img.at(xp, y) - img.at(xm, y);
            g.iy.at(y, x) = img.at(x, yp) - img.at(x, ym);
        }
    }
    return g;
}

namespace {

// One group of window offsets sharing a squared distance (and so a weight).
struct OffsetGroup {
    double weight = 0.0;
    std::vector<std::pair<int, int>> offsets; // (dy, dx), row-major order
};

// Normalized Gaussian window, grouped by squared distance. Group sums of
// integer-valued products are exact, which keeps the maps reproducible
// under traversal changes and 90-degree rotations (see header).
std::vector<OffsetGroup> make_window(double sigma, int radius) {
    std::map<int, OffsetGroup> by_d2;
    double total = 0.0;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            const int d2 = dx * dx + dy * dy;
            auto& group = by_d2[d2];
            if (group.offsets.empty()) {
                group.weight = std::exp(-0.5 * d2 / (sigma * sigma));
            }
            group.offsets.emplace_back(dy, dx);
            total += group.weight;
        }
    }
    std::vector<OffsetGroup> groups;
    groups.reserve(by_d2.size());
    for (auto& [d2, group] : by_d2) {
        group.weight /= total;
        groups.push_back(std::move(group));
    }
    return groups;
}

Matrix windowed_sum(const Matrix& f, const std::vector<OffsetGroup>& window) {
    Matrix out(f.rows, f.cols);
    for (int y = 0; y < f.rows; ++y) {
        for (int x = 0; x < f.cols; ++x) {
            double acc = 0.0;
            for (const OffsetGroup& group : window) {
                double s = 0.0;
                for (const auto& [dy, dx] : group.offsets) {
                    const int yy = std::clamp(y + dy, 0, f.rows - 1);
                    const int xx = std::clamp(x + dx, 0, f.cols - 1);
                    s += f.at(yy, xx);
                }
                acc += group.weight * s;
            }
            out.at(y, x) = acc;
        }
    }
    return out;
}

} // namespace

StructureTensor structure_tensor(const Matrix& ix, const Matrix& iy, const HarrisParams& params) {
    validate(params);
    if (!ix.same_size(iy)) throw ValidationError("structure_tensor: gradient dimensions differ");

    Matrix xx(ix.rows, ix.cols), xy(ix.rows, ix.cols), yy(ix.rows, ix.cols);
    for (std::size_t i = 0; i < ix.values.size(); ++i) {
        xx.values[i] = ix.values[i] * ix.values[i];
        xy.values[i] = ix.values[i] * iy.values[i];
        yy.values[i] = iy.values[i] * iy.values[i];
    }

    const auto window = make_window(params.window_sigma, params.window_radius);
    return {windowed_sum(xx, window), windowed_sum(xy, window), windowed_sum(yy, window)};
}

Matrix corner_response(const StructureTensor& t, const HarrisParams& params) {
    validate(params);
    if (!t.a.same_size(t.b) || !t.a.same_size(t.c)) {
        throw ValidationError("corner_response: tensor dimensions differ");
    }
    Matrix h(t.a.rows, t.a.cols);
    for (std::size_t i = 0; i < h.values.size(); ++i) {
        const double a = t.a.values[i];
        const double b = t.b.values[i];
        const double c = t.c.values[i];
        const double trace = a + c;
        h.values[i] = (a * c - b * b) - params.k * trace * trace;
    }
    return h;
}

CornerSet detect_corners(const Matrix& response, const HarrisParams& params) {
    validate(params);
    CornerSet set;
    if (response.empty()) return set;

    double cutoff;
    if (params.abs_threshold) {
        cutoff = *params.abs_threshold;
    } else {
        const double max_h = *std::max_element(response.values.begin(), response.values.end());
        if (max_h <= 0.0) return set;
        cutoff = params.rel_threshold * max_h;
    }

    // Corner candidates keep window_radius away from the borders, where the
    // windowed sums are edge-extension artifacts.
    const int margin = params.window_radius;
    const int r = params.nms_radius;
    for (int y = margin; y < response.rows - margin; ++y) {
        for (int x = margin; x < response.cols - margin; ++x) {
            const double h = response.at(y, x);
            if (h <= 0.0 || h <= cutoff) continue;
            bool suppressed = false;
            for (int dy = -r; dy <= r && !suppressed; ++dy) {
                const int yy = y + dy;
                if (yy < 0 || yy >= response.rows) continue;
                for (int dx = -r; dx <= r; ++dx) {
                    const int xx = x + dx;
                    if (xx < 0 || xx >= response.cols || (dx == 0 && dy == 0)) continue;
                    const double other = response.at(yy, xx);
                    // Exact ties go to the first pixel in row-major order.
                    if (other > h || (other == h && (yy < y || (yy == y && xx < x)))) {
                        suppressed = true;
                        break;
                    }
                }
            }
            if (!suppressed) set.corners.push_back({x, y, h});
        }
    }

    std::sort(set.corners.begin(), set.corners.end(), [](const Corner& a, const Corner& b) {
        if (a.response != b.response) return a.response > b.response;
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    });
    return set;
}

CornerSet harris(const GrayImage& img, const HarrisParams& params) {
    validate(params);
    const GradientPair g = gradients(img);
    const StructureTensor t = structure_tensor(g.ix, g.iy, params);
    const Matrix h = corner_response(t, params);
    return detect_corners(h, params);
}

} // namespace wavecorner
