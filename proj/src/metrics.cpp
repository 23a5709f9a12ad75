#include "wavecorner/metrics.hpp"

#include <cmath>
#include <limits>

#include "wavecorner/errors.hpp"

namespace wavecorner {

double mse(const GrayImage& f, const GrayImage& g) {
    if (!f.same_size(g)) throw ValidationError("mse: image dimensions differ");
    double sum = 0.0;
    for (std::size_t i = 0; i < f.pixels.size(); ++i) {
        const double d = f.pixels[i] - g.pixels[i];
        sum += d * d;
    }
    return sum / static_cast<double>(f.pixels.size());
}

double psnr(const GrayImage& f, const GrayImage& g) {
    const double e = mse(f, g);
    if (e == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / e);
}

QualityReport compare(const GrayImage& f, const GrayImage& g) {
    QualityReport q;
    q.mse = mse(f, g);
    q.psnr_db = q.mse == 0.0 ? std::numeric_limits<double>::infinity()
                             : 10.0 * std::log10(255.0 * 255.0 / q.mse);
    return q;
}

} // namespace wavecorner
