#pragma once

#include <cstddef>
#include <vector>

namespace wavecorner {

// Dense row-major matrix of doubles. Carrier for wavelet coefficients,
// gradients and response maps.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> values; // rows * cols, row-major

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), values(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {}

    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }

    bool same_size(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    bool empty() const { return rows <= 0 || cols <= 0; }
};

} // namespace wavecorner
