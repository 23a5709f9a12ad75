#include "wavecorner/wavelet.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wavecorner/errors.hpp"

namespace wavecorner {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// Replicates the last row/column so both dimensions are even.
Matrix pad_to_even(const Matrix& m) {
    const int pr = m.rows + (m.rows & 1);
    const int pc = m.cols + (m.cols & 1);
    if (pr == m.rows && pc == m.cols) return m;
    Matrix p(pr, pc);
    for (int r = 0; r < pr; ++r) {
        const int sr = r < m.rows ? r : m.rows - 1;
        for (int c = 0; c < pc; ++c) {
            const int sc = c < m.cols ? c : m.cols - 1;
            p.at(r, c) = m.at(sr, sc);
        }
    }
    return p;
}

struct SizeChain {
    std::vector<int> rows, cols; // index k = dimensions entering level k+1
};

SizeChain size_chain(int height, int width, int levels) {
    SizeChain s;
    s.rows.push_back(height);
    s.cols.push_back(width);
    for (int k = 1; k <= levels; ++k) {
        s.rows.push_back((s.rows.back() + 1) / 2);
        s.cols.push_back((s.cols.back() + 1) / 2);
    }
    return s;
}

} // namespace

SubbandSet dwt2_haar(const Matrix& m) {
    if (m.empty()) throw ValidationError("dwt2_haar: empty matrix");
    const Matrix p = pad_to_even(m);
    const int hr = p.rows / 2;
    const int hc = p.cols / 2;

    // Row pass: pairwise sum/difference along each row.
    Matrix lo(p.rows, hc), hi(p.rows, hc);
    for (int r = 0; r < p.rows; ++r) {
        for (int j = 0; j < hc; ++j) {
            const double a = p.at(r, 2 * j);
            const double b = p.at(r, 2 * j + 1);
            lo.at(r, j) = (a + b) * kInvSqrt2;
            hi.at(r, j) = (a - b) * kInvSqrt2;
        }
    }

    // Column pass on both halves.
    SubbandSet out{Matrix(hr, hc), Matrix(hr, hc), Matrix(hr, hc), Matrix(hr, hc)};
    for (int i = 0; i < hr; ++i) {
        for (int j = 0; j < hc; ++j) {
            const double la = lo.at(2 * i, j);
            const double lb = lo.at(2 * i + 1, j);
            out.ll.at(i, j) = (la + lb) * kInvSqrt2;
            out.lh.at(i, j) = (la - lb) * kInvSqrt2;
            const double ha = hi.at(2 * i, j);
            const double hb = hi.at(2 * i + 1, j);
            out.hl.at(i, j) = (ha + hb) * kInvSqrt2;
            out.hh.at(i, j) = (ha - hb) * kInvSqrt2;
        }
    }
    return out;
}

Matrix idwt2_haar(const SubbandSet& bands, int out_rows, int out_cols) {
    const Matrix& ll = bands.ll;
    if (!ll.same_size(bands.lh) || !ll.same_size(bands.hl) || !ll.same_size(bands.hh)) {
        throw ValidationError("idwt2_haar: mismatched band dimensions");
    }
    if (ll.empty()) throw ValidationError("idwt2_haar: empty bands");
    const int pr = 2 * ll.rows;
    const int pc = 2 * ll.cols;
    if (out_rows > pr || out_rows < pr - 1 || out_cols > pc || out_cols < pc - 1) {
        throw ValidationError("idwt2_haar: output size inconsistent with band dimensions");
    }

    // Column synthesis back to row-pass halves.
    Matrix lo(pr, ll.cols), hi(pr, ll.cols);
    for (int i = 0; i < ll.rows; ++i) {
        for (int j = 0; j < ll.cols; ++j) {
            lo.at(2 * i, j) = (ll.at(i, j) + bands.lh.at(i, j)) * kInvSqrt2;
            lo.at(2 * i + 1, j) = (ll.at(i, j) - bands.lh.at(i, j)) * kInvSqrt2;
            hi.at(2 * i, j) = (bands.hl.at(i, j) + bands.hh.at(i, j)) * kInvSqrt2;
            hi.at(2 * i + 1, j) = (bands.hl.at(i, j) - bands.hh.at(i, j)) * kInvSqrt2;
        }
    }

    // Row synthesis, cropping any padded row/column.
    Matrix out(out_rows, out_cols);
    for (int r = 0; r < out_rows; ++r) {
        for (int j = 0; j < ll.cols; ++j) {
            const double a = (lo.at(r, j) + hi.at(r, j)) * kInvSqrt2;
            const double b = (lo.at(r, j) - hi.at(r, j)) * kInvSqrt2;
            out.at(r, 2 * j) = a;
            if (2 * j + 1 < out_cols) out.at(r, 2 * j + 1) = b;
        }
    }
    return out;
}

WaveletPyramid decompose(const GrayImage& img, int levels) {
    if (levels < 1) throw ValidationError("decompose: levels must be >= 1");
    const int min_dim = img.width < img.height ? img.width : img.height;
    if (levels >= 31 || (1 << levels) > min_dim) {
        throw ValidationError("decompose: " + std::to_string(levels) + " levels is too deep for a " +
                              std::to_string(img.width) + "x" + std::to_string(img.height) + " image");
    }

    WaveletPyramid p;
    p.levels = levels;
    p.orig_width = img.width;
    p.orig_height = img.height;
    Matrix current = as_matrix(img);
    for (int k = 0; k < levels; ++k) {
        SubbandSet bands = dwt2_haar(current);
        p.details.push_back({std::move(bands.lh), std::move(bands.hl), std::move(bands.hh)});
        current = std::move(bands.ll);
    }
    p.approx = std::move(current);
    return p;
}

Matrix reconstruct_matrix(const WaveletPyramid& p) {
    if (p.levels < 1 || static_cast<int>(p.details.size()) != p.levels) {
        throw ValidationError("reconstruct: inconsistent pyramid");
    }
    const SizeChain chain = size_chain(p.orig_height, p.orig_width, p.levels);
    if (p.approx.rows != chain.rows[p.levels] || p.approx.cols != chain.cols[p.levels]) {
        throw ValidationError("reconstruct: approximation band has unexpected dimensions");
    }
    Matrix current = p.approx;
    for (int k = p.levels; k >= 1; --k) {
        const DetailBands& d = p.details[k - 1];
        if (d.lh.rows != chain.rows[k] || d.lh.cols != chain.cols[k]) {
            throw ValidationError("reconstruct: level " + std::to_string(k) +
                                  " bands have unexpected dimensions");
        }
        current = idwt2_haar({std::move(current), d.lh, d.hl, d.hh}, chain.rows[k - 1], chain.cols[k - 1]);
    }
    return current;
}

GrayImage reconstruct(const WaveletPyramid& p) {
    return image_from_matrix(reconstruct_matrix(p));
}

} // namespace wavecorner
