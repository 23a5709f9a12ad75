#include "wavecorner/image.hpp"

namespace wavecorner {

Matrix to_unit(const GrayImage& img) {
    Matrix m(img.height, img.width);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        m.values[i] = img.pixels[i] / 255.0;
    }
    return m;
}

GrayImage from_unit(const Matrix& unit) {
    GrayImage img(unit.cols, unit.rows);
    for (std::size_t i = 0; i < unit.values.size(); ++i) {
        img.pixels[i] = clip255(unit.values[i] * 255.0);
    }
    return img;
}

Matrix as_matrix(const GrayImage& img) {
    Matrix m(img.height, img.width);
    m.values = img.pixels;
    return m;
}

GrayImage image_from_matrix(const Matrix& m) {
    GrayImage img(m.cols, m.rows);
    for (std::size_t i = 0; i < m.values.size(); ++i) {
        img.pixels[i] = clip255(m.values[i]);
    }
    return img;
}

} // namespace wavecorner
