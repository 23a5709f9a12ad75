#include "wavecorner/pgm.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>

#include "wavecorner/errors.hpp"

namespace wavecorner {

namespace {

// Cursor over the raw file bytes. PGM headers are whitespace-separated
// tokens with '#' comments running to end of line.
struct Scanner {
    const std::string& data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }

    void skip_space_and_comments() {
        while (!eof()) {
            const char c = data[pos];
            if (c == '#') {
                while (!eof() && data[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                ++pos;
            } else {
                break;
            }
        }
    }

    // Nonnegative decimal token; -1 when none is available.
    long next_int() {
        skip_space_and_comments();
        if (eof() || data[pos] < '0' || data[pos] > '9') return -1;
        long v = 0;
        while (!eof() && data[pos] >= '0' && data[pos] <= '9') {
            v = v * 10 + (data[pos] - '0');
            if (v > 1'000'000'000L) return -1;
            ++pos;
        }
        return v;
    }
};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

} // namespace

GrayImage load_pgm(const std::filesystem::path& path) {
    const std::string data = read_file(path);
    if (data.size() < 2 || data[0] != 'P' || (data[1] != '2' && data[1] != '5')) {
        throw IoError("malformed PGM header (expected magic P2 or P5): " + path.string());
    }
    const bool binary = data[1] == '5';

    Scanner sc{data, 2};
    const long width = sc.next_int();
    const long height = sc.next_int();
    const long maxval = sc.next_int();
    if (width <= 0 || height <= 0 || maxval <= 0) {
        throw IoError("malformed PGM header (bad dimensions or maxval): " + path.string());
    }
    if (maxval > 255) {
        throw IoError("unsupported PGM maxval > 255: " + path.string());
    }

    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    const std::size_t count = img.pixels.size();

    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        if (sc.eof()) throw IoError("truncated PGM pixel data: " + path.string());
        ++sc.pos;
        if (data.size() - sc.pos < count) {
            throw IoError("truncated PGM pixel data: " + path.string());
        }
        for (std::size_t i = 0; i < count; ++i) {
            img.pixels[i] = static_cast<unsigned char>(data[sc.pos + i]);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const long v = sc.next_int();
            if (v < 0) throw IoError("truncated PGM pixel data: " + path.string());
            if (v > maxval) throw IoError("PGM sample exceeds maxval: " + path.string());
            img.pixels[i] = static_cast<double>(v);
        }
    }
    return img;
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path, bool binary) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path.string());

    std::string header = binary ? "P5\n" : "P2\n";
    header += std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.write(header.data(), static_cast<std::streamsize>(header.size()));

    if (binary) {
        std::string raster(img.pixels.size(), '\0');
        for (std::size_t i = 0; i < img.pixels.size(); ++i) {
            const double r = clip255(std::round(img.pixels[i]));
            raster[i] = static_cast<char>(static_cast<std::uint8_t>(r));
        }
        out.write(raster.data(), static_cast<std::streamsize>(raster.size()));
    } else {
        std::string body;
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                if (x > 0) body += ' ';
                body += std::to_string(static_cast<int>(clip255(std::round(img.at(x, y)))));
            }
            body += '\n';
        }
        out.write(body.data(), static_cast<std::streamsize>(body.size()));
    }
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace wavecorner
