#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ospc {

// 8-bit RGB raster, row-major. Alpha is flattened over white at decode
// time so every downstream consumer sees one canonical pixel format.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> rgb;  // 3 * width * height bytes

    static Image filled(int w, int h, uint8_t r, uint8_t g, uint8_t b);

    uint8_t* px(int x, int y) { return rgb.data() + 3 * (static_cast<size_t>(y) * width + x); }
    const uint8_t* px(int x, int y) const {
        return rgb.data() + 3 * (static_cast<size_t>(y) * width + x);
    }

    bool operator==(const Image&) const = default;
};

// Decodes any supported raster payload (PNG, JPEG, BMP, ...). Total over
// arbitrary bytes: returns an Image or throws Err::undecodable_image.
Image decode_image(std::string_view bytes);

std::string encode_png(const Image& img);

Image load_image_file(const std::string& path);
void save_png(const Image& img, const std::string& path);

// Mean channel values over a clipped rectangle.
std::array<double, 3> mean_rgb(const Image& img, int x, int y, int w, int h);

// BT.601 luma in [0, 255].
double luminance(uint8_t r, uint8_t g, uint8_t b);

uint64_t image_content_hash(const Image& img);

}  // namespace ospc
