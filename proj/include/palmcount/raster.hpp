#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace palm {

/// Ground sample distance in meters per pixel. QuickBird-class imagery is 0.6.
struct GeoMeta {
    double gsd_x = 0.6;
    double gsd_y = 0.6;

    bool valid() const;
};

/// 8-bit raster, channel-interleaved, row-major. channels is 1 (gray),
/// 3 (RGB) or 4 (RGBA).
struct Raster {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> pixels;
    std::optional<GeoMeta> geo;
    std::string source;  // origin path; empty for in-memory rasters

    Raster() = default;
    Raster(int w, int h, int c);

    std::uint8_t at(int x, int y, int c) const { return pixels[idx(x, y, c)]; }
    std::uint8_t& at(int x, int y, int c) { return pixels[idx(x, y, c)]; }
    const std::uint8_t* row(int y) const {
        return pixels.data() + static_cast<std::size_t>(y) * width * channels;
    }
    std::uint8_t* row(int y) {
        return pixels.data() + static_cast<std::size_t>(y) * width * channels;
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }

  private:
    std::size_t idx(int x, int y, int c) const {
        return (static_cast<std::size_t>(y) * width + x) * channels + c;
    }
};

/// Single-channel 8-bit raster.
struct GrayRaster {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> values;
    std::optional<GeoMeta> geo;

    GrayRaster() = default;
    GrayRaster(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const {
        return values[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return values[static_cast<std::size_t>(y) * width + x];
    }
    const std::uint8_t* row(int y) const {
        return values.data() + static_cast<std::size_t>(y) * width;
    }
    std::uint8_t* row(int y) {
        return values.data() + static_cast<std::size_t>(y) * width;
    }
};

/// Copies the green samples of a 3/4-channel raster. Throws WrongChannelCount
/// on single-channel input.
GrayRaster extract_green_band(const Raster& img);

/// BT.601 luma: round((299 R + 587 G + 114 B) / 1000). Single-channel input
/// copies through unchanged.
GrayRaster to_grayscale(const Raster& img);

double pixels_to_area_m2(std::int64_t n_pixels, const GeoMeta& geo);

/// Diameter of the disk with the given area: 2 sqrt(A / pi).
double equivalent_diameter_m(double area_m2);

}  // namespace palm
