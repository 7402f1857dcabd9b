#include "palmcount/raster.hpp"

#include <cmath>
#include <numbers>

#include "palmcount/errors.hpp"
#include "palmcount/kernels.hpp"

namespace palm {

bool GeoMeta::valid() const {
    return gsd_x > 0.0 && gsd_y > 0.0 && std::isfinite(gsd_x) && std::isfinite(gsd_y);
}

Raster::Raster(int w, int h, int c)
    : width(w), height(h), channels(c),
      pixels(static_cast<std::size_t>(w) * h * c, 0) {}

GrayRaster::GrayRaster(int w, int h, std::uint8_t fill)
    : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {}

GrayRaster extract_green_band(const Raster& img) {
    if (img.channels != 3 && img.channels != 4)
        throw WrongChannelCount("extract_green_band: image has " +
                                std::to_string(img.channels) +
                                " channels, need 3 or 4");
    GrayRaster out(img.width, img.height);
    kernels::active_kernels().pick_channel(img.pixels.data(), out.values.data(),
                                           img.pixel_count(), img.channels, 1);
    out.geo = img.geo;
    return out;
}

GrayRaster to_grayscale(const Raster& img) {
    GrayRaster out(img.width, img.height);
    if (img.channels == 1) {
        out.values = img.pixels;
    } else {
        kernels::active_kernels().luma_bt601(img.pixels.data(), out.values.data(),
                                             img.pixel_count(), img.channels);
    }
    out.geo = img.geo;
    return out;
}

double pixels_to_area_m2(std::int64_t n_pixels, const GeoMeta& geo) {
    return static_cast<double>(n_pixels) * geo.gsd_x * geo.gsd_y;
}

double equivalent_diameter_m(double area_m2) {
    return 2.0 * std::sqrt(area_m2 / std::numbers::pi);
}

}  // namespace palm
