#pragma once

#include <cstdint>
#include <vector>

#include "palmcount/raster.hpp"

namespace palm {

/// Foreground map, one byte per pixel, every element 0 or 1.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const {
        return bits[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return bits[static_cast<std::size_t>(y) * width + x];
    }
    const std::uint8_t* row(int y) const {
        return bits.data() + static_cast<std::size_t>(y) * width;
    }
    std::uint8_t* row(int y) {
        return bits.data() + static_cast<std::size_t>(y) * width;
    }
    std::int64_t count() const;

    bool operator==(const BinaryMask&) const = default;
};

/// All shapes are symmetric about their center, which the erosion/dilation
/// duality relies on.
enum class StructuringElement { square3, cross3, square5 };

enum class Connectivity { four = 4, eight = 8 };

/// Dense component labels, 0 = background, components numbered 1..count in
/// raster-scan order of their first pixel.
struct LabelMap {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> labels;
    std::int32_t component_count = 0;

    std::int32_t at(int x, int y) const {
        return labels[static_cast<std::size_t>(y) * width + x];
    }
};

/// bit = 1 iff value > t.
BinaryMask threshold_global(const GrayRaster& img, int t);

/// Otsu's threshold: the t in [0,255] maximizing between-class variance of
/// the {<=t} / {>t} histogram split, smallest t on ties. A constant image
/// returns its unique value. Throws EmptyImage.
int threshold_otsu(const GrayRaster& img);

/// Out-of-bounds neighbors count as background, so objects touching the
/// border erode.
BinaryMask erode(const BinaryMask& m, StructuringElement se);

/// Out-of-bounds neighbors are clipped.
BinaryMask dilate(const BinaryMask& m, StructuringElement se);

/// Morphological closing: erode(dilate(m, se), se).
BinaryMask close(const BinaryMask& m, StructuringElement se);

/// Background pixels not 4-connected to the border through background become
/// foreground.
BinaryMask fill_holes(const BinaryMask& m);

/// Clears every connected component with fewer than min_area pixels.
BinaryMask remove_small(const BinaryMask& m, std::int64_t min_area,
                        Connectivity conn);

/// Two-pass union-find labeling (path compression + union by size).
LabelMap label_components(const BinaryMask& m, Connectivity conn);

BinaryMask invert(const BinaryMask& m);

}  // namespace palm
