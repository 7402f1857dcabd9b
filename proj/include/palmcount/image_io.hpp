#pragma once

#include <optional>
#include <string>

#include "palmcount/raster.hpp"

namespace palm {

/// Loads a PNG (8-bit gray/RGB/RGBA) or an uncompressed 8-bit baseline TIFF.
/// Palette and gray+alpha PNGs are normalized to RGB/RGBA. geo is left unset;
/// attach it from a flag or sidecar. Throws FileNotFound, UnsupportedFormat
/// or CorruptImage.
Raster load_image(const std::string& path);

/// 8-bit PNG, color type from the channel count. Writes to a temp file in
/// the target directory and renames into place.
void save_png(const Raster& img, const std::string& path);

/// Reads `<image_path>.gsd`: one or two ASCII decimals (gsd, or gsd_x gsd_y).
/// Returns nullopt when the sidecar does not exist; throws IoError when it
/// exists but does not parse.
std::optional<GeoMeta> read_gsd_sidecar(const std::string& image_path);

}  // namespace palm
