#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "palmcount/raster.hpp"
#include "palmcount/segment.hpp"
#include "palmcount/shape.hpp"

namespace palm {

enum class Band { green, luma, auto_band };

struct DetectorConfig {
    Band band = Band::auto_band;
    std::optional<int> fixed_threshold;  // Otsu when unset
    bool invert = false;
    StructuringElement se = StructuringElement::square3;
    Connectivity connectivity = Connectivity::eight;
    double min_canopy_diameter_m = 3.0;
    double max_canopy_diameter_m = 9.0;
    double min_circularity = 0.5;
    double max_signature_cv = 0.35;
    int signature_step_deg = 30;
    std::int64_t noise_min_area_px = 8;

    /// Throws ConfigError when any invariant is violated.
    void validate() const;
};

enum class RejectReason { none, too_small, too_large, not_circular, irregular_signature };

const char* to_string(RejectReason r);
RejectReason reject_reason_from_string(const std::string& s);

struct Detection {
    Component component;
    std::optional<double> area_m2;                // present iff geo known
    std::optional<double> equivalent_diameter_m;  // present iff geo known
    double circularity = 0.0;
    std::optional<double> signature_cv;  // computed only past the area gate
    bool accepted = false;
    RejectReason reject_reason = RejectReason::none;
};

struct RunReport {
    std::string source;
    std::int64_t count = 0;
    std::vector<Detection> detections;  // accepted and rejected, scan order
    DetectorConfig config;
    std::optional<GeoMeta> gsd;
};

/// Pixel-area window equivalent to the config's physical diameter bounds:
/// ceil/floor of pi (d/2)^2 / (gsd_x gsd_y).
std::pair<std::int64_t, std::int64_t> area_window_px(const DetectorConfig& cfg,
                                                     const GeoMeta& geo);

/// Full pipeline: band extraction, threshold, close, fill holes, small-object
/// removal, labeling, measurement, and the size/circularity/signature
/// filters, in that order. Throws MissingGeo when img carries no GSD.
RunReport detect(const Raster& img, const DetectorConfig& cfg);

/// Flat key=value config file, '#' comments, keys named after DetectorConfig
/// fields. Unknown keys are ConfigError. Values overwrite fields of `base`.
DetectorConfig load_config_file(const std::string& path, DetectorConfig base = {});

}  // namespace palm
