#pragma once

#include <cstdint>
#include <vector>

#include "palmcount/segment.hpp"

namespace palm {

/// One connected blob. Perimeter is the 4-neighborhood exposed-edge count:
/// edges between a pixel of this component and background, another label, or
/// out-of-bounds. bbox is inclusive.
struct Component {
    std::int32_t label = 0;
    std::int64_t area_px = 0;
    double centroid_x = 0.0;
    double centroid_y = 0.0;
    int min_x = 0;
    int min_y = 0;
    int max_x = 0;
    int max_y = 0;
    std::int64_t perimeter_px = 0;
};

/// Centroid-anchored boundary distances, entry k for angle k * step_deg
/// measured counterclockwise from +x in image coordinates (y down).
struct RadialSignature {
    double center_x = 0.0;
    double center_y = 0.0;
    int step_deg = 30;
    std::vector<double> distances;
};

struct SignatureStats {
    double mean = 0.0;
    double cv = 0.0;  // population stddev / mean; +inf when mean == 0
};

std::vector<Component> measure_components(const LabelMap& labels);

/// 4 pi A / P^2. The 4-edge perimeter overestimates smooth boundaries by
/// about 4/pi, so rasterized disks land near 0.785, not 1. Throws
/// ZeroPerimeter.
double circularity(std::int64_t area_px, std::int64_t perimeter_px);

/// Marches each ray in 0.5 px steps up to the image edge; the distance is to
/// the farthest sample whose nearest pixel (ties round to even) is
/// foreground, 0 if none. step_deg must divide 360; center must be inside
/// the image (CenterOutOfBounds otherwise).
RadialSignature radial_signature(const BinaryMask& mask, double center_x,
                                 double center_y, int step_deg);

SignatureStats signature_stats(const RadialSignature& sig);

}  // namespace palm
