#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "palmcount/detector.hpp"
#include "palmcount/raster.hpp"

namespace palm {

/// Synthetic grove scene description. Deterministic: the same spec (seed
/// included) produces byte-identical images and truth.
struct GroveSpec {
    int width = 512;
    int height = 512;
    GeoMeta gsd{0.6, 0.6};
    int n_palms = 0;
    double palm_radius_min_px = 8.0;
    double palm_radius_max_px = 12.0;
    int n_distractors = 0;
    double min_spacing_px = 30.0;
    double noise_density = 0.0;  // salt-and-pepper fraction
    std::uint64_t seed = 0;

    /// Throws ConfigError: palms must fit (max radius < min(w,h)/2) and
    /// min_spacing_px must be >= 2 * max radius so canopies cannot overlap.
    void validate() const;
};

struct PlantedTree {
    double x = 0.0;
    double y = 0.0;
    double radius_px = 0.0;
};

struct GroveTruth {
    GroveSpec spec;
    std::vector<PlantedTree> palms;
    std::vector<PlantedTree> distractors;
};

struct MatchResult {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    double precision = 1.0;  // 1.0 when tp + fp == 0
    double recall = 1.0;     // 1.0 when tp + fn == 0
};

/// Renders the grove: soil background, palms as bright radial fronds around a
/// darker self-shadow core, irregular distractor blobs, salt-and-pepper
/// noise. Placement is rejection-sampled; throws SpecInfeasible when the
/// attempt budget (1000 per tree) runs out.
std::pair<Raster, GroveTruth> generate_grove(const GroveSpec& spec);

/// Greedy one-to-one matching of accepted detections to truth palms by
/// ascending centroid distance, pairs beyond tol_px never match.
MatchResult match_detections(const RunReport& report, const GroveTruth& truth,
                             double tol_px);

void write_truth_json(const GroveTruth& truth, const std::string& path);
GroveTruth read_truth_json(const std::string& path);

}  // namespace palm
