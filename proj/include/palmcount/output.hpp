#pragma once

#include <array>
#include <string>
#include <vector>

#include "palmcount/detector.hpp"
#include "palmcount/raster.hpp"

namespace palm {

struct Annotation {
    double center_x = 0.0;
    double center_y = 0.0;
    int radius = 2;
    std::array<std::uint8_t, 3> color{255, 0, 0};
};

/// Circle radius for a detection: the disk-equivalent pixel radius of its
/// area, never below 2.
Annotation annotation_for(const Detection& det,
                          std::array<std::uint8_t, 3> color = {255, 0, 0});

/// Returns a copy with a 1-px midpoint circle; out-of-bounds pixels are
/// clipped. Requires >= 3 channels (WrongChannelCount otherwise).
Raster draw_circle(const Raster& img, const Annotation& ann);

/// RGB copy of img with one circle per accepted detection.
Raster annotate(const Raster& img, const RunReport& report,
                std::array<std::uint8_t, 3> color = {255, 0, 0});

/// One PNG per accepted detection (bbox + 2 px, clipped), palm_0001.png
/// onward in report order, plus index.csv. Returns the crop paths.
std::vector<std::string> export_crops(const Raster& img, const RunReport& report,
                                      const std::string& out_dir);

enum class ReportFormat { csv, json };

std::string report_to_csv(const RunReport& report);
std::string report_to_json(const RunReport& report);

void write_report(const RunReport& report, ReportFormat format,
                  const std::string& path);

/// Parses a report written by report_to_json. Throws IoError on missing or
/// malformed fields.
RunReport read_report_json(const std::string& path);

/// Shared 6-significant-digit float format used by every report writer.
std::string fmt_g6(double v);

}  // namespace palm
