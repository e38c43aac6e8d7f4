#pragma once

#include <string>
#include <vector>

#include "semiostat/scalar_dynamics.hpp"

namespace semiostat::scalar {

/// Sampled data behind the map plot: the curve Φ over [lo, hi] together
/// with the fixed points found on the same range.
struct MapPlotData {
    ScalarParams params;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> xs;
    std::vector<double> phis;
    std::vector<FixedPoint> fixed_points;
};

/// Samples Φ on `samples` evenly spaced points (endpoints included) and
/// attaches find_fixed_points(params, lo, hi).
MapPlotData map_plot_data(const ScalarParams& params, double lo, double hi,
                          int samples = 300);

/// 17-significant-digit float formatting used by all emitted artifacts.
std::string format_double(double v);

/// Shortest decimal that round-trips to the same double; used for display
/// lines in reports and on the CLI.
std::string format_short(double v);

/// CSV with header `x,phi,diag`; one row per sample. Throws IoError when the
/// path is unwritable.
void write_map_plot_csv(const MapPlotData& data, const std::string& path);

/// 640x400 SVG overlaying the curve, the diagonal, and fixed-point markers.
void write_map_plot_svg(const MapPlotData& data, const std::string& path);

/// CSV with header `t,x`; one row per recorded sample.
void write_trajectory_csv(const TrajectoryRecord& record, const std::string& path);

}  // namespace semiostat::scalar
