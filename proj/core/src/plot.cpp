#include "semiostat/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "semiostat/errors.hpp"

namespace semiostat::scalar {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_short(double v) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

MapPlotData map_plot_data(const ScalarParams& params, double lo, double hi, int samples) {
    validate(params);
    if (!(lo < hi) || samples < 2)
        throw InputError("map plot needs lo < hi and >= 2 samples");

    MapPlotData data;
    data.params = params;
    data.lo = lo;
    data.hi = hi;
    const double h = (hi - lo) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double x = (i == samples - 1) ? hi : lo + i * h;
        data.xs.push_back(x);
        data.phis.push_back(phi(params, x));
    }
    data.fixed_points = find_fixed_points(params, lo, hi);
    return data;
}

void write_map_plot_csv(const MapPlotData& data, const std::string& path) {
    auto out = open_out(path);
    out << "x,phi,diag\n";
    for (std::size_t i = 0; i < data.xs.size(); ++i)
        out << format_double(data.xs[i]) << ',' << format_double(data.phis[i]) << ','
            << format_double(data.xs[i]) << '\n';
    if (!out.flush())
        throw IoError("failed writing '" + path + "'");
}

void write_trajectory_csv(const TrajectoryRecord& record, const std::string& path) {
    auto out = open_out(path);
    out << "t,x\n";
    for (const auto& [t, x] : record.samples)
        out << t << ',' << format_double(x) << '\n';
    if (!out.flush())
        throw IoError("failed writing '" + path + "'");
}

void write_map_plot_svg(const MapPlotData& data, const std::string& path) {
    const int width = 640;
    const int height = 400;
    const double pad = 40.0;
    const double ymax = data.params.beta * 1.2;  // curve lives in (-beta, beta)
    const double ymin = -ymax;

    auto px = [&](double x) {
        return pad + (x - data.lo) / (data.hi - data.lo) * (width - 2 * pad);
    };
    auto py = [&](double y) {
        return height - pad - (y - ymin) / (ymax - ymin) * (height - 2 * pad);
    };

    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Diagonal y = x, clipped to the plotted y-range.
    const double dlo = std::max(data.lo, ymin);
    const double dhi = std::min(data.hi, ymax);
    out << "  <line x1=\"" << format_double(px(dlo)) << "\" y1=\"" << format_double(py(dlo))
        << "\" x2=\"" << format_double(px(dhi)) << "\" y2=\"" << format_double(py(dhi))
        << "\" stroke=\"gray\" stroke-dasharray=\"6 4\" stroke-width=\"1\"/>\n";

    out << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < data.xs.size(); ++i) {
        if (i) out << ' ';
        out << format_double(px(data.xs[i])) << ',' << format_double(py(data.phis[i]));
    }
    out << "\"/>\n";

    for (const auto& fp : data.fixed_points) {
        const char* color = fp.stability == Stability::Attracting  ? "seagreen"
                            : fp.stability == Stability::Repelling ? "crimson"
                                                                   : "orange";
        out << "  <circle cx=\"" << format_double(px(fp.x)) << "\" cy=\""
            << format_double(py(fp.x)) << "\" r=\"5\" fill=\"" << color << "\"/>\n";
    }
    out << "</svg>\n";
    if (!out.flush())
        throw IoError("failed writing '" + path + "'");
}

}  // namespace semiostat::scalar
