#include "semiostat/scalar_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "semiostat/errors.hpp"

namespace semiostat::scalar {

namespace {

constexpr double kScanStep = 1e-3;
constexpr double kBisectWidth = 1e-12;
constexpr double kNeutralMargin = 1e-9;

void require_finite(double x, const char* name) {
    if (!std::isfinite(x))
        throw InputError(std::string(name) + " must be finite");
}

double bisect_root(const ScalarParams& params, double a, double b, double ga, double gb) {
    // Invariant: sign(ga) != sign(gb), both nonzero.
    while (b - a > kBisectWidth) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;  // interval exhausted in doubles
        const double gm = phi(params, mid) - mid;
        if (gm == 0.0) return mid;
        if ((ga < 0.0) == (gm < 0.0)) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
            gb = gm;
        }
    }
    return 0.5 * (a + b);
}

Stability classify(double derivative) {
    const double mag = std::fabs(derivative);
    if (mag < 1.0 - kNeutralMargin) return Stability::Attracting;
    if (mag > 1.0 + kNeutralMargin) return Stability::Repelling;
    return Stability::Neutral;
}

}  // namespace

void validate(const ScalarParams& params) {
    if (!std::isfinite(params.alpha) || params.alpha < 0.0)
        throw InputError("alpha must be finite and >= 0");
    if (!std::isfinite(params.beta) || params.beta <= 0.0)
        throw InputError("beta must be finite and > 0");
    if (!std::isfinite(params.epsilon) || params.epsilon <= 0.0)
        throw InputError("epsilon must be finite and > 0");
    if (!std::isfinite(params.tol) || params.tol <= 0.0)
        throw InputError("tol must be finite and > 0");
    if (params.max_iter < 1)
        throw InputError("max_iter must be >= 1");
}

double phi(const ScalarParams& params, double x) {
    validate(params);
    require_finite(x, "x");
    return params.beta * std::tanh(x + params.alpha * std::sin(x));
}

double phi_derivative(const ScalarParams& params, double x) {
    validate(params);
    require_finite(x, "x");
    const double inner = x + params.alpha * std::sin(x);
    const double sech = 1.0 / std::cosh(inner);  // cosh overflow -> sech 0
    return params.beta * sech * sech * (1.0 + params.alpha * std::cos(x));
}

ContractionReport contraction_report(const ScalarParams& params, double grid_lo,
                                     double grid_hi, int grid_points) {
    validate(params);
    if (!(grid_lo < grid_hi) || grid_points < 2)
        throw InputError("contraction grid must have lo < hi and >= 2 points");

    ContractionReport report;
    report.bound = params.beta * (1.0 + params.alpha);
    report.is_certified = report.bound < 1.0;
    const double h = (grid_hi - grid_lo) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) {
        const double x = (i == grid_points - 1) ? grid_hi : grid_lo + i * h;
        report.empirical_max = std::max(report.empirical_max,
                                        std::fabs(phi_derivative(params, x)));
    }
    return report;
}

double project(const ScalarParams& params, double x) {
    validate(params);
    require_finite(x, "x");
    // IEEE remainder is exact and rounds the quotient half-to-even, which
    // gives the nearest grid multiple with ties toward the even multiple.
    return x - std::remainder(x, params.epsilon);
}

TrajectoryRecord iterate(const ScalarParams& params, double x0) {
    validate(params);
    require_finite(x0, "x0");

    TrajectoryRecord record;
    record.params = params;
    record.x0 = x0;
    record.samples.emplace_back(0, x0);

    std::map<double, int> first_seen;  // projected state -> step index
    double current = x0;
    for (int t = 0; t < params.max_iter; ++t) {
        const double next = project(params, phi(params, current));
        record.samples.emplace_back(t + 1, next);
        if (std::fabs(next - current) < params.tol) {
            record.status = TrajectoryRecord::Status::Converged;
            record.fixed_point = next;
            record.converged_at = t;
            return record;
        }
        auto [it, inserted] = first_seen.emplace(next, t + 1);
        if (!inserted) {
            record.status = TrajectoryRecord::Status::CycleDetected;
            record.cycle_period = (t + 1) - it->second;
            return record;
        }
        current = next;
    }
    record.status = TrajectoryRecord::Status::MaxIterReached;
    return record;
}

std::vector<FixedPoint> find_fixed_points(const ScalarParams& params, double lo, double hi) {
    validate(params);
    require_finite(lo, "lo");
    require_finite(hi, "hi");
    if (!(lo < hi)) throw InputError("fixed-point range must have lo < hi");

    const int steps = static_cast<int>(std::ceil((hi - lo) / kScanStep));
    std::vector<double> roots;

    double xa = lo;
    double ga = phi(params, xa) - xa;
    if (ga == 0.0) roots.push_back(xa);
    for (int i = 1; i <= steps; ++i) {
        const double xb = (i == steps) ? hi : lo + i * kScanStep;
        const double gb = phi(params, xb) - xb;
        if (gb == 0.0) {
            roots.push_back(xb);
        } else if (ga != 0.0 && (ga < 0.0) != (gb < 0.0)) {
            roots.push_back(bisect_root(params, xa, xb, ga, gb));
        }
        xa = xb;
        ga = gb;
    }

    std::sort(roots.begin(), roots.end());
    std::vector<FixedPoint> out;
    for (double r : roots) {
        if (!out.empty() && std::fabs(r - out.back().x) < 1e-9) continue;
        const double d = phi_derivative(params, r);
        out.push_back({r, classify(d), d});
    }
    return out;
}

}  // namespace semiostat::scalar
