#pragma once

#include <utility>
#include <vector>

namespace semiostat::scalar {

/// Parameters of the scalar update map Φ(x) = β·tanh(x + α·sin x) and of the
/// ε-grid projection used as the quotient map. The two-stage presentation
/// f(x) = x + α·sin x, F = tanh is the β = 1 special case.
struct ScalarParams {
    double alpha = 0.0;     // contextual modulation, >= 0
    double beta = 1.0;      // damping, > 0
    double epsilon = 1e-6;  // grid width of the projection, > 0
    double tol = 1e-10;     // convergence tolerance, > 0
    int max_iter = 10000;   // >= 1
};

/// Throws InputError if any parameter is outside its domain.
void validate(const ScalarParams& params);

/// Φ(x); strictly inside (−β, β) for finite x. Throws InputError on
/// non-finite x or invalid params.
double phi(const ScalarParams& params, double x);

/// Analytic derivative Φ'(x) = β·sech²(x + α·sin x)·(1 + α·cos x).
double phi_derivative(const ScalarParams& params, double x);

struct ContractionReport {
    double bound = 0.0;          // β(1+α)
    bool is_certified = false;   // bound < 1 activates the unique-fixed-point claim
    double empirical_max = 0.0;  // max |Φ'| over the sample grid
};

/// Certifies the sufficient contraction condition β(1+α) < 1 and
/// cross-checks it against |Φ'| sampled on a uniform grid
/// (default 10001 points on [−10, 10]).
ContractionReport contraction_report(const ScalarParams& params, double grid_lo = -10.0,
                                     double grid_hi = 10.0, int grid_points = 10001);

/// Nearest multiple of ε, ties toward the even multiple. Exactly idempotent,
/// so equality of projections is a genuine equivalence relation.
double project(const ScalarParams& params, double x);

struct TrajectoryRecord {
    enum class Status { Converged, MaxIterReached, CycleDetected };

    ScalarParams params;
    double x0 = 0.0;
    std::vector<std::pair<int, double>> samples;  // (t, x_t), samples[0] = (0, x0)
    Status status = Status::MaxIterReached;
    double fixed_point = 0.0;  // valid when converged
    int converged_at = -1;     // step t with |x_{t+1} - x_t| < tol
    int cycle_period = 0;      // valid when a projected state repeats
};

/// Iterates x ↦ project(Φ(x)) from x0. Stops on |x_{t+1} − x_t| < tol
/// (converged), on an exact revisit of a projected state (cycle detected —
/// exact equality is sound because projection quantizes), or at max_iter.
TrajectoryRecord iterate(const ScalarParams& params, double x0);

enum class Stability { Attracting, Repelling, Neutral };

struct FixedPoint {
    double x = 0.0;
    Stability stability = Stability::Neutral;
    double derivative = 0.0;  // Φ'(x)
};

/// Sign-change scan of Φ(x) − x at resolution 1e−3, each bracket refined by
/// bisection to width 1e−12. Stability from |Φ'(x*)| against 1 (margin
/// 1e−9 for "neutral"). An empty result is valid. Throws InputError unless
/// lo < hi.
std::vector<FixedPoint> find_fixed_points(const ScalarParams& params, double lo, double hi);

}  // namespace semiostat::scalar
