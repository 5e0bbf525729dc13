#pragma once

#include <array>
#include <string>
#include <vector>

#include "pmg/centers.hpp"

namespace pmg {

// ax^2 + bxy + cy^2 + dx + ey + f = 0 modulo scale, fitted least squares.
struct ConicFit {
    std::array<double, 6> coeffs{};
    double residual = 0.0;
    bool is_ellipse = false;
};

enum class VerdictKind { SymmetricMinkowski, SymmetricHyperbolic, NotSymmetric };

std::string to_string(VerdictKind k);

struct SymmetryVerdict {
    VerdictKind kind = VerdictKind::NotSymmetric;
    int grid = 0;
    double center_fraction = 0.0;
    double conic_residual = 0.0;
};

ConicFit fit_conic(const std::vector<AffinePoint>& points, double tol = 1e-6);

// Deterministic grid of interior points: rows of horizontal chords, points
// inset along each chord; every grid point is admissible by construction.
std::vector<AffinePoint> interior_grid(const ConvexBody& body, int grid,
                                       double margin = 0.15);

std::vector<CenterReport> scan_centers(const MetricSpace& space, int grid,
                                       double tol = 1e-6);

SymmetryVerdict classify(const MetricSpace& space, int grid = 7, double tol = 1e-6);

} // namespace pmg
