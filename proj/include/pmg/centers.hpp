#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pmg/metrics.hpp"

namespace pmg {

// Harmonic conjugate of a point across one chord; conjugates of bisected chords
// are ideal.
struct OStarSample {
    AffinePoint direction; // unit chord direction
    HomogeneousPoint conjugate;
};

struct CenterReport {
    AffinePoint point;
    std::optional<LineCoeffs> line;
    double fit_residual = 0.0;
    bool line_misses_body = false;
    bool is_projective_center = false;
    std::optional<double> reflection_isometry_error;
};

// Involutive projectivity fixing its center and preserving the body setwise.
struct PointReflection {
    AffinePoint center;
    Projectivity map;

    AffinePoint apply(const AffinePoint& p) const { return map.apply(p); }
};

// tau_PQ = first o second; constant displacement 2 d(P,Q) on the common geodesic.
struct Translation {
    PointReflection first;
    PointReflection second;
};

std::vector<OStarSample> ostar_locus(const ConvexBody& body, const AffinePoint& o,
                                     int n_directions);

// Total-least-squares line through the conjugate locus plus the miss-the-body
// test; the verdict is the paper-facing projective-center criterion.
CenterReport is_projective_center(const ConvexBody& body, const AffinePoint& o,
                                  int n_directions = 64, double tol = 1e-6);

// Projectivity sending the fitted conjugate line to the ideal line and o to the
// origin; chords of the image through the origin come out bisected.
Projectivity center_projectivity(const ConvexBody& body, const AffinePoint& o);

PointReflection construct_point_reflection(const MetricSpace& space, const AffinePoint& o);

AffinePoint translate(const Translation& t, const AffinePoint& x);

// rho_O(Q), asserted to be a center again; the conjugated reflection matches the
// direct construction at the image.
AffinePoint conjugate_center(const MetricSpace& space, const PointReflection& o_reflection,
                             const AffinePoint& q);

// Orbit {2ip - 2jq} within [x_lo, x_hi] for |i| + |j| <= max_iter, sorted.
std::vector<double> kronecker_orbit(double p, double q, double x_lo, double x_hi,
                                    int max_iter);

// Closure of a pencil of centers under reflection through generated centers.
std::vector<AffinePoint> pencil_orbit(const MetricSpace& space, const AffinePoint& tip,
                                      const std::vector<std::pair<AffinePoint, AffinePoint>>& pencil,
                                      int generations, size_t point_budget = 20000);

} // namespace pmg
