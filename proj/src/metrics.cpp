#include "pmg/metrics.hpp"

#include <cmath>

namespace pmg {

namespace {

constexpr double kNearBoundary = 1e-9;

struct ChordParams {
    double tc = 0.0; // < 0
    double td = 0.0; // > 0, A at 0, B at tb
    double tb = 0.0;
};

// Chord through A in the A -> B direction; parameters along the unit direction.
ChordParams hilbert_chord(const ConvexBody& body, const AffinePoint& a,
                          const AffinePoint& b) {
    if (!body.contains(a) || !body.contains(b))
        fail_domain("PointOutside", "Hilbert metric needs interior points");
    AffinePoint v = b - a;
    Chord ch = chord_through(body, a, v);
    return {ch.t_c, ch.t_d, v.norm()};
}

// Signed Hilbert coordinate of the chord point at parameter t, relative to A.
double chord_arclength(const ChordParams& cp, double t) {
    double u = (t - cp.tc) / (cp.td - t);
    double u0 = -cp.tc / cp.td;
    return 0.5 * std::log(u / u0);
}

double chord_point(const ChordParams& cp, double s) {
    double u0 = -cp.tc / cp.td;
    double u = u0 * std::exp(2.0 * s);
    return (cp.tc + cp.td * u) / (1.0 + u);
}

} // namespace

MetricSpace MetricSpace::minkowski(BodyPtr indicatrix) {
    if (!indicatrix) fail_spec("InvalidBody", "missing indicatrix");
    if (!is_centrally_symmetric(*indicatrix, 1e-8))
        fail_domain("NotSymmetric", "Minkowski indicatrix must be centrally symmetric");
    return MetricSpace(Kind::Minkowski, std::move(indicatrix));
}

MetricSpace MetricSpace::hilbert(BodyPtr body) {
    if (!body) fail_spec("InvalidBody", "missing body");
    return MetricSpace(Kind::Hilbert, std::move(body));
}

double distance(const MetricSpace& space, const AffinePoint& a, const AffinePoint& b) {
    AffinePoint v = b - a;
    if (space.kind() == MetricSpace::Kind::Minkowski) {
        AffinePoint centered = v; // gauge measures from the indicatrix center
        return gauge(space.body(), centered);
    }
    if (!space.body().contains(a) || !space.body().contains(b))
        fail_domain("PointOutside", "Hilbert metric needs interior points");
    if (v.norm() == 0.0) return 0.0;
    ChordParams cp = hilbert_chord(space.body(), a, b);
    // Cross-ratio cancellation destroys all digits right at the boundary.
    if (-cp.tc < kNearBoundary || cp.td - cp.tb < kNearBoundary)
        fail_domain("NearBoundary", "point too close to the boundary");
    double cr = (cp.tc / (cp.tc - cp.tb)) * ((cp.td - cp.tb) / cp.td);
    return 0.5 * std::fabs(std::log(cr));
}

AffinePoint geodesic_point(const MetricSpace& space, const AffinePoint& a,
                           const AffinePoint& b, double s) {
    AffinePoint v = b - a;
    if (v.norm() == 0.0) fail_domain("DegenerateConfiguration", "geodesic needs A != B");
    if (space.kind() == MetricSpace::Kind::Minkowski) {
        double g = gauge(space.body(), v);
        return a + (s / g) * v;
    }
    ChordParams cp = hilbert_chord(space.body(), a, b);
    AffinePoint d = v * (1.0 / v.norm());
    double t = chord_point(cp, s);
    return a + t * d;
}

AffinePoint metric_midpoint(const MetricSpace& space, const AffinePoint& a,
                            const AffinePoint& b) {
    AffinePoint v = b - a;
    if (v.norm() == 0.0) fail_domain("DegenerateConfiguration", "midpoint needs A != B");
    if (space.kind() == MetricSpace::Kind::Minkowski)
        return {(a.x + b.x) / 2, (a.y + b.y) / 2};
    ChordParams cp = hilbert_chord(space.body(), a, b);
    AffinePoint d = v * (1.0 / v.norm());
    // Bracketed bisection on the chord parameter; robust for every body variant.
    double lo = 0.0, hi = cp.tb;
    for (int i = 0; i < 120; ++i) {
        double mid = 0.5 * (lo + hi);
        double f = chord_arclength(cp, mid) -
                   (chord_arclength(cp, cp.tb) - chord_arclength(cp, mid));
        if (f < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * cp.tb) break;
    }
    return a + (0.5 * (lo + hi)) * d;
}

} // namespace pmg
