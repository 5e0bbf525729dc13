#pragma once

#include "pmg/convex_body.hpp"

namespace pmg {

// The two model straight projective metrics: Minkowski on the plane (parabolic
// type) and Hilbert on a bounded convex body (hyperbolic type).
class MetricSpace {
public:
    enum class Kind { Minkowski, Hilbert };

    static MetricSpace minkowski(BodyPtr indicatrix);
    static MetricSpace hilbert(BodyPtr body);

    Kind kind() const { return kind_; }
    const ConvexBody& body() const { return *body_; }
    const BodyPtr& body_ptr() const { return body_; }

    bool admissible(const AffinePoint& p) const {
        return kind_ == Kind::Minkowski || body_->contains(p);
    }

private:
    MetricSpace(Kind kind, BodyPtr body) : kind_(kind), body_(std::move(body)) {}

    Kind kind_;
    BodyPtr body_;
};

// Minkowski: gauge(B - A).  Hilbert: (1/2)|ln(A,B;C,D)| with C,D the chord
// endpoints through A and B, t_C < 0 < t_D along the A -> B direction.
double distance(const MetricSpace& space, const AffinePoint& a, const AffinePoint& b);

// Point at signed arclength s from A along the geodesic through A and B
// (s > 0 on B's side).  Complete for every finite s in both models.
AffinePoint geodesic_point(const MetricSpace& space, const AffinePoint& a,
                           const AffinePoint& b, double s);

AffinePoint metric_midpoint(const MetricSpace& space, const AffinePoint& a,
                            const AffinePoint& b);

} // namespace pmg
