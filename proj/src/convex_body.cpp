#include "pmg/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pmg {

namespace {

constexpr int kBisectIters = 100;

AffinePoint unit(const AffinePoint& v) {
    double n = v.norm();
    if (n <= 1e-300) fail_domain("DegenerateConfiguration", "zero direction");
    return {v.x / n, v.y / n};
}

} // namespace

double ConvexBody::hit_upper_bound(const AffinePoint& p) const {
    BoundingBox box = bounding_box();
    return (p - box.center()).norm() + box.diagonal() + 1.0;
}

double ConvexBody::boundary_hit(const AffinePoint& p, const AffinePoint& dir) const {
    if (!contains(p)) fail_domain("PointOutside", "ray origin outside the body");
    AffinePoint d = unit(dir);
    double hi = hit_upper_bound(p);
    int guard = 0;
    while (contains(p + hi * d)) {
        hi *= 2.0;
        if (++guard > 60) fail_domain("PointOutside", "body appears unbounded");
    }
    double lo = 0.0;
    for (int i = 0; i < kBisectIters; ++i) {
        double mid = 0.5 * (lo + hi);
        if (contains(p + mid * d))
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * std::max(1.0, hi)) break;
    }
    return hi; // outside end of the bracket, so reported endpoints are never interior
}

BoundingBox ConvexBody::bounding_box() const {
    AffinePoint a = anchor();
    BoundingBox box{a, a};
    for (int k = 0; k < 64; ++k) {
        double ang = 2.0 * M_PI * k / 64;
        AffinePoint d{std::cos(ang), std::sin(ang)};
        double t = boundary_hit(a, d);
        AffinePoint q = a + t * d;
        box.lo.x = std::min(box.lo.x, q.x);
        box.lo.y = std::min(box.lo.y, q.y);
        box.hi.x = std::max(box.hi.x, q.x);
        box.hi.y = std::max(box.hi.y, q.y);
    }
    return box;
}

// ---------------------------------------------------------------------------
// Ellipse

Ellipse::Ellipse(const AffinePoint& center, const Eigen::Matrix2d& shape)
    : center_(center), shape_(shape) {
    double scale = shape.cwiseAbs().maxCoeff();
    if (scale <= 0.0 || std::fabs(shape(0, 1) - shape(1, 0)) > 1e-9 * scale)
        fail_spec("InvalidBody", "ellipse shape matrix must be symmetric");
    if (shape.determinant() <= 0.0 || shape.trace() <= 0.0)
        fail_spec("InvalidBody", "ellipse shape matrix must be positive definite");
    shape_(0, 1) = shape_(1, 0) = 0.5 * (shape(0, 1) + shape(1, 0));
}

double Ellipse::quadratic(const AffinePoint& v) const {
    Eigen::Vector2d w(v.x, v.y);
    return w.dot(shape_ * w);
}

bool Ellipse::contains(const AffinePoint& p) const {
    return quadratic(p - center_) < 1.0;
}

double Ellipse::boundary_hit(const AffinePoint& p, const AffinePoint& dir) const {
    if (!contains(p)) fail_domain("PointOutside", "ray origin outside the body");
    AffinePoint d = unit(dir);
    Eigen::Vector2d w(p.x - center_.x, p.y - center_.y);
    Eigen::Vector2d e(d.x, d.y);
    double a = e.dot(shape_ * e);
    double b = w.dot(shape_ * e);
    double c = w.dot(shape_ * w) - 1.0;
    double disc = b * b - a * c;
    return (-b + std::sqrt(std::max(disc, 0.0))) / a;
}

BoundingBox Ellipse::bounding_box() const {
    Eigen::Matrix2d inv = shape_.inverse();
    double ex = std::sqrt(std::max(inv(0, 0), 0.0));
    double ey = std::sqrt(std::max(inv(1, 1), 0.0));
    return {{center_.x - ex, center_.y - ey}, {center_.x + ex, center_.y + ey}};
}

// ---------------------------------------------------------------------------
// PNormBall

PNormBall::PNormBall(double p, const Eigen::Matrix2d& scale, const AffinePoint& center)
    : p_(p), scale_(scale), center_(center) {
    if (!(p > 1.0)) fail_spec("InvalidBody", "p-norm ball needs p > 1");
    double s = scale.cwiseAbs().maxCoeff();
    if (s <= 0.0 || std::fabs(scale.determinant()) <= 1e-12 * s * s)
        fail_spec("InvalidBody", "p-norm scale matrix must be invertible");
    inv_scale_ = scale.inverse();
}

double PNormBall::pnorm(const AffinePoint& v) const {
    Eigen::Vector2d u = inv_scale_ * Eigen::Vector2d(v.x, v.y);
    return std::pow(std::pow(std::fabs(u.x()), p_) + std::pow(std::fabs(u.y()), p_), 1.0 / p_);
}

bool PNormBall::contains(const AffinePoint& pt) const {
    return pnorm(pt - center_) < 1.0;
}

double PNormBall::hit_upper_bound(const AffinePoint& pt) const {
    // ||u||_2 <= sqrt(2) ||u||_p in the plane for every p > 1.
    double radius = M_SQRT2 * scale_.operatorNorm();
    return radius + (pt - center_).norm() + 1.0;
}

// ---------------------------------------------------------------------------
// Polygon

Polygon::Polygon(std::vector<AffinePoint> vertices) : vertices_(std::move(vertices)) {
    size_t n = vertices_.size();
    if (n < 3) fail_spec("InvalidBody", "polygon needs at least 3 vertices");
    double scale = 1.0;
    for (const auto& v : vertices_) scale = std::max(scale, v.norm());
    for (size_t i = 0; i < n; ++i) {
        AffinePoint e0 = vertices_[(i + 1) % n] - vertices_[i];
        AffinePoint e1 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
        if (e0.cross(e1) <= 1e-12 * scale * scale)
            fail_spec("InvalidBody", "polygon vertices must be strictly convex counterclockwise");
    }
}

bool Polygon::contains(const AffinePoint& p) const {
    size_t n = vertices_.size();
    for (size_t i = 0; i < n; ++i) {
        AffinePoint e = vertices_[(i + 1) % n] - vertices_[i];
        if (e.cross(p - vertices_[i]) <= 0.0) return false;
    }
    return true;
}

AffinePoint Polygon::anchor() const {
    AffinePoint c{0, 0};
    for (const auto& v : vertices_) c = c + v;
    return c * (1.0 / static_cast<double>(vertices_.size()));
}

double Polygon::boundary_hit(const AffinePoint& p, const AffinePoint& dir) const {
    if (!contains(p)) fail_domain("PointOutside", "ray origin outside the body");
    AffinePoint d = unit(dir);
    size_t n = vertices_.size();
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
        AffinePoint a = vertices_[i];
        AffinePoint e = vertices_[(i + 1) % n] - a;
        double denom = d.cross(e);
        if (std::fabs(denom) <= 1e-300) continue;
        AffinePoint w = a - p;
        double t = w.cross(e) / denom;
        double s = w.cross(d) / denom;
        if (t > 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12) best = std::min(best, t);
    }
    if (!std::isfinite(best)) fail_domain("PointOutside", "ray does not leave the polygon");
    return best;
}

BoundingBox Polygon::bounding_box() const {
    BoundingBox box{vertices_[0], vertices_[0]};
    for (const auto& v : vertices_) {
        box.lo.x = std::min(box.lo.x, v.x);
        box.lo.y = std::min(box.lo.y, v.y);
        box.hi.x = std::max(box.hi.x, v.x);
        box.hi.y = std::max(box.hi.y, v.y);
    }
    return box;
}

// ---------------------------------------------------------------------------
// ProjectiveImage

ProjectiveImage::ProjectiveImage(BodyPtr base, const Projectivity& map)
    : base_(std::move(base)), map_(map), inverse_(map.inverse()) {
    if (!base_) fail_spec("InvalidBody", "projective image needs a base body");

    // Boundedness check: the image of the base closure must avoid the ideal line.
    std::vector<AffinePoint> samples = boundary_points(*base_, 256);
    double sign = 0.0;
    BoundingBox box{};
    bool first = true;
    for (const auto& s : samples) {
        Eigen::Vector3d v = map_.matrix() * Eigen::Vector3d(s.x, s.y, 1.0);
        if (std::fabs(v.z()) <= 1e-7 * v.norm())
            fail_spec("InvalidBody", "projective image touches the ideal line");
        if (sign == 0.0) sign = v.z() > 0 ? 1.0 : -1.0;
        if (v.z() * sign <= 0.0)
            fail_spec("InvalidBody", "projective image crosses the ideal line");
        AffinePoint q{v.x() / v.z(), v.y() / v.z()};
        if (first) {
            box = {q, q};
            first = false;
        } else {
            box.lo.x = std::min(box.lo.x, q.x);
            box.lo.y = std::min(box.lo.y, q.y);
            box.hi.x = std::max(box.hi.x, q.x);
            box.hi.y = std::max(box.hi.y, q.y);
        }
    }
    // Inflate slightly: the box comes from finitely many boundary samples.
    AffinePoint c = box.center();
    box.lo = c + 1.05 * (box.lo - c);
    box.hi = c + 1.05 * (box.hi - c);
    box_ = box;
    anchor_ = map_.apply(base_->anchor());
}

bool ProjectiveImage::contains(const AffinePoint& p) const {
    Eigen::Vector3d v = inverse_.matrix() * Eigen::Vector3d(p.x, p.y, 1.0);
    if (std::fabs(v.z()) <= 1e-12 * v.norm()) return false;
    return base_->contains({v.x() / v.z(), v.y() / v.z()});
}

// ---------------------------------------------------------------------------
// Free functions

bool contains(const ConvexBody& body, const AffinePoint& p) {
    return body.contains(p);
}

double gauge(const ConvexBody& body, const AffinePoint& v) {
    if (v.norm() <= 0.0) return 0.0;
    if (const auto* e = dynamic_cast<const Ellipse*>(&body))
        return std::sqrt(e->quadratic(v));
    if (const auto* b = dynamic_cast<const PNormBall*>(&body))
        return b->pnorm(v);
    // Generic symmetric body: ray cast from the center, with a local symmetry check.
    AffinePoint c = body.anchor();
    AffinePoint d = unit(v);
    double fwd = body.boundary_hit(c, d);
    double bwd = body.boundary_hit(c, {-d.x, -d.y});
    if (std::fabs(fwd - bwd) > 1e-8 * std::max(fwd, bwd))
        fail_domain("NotSymmetric", "gauge needs a centrally symmetric body");
    return v.norm() / fwd;
}

Chord chord_through(const ConvexBody& body, const AffinePoint& p, const AffinePoint& direction) {
    if (!body.contains(p)) fail_domain("PointOutside", "chord anchor outside the body");
    AffinePoint d = unit(direction);
    double td = body.boundary_hit(p, d);
    double tc = -body.boundary_hit(p, {-d.x, -d.y});
    return Chord{p + tc * d, p + td * d, d, tc, td};
}

std::vector<AffinePoint> boundary_points(const ConvexBody& body, int count) {
    if (count < 1) fail_domain("DegenerateConfiguration", "boundary_points needs count >= 1");
    AffinePoint a = body.anchor();
    std::vector<AffinePoint> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        double ang = 2.0 * M_PI * k / count;
        AffinePoint d{std::cos(ang), std::sin(ang)};
        out.push_back(a + body.boundary_hit(a, d) * d);
    }
    return out;
}

bool is_centrally_symmetric(const ConvexBody& body, double tol) {
    AffinePoint c = body.anchor();
    for (int k = 0; k < 64; ++k) {
        double ang = 2.0 * M_PI * k / 64;
        AffinePoint d{std::cos(ang), std::sin(ang)};
        double fwd = body.boundary_hit(c, d);
        double bwd = body.boundary_hit(c, {-d.x, -d.y});
        if (std::fabs(fwd - bwd) > tol * std::max({fwd, bwd, 1.0})) return false;
    }
    return true;
}

} // namespace pmg
