#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "pmg/projective.hpp"

namespace pmg {

struct Chord {
    AffinePoint c;         // t_C < 0 side
    AffinePoint d;         // t_D > 0 side
    AffinePoint direction; // unit vector
    double t_c = 0.0;
    double t_d = 0.0;

    double length() const { return t_d - t_c; }
};

struct BoundingBox {
    AffinePoint lo;
    AffinePoint hi;

    AffinePoint center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2}; }
    double diagonal() const { return (hi - lo).norm(); }
};

// Bounded strictly convex open domain (polygons admitted, tagged non-strict).
class ConvexBody {
public:
    virtual ~ConvexBody() = default;

    virtual bool contains(const AffinePoint& p) const = 0;

    // Declared center for symmetric variants, interior anchor otherwise.
    virtual AffinePoint anchor() const = 0;

    virtual bool strictly_convex() const { return true; }

    // Distance t > 0 to the boundary along the ray p + t * dir, dir unit, p inside.
    // Default is bisection on containment; variants with closed forms override.
    virtual double boundary_hit(const AffinePoint& p, const AffinePoint& dir) const;

    virtual BoundingBox bounding_box() const;

protected:
    // Upper bound for any boundary-hit parameter from an interior point.
    virtual double hit_upper_bound(const AffinePoint& p) const;
};

using BodyPtr = std::shared_ptr<const ConvexBody>;

// {x : (x - center)^T shape (x - center) < 1}, shape symmetric positive definite.
class Ellipse final : public ConvexBody {
public:
    Ellipse(const AffinePoint& center, const Eigen::Matrix2d& shape);

    static std::shared_ptr<Ellipse> unit_disk() {
        return std::make_shared<Ellipse>(AffinePoint{0, 0}, Eigen::Matrix2d::Identity());
    }

    bool contains(const AffinePoint& p) const override;
    AffinePoint anchor() const override { return center_; }
    double boundary_hit(const AffinePoint& p, const AffinePoint& dir) const override;
    BoundingBox bounding_box() const override;

    const Eigen::Matrix2d& shape() const { return shape_; }
    double quadratic(const AffinePoint& v) const; // v^T shape v with v from center

private:
    AffinePoint center_;
    Eigen::Matrix2d shape_;
};

// {center + scale u : ||u||_p < 1}, p > 1.
class PNormBall final : public ConvexBody {
public:
    PNormBall(double p, const Eigen::Matrix2d& scale, const AffinePoint& center);

    bool contains(const AffinePoint& pt) const override;
    AffinePoint anchor() const override { return center_; }

    double p() const { return p_; }
    double pnorm(const AffinePoint& v) const; // ||scale^-1 v||_p with v from center

protected:
    double hit_upper_bound(const AffinePoint& pt) const override;

private:
    double p_;
    Eigen::Matrix2d scale_;
    Eigen::Matrix2d inv_scale_;
    AffinePoint center_;
};

// Strictly convex counterclockwise vertex list.
class Polygon final : public ConvexBody {
public:
    explicit Polygon(std::vector<AffinePoint> vertices);

    bool contains(const AffinePoint& p) const override;
    AffinePoint anchor() const override;
    bool strictly_convex() const override { return false; }
    double boundary_hit(const AffinePoint& p, const AffinePoint& dir) const override;
    BoundingBox bounding_box() const override;

    const std::vector<AffinePoint>& vertices() const { return vertices_; }

private:
    std::vector<AffinePoint> vertices_;
};

// Image of a base body under a projectivity; construction validates boundedness.
class ProjectiveImage final : public ConvexBody {
public:
    ProjectiveImage(BodyPtr base, const Projectivity& map);

    bool contains(const AffinePoint& p) const override;
    AffinePoint anchor() const override { return anchor_; }
    BoundingBox bounding_box() const override { return box_; }

    const Projectivity& map() const { return map_; }
    const BodyPtr& base() const { return base_; }

private:
    BodyPtr base_;
    Projectivity map_;
    Projectivity inverse_;
    AffinePoint anchor_;
    BoundingBox box_;
};

bool contains(const ConvexBody& body, const AffinePoint& p);

// Minkowski functional of the centered body: gauge(v) = 1 on the boundary.
// Requires central symmetry about the declared center.
double gauge(const ConvexBody& body, const AffinePoint& v);

// Boundary points of the full line through p in the given direction.
Chord chord_through(const ConvexBody& body, const AffinePoint& p, const AffinePoint& direction);

// count points on the boundary at uniform angular spacing around the anchor.
std::vector<AffinePoint> boundary_points(const ConvexBody& body, int count);

bool is_centrally_symmetric(const ConvexBody& body, double tol = 1e-8);

} // namespace pmg
