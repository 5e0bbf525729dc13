#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "pmg/errors.hpp"

namespace pmg {

struct AffinePoint {
    double x = 0.0;
    double y = 0.0;

    AffinePoint() = default;
    AffinePoint(double px, double py) : x(px), y(py) {}

    AffinePoint operator+(const AffinePoint& o) const { return {x + o.x, y + o.y}; }
    AffinePoint operator-(const AffinePoint& o) const { return {x - o.x, y - o.y}; }
    AffinePoint operator*(double s) const { return {x * s, y * s}; }

    double norm() const { return std::hypot(x, y); }
    double dot(const AffinePoint& o) const { return x * o.x + y * o.y; }
    double cross(const AffinePoint& o) const { return x * o.y - y * o.x; }
};

inline AffinePoint operator*(double s, const AffinePoint& p) { return p * s; }

// Homogeneous coordinates of the projective plane; ideal points have hw == 0.
// Kept normalized to max-|coordinate| == 1 to avoid scale drift in long chains.
struct HomogeneousPoint {
    double hx = 0.0;
    double hy = 0.0;
    double hw = 1.0;

    HomogeneousPoint() = default;
    HomogeneousPoint(double a, double b, double c) : hx(a), hy(b), hw(c) {}

    static HomogeneousPoint from_affine(const AffinePoint& p) { return {p.x, p.y, 1.0}; }
    static HomogeneousPoint ideal(const AffinePoint& direction) {
        return HomogeneousPoint(direction.x, direction.y, 0.0).normalized();
    }

    double max_abs() const {
        return std::max({std::fabs(hx), std::fabs(hy), std::fabs(hw)});
    }

    HomogeneousPoint normalized() const {
        double m = max_abs();
        if (m == 0.0) fail_domain("DegenerateConfiguration", "zero homogeneous triple");
        return {hx / m, hy / m, hw / m};
    }

    bool is_ideal(double tol = 1e-12) const {
        return std::fabs(hw) <= tol * max_abs();
    }

    AffinePoint to_affine() const {
        if (is_ideal()) fail_domain("DegenerateConfiguration", "ideal point has no affine chart");
        return {hx / hw, hy / hw};
    }
};

// Line {(x,y) : a x + b y + c = 0}; coefficients defined modulo scale.
struct LineCoeffs {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;

    LineCoeffs() = default;
    LineCoeffs(double pa, double pb, double pc) : a(pa), b(pb), c(pc) {}

    static LineCoeffs ideal_line() { return {0.0, 0.0, 1.0}; }

    double eval(const HomogeneousPoint& p) const { return a * p.hx + b * p.hy + c * p.hw; }
    double eval(const AffinePoint& p) const { return a * p.x + b * p.y + c; }

    bool is_ideal(double tol = 1e-12) const {
        return std::hypot(a, b) <= tol * std::max(std::fabs(c), 1.0);
    }
};

// 3x3 invertible matrix modulo scale acting on homogeneous coordinates.
class Projectivity {
public:
    explicit Projectivity(const Eigen::Matrix3d& m, double singular_tol = 1e-12);

    static Projectivity identity() { return Projectivity(Eigen::Matrix3d::Identity()); }
    static Projectivity translation(double dx, double dy);

    const Eigen::Matrix3d& matrix() const { return m_; }

    HomogeneousPoint apply(const HomogeneousPoint& p) const;
    AffinePoint apply(const AffinePoint& p) const;

    // Image of a line: coefficients transform by the inverse transpose.
    LineCoeffs apply(const LineCoeffs& l) const;

    Projectivity inverse() const;
    Projectivity operator*(const Projectivity& rhs) const { return Projectivity(m_ * rhs.m_); }

private:
    Eigen::Matrix3d m_;
};

// Collinearity test, tolerance relative to the scale of the triple.
bool collinear(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c,
               double tol = 1e-9);

// Signed r with r * (C - B) = (C - A), evaluated on the dominant axis of C - B.
double affine_ratio(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c);

double cross_ratio(const AffinePoint& a, const AffinePoint& b,
                   const AffinePoint& c, const AffinePoint& d);
double cross_ratio(const HomogeneousPoint& a, const HomogeneousPoint& b,
                   const HomogeneousPoint& c, const HomogeneousPoint& d);

// The point P with (A,B;O,P) = -1; ideal when O is the affine midpoint of A,B.
HomogeneousPoint harmonic_conjugate(const AffinePoint& a, const AffinePoint& b,
                                    const AffinePoint& o);

// X -> 2O - X as a projectivity.
Projectivity affine_point_reflection(const AffinePoint& o);

// Unique projectivity with src_i -> dst_i (modulo scale), quadruples in general position.
Projectivity projectivity_from_correspondence(const std::array<HomogeneousPoint, 4>& src,
                                              const std::array<HomogeneousPoint, 4>& dst);

// A projectivity whose third matrix row is (a, b, c); maps l onto the ideal line.
Projectivity line_to_infinity(const LineCoeffs& l);

} // namespace pmg
