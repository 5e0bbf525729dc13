#include "pmg/projective.hpp"

#include <algorithm>
#include <limits>

namespace pmg {

namespace {

double triple_scale(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c) {
    return std::max({1.0, a.norm(), b.norm(), c.norm()});
}

} // namespace

Projectivity::Projectivity(const Eigen::Matrix3d& m, double singular_tol) : m_(m) {
    double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0 || std::fabs(m.determinant()) <= singular_tol * scale * scale * scale)
        fail_domain("SingularSystem", "projectivity matrix is singular");
    m_ /= scale;
}

Projectivity Projectivity::translation(double dx, double dy) {
    Eigen::Matrix3d t = Eigen::Matrix3d::Identity();
    t(0, 2) = dx;
    t(1, 2) = dy;
    return Projectivity(t);
}

HomogeneousPoint Projectivity::apply(const HomogeneousPoint& p) const {
    Eigen::Vector3d v = m_ * Eigen::Vector3d(p.hx, p.hy, p.hw);
    return HomogeneousPoint(v.x(), v.y(), v.z()).normalized();
}

AffinePoint Projectivity::apply(const AffinePoint& p) const {
    return apply(HomogeneousPoint::from_affine(p)).to_affine();
}

LineCoeffs Projectivity::apply(const LineCoeffs& l) const {
    Eigen::Vector3d v = m_.inverse().transpose() * Eigen::Vector3d(l.a, l.b, l.c);
    double m = v.cwiseAbs().maxCoeff();
    return {v.x() / m, v.y() / m, v.z() / m};
}

Projectivity Projectivity::inverse() const {
    return Projectivity(m_.inverse());
}

bool collinear(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c, double tol) {
    double cr = (b - a).cross(c - a);
    double s = triple_scale(a, b, c);
    return std::fabs(cr) <= tol * s * s;
}

double affine_ratio(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c) {
    if (!collinear(a, b, c)) fail_domain("NotCollinear", "affine_ratio needs collinear points");
    AffinePoint cb = c - b;
    if (cb.norm() <= 1e-14 * triple_scale(a, b, c))
        fail_domain("DegenerateRatio", "affine_ratio with C = B");
    AffinePoint ca = c - a;
    if (std::fabs(cb.x) >= std::fabs(cb.y)) return ca.x / cb.x;
    return ca.y / cb.y;
}

double cross_ratio(const AffinePoint& a, const AffinePoint& b,
                   const AffinePoint& c, const AffinePoint& d) {
    return affine_ratio(a, b, c) / affine_ratio(a, b, d);
}

namespace {

// Parameter of each point along the common line; ideal points get +-infinity.
struct LineParam {
    double t = 0.0;
    bool ideal = false;
};

LineParam line_param(const HomogeneousPoint& p, const AffinePoint& origin,
                     const AffinePoint& dir) {
    if (p.is_ideal(1e-12)) return {0.0, true};
    AffinePoint q = p.to_affine();
    return {(q - origin).dot(dir) / dir.dot(dir), false};
}

} // namespace

double cross_ratio(const HomogeneousPoint& a, const HomogeneousPoint& b,
                   const HomogeneousPoint& c, const HomogeneousPoint& d) {
    const std::array<HomogeneousPoint, 4> pts = {a.normalized(), b.normalized(),
                                                 c.normalized(), d.normalized()};
    int n_ideal = 0;
    for (const auto& p : pts) n_ideal += p.is_ideal(1e-12) ? 1 : 0;
    if (n_ideal > 1) fail_domain("DegenerateConfiguration", "more than one ideal point");

    // Common line from the best-separated pair, then incidence check for the rest.
    LineCoeffs best{0, 0, 0};
    double best_norm = -1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Eigen::Vector3d u(pts[i].hx, pts[i].hy, pts[i].hw);
            Eigen::Vector3d v(pts[j].hx, pts[j].hy, pts[j].hw);
            Eigen::Vector3d l = u.cross(v);
            if (l.norm() > best_norm) {
                best_norm = l.norm();
                best = {l.x(), l.y(), l.z()};
            }
        }
    if (best_norm <= 1e-12) fail_domain("DegenerateConfiguration", "points coincide");
    for (const auto& p : pts)
        if (std::fabs(best.eval(p)) > 1e-9 * best_norm)
            fail_domain("NotCollinear", "cross_ratio needs four collinear points");

    // Affine anchor and direction of the line.
    AffinePoint origin, dir;
    bool have_origin = false;
    for (const auto& p : pts)
        if (!p.is_ideal(1e-12)) {
            origin = p.to_affine();
            have_origin = true;
            break;
        }
    if (!have_origin) fail_domain("DegenerateConfiguration", "all points ideal");
    dir = {-best.b, best.a};
    if (dir.norm() <= 1e-14) dir = {1.0, 0.0};

    LineParam ta = line_param(pts[0], origin, dir);
    LineParam tb = line_param(pts[1], origin, dir);
    LineParam tc = line_param(pts[2], origin, dir);
    LineParam td = line_param(pts[3], origin, dir);

    // (A,B;C,D) = [(tC-tA)/(tC-tB)] * [(tD-tB)/(tD-tA)]; an ideal entry turns the
    // pair of factors it appears in into their common limit 1.
    auto quotient = [](double num, double den) {
        if (std::fabs(den) <= 1e-300)
            fail_domain("DegenerateConfiguration", "coincident points in cross ratio");
        return num / den;
    };
    if (ta.ideal) return quotient(td.t - tb.t, tc.t - tb.t);
    if (tb.ideal) return quotient(tc.t - ta.t, td.t - ta.t);
    if (tc.ideal) return quotient(td.t - tb.t, td.t - ta.t);
    if (td.ideal) return quotient(tc.t - ta.t, tc.t - tb.t);
    return quotient(tc.t - ta.t, tc.t - tb.t) * quotient(td.t - tb.t, td.t - ta.t);
}

HomogeneousPoint harmonic_conjugate(const AffinePoint& a, const AffinePoint& b,
                                    const AffinePoint& o) {
    if (!collinear(a, b, o)) fail_domain("NotCollinear", "harmonic_conjugate needs collinear points");
    AffinePoint ab = b - a;
    double len2 = ab.dot(ab);
    if (len2 <= 1e-28) fail_domain("DegenerateConfiguration", "A = B");
    double t = (o - a).dot(ab) / len2; // O = A + t (B - A)
    if (std::fabs(t) <= 1e-12 || std::fabs(t - 1.0) <= 1e-12)
        fail_domain("DegenerateConfiguration", "O coincides with A or B");
    double den = 2.0 * t - 1.0;
    if (std::fabs(den) <= 1e-9) return HomogeneousPoint::ideal(ab);
    double s = t / den;
    return HomogeneousPoint::from_affine(a + s * ab).normalized();
}

Projectivity affine_point_reflection(const AffinePoint& o) {
    Eigen::Matrix3d m;
    m << -1, 0, 2 * o.x,
          0, -1, 2 * o.y,
          0, 0, 1;
    return Projectivity(m);
}

namespace {

Eigen::Matrix3d frame_matrix(const std::array<HomogeneousPoint, 4>& pts) {
    Eigen::Matrix3d base;
    base << pts[0].hx, pts[1].hx, pts[2].hx,
            pts[0].hy, pts[1].hy, pts[2].hy,
            pts[0].hw, pts[1].hw, pts[2].hw;
    double scale = base.cwiseAbs().maxCoeff();
    if (scale == 0.0 || std::fabs(base.determinant()) <= 1e-12 * scale * scale * scale)
        fail_domain("DegeneratePosition", "three of the four points are collinear");
    Eigen::Vector3d target(pts[3].hx, pts[3].hy, pts[3].hw);
    Eigen::Vector3d coeffs = base.fullPivLu().solve(target);
    for (int i = 0; i < 3; ++i)
        if (std::fabs(coeffs(i)) <= 1e-12)
            fail_domain("DegeneratePosition", "fourth point lies on a frame line");
    return base * coeffs.asDiagonal();
}

} // namespace

Projectivity projectivity_from_correspondence(const std::array<HomogeneousPoint, 4>& src,
                                              const std::array<HomogeneousPoint, 4>& dst) {
    Eigen::Matrix3d ms = frame_matrix(src);
    Eigen::Matrix3d md = frame_matrix(dst);
    return Projectivity(md * ms.inverse());
}

Projectivity line_to_infinity(const LineCoeffs& l) {
    Eigen::Vector3d n(l.a, l.b, l.c);
    double nn = n.norm();
    if (std::hypot(l.a, l.b) <= 1e-12 * std::max(1.0, std::fabs(l.c)) &&
        std::fabs(l.c) <= 1e-12)
        fail_domain("InvalidLine", "zero line coefficients");
    if (nn == 0.0) fail_domain("InvalidLine", "zero line coefficients");
    n /= nn;
    // Complete n to a basis; choosing the least-aligned axis keeps the matrix well conditioned
    // and yields the identity for the ideal line.
    int axis = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        if (std::fabs(n(i)) < best) {
            best = std::fabs(n(i));
            axis = i;
        }
    }
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e(axis) = 1.0;
    Eigen::Vector3d v = n.cross(e).normalized();
    Eigen::Vector3d u = v.cross(n);
    Eigen::Matrix3d m;
    m.row(0) = u.transpose();
    m.row(1) = v.transpose();
    m.row(2) = n.transpose();
    // Keep orientation close to the identity when possible.
    if (m.determinant() < 0) m.row(1) *= -1.0;
    return Projectivity(m);
}

} // namespace pmg
