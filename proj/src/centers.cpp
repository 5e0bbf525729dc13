#include "pmg/centers.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_set>

namespace pmg {

namespace {

AffinePoint unit_dir(double angle) { return {std::cos(angle), std::sin(angle)}; }

bool line_misses_body(const ConvexBody& body, const LineCoeffs& l) {
    if (l.is_ideal(1e-9)) return true; // the ideal line misses every bounded body
    BoundingBox box = body.bounding_box();
    AffinePoint c = box.center();
    double ab2 = l.a * l.a + l.b * l.b;
    double off = (l.a * c.x + l.b * c.y + l.c) / ab2;
    AffinePoint p0{c.x - off * l.a, c.y - off * l.b};
    double n = std::sqrt(ab2);
    AffinePoint u{-l.b / n, l.a / n};
    double half = box.diagonal(); // clip to twice the bounding box
    for (int k = 0; k <= 1024; ++k) {
        double t = -half + 2.0 * half * k / 1024;
        if (body.contains(p0 + t * u)) return false;
    }
    return true;
}

} // namespace

std::vector<OStarSample> ostar_locus(const ConvexBody& body, const AffinePoint& o,
                                     int n_directions) {
    if (!body.contains(o)) fail_domain("PointOutside", "locus anchor outside the body");
    std::vector<OStarSample> out;
    out.reserve(static_cast<size_t>(n_directions));
    for (int k = 0; k < n_directions; ++k) {
        AffinePoint d = unit_dir(M_PI * k / n_directions); // chords are unoriented
        Chord ch = chord_through(body, o, d);
        out.push_back({d, harmonic_conjugate(ch.c, ch.d, o)});
    }
    return out;
}

CenterReport is_projective_center(const ConvexBody& body, const AffinePoint& o,
                                  int n_directions, double tol) {
    std::vector<OStarSample> samples = ostar_locus(body, o, n_directions);

    Eigen::MatrixXd m(static_cast<Eigen::Index>(samples.size()), 3);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const HomogeneousPoint& p = samples[static_cast<size_t>(i)].conjugate;
        Eigen::Vector3d v(p.hx, p.hy, p.hw);
        m.row(i) = v.normalized().transpose();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
    Eigen::Vector3d l = svd.matrixV().col(2);
    double residual = (m * l).cwiseAbs().maxCoeff();

    CenterReport report;
    report.point = o;
    report.line = LineCoeffs{l.x(), l.y(), l.z()};
    report.fit_residual = residual;
    report.line_misses_body = line_misses_body(body, *report.line);
    report.is_projective_center = residual <= tol && report.line_misses_body;
    return report;
}

Projectivity center_projectivity(const ConvexBody& body, const AffinePoint& o) {
    CenterReport report = is_projective_center(body, o);
    if (!report.is_projective_center)
        fail_domain("NotAProjectiveCenter", "conjugate locus is not a line missing the body");

    Projectivity to_infinity = line_to_infinity(*report.line);
    AffinePoint q = to_infinity.apply(o);
    Projectivity pi = Projectivity::translation(-q.x, -q.y) * to_infinity;
    Projectivity inv = pi.inverse();

    // The image must have the origin as affine center: chords through it bisected.
    for (int k = 0; k < 16; ++k) {
        AffinePoint d = unit_dir(M_PI * k / 16);
        HomogeneousPoint pre = inv.apply(HomogeneousPoint::ideal(d));
        AffinePoint chord_dir =
            pre.is_ideal(1e-12) ? AffinePoint{pre.hx, pre.hy} : pre.to_affine() - o;
        Chord ch = chord_through(body, o, chord_dir);
        AffinePoint e1 = pi.apply(ch.c);
        AffinePoint e2 = pi.apply(ch.d);
        if ((e1 + e2).norm() > 1e-7 * (e1 - e2).norm())
            fail_domain("NotAProjectiveCenter", "image chords through the origin not bisected");
    }
    return pi;
}

PointReflection construct_point_reflection(const MetricSpace& space, const AffinePoint& o) {
    if (space.kind() == MetricSpace::Kind::Minkowski)
        return {o, affine_point_reflection(o)};
    Projectivity pi = center_projectivity(space.body(), o);
    Projectivity map = pi.inverse() * affine_point_reflection({0, 0}) * pi;
    return {o, map};
}

AffinePoint translate(const Translation& t, const AffinePoint& x) {
    return t.first.apply(t.second.apply(x));
}

AffinePoint conjugate_center(const MetricSpace& space, const PointReflection& o_reflection,
                             const AffinePoint& q) {
    if (space.kind() == MetricSpace::Kind::Hilbert &&
        !is_projective_center(space.body(), q).is_projective_center)
        fail_domain("NotACenter", "conjugated point is not a center");
    AffinePoint image = o_reflection.apply(q);
    if (space.kind() == MetricSpace::Kind::Hilbert &&
        !is_projective_center(space.body(), image).is_projective_center)
        fail_domain("NotACenter", "image of a center is not a center");
    return image;
}

std::vector<double> kronecker_orbit(double p, double q, double x_lo, double x_hi,
                                    int max_iter) {
    if (!(p > 0.0) || !(q > 0.0)) fail_domain("DegenerateConfiguration", "need p, q > 0");
    if (x_hi < x_lo) std::swap(x_lo, x_hi);
    std::vector<double> values;
    for (int j = -max_iter; j <= max_iter; ++j) {
        int budget = max_iter - std::abs(j);
        double lo = x_lo / 2.0 + j * q;
        double hi = x_hi / 2.0 + j * q;
        int i_lo = static_cast<int>(std::ceil(lo / p - 1e-12));
        int i_hi = static_cast<int>(std::floor(hi / p + 1e-12));
        i_lo = std::max(i_lo, -budget);
        i_hi = std::min(i_hi, budget);
        for (int i = i_lo; i <= i_hi; ++i) {
            double v = 2.0 * i * p - 2.0 * j * q;
            if (v >= x_lo - 1e-12 && v <= x_hi + 1e-12) values.push_back(v);
        }
    }
    std::sort(values.begin(), values.end());
    std::vector<double> out;
    for (double v : values)
        if (out.empty() || v - out.back() > 1e-12) out.push_back(v);
    return out;
}

namespace {

struct PointKey {
    int64_t qx;
    int64_t qy;
    bool operator==(const PointKey&) const = default;
};

struct PointKeyHash {
    size_t operator()(const PointKey& k) const {
        return std::hash<int64_t>()(k.qx) * 1000003u ^ std::hash<int64_t>()(k.qy);
    }
};

PointKey quantize(const AffinePoint& p) {
    return {static_cast<int64_t>(std::llround(p.x / 1e-6)),
            static_cast<int64_t>(std::llround(p.y / 1e-6))};
}

} // namespace

std::vector<AffinePoint> pencil_orbit(const MetricSpace& space, const AffinePoint& tip,
                                      const std::vector<std::pair<AffinePoint, AffinePoint>>& pencil,
                                      int generations, size_t point_budget) {
    const bool hilbert = space.kind() == MetricSpace::Kind::Hilbert;
    double extent = 1.0;
    std::vector<AffinePoint> points{tip};
    for (const auto& [p, q] : pencil) {
        if (!collinear(tip, p, q))
            fail_domain("NotCollinear", "pencil triples must share a line through the tip");
        points.push_back(p);
        points.push_back(q);
        extent = std::max({extent, (p - tip).norm(), (q - tip).norm()});
    }
    for (const auto& p : points)
        if (hilbert && !is_projective_center(space.body(), p).is_projective_center)
            fail_domain("NotACenter", "pencil points must be centers");

    double window = 2.5 * extent;
    auto in_window = [&](const AffinePoint& p) {
        if (hilbert) return space.body().contains(p);
        return std::fabs(p.x - tip.x) <= window && std::fabs(p.y - tip.y) <= window;
    };

    std::unordered_set<PointKey, PointKeyHash> seen;
    std::vector<AffinePoint> orbit;
    std::vector<Projectivity> reflections; // per orbit point, same index
    auto push = [&](const AffinePoint& p) {
        if (orbit.size() >= point_budget || !in_window(p)) return;
        if (!seen.insert(quantize(p)).second) return;
        orbit.push_back(p);
    };
    for (const auto& p : points) push(p);

    auto reflection_at = [&](size_t idx) -> const Projectivity& {
        while (reflections.size() <= idx)
            reflections.push_back(
                construct_point_reflection(space, orbit[reflections.size()]).map);
        return reflections[idx];
    };

    size_t old_size = 0;
    for (int g = 0; g < generations && orbit.size() < point_budget; ++g) {
        size_t size = orbit.size();
        for (size_t i = 0; i < size && orbit.size() < point_budget; ++i) {
            size_t j_start = i >= old_size ? 0 : old_size;
            for (size_t j = j_start; j < size && orbit.size() < point_budget; ++j) {
                if (i == j) continue;
                if (hilbert)
                    push(reflection_at(i).apply(orbit[j]));
                else
                    push(2.0 * orbit[i] - orbit[j]);
            }
        }
        old_size = size;
    }
    return orbit;
}

} // namespace pmg
