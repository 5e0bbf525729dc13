#include "pmg/classifier.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <random>

namespace pmg {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::SymmetricMinkowski: return "symmetric-minkowski";
        case VerdictKind::SymmetricHyperbolic: return "symmetric-hyperbolic";
        case VerdictKind::NotSymmetric: return "not-symmetric";
    }
    return "not-symmetric";
}

ConicFit fit_conic(const std::vector<AffinePoint>& points, double tol) {
    if (points.size() < 6) fail_domain("DegenerateInput", "conic fit needs at least 6 points");

    AffinePoint mu{0, 0};
    for (const auto& p : points) mu = mu + p;
    mu = mu * (1.0 / static_cast<double>(points.size()));
    double spread = 0.0;
    for (const auto& p : points) spread += (p - mu).dot(p - mu);
    spread = std::sqrt(spread / static_cast<double>(points.size()));
    if (spread <= 1e-12) fail_domain("DegenerateInput", "conic fit points coincide");

    Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), 6);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        AffinePoint q = points[static_cast<size_t>(i)] - mu;
        double x = q.x / spread, y = q.y / spread;
        m.row(i) << x * x, x * y, y * y, x, y, 1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
    Eigen::VectorXd v = svd.matrixV().col(5);

    ConicFit fit;
    fit.residual = (m * v).cwiseAbs().maxCoeff();
    double disc = 4.0 * v(0) * v(2) - v(1) * v(1);
    fit.is_ellipse = fit.residual <= tol && disc > 0.0;

    // Back to original coordinates, modulo scale.
    double s2 = spread * spread;
    double a = v(0) / s2, b = v(1) / s2, c = v(2) / s2;
    double d = v(3) / spread - (2.0 * v(0) * mu.x + v(1) * mu.y) / s2;
    double e = v(4) / spread - (2.0 * v(2) * mu.y + v(1) * mu.x) / s2;
    double f = v(5) + (v(0) * mu.x * mu.x + v(1) * mu.x * mu.y + v(2) * mu.y * mu.y) / s2 -
               (v(3) * mu.x + v(4) * mu.y) / spread;
    std::array<double, 6> coeffs{a, b, c, d, e, f};
    double scale = 0.0;
    for (double w : coeffs) scale = std::max(scale, std::fabs(w));
    for (double& w : coeffs) w /= scale;
    fit.coeffs = coeffs;
    return fit;
}

std::vector<AffinePoint> interior_grid(const ConvexBody& body, int grid, double margin) {
    if (grid < 2) fail_domain("GridTooSmall", "grid must be at least 2");
    AffinePoint a = body.anchor();
    Chord vertical = chord_through(body, a, {0, 1});
    auto lerp = [&](double lo, double hi, int i) {
        double u = margin + (1.0 - 2.0 * margin) * i / (grid - 1);
        return lo + u * (hi - lo);
    };
    std::vector<AffinePoint> out;
    out.reserve(static_cast<size_t>(grid) * grid);
    for (int i = 0; i < grid; ++i) {
        double y = lerp(vertical.c.y, vertical.d.y, i);
        Chord row = chord_through(body, {a.x, y}, {1, 0});
        for (int j = 0; j < grid; ++j) out.push_back({lerp(row.c.x, row.d.x, j), y});
    }
    return out;
}

namespace {

AffinePoint random_interior(const ConvexBody& body, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> radius(0.0, 0.75);
    AffinePoint c = body.anchor();
    double ang = angle(rng);
    AffinePoint d{std::cos(ang), std::sin(ang)};
    return c + radius(rng) * body.boundary_hit(c, d) * d;
}

double reflection_isometry_error(const MetricSpace& space, const PointReflection& refl,
                                 int n_pairs, uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < n_pairs; ++k) {
        AffinePoint x, y;
        if (space.kind() == MetricSpace::Kind::Hilbert) {
            x = random_interior(space.body(), rng);
            y = random_interior(space.body(), rng);
        } else {
            std::uniform_real_distribution<double> coord(-2.0, 2.0);
            x = {coord(rng), coord(rng)};
            y = {coord(rng), coord(rng)};
        }
        double before = distance(space, x, y);
        double after = distance(space, refl.apply(x), refl.apply(y));
        worst = std::max(worst, std::fabs(before - after));
    }
    return worst;
}

} // namespace

std::vector<CenterReport> scan_centers(const MetricSpace& space, int grid, double tol) {
    std::vector<AffinePoint> points = interior_grid(space.body(), grid);
    std::vector<CenterReport> reports;
    reports.reserve(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        const AffinePoint& p = points[i];
        CenterReport report;
        if (space.kind() == MetricSpace::Kind::Minkowski) {
            // Every point of a Minkowski geometry is a center.
            report.point = p;
            report.line = LineCoeffs::ideal_line();
            report.fit_residual = 0.0;
            report.line_misses_body = true;
            report.is_projective_center = true;
            report.reflection_isometry_error = reflection_isometry_error(
                space, construct_point_reflection(space, p), 20, 17 + i);
        } else {
            report = is_projective_center(space.body(), p, 64, tol);
            if (report.is_projective_center)
                report.reflection_isometry_error = reflection_isometry_error(
                    space, construct_point_reflection(space, p), 20, 17 + i);
        }
        reports.push_back(report);
    }
    return reports;
}

SymmetryVerdict classify(const MetricSpace& space, int grid, double tol) {
    SymmetryVerdict verdict;
    verdict.grid = grid;
    ConicFit conic = fit_conic(boundary_points(space.body(), 32), tol);
    verdict.conic_residual = conic.residual;
    if (space.kind() == MetricSpace::Kind::Minkowski) {
        verdict.kind = VerdictKind::SymmetricMinkowski;
        verdict.center_fraction = 1.0;
        return verdict;
    }
    std::vector<CenterReport> reports = scan_centers(space, grid, tol);
    size_t centers = 0;
    for (const auto& r : reports) centers += r.is_projective_center ? 1 : 0;
    verdict.center_fraction = static_cast<double>(centers) / static_cast<double>(reports.size());
    verdict.kind = (centers == reports.size() && conic.is_ellipse)
                       ? VerdictKind::SymmetricHyperbolic
                       : VerdictKind::NotSymmetric;
    return verdict;
}

} // namespace pmg
