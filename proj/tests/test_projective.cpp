#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pmg/projective.hpp"

using namespace pmg;

namespace {

Projectivity random_projectivity(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) += 0.4 * u(rng);
        if (std::fabs(m.determinant()) > 0.1) return Projectivity(m);
    }
}

} // namespace

TEST_CASE("affine ratio on the axis") {
    CHECK(affine_ratio({0, 0}, {2, 0}, {1, 0}) == doctest::Approx(-1.0));
    CHECK(affine_ratio({0, 0}, {3, 0}, {1, 0}) == doctest::Approx(-0.5));
    CHECK(affine_ratio({0, 0}, {0, 0}, {1, 1}) == doctest::Approx(1.0));
}

TEST_CASE("affine ratio errors") {
    CHECK_THROWS_AS(affine_ratio({0, 0}, {1, 0}, {0, 1}), Error);
    CHECK_THROWS_AS(affine_ratio({0, 0}, {1, 0}, {1, 0}), Error);
}

TEST_CASE("cross ratio basics") {
    CHECK(cross_ratio(AffinePoint{0, 0}, {3, 0}, {1, 0}, {-3, 0}) == doctest::Approx(-1.0));
    double cr = cross_ratio(AffinePoint{0, 0}, {3, 0}, {1, 0}, {2, 0});
    double swapped = cross_ratio(AffinePoint{0, 0}, {3, 0}, {2, 0}, {1, 0});
    CHECK(swapped == doctest::Approx(1.0 / cr));
}

TEST_CASE("cross ratio with an ideal last point reduces to the affine ratio") {
    HomogeneousPoint a{0, 0, 1}, b{3, 0, 1}, c{1, 0, 1};
    HomogeneousPoint d = HomogeneousPoint::ideal({1, 0});
    CHECK(cross_ratio(a, b, c, d) == doctest::Approx(affine_ratio({0, 0}, {3, 0}, {1, 0})));
}

TEST_CASE("cross ratio is a projective invariant") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        AffinePoint p0{u(rng), u(rng)};
        AffinePoint dir{u(rng), u(rng)};
        if (dir.norm() < 0.1) continue;
        double t[4] = {u(rng), u(rng), u(rng), u(rng)};
        bool distinct = true;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (std::fabs(t[i] - t[j]) < 0.05) distinct = false;
        if (!distinct) continue;
        std::array<HomogeneousPoint, 4> pts;
        for (int i = 0; i < 4; ++i)
            pts[i] = HomogeneousPoint::from_affine(p0 + t[i] * dir);
        double before = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
        Projectivity w = random_projectivity(rng);
        double after = cross_ratio(w.apply(pts[0]), w.apply(pts[1]),
                                   w.apply(pts[2]), w.apply(pts[3]));
        CHECK(after == doctest::Approx(before).epsilon(1e-9));
    }
}

TEST_CASE("harmonic conjugate") {
    HomogeneousPoint p = harmonic_conjugate({0, 0}, {3, 0}, {1, 0});
    CHECK_FALSE(p.is_ideal());
    AffinePoint q = p.to_affine();
    CHECK(q.x == doctest::Approx(-3.0));
    CHECK(q.y == doctest::Approx(0.0));

    HomogeneousPoint ideal = harmonic_conjugate({-1, 0}, {1, 0}, {0, 0});
    CHECK(ideal.is_ideal());
    CHECK(std::fabs(ideal.hy) < 1e-12);
}

TEST_CASE("harmonic conjugate is an involution") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        AffinePoint a{u(rng), u(rng)};
        AffinePoint dir{u(rng), u(rng)};
        if (dir.norm() < 0.1) continue;
        AffinePoint b = a + dir;
        double t = u(rng);
        if (std::fabs(t) < 0.05 || std::fabs(t - 1.0) < 0.05 || std::fabs(t - 0.5) < 0.05)
            continue;
        AffinePoint o = a + t * dir;
        HomogeneousPoint p = harmonic_conjugate(a, b, o);
        if (p.is_ideal()) continue;
        HomogeneousPoint back = harmonic_conjugate(a, b, p.to_affine());
        AffinePoint r = back.to_affine();
        CHECK(r.x == doctest::Approx(o.x).epsilon(1e-9));
        CHECK(r.y == doctest::Approx(o.y).epsilon(1e-9));
    }
}

TEST_CASE("affine point reflection") {
    Projectivity r0 = affine_point_reflection({0, 0});
    AffinePoint img = r0.apply(AffinePoint{3, 4});
    CHECK(img.x == doctest::Approx(-3.0));
    CHECK(img.y == doctest::Approx(-4.0));

    Projectivity r1 = affine_point_reflection({1, 2});
    AffinePoint fixed = r1.apply(AffinePoint{1, 2});
    CHECK(fixed.x == doctest::Approx(1.0));
    CHECK(fixed.y == doctest::Approx(2.0));

    Projectivity r2 = affine_point_reflection({1, 0});
    AffinePoint x{0, 0};
    AffinePoint rx = r2.apply(x);
    CHECK(rx.x == doctest::Approx(2.0));
    CHECK(affine_ratio(x, rx, {1, 0}) == doctest::Approx(-1.0));
}

TEST_CASE("affine point reflection is involutive") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    Projectivity r = affine_point_reflection({0.7, -1.3});
    for (int i = 0; i < 100; ++i) {
        AffinePoint p{u(rng), u(rng)};
        AffinePoint q = r.apply(r.apply(p));
        CHECK(std::fabs(q.x - p.x) < 1e-12);
        CHECK(std::fabs(q.y - p.y) < 1e-12);
    }
}

TEST_CASE("projectivity from correspondence") {
    std::array<HomogeneousPoint, 4> frame = {HomogeneousPoint{1, 0, 0},
                                             HomogeneousPoint{0, 1, 0},
                                             HomogeneousPoint{0, 0, 1},
                                             HomogeneousPoint{1, 1, 1}};
    Projectivity id = projectivity_from_correspondence(frame, frame);
    Eigen::Matrix3d m = id.matrix() / id.matrix()(2, 2);
    CHECK((m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    std::array<HomogeneousPoint, 4> swapped = {frame[1], frame[0], frame[2], frame[3]};
    Projectivity w = projectivity_from_correspondence(frame, swapped);
    for (int i = 0; i < 4; ++i) {
        HomogeneousPoint img = w.apply(frame[i]).normalized();
        HomogeneousPoint want = swapped[i].normalized();
        Eigen::Vector3d vi(img.hx, img.hy, img.hw), vw(want.hx, want.hy, want.hw);
        CHECK(vi.cross(vw).norm() < 1e-12);
    }
}

TEST_CASE("projectivity from random frames hits the targets") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int done = 0;
    while (done < 20) {
        std::array<HomogeneousPoint, 4> src, dst;
        for (int i = 0; i < 4; ++i) {
            src[i] = HomogeneousPoint::from_affine({u(rng), u(rng)});
            dst[i] = HomogeneousPoint::from_affine({u(rng), u(rng)});
        }
        try {
            Projectivity w = projectivity_from_correspondence(src, dst);
            for (int i = 0; i < 4; ++i) {
                HomogeneousPoint img = w.apply(src[i]);
                Eigen::Vector3d vi(img.hx, img.hy, img.hw);
                Eigen::Vector3d vd(dst[i].hx, dst[i].hy, dst[i].hw);
                CHECK(vi.normalized().cross(vd.normalized()).norm() < 1e-9);
            }
            Projectivity round = w.inverse() * w;
            Eigen::Matrix3d rm = round.matrix() / round.matrix()(2, 2);
            CHECK((rm - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-9);
            ++done;
        } catch (const Error&) {
            // degenerate frame, draw again
        }
    }
}

TEST_CASE("line to infinity") {
    Projectivity id = line_to_infinity(LineCoeffs::ideal_line());
    Eigen::Matrix3d m = id.matrix() / id.matrix()(2, 2);
    CHECK((m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    Projectivity w = line_to_infinity({1, 0, -2}); // x = 2
    for (double y : {-3.0, 0.0, 5.0}) {
        HomogeneousPoint img = w.apply(HomogeneousPoint::from_affine({2.0, y}));
        CHECK(img.is_ideal(1e-9));
    }

    Projectivity w2 = line_to_infinity({1, 1, -5}); // x + y = 5
    CHECK(w2.apply(HomogeneousPoint::from_affine({5, 0})).is_ideal(1e-9));
    CHECK(w2.apply(HomogeneousPoint::from_affine({0, 5})).is_ideal(1e-9));

    // Points off the line stay affine.
    CHECK_FALSE(w2.apply(HomogeneousPoint::from_affine({1, 1})).is_ideal(1e-6));
}
