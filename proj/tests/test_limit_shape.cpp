#include <doctest.h>

#include <cmath>
#include <vector>

#include "ytab/limit_shape.hpp"

using namespace ytab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("omega values") {
    CHECK(omega(0.0) == doctest::Approx(4.0 / kPi).epsilon(1e-12));
    CHECK(omega(2.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(omega(-2.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(omega(1.0) == doctest::Approx(omega(-1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(omega(2.1), std::domain_error);
}

TEST_CASE("semicircle cdf values") {
    CHECK(semicircle_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(semicircle_cdf(2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(semicircle_cdf(-2.0)) < 1e-12);
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double v = semicircle_cdf(-2.0 + 0.04 * i);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(semicircle_cdf(-2.5), std::domain_error);
}

TEST_CASE("curve points") {
    const ShapePoint a = curve_point(0.0);
    CHECK(std::abs(a.x) < 1e-9);
    CHECK(a.y == doctest::Approx(2.0).epsilon(1e-9));
    const ShapePoint b = curve_point(1.0);
    CHECK(b.x == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(std::abs(b.y) < 1e-9);
    const ShapePoint c = curve_point(0.5);
    CHECK(c.x == doctest::Approx(2.0 / kPi).epsilon(1e-9));
    CHECK(c.y == doctest::Approx(2.0 / kPi).epsilon(1e-9));
    CHECK_THROWS_AS(curve_point(-0.01), std::domain_error);
}

TEST_CASE("curve point lies on the limit curve") {
    for (int i = 1; i < 20; ++i) {
        const ShapePoint p = curve_point(i / 20.0);
        const double u = p.x - p.y;
        CHECK(p.x + p.y == doctest::Approx(omega(u)).epsilon(1e-9));
    }
}

TEST_CASE("angle function values") {
    CHECK(std::abs(pi_angle(2.0)) < 1e-12);
    CHECK(pi_angle(-2.0) == doctest::Approx(0.5 * kPi).epsilon(1e-12));
    CHECK(pi_angle(0.0) == doctest::Approx(0.25 * kPi).epsilon(1e-12));
    // continuity at the closed singularity
    CHECK(pi_angle(1e-9) == doctest::Approx(0.25 * kPi).epsilon(1e-6));
    CHECK(pi_angle(-1e-9) == doctest::Approx(0.25 * kPi).epsilon(1e-6));
    double prev = 10.0;
    for (int i = 0; i <= 200; ++i) {
        const double v = pi_angle(-2.0 + 0.02 * i);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("angle of the curve point matches the angle function") {
    for (int i = 1; i < 20; ++i) {
        const double w = i / 20.0;
        const ShapePoint p = curve_point(w);
        CHECK(pi_angle(p.x - p.y) == doctest::Approx(std::atan2(p.y, p.x)).epsilon(1e-9));
    }
}

TEST_CASE("theta cdf values and round trip") {
    CHECK(theta_cdf(0.0) == 0.0);
    CHECK(theta_cdf(0.5 * kPi) == 1.0);
    CHECK(theta_cdf(0.25 * kPi) == doctest::Approx(0.5).epsilon(1e-9));
    for (int i = 1; i < 20; ++i) {
        const double w = i / 20.0;
        const ShapePoint p = curve_point(1.0 - w);
        CHECK(theta_cdf(std::atan2(p.y, p.x)) == doctest::Approx(w).epsilon(1e-9));
    }
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double v = theta_cdf(0.5 * kPi * i / 100.0);
        CHECK(v > prev - 1e-15);
        prev = v;
    }
    CHECK_THROWS_AS(theta_cdf(-0.1), std::domain_error);
}

TEST_CASE("path classification") {
    std::vector<Box> row;
    for (int m = 1; m <= 200; ++m) row.push_back({m, 1});
    const PsiValue r = classify_path(row);
    CHECK(r.kind == PsiValue::Kind::row);
    CHECK(r.index == 1);
    CHECK(r.to_letter() == Letter::Row(1));

    std::vector<Box> col;
    for (int m = 1; m <= 200; ++m) col.push_back({1, m});
    const PsiValue c = classify_path(col);
    CHECK(c.kind == PsiValue::Kind::column);
    CHECK(c.index == 1);
    CHECK(c.to_letter() == Letter::Col(1));

    // diagonal drift classifies as continuous with the angle's cdf value
    std::vector<Box> diag;
    for (int m = 1; m <= 200; ++m) diag.push_back({(m + 1) / 2, m / 2 + 1});
    const PsiValue d = classify_path(diag);
    CHECK(d.kind == PsiValue::Kind::continuous);
    CHECK(d.value == doctest::Approx(theta_cdf(std::atan2(101.0, 100.0))).epsilon(1e-12));

    CHECK_THROWS_AS(classify_path(std::vector<Box>{{1, 1}}), std::invalid_argument);
}
