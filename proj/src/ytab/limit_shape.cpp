#include "ytab/limit_shape.hpp"

#include <cmath>
#include <stdexcept>

namespace ytab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvTol = 1e-12;

void require_u(double u) {
    if (!(u >= -2.0 && u <= 2.0))
        throw std::domain_error("argument must lie in [-2, 2]");
}

// Bisection inverse of a continuous increasing function on [lo, hi].
template <typename F>
double invert_increasing(const F& f, double target, double lo, double hi) {
    for (int i = 0; i < 200 && hi - lo > kInvTol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double omega(double u) {
    require_u(u);
    return (2.0 / kPi) * (u * std::asin(0.5 * u) + std::sqrt(4.0 - u * u));
}

double semicircle_cdf(double u) {
    require_u(u);
    return 0.5 + (1.0 / kPi) * (0.25 * u * std::sqrt(4.0 - u * u) + std::asin(0.5 * u));
}

ShapePoint curve_point(double w) {
    if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("curve parameter must lie in [0, 1]");
    double u;
    if (w == 0.0)
        u = -2.0;
    else if (w == 1.0)
        u = 2.0;
    else
        u = invert_increasing(semicircle_cdf, w, -2.0, 2.0);
    const double v = omega(u);
    return {w, 0.5 * (v + u), 0.5 * (v - u)};
}

double pi_angle(double u) {
    require_u(u);
    if (u == 0.0) return 0.25 * kPi;  // removable singularity, closed by continuity
    const double bracket = (2.0 / kPi) * (std::asin(0.5 * u) + std::sqrt(4.0 - u * u) / u);
    return 0.25 * kPi - std::atan(1.0 / bracket);
}

double theta_cdf(double theta) {
    if (!(theta >= 0.0 && theta <= 0.5 * kPi))
        throw std::domain_error("angle must lie in [0, pi/2]");
    if (theta == 0.0) return 0.0;
    if (theta == 0.5 * kPi) return 1.0;
    // pi_angle decreases, so -pi_angle increases
    const double u = invert_increasing([](double v) { return -pi_angle(v); }, -theta, -2.0, 2.0);
    return 1.0 - semicircle_cdf(u);
}

PsiValue classify_path(const std::vector<Box>& lazy, int min_prefix) {
    const int n = static_cast<int>(lazy.size());
    if (n < min_prefix) throw std::invalid_argument("classify_path: prefix too short to classify");
    // stabilized coordinates must hold from an early probe onward, otherwise a
    // slowly escaping trajectory is mistaken for a stabilized one
    const Box early = lazy[static_cast<size_t>((n + 19) / 20 - 1)];
    const Box half = lazy[static_cast<size_t>((n + 1) / 2 - 1)];
    const Box fin = lazy[static_cast<size_t>(n - 1)];
    // a trajectory pinned to a row or column advances linearly along it, so the
    // free coordinate roughly doubles between n/2 and n; a grazing trajectory
    // that merely stalled in the probe window only grows like sqrt(n)
    constexpr double kLinearGrowth = 1.7;
    PsiValue out;
    if (fin.y == half.y && fin.y == early.y &&
        static_cast<double>(fin.x) > kLinearGrowth * static_cast<double>(half.x)) {
        out.kind = PsiValue::Kind::row;
        out.index = fin.y;
    } else if (fin.x == half.x && fin.x == early.x &&
               static_cast<double>(fin.y) > kLinearGrowth * static_cast<double>(half.y)) {
        out.kind = PsiValue::Kind::column;
        out.index = fin.x;
    } else {
        out.kind = PsiValue::Kind::continuous;
        out.value = theta_cdf(std::atan2(static_cast<double>(fin.y), static_cast<double>(fin.x)));
    }
    return out;
}

}  // namespace ytab
