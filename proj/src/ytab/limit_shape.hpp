#pragma once

#include <vector>

#include "ytab/diagram.hpp"
#include "ytab/letter.hpp"

namespace ytab {

// Point on the Vershik-Kerov-Logan-Shepp limit curve, parametrized by
// w in [0,1]: u = F^{-1}(w), x + y = Omega(u), x - y = u.
struct ShapePoint {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
};

double omega(double u);           // |u| <= 2
double semicircle_cdf(double u);  // |u| <= 2
ShapePoint curve_point(double w); // w in [0, 1]

// Asymptotic slope angle of the path attached to semicircle coordinate u;
// decreasing from pi/2 at u = -2 to 0 at u = 2, with the arctan-reciprocal
// branch and the removable singularity at 0 closed by continuity (pi/4).
double pi_angle(double u);

// CDF of the asymptotic angle: 1 - F(Pi^{-1}(theta)) on [0, pi/2].
double theta_cdf(double theta);

// Limit classification of a jdt trajectory, estimated from a finite prefix.
struct PsiValue {
    enum class Kind { row, column, continuous } kind = Kind::continuous;
    int index = 0;        // for row/column
    double value = 0.0;   // for continuous, in (0,1)

    Letter to_letter() const {
        switch (kind) {
        case Kind::row: return Letter::Row(index);
        case Kind::column: return Letter::Col(index);
        default: return Letter::Neutral(value);
        }
    }
};

inline constexpr int kClassifyMinPrefix = 100;

// Finite-n estimator: compares the lazy-path boxes at indices ceil(n/20),
// ceil(n/2) and n.  A row index matching across all probes, together with
// linear growth of the column coordinate, means the path stabilized in that
// row; symmetrically for columns.  Otherwise the final box's angle is mapped
// through theta_cdf.
PsiValue classify_path(const std::vector<Box>& lazy, int min_prefix = kClassifyMinPrefix);

}  // namespace ytab
