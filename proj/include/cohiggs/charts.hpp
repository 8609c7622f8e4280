#pragma once

#include "cohiggs/ratfunc.hpp"

#include <array>
#include <optional>

namespace cohiggs {

/// The three affine charts of the projective plane,
///   chart 0: [z : w : 1],  chart 1: [z : 1 : w],  chart 2: [1 : z : w].
enum class Chart : int { c0 = 0, c1 = 1, c2 = 2 };

constexpr std::array<Chart, 3> kAllCharts{Chart::c0, Chart::c1, Chart::c2};

constexpr int chart_index(Chart c) { return static_cast<int>(c); }

/// Index of the homogeneous coordinate the chart sets to 1.
constexpr int unit_coord(Chart c) {
    return 2 - chart_index(c);
}

/// Indices of the homogeneous coordinates playing (z, w) on the chart.
constexpr std::pair<int, int> affine_coords(Chart c) {
    switch (c) {
        case Chart::c0: return {0, 1};
        case Chart::c1: return {0, 2};
        default: return {1, 2};
    }
}

/// Point of the projective plane; equality is projective.
struct PointP2 {
    std::array<Scalar, 3> x{};

    bool is_valid() const { return !(x[0].is_zero() && x[1].is_zero() && x[2].is_zero()); }
    bool on_chart(Chart c) const { return !x[unit_coord(c)].is_zero(); }

    /// Affine coordinates on the chart; throws SingularEvaluationPoint when
    /// the point lies off the chart.
    std::pair<Scalar, Scalar> coords(Chart c) const;

    bool projective_equal(const PointP2& o) const;
};

/// The homogeneous coordinates as polynomials in the chart's (z, w): the
/// unit coordinate is the constant 1.
std::array<AffinePoly, 3> homogeneous_on_chart(Chart c);

/// Coordinates of chart `to` expressed as rational functions of chart
/// `from`'s coordinates.
std::pair<RatFunc, RatFunc> chart_map(Chart from, Chart to);

/// Jacobian of chart_map(from, to), entries in `from`'s coordinates.
RatFuncMatrix chart_jacobian(Chart from, Chart to);

}  // namespace cohiggs
