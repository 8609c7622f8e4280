#include "cohiggs/charts.hpp"

#include "cohiggs/errors.hpp"

namespace cohiggs {

std::pair<Scalar, Scalar> PointP2::coords(Chart c) const {
    const Scalar& u = x[unit_coord(c)];
    if (u.is_zero()) throw SingularEvaluationPoint("point lies off the requested chart");
    auto [a, b] = affine_coords(c);
    return {x[a] / u, x[b] / u};
}

bool PointP2::projective_equal(const PointP2& o) const {
    // all 2x2 minors of the 2x3 coordinate matrix vanish
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (x[i] * o.x[j] != x[j] * o.x[i]) return false;
    return true;
}

std::array<AffinePoly, 3> homogeneous_on_chart(Chart c) {
    std::array<AffinePoly, 3> x;
    auto [a, b] = affine_coords(c);
    x[a] = AffinePoly::var_z();
    x[b] = AffinePoly::var_w();
    x[unit_coord(c)] = AffinePoly::constant(Scalar(1L));
    return x;
}

std::pair<RatFunc, RatFunc> chart_map(Chart from, Chart to) {
    auto x = homogeneous_on_chart(from);
    auto [a, b] = affine_coords(to);
    RatFunc u{x[unit_coord(to)]};
    return {RatFunc(x[a]) / u, RatFunc(x[b]) / u};
}

RatFuncMatrix chart_jacobian(Chart from, Chart to) {
    auto [zi, wi] = chart_map(from, to);
    RatFuncMatrix j(2, 2);
    j.at(0, 0) = zi.derivative_z();
    j.at(0, 1) = zi.derivative_w();
    j.at(1, 0) = wi.derivative_z();
    j.at(1, 1) = wi.derivative_w();
    return j;
}

}  // namespace cohiggs
