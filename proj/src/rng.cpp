#include "cohiggs/rng.hpp"

namespace cohiggs {

long Gen::int_in(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_.next() % span);
}

long Gen::nonzero_int() {
    long v = 0;
    while (v == 0) v = small_int();
    return v;
}

Rational Gen::rational() { return Rational(small_int(), int_in(1, 3)); }

Rational Gen::nonzero_rational() { return Rational(nonzero_int(), int_in(1, 3)); }

GaussianRational Gen::gaussian() {
    // bias toward plain rationals so case branches with real coefficients
    // are exercised as often as complex ones
    if (coin()) return GaussianRational{rational(), Rational(0)};
    return GaussianRational{rational(), rational()};
}

GaussianRational Gen::nonzero_gaussian() {
    GaussianRational g;
    while (g.is_zero()) g = gaussian();
    return g;
}

AffinePoly Gen::poly(int max_degree) {
    AffinePoly p;
    for (int ez = 0; ez <= max_degree; ++ez)
        for (int ew = 0; ew + ez <= max_degree; ++ew)
            p.set_term(Exp2{ez, ew}, scalar());
    return p;
}

AffinePoly Gen::nonzero_poly(int max_degree) {
    AffinePoly p;
    while (p.is_zero()) p = poly(max_degree);
    return p;
}

HomogeneousForm3 Gen::form(int degree) {
    HomogeneousForm3 f(degree);
    for (int e0 = 0; e0 <= degree; ++e0)
        for (int e1 = 0; e0 + e1 <= degree; ++e1)
            f.set_term(Exp3{e0, e1, degree - e0 - e1}, scalar());
    return f;
}

HomogeneousForm3 Gen::nonzero_form(int degree) {
    HomogeneousForm3 f(degree);
    while (f.is_zero()) f = form(degree);
    return f;
}

SectionOk Gen::section_ok(int k) { return SectionOk(k, form(k)); }

SectionOk Gen::nonzero_section_ok(int k) { return SectionOk(k, nonzero_form(k)); }

SectionTm1 Gen::section_tm1() { return SectionTm1{{scalar(), scalar(), scalar()}}; }

SectionTm1 Gen::nonzero_section_tm1() {
    SectionTm1 s;
    while (s.is_zero()) s = section_tm1();
    return s;
}

SectionT Gen::section_t() { return SectionT(matrix(3, 3)); }

SectionT Gen::nonzero_section_t() {
    SectionT s;
    while (s.is_zero()) s = section_t();
    return s;
}

ScalarMatrix Gen::matrix(int rows, int cols) {
    ScalarMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = scalar();
    return m;
}

ScalarMatrix Gen::invertible_matrix2() {
    for (;;) {
        ScalarMatrix m = matrix(2, 2);
        if (!m.det().is_zero()) return m;
    }
}

PointP2 Gen::point_all_coords_nonzero() {
    return PointP2{{nonzero_scalar(), nonzero_scalar(), nonzero_scalar()}};
}

}  // namespace cohiggs
