#include "cohiggs/sections.hpp"

#include "cohiggs/errors.hpp"

namespace cohiggs {

SectionOk::SectionOk(int k_, HomogeneousForm3 f) : k(k_), form(std::move(f)) {
    if (!form.is_zero() && form.degree() != k)
        throw DegreeExceeded("section of O(" + std::to_string(k) + ") built from a form of degree " +
                             std::to_string(form.degree()));
    if (form.is_zero()) form = HomogeneousForm3(k);
}

std::pair<AffinePoly, AffinePoly> SectionTm1::local_rep(Chart c) const {
    auto [a, b] = affine_coords(c);
    int u = unit_coord(c);
    AffinePoly s1 = AffinePoly::constant(v[a]) - AffinePoly::var_z() * v[u];
    AffinePoly s2 = AffinePoly::constant(v[b]) - AffinePoly::var_w() * v[u];
    return {s1, s2};
}

SectionT::SectionT(ScalarMatrix mat) : m(std::move(mat)) {
    if (m.rows() != 3 || m.cols() != 3) throw DimensionMismatch("SectionT needs a 3x3 matrix");
    Scalar third = m.trace() / Scalar(3L);
    for (int i = 0; i < 3; ++i) m.at(i, i) -= third;
}

namespace {

std::pair<AffinePoly, AffinePoly> tangent_rep_of_matrix(const ScalarMatrix& m, Chart c) {
    auto x = homogeneous_on_chart(c);
    std::array<AffinePoly, 3> vel;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) vel[i] += x[j] * m.at(i, j);
    auto [a, b] = affine_coords(c);
    int u = unit_coord(c);
    return {vel[a] - AffinePoly::var_z() * vel[u], vel[b] - AffinePoly::var_w() * vel[u]};
}

}  // namespace

std::pair<AffinePoly, AffinePoly> SectionT::local_rep(Chart c) const {
    return tangent_rep_of_matrix(m, c);
}

SectionT SectionT::operator*(const Scalar& s) const {
    SectionT out;
    out.m = m * s;
    return out;
}

SectionT SectionT::operator-() const {
    SectionT out;
    out.m = -m;
    return out;
}

Sym2Triple sym2_of_pair(const std::pair<AffinePoly, AffinePoly>& rep) {
    return {{rep.first * rep.first, rep.first * rep.second, rep.second * rep.second}};
}

Sym2Triple sym2_section(const SectionTm1& c, Chart chart) { return sym2_of_pair(c.local_rep(chart)); }
Sym2Triple sym2_section(const SectionT& a, Chart chart) { return sym2_of_pair(a.local_rep(chart)); }

PointP2 zero_point(const SectionTm1& c) {
    if (c.is_zero()) throw ZeroSection("zero section has no zero point");
    return PointP2{{c.v[0], c.v[1], c.v[2]}};
}

std::optional<SectionTm1> tm1_from_chart0(const std::pair<AffinePoly, AffinePoly>& rep) {
    const AffinePoly& s1 = rep.first;
    const AffinePoly& s2 = rep.second;
    if (s1.degree() > 1 || s2.degree() > 1) return std::nullopt;
    Scalar v0 = s1.coeff(0, 0);
    Scalar v1 = s2.coeff(0, 0);
    Scalar v2 = -s1.coeff(1, 0);
    if (-s2.coeff(0, 1) != v2) return std::nullopt;
    if (!s1.coeff(0, 1).is_zero() || !s2.coeff(1, 0).is_zero()) return std::nullopt;
    SectionTm1 out{{v0, v1, v2}};
    if (out.local_rep(Chart::c0) != rep) return std::nullopt;
    return out;
}

std::optional<SectionT> tangent_from_chart0(const std::pair<AffinePoly, AffinePoly>& rep) {
    if (rep.first.degree() > 2 || rep.second.degree() > 2) return std::nullopt;
    // match coefficients of the 9 entry-basis vector fields plus the
    // traceless constraint; monomials of degree <= 2 in each component
    const std::array<Exp2, 6> mons{{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};
    ScalarMatrix A(13, 9);
    std::vector<Scalar> b(13);
    for (int k = 0; k < 9; ++k) {
        ScalarMatrix ek(3, 3);
        ek.at(k / 3, k % 3) = Scalar(1L);
        auto basis_rep = tangent_rep_of_matrix(ek, Chart::c0);
        for (int mi = 0; mi < 6; ++mi) {
            A.at(mi, k) = basis_rep.first.coeff(mons[mi].z, mons[mi].w);
            A.at(6 + mi, k) = basis_rep.second.coeff(mons[mi].z, mons[mi].w);
        }
        A.at(12, k) = (k % 4 == 0) ? Scalar(1L) : Scalar(0L);  // diagonal entries
    }
    for (int mi = 0; mi < 6; ++mi) {
        b[mi] = rep.first.coeff(mons[mi].z, mons[mi].w);
        b[6 + mi] = rep.second.coeff(mons[mi].z, mons[mi].w);
    }
    auto sol = linear_solve(A, b);
    if (!sol) return std::nullopt;
    ScalarMatrix m(3, 3);
    for (int k = 0; k < 9; ++k) m.at(k / 3, k % 3) = (*sol)[k];
    SectionT out(m);
    if (out.local_rep(Chart::c0) != rep) return std::nullopt;
    return out;
}

namespace {

/// Extracts (s1, s2) with (s1^2, s1 s2, s2^2) = t, up to a global sign.
std::pair<AffinePoly, AffinePoly> split_square_triple(const Sym2Triple& t, bool allow_extension) {
    if (t.t[1] * t.t[1] != t.t[0] * t.t[2])
        throw NotASquare("middle term squared differs from the product of the outer terms");
    if (t.t[0].is_zero() && !t.t[1].is_zero())
        throw NotASquare("degenerate triple: t11 = 0 but t12 != 0");
    auto s1 = t.t[0].sqrt_exact(allow_extension);
    if (!s1) throw NotASquare("t11 is not a polynomial square over the coefficient tower");
    AffinePoly s2;
    if (!s1->is_zero()) {
        auto q = t.t[1].divide_exact(*s1);
        if (!q) throw NotASquare("t12 is not divisible by sqrt(t11)");
        s2 = *q;
    } else {
        auto r = t.t[2].sqrt_exact(allow_extension);
        if (!r) throw NotASquare("t22 is not a polynomial square over the coefficient tower");
        s2 = *r;
    }
    if (s2 * s2 != t.t[2]) throw NotASquare("reconstructed s2^2 differs from t22");
    return {*s1, s2};
}

bool lex_positive_triple(const std::array<Scalar, 3>& v) {
    for (const auto& s : v) {
        if (s.is_zero()) continue;
        return s.lex_positive();
    }
    return false;
}

}  // namespace

SectionTm1 recover_sqrt(const Sym2Triple& t, bool allow_extension) {
    if (t.is_zero()) return SectionTm1{};
    auto rep = split_square_triple(t, allow_extension);
    auto sec = tm1_from_chart0(rep);
    if (!sec) throw NotASquare("square root is not a global section of T(-1)");
    if (!lex_positive_triple(sec->v)) return -*sec;
    return *sec;
}

SectionT recover_tangent_sqrt(const Sym2Triple& t, bool allow_extension) {
    if (t.is_zero()) return SectionT{};
    auto rep = split_square_triple(t, allow_extension);
    auto sec = tangent_from_chart0(rep);
    if (!sec) throw NotASquare("square root is not a global section of T");
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (sec->m.at(r, c).is_zero()) continue;
            return sec->m.at(r, c).lex_positive() ? *sec : -*sec;
        }
    return *sec;
}

}  // namespace cohiggs
