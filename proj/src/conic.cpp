#include "cohiggs/conic.hpp"

#include "cohiggs/errors.hpp"

namespace cohiggs {

ScalarMatrix conic_matrix(const SectionOk& q) {
    if (q.k != 2) throw DegreeExceeded("conic_matrix needs a section of O(2)");
    ScalarMatrix m(3, 3);
    const Scalar half = Scalar(1L) / Scalar(2L);
    const auto exp_of = [](int a, int b) {
        Exp3 e;
        int* slot[3] = {&e.e0, &e.e1, &e.e2};
        *slot[a] += 1;
        *slot[b] += 1;
        return e;
    };
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Exp3 e = exp_of(a, b);
            Scalar c = q.form.coeff(e.e0, e.e1, e.e2);
            m.at(a, b) = (a == b) ? c : c * half;
        }
    return m;
}

namespace {

HomogeneousForm3 linear_form(const std::array<Scalar, 3>& coeffs) {
    HomogeneousForm3 f(1);
    f.set_term(Exp3{1, 0, 0}, coeffs[0]);
    f.set_term(Exp3{0, 1, 0}, coeffs[1]);
    f.set_term(Exp3{0, 0, 1}, coeffs[2]);
    return f;
}

}  // namespace

ConicClass conic_rank(const SectionOk& q) {
    if (q.is_zero()) throw ZeroSection("conic_rank of the zero section");
    ScalarMatrix m = conic_matrix(q);
    ConicClass out;
    out.rank = m.rank();
    if (out.rank == 3) return out;

    if (out.rank == 1) {
        // m = u u^T up to the square of a scalar; read the line off a row
        // with nonzero diagonal (char 0: some diagonal entry is nonzero)
        int a = -1;
        for (int i = 0; i < 3; ++i)
            if (!m.at(i, i).is_zero()) {
                a = i;
                break;
            }
        if (a < 0) throw NotASquare("rank-1 conic with zero diagonal");
        Scalar root = exact_sqrt(m.at(a, a)).root;
        std::array<Scalar, 3> coeffs;
        for (int b = 0; b < 3; ++b) coeffs[b] = m.at(a, b) / root;
        HomogeneousForm3 line = linear_form(coeffs);
        if (line * line != q.form) throw NotASquare("rank-1 factor reconstruction failed");
        out.factors.push_back(line);
        return out;
    }

    // rank 2: restrict to a complement of the radical and factor the
    // resulting binary quadratic
    auto ker = m.kernel();
    if (ker.size() != 1) throw DimensionMismatch("rank-2 conic with unexpected kernel");
    const auto& k = ker[0];
    int l = -1;
    for (int i = 0; i < 3; ++i)
        if (!k[i].is_zero()) l = i;
    int i0 = (l == 0) ? 1 : 0;
    int j0 = (l == 2) ? 1 : 2;

    // basis B = [e_i0, e_j0, k]; in its coordinates q = a s^2 + b s t + c t^2
    Scalar a = m.at(i0, i0);
    Scalar b = m.at(i0, j0) * Scalar(2L);
    Scalar c = m.at(j0, j0);

    // rows of B^{-1} give s and t as linear forms in x
    ScalarMatrix B(3, 3);
    B.at(i0, 0) = Scalar(1L);
    B.at(j0, 1) = Scalar(1L);
    for (int r = 0; r < 3; ++r) B.at(r, 2) = k[r];
    ScalarMatrix Binv(3, 3);
    {
        // explicit 3x3 inverse via cofactors
        Scalar det = B.det();
        const auto minor = [&](int r, int cidx) {
            int r0 = (r + 1) % 3, r1 = (r + 2) % 3;
            int c0 = (cidx + 1) % 3, c1 = (cidx + 2) % 3;
            if (r0 > r1) std::swap(r0, r1);
            if (c0 > c1) std::swap(c0, c1);
            Scalar mm = B.at(r0, c0) * B.at(r1, c1) - B.at(r0, c1) * B.at(r1, c0);
            return ((r + cidx) % 2 == 0) ? mm : -mm;
        };
        Scalar dinv = det.inverse();
        for (int r = 0; r < 3; ++r)
            for (int cidx = 0; cidx < 3; ++cidx) Binv.at(r, cidx) = minor(cidx, r) * dinv;
    }
    std::array<Scalar, 3> s_form{Binv.at(0, 0), Binv.at(0, 1), Binv.at(0, 2)};
    std::array<Scalar, 3> t_form{Binv.at(1, 0), Binv.at(1, 1), Binv.at(1, 2)};
    HomogeneousForm3 S = linear_form(s_form);
    HomogeneousForm3 T = linear_form(t_form);

    HomogeneousForm3 f1(1), f2(1);
    if (!a.is_zero()) {
        Scalar disc = b * b - Scalar(4L) * a * c;
        Scalar root = exact_sqrt(disc).root;
        Scalar inv2a = (Scalar(2L) * a).inverse();
        Scalar r1 = (-b + root) * inv2a;
        Scalar r2 = (-b - root) * inv2a;
        f1 = (S - T * r1) * a;
        f2 = S - T * r2;
    } else if (!c.is_zero()) {
        // a = 0: q = t (b s + c t)
        f1 = T;
        f2 = S * b + T * c;
    } else {
        f1 = S * b;
        f2 = T;
    }
    if (f1 * f2 != q.form) throw NotASquare("rank-2 factor reconstruction failed");
    out.factors.push_back(f1);
    out.factors.push_back(f2);
    return out;
}

}  // namespace cohiggs
