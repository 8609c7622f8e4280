#include "cohiggs/cohiggs_field.hpp"

#include "cohiggs/conic.hpp"
#include "cohiggs/errors.hpp"

#include <set>

namespace cohiggs {

CoHiggsK2::CoHiggsK2(AffinePoly f, AffinePoly g, Scalar h, SectionTm1 c)
    : F(std::move(f)), G(std::move(g)), H(std::move(h)), C(std::move(c)) {
    if (F.degree() > 1) throw DegreeExceeded("K2 field: deg F > 1");
    if (G.degree() > 2) throw DegreeExceeded("K2 field: deg G > 2");
}

CoHiggsKBig::CoHiggsKBig(int k_, SectionOk rho_, Scalar lambda_, SectionTm1 c)
    : k(k_), rho(std::move(rho_)), lambda(std::move(lambda_)), C(std::move(c)) {
    if (k <= 3) throw ExcludedIndex("KBig fields require k > 3");
    if (lambda.is_zero()) throw ZeroInput("KBig fields require lambda != 0");
    if (conic_rank(rho).rank != 3)
        throw ZeroInput("KBig fields require an irreducible (rank 3) branch conic");
}

int schwarz_index(const CoHiggsField& phi) {
    return std::visit(
        [](const auto& f) -> int {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, CoHiggsK0>) return 0;
            if constexpr (std::is_same_v<T, CoHiggsK1>) return 1;
            if constexpr (std::is_same_v<T, CoHiggsK2>) return 2;
            if constexpr (std::is_same_v<T, CoHiggsKBig>) return f.k;
        },
        phi);
}

namespace {

RatFuncMatrix k0_phi0_matrix(const CoHiggsK0& f, Chart chart) {
    RatFuncMatrix m(2, 2);
    RatFunc l{f.lambda.local_rep(chart)};
    m.at(0, 0) = l;
    m.at(0, 1) = RatFunc(f.mu.local_rep(chart));
    m.at(1, 0) = RatFunc::constant(Scalar(1L));
    m.at(1, 1) = -l;
    return m;
}

RatFuncMatrix k2_phi0_matrix(const CoHiggsK2& f, Chart chart) {
    RatFuncMatrix m0(2, 2);
    m0.at(0, 0) = RatFunc(f.F);
    m0.at(0, 1) = RatFunc(f.G);
    m0.at(1, 0) = RatFunc::constant(f.H);
    m0.at(1, 1) = -RatFunc(f.F);
    if (chart == Chart::c0) return m0;
    // End(T) (x) O(1) transform: conjugate by the tangent transition and
    // scale by the O(1) factor
    RatFuncMatrix g = tangent_transition(chart, Chart::c0);
    auto [z0, w0] = chart_map(chart, Chart::c0);
    RatFuncMatrix m0_pulled = m0.substitute(z0, w0);
    return (g * m0_pulled * g.inverse()) * line_transition(1, chart, Chart::c0);
}

std::pair<RatFuncMatrix, RatFuncMatrix> tensor_local(const RatFuncMatrix& phi0,
                                                     const SectionTm1& C, Chart chart) {
    auto rep = C.local_rep(chart);
    return {phi0 * RatFunc(rep.first), phi0 * RatFunc(rep.second)};
}

}  // namespace

std::optional<std::pair<RatFuncMatrix, RatFuncMatrix>> local_matrices(const CoHiggsField& phi,
                                                                      Chart chart) {
    if (const auto* k0 = std::get_if<CoHiggsK0>(&phi))
        return tensor_local(k0_phi0_matrix(*k0, chart), k0->C, chart);
    if (const auto* k1 = std::get_if<CoHiggsK1>(&phi)) {
        auto a = k1->A.local_rep(chart);
        auto b = k1->B.local_rep(chart);
        auto c = k1->C.local_rep(chart);
        RatFuncMatrix phi_z{{RatFunc(a.first), RatFunc(b.first)},
                            {RatFunc(c.first), -RatFunc(a.first)}};
        RatFuncMatrix phi_w{{RatFunc(a.second), RatFunc(b.second)},
                            {RatFunc(c.second), -RatFunc(a.second)}};
        return std::make_pair(phi_z, phi_w);
    }
    if (const auto* k2 = std::get_if<CoHiggsK2>(&phi))
        return tensor_local(k2_phi0_matrix(*k2, chart), k2->C, chart);
    return std::nullopt;  // KBig: no matrix model
}

bool integrable(const CoHiggsField& phi, Chart chart) {
    auto mats = local_matrices(phi, chart);
    if (!mats) return true;  // phi0 (x) C with no matrix model: components proportional
    return commutator(mats->first, mats->second).is_zero();
}

Sym2Triple det_triple_from_matrices(const RatFuncMatrix& phi_z, const RatFuncMatrix& phi_w) {
    RatFunc t11 = phi_z.det();
    RatFunc t22 = phi_w.det();
    // polarization: det(X + tY) = det X + t * polar(X, Y) + t^2 det Y
    RatFunc polar = phi_z.at(0, 0) * phi_w.at(1, 1) + phi_w.at(0, 0) * phi_z.at(1, 1) -
                    phi_z.at(0, 1) * phi_w.at(1, 0) - phi_w.at(0, 1) * phi_z.at(1, 0);
    RatFunc t12 = polar * RatFunc::constant(Scalar(1L) / Scalar(2L));
    auto p11 = t11.as_polynomial();
    auto p12 = t12.as_polynomial();
    auto p22 = t22.as_polynomial();
    if (!p11 || !p12 || !p22)
        throw SingularEvaluationPoint("determinant components are not polynomial");
    return Sym2Triple{{*p11, *p12, *p22}};
}

DetSection determinant(const CoHiggsField& phi) {
    DetSection out;
    if (const auto* k0 = std::get_if<CoHiggsK0>(&phi)) {
        HomogeneousForm3 qform = -(k0->lambda.form * k0->lambda.form + k0->mu.form);
        SectionOk q(2, qform);
        out.triple = sym2_section(k0->C).scaled(q.local_rep(Chart::c0));
        out.structured = DetStructureQC{q, k0->C};
        return out;
    }
    if (const auto* k1 = std::get_if<CoHiggsK1>(&phi)) {
        auto mats = *local_matrices(phi, Chart::c0);
        out.triple = det_triple_from_matrices(mats.first, mats.second);
        if (k1->B.is_zero() || k1->C.is_zero()) out.structured = DetStructureSymA{k1->A};
        return out;
    }
    if (const auto* k2 = std::get_if<CoHiggsK2>(&phi)) {
        AffinePoly qpoly = -(k2->F * k2->F + k2->G * AffinePoly::constant(k2->H));
        SectionOk q(2, homogenize(qpoly, 2));
        out.triple = sym2_section(k2->C).scaled(qpoly);
        out.structured = DetStructureQC{q, k2->C};
        return out;
    }
    const auto& kb = std::get<CoHiggsKBig>(phi);
    AffinePoly qpoly = kb.rho.local_rep(Chart::c0) * kb.lambda;
    out.triple = sym2_section(kb.C).scaled(qpoly);
    out.structured = DetStructureRho{kb.lambda, kb.rho, kb.C};
    return out;
}

std::optional<Sym2Triple> det_triple_on_chart(const CoHiggsField& phi, Chart chart) {
    auto mats = local_matrices(phi, chart);
    if (mats) {
        try {
            return det_triple_from_matrices(mats->first, mats->second);
        } catch (const SingularEvaluationPoint&) {
            return std::nullopt;
        }
    }
    const auto& kb = std::get<CoHiggsKBig>(phi);
    AffinePoly qc = kb.rho.local_rep(chart) * kb.lambda;
    return sym2_section(kb.C, chart).scaled(qc);
}

std::optional<std::array<AffinePoly, 3>> phi0_glue_solve(const CoHiggsK2& phi) {
    const AffinePoly Z = AffinePoly::var_z();
    const AffinePoly W = AffinePoly::var_w();
    const RatFunc z{Z}, w{W};

    // left side: [[F, G], [H, -F]] * g'_12, in chart-0 coordinates
    RatFuncMatrix lhs_mat{{RatFunc(phi.F), RatFunc(phi.G)},
                          {RatFunc::constant(phi.H), -RatFunc(phi.F)}};
    RatFuncMatrix g12 = paper_tangent_transitions()[0].matrix;
    RatFuncMatrix lhs = lhs_mat * g12;

    // right side prefactor [[1, -z/w], [0, -1/w]]
    RatFuncMatrix pre{{RatFunc::constant(Scalar(1L)), -(z / w)},
                      {RatFunc{}, -w.inverse()}};

    // unknown coefficient layout: f (1, z', w'), g (1, z', w', z'^2, z'w',
    // w'^2), h — with (z', w') = (z/w, 1/w)
    const RatFunc zp = z / w;
    const RatFunc wp = w.inverse();
    const std::array<RatFunc, 6> mono{RatFunc::constant(Scalar(1L)), zp, wp,
                                      zp * zp, zp * wp, wp * wp};
    constexpr int kUnknowns = 10;

    // entry (r, c) of the right side as a linear expression in the unknowns
    const auto rhs_basis = [&](int unknown) {
        RatFuncMatrix inner(2, 2);
        if (unknown < 3) {  // f basis
            inner.at(0, 0) = mono[unknown];
            inner.at(1, 1) = -mono[unknown];
        } else if (unknown < 9) {  // g basis
            inner.at(0, 1) = mono[unknown - 3];
        } else {  // h
            inner.at(1, 0) = RatFunc::constant(Scalar(1L));
        }
        return pre * inner;
    };

    // clear denominators with w^4 and collect monomial coefficients
    RatFunc clear{W * W * W * W};
    std::set<std::pair<int, int>> monomials;
    std::array<std::array<AffinePoly, 4>, kUnknowns> cols;
    std::array<AffinePoly, 4> rhs_target;
    for (int u = 0; u < kUnknowns; ++u) {
        RatFuncMatrix m = rhs_basis(u);
        for (int e = 0; e < 4; ++e) {
            auto p = (m.at(e / 2, e % 2) * clear).as_polynomial();
            if (!p) throw SingularEvaluationPoint("glue basis entry not polynomial after clearing");
            cols[u][e] = *p;
            for (const auto& [exp, cf] : p->terms()) monomials.insert({exp.z, exp.w});
        }
    }
    for (int e = 0; e < 4; ++e) {
        auto p = (lhs.at(e / 2, e % 2) * clear).as_polynomial();
        if (!p) throw SingularEvaluationPoint("glue lhs entry not polynomial after clearing");
        rhs_target[e] = *p;
        for (const auto& [exp, cf] : p->terms()) monomials.insert({exp.z, exp.w});
    }

    const int rows = static_cast<int>(monomials.size()) * 4;
    ScalarMatrix A(rows, kUnknowns);
    std::vector<Scalar> b(rows);
    int row = 0;
    for (const auto& [ez, ew] : monomials) {
        for (int e = 0; e < 4; ++e) {
            for (int u = 0; u < kUnknowns; ++u) A.at(row, u) = cols[u][e].coeff(ez, ew);
            b[row] = rhs_target[e].coeff(ez, ew);
            ++row;
        }
    }
    auto sol = linear_solve(A, b);
    if (!sol) return std::nullopt;

    AffinePoly f = AffinePoly::constant((*sol)[0]) + Z * (*sol)[1] + W * (*sol)[2];
    AffinePoly g = AffinePoly::constant((*sol)[3]) + Z * (*sol)[4] + W * (*sol)[5] +
                   Z * Z * (*sol)[6] + Z * W * (*sol)[7] + W * W * (*sol)[8];
    AffinePoly h = AffinePoly::constant((*sol)[9]);
    return std::array<AffinePoly, 3>{f, g, h};
}

bool phi0_glue_check(const CoHiggsK2& phi) { return phi0_glue_solve(phi).has_value(); }

CoHiggsK2 phi0_for_target(const SectionOk& q, SectionTm1 C) {
    if (q.k != 2) throw DegreeExceeded("phi0_for_target needs a section of O(2)");
    if (q.is_zero()) return CoHiggsK2(AffinePoly(), AffinePoly(), Scalar(), std::move(C));
    return CoHiggsK2(AffinePoly(), -q.local_rep(Chart::c0), Scalar(1L), std::move(C));
}

}  // namespace cohiggs
