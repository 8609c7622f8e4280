#pragma once

#include "cohiggs/schwarz.hpp"
#include "cohiggs/transitions.hpp"

#include <optional>
#include <variant>

namespace cohiggs {

/// phi = [[lambda, mu], [1, -lambda]] (x) C on V_0 = O + O(-1).
struct CoHiggsK0 {
    SectionOk lambda{1, HomogeneousForm3(1)};
    SectionOk mu{2, HomogeneousForm3(2)};
    SectionTm1 C;
};

/// phi = [[A, B], [C, -A]] with tangent-field entries on V_1 = O + O.
/// Integrability is not automatic here.
struct CoHiggsK1 {
    SectionT A, B, C;
};

/// phi = phi0 (x) C on V_2 = T, with phi0 given by its chart-0 local matrix
/// [[F, G], [H, -F]], deg F <= 1, deg G <= 2, H constant.
struct CoHiggsK2 {
    AffinePoly F;
    AffinePoly G;
    Scalar H;
    SectionTm1 C;

    CoHiggsK2() = default;
    CoHiggsK2(AffinePoly f, AffinePoly g, Scalar h, SectionTm1 c);
};

/// k > 3: the classification-relevant data of phi = phi0 (x) C, where
/// det(phi0) = lambda * rho for the branch conic rho (rank 3). The paper
/// provides no explicit matrix model for phi0 on these bundles.
struct CoHiggsKBig {
    int k = 4;
    SectionOk rho{2, HomogeneousForm3(2)};
    Scalar lambda{1L};
    SectionTm1 C;

    CoHiggsKBig() = default;
    CoHiggsKBig(int k_, SectionOk rho_, Scalar lambda_, SectionTm1 c);
};

using CoHiggsField = std::variant<CoHiggsK0, CoHiggsK1, CoHiggsK2, CoHiggsKBig>;

int schwarz_index(const CoHiggsField& phi);

/// Local component matrices (phi_z, phi_w) of phi = phi_z (x) d/dz +
/// phi_w (x) d/dw on a chart. Entries are rational functions off chart 0
/// for the K2 shape (conjugation by transition data). KBig carries no
/// matrix model and yields nullopt.
std::optional<std::pair<RatFuncMatrix, RatFuncMatrix>> local_matrices(const CoHiggsField& phi,
                                                                      Chart chart);

/// Integrability on a chart: the two component matrices commute exactly.
/// Chart-independent for sections (verified by the test suites); fields
/// of tensor-decomposed shape are integrable identically.
bool integrable(const CoHiggsField& phi, Chart chart = Chart::c0);

/// Structured origin of a determinant section, when the variant provides
/// one: q (x) Sym^2(C), -Sym^2(A), or lambda rho (x) Sym^2(C).
struct DetStructureQC {
    SectionOk q{2, HomogeneousForm3(2)};
    SectionTm1 C;
};
struct DetStructureSymA {
    SectionT A;
};
struct DetStructureRho {
    Scalar lambda;
    SectionOk rho{2, HomogeneousForm3(2)};
    SectionTm1 C;
};
using DetStructure = std::variant<std::monostate, DetStructureQC, DetStructureSymA, DetStructureRho>;

/// det(phi) as a global section of Sym^2(T): the chart-0 component triple
/// plus the structured form when the field shape provides it.
struct DetSection {
    Sym2Triple triple;
    DetStructure structured;

    bool is_zero() const { return triple.is_zero(); }
};

DetSection determinant(const CoHiggsField& phi);

/// Chart-c component triple of det(phi), computed directly from the local
/// matrices on that chart (used to test gluing of the determinant).
std::optional<Sym2Triple> det_triple_on_chart(const CoHiggsField& phi, Chart chart);

/// Component triple of det from a pair of local matrices: (det phi_z,
/// polarization/2, det phi_w).
Sym2Triple det_triple_from_matrices(const RatFuncMatrix& phi_z, const RatFuncMatrix& phi_w);

/// Verifies the chart-gluing relation for a K2 local matrix: the displayed
/// identity  [[F,G],[H,-F]] g'_12 = [[1, -z/w],[0, -1/w]] [[f,g],[h,-f]]
/// admits an exact solution (f, g, h) with deg f <= 1, deg g <= 2, h
/// constant. Returns the solution when solvable.
std::optional<std::array<AffinePoly, 3>> phi0_glue_solve(const CoHiggsK2& phi);
bool phi0_glue_check(const CoHiggsK2& phi);

/// Produces (F, G, H) within the degree bounds with -F^2 - G*H equal to the
/// chart-0 representative of q, exactly.
CoHiggsK2 phi0_for_target(const SectionOk& q, SectionTm1 C = SectionTm1{});

}  // namespace cohiggs
