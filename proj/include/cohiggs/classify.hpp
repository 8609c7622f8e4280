#pragma once

#include "cohiggs/cohiggs_field.hpp"

#include <optional>
#include <variant>

namespace cohiggs {

enum class SquareCase { i, ii, iii, iv };

std::string square_case_name(SquareCase c);

/// Result of completing the square on a degree <= 2 polynomial:
/// s = lambda^2 + mu exactly, in the original coordinates. Case (iii) goes
/// through the rotation z = z' + w', w = z' - w'; the rotated forms are
/// kept as metadata (mu is univariate in w' there).
struct SquareDecomposition {
    AffinePoly lambda, mu;
    SquareCase case_tag = SquareCase::iv;
    bool rotated = false;
    bool extended = false;  // a square root was adjoined
    AffinePoly lambda_rotated, mu_rotated;  // populated when rotated
};

SquareDecomposition complete_square(const AffinePoly& s);

/// s = lambda^2 + mu * mu_prime with all three parts of degree <= 1.
/// Fixed case order: zero, degree <= 1, factorable conic (rank <= 2),
/// completed square with the univariate remainder split by the quadratic
/// formula. Total extension depth <= 2.
struct LinearProductDecomposition {
    AffinePoly lambda, mu, mu_prime;
    bool extended = false;
};

LinearProductDecomposition decompose_linear_product(const AffinePoly& s);

// ---- image points of the determinant morphism ----------------------------

struct ImageZero {
    bool operator==(const ImageZero&) const { return true; }
};

/// Orbit of (q, C) under (q, C) ~ (a^2 q, a^-1 C): canonical representative
/// has the first nonzero coordinate of C equal to 1.
struct ImageQSym2 {
    SectionOk q{2, HomogeneousForm3(2)};
    SectionTm1 C;
    bool operator==(const ImageQSym2& o) const { return q == o.q && C == o.C; }
};

/// Class of A in H^0(T)^x / {+-1}; the sign-free key Sym^2(A) decides
/// equality (entries of A itself may live in different sqrt towers).
struct ImageSymTangent {
    SectionT A;
    Sym2Triple key;
    bool operator==(const ImageSymTangent& o) const { return key == o.key; }
};

/// Class of C in H^0(T(-1))^x / {+-1} for a fixed branch conic rho, after
/// absorbing lambda as sqrt(lambda) * C. The key lambda * v v^T is
/// extension-free and orbit-invariant.
struct ImageRhoSym2 {
    SectionTm1 C;  // canonical representative, possibly with sqrt coordinates
    SectionOk rho{2, HomogeneousForm3(2)};
    ScalarMatrix key{3, 3};
    bool operator==(const ImageRhoSym2& o) const { return rho == o.rho && key == o.key; }
};

using ImagePoint = std::variant<ImageZero, ImageQSym2, ImageSymTangent, ImageRhoSym2>;

ImagePoint canonicalize_qc(const SectionOk& q, const SectionTm1& C);
SectionT canonicalize_pm(const SectionT& a);
SectionTm1 canonicalize_pm(const SectionTm1& c);
ImagePoint canonicalize_rho(const Scalar& lambda, const SectionTm1& C, const SectionOk& rho);

/// The chart-0 determinant triple a point parametrizes: q (x) Sym2(C),
/// -Sym2(A), or lambda rho (x) Sym2(C); zero for the zero point.
Sym2Triple point_det_triple(const ImagePoint& p);

/// Classifies a determinant section into the parametrization of the
/// matching theorem. Uses the structured origin when present; otherwise
/// recovers (q, C) / A / (lambda, C) from the raw triple. Throws
/// Unclassifiable when the triple matches no theorem shape.
ImagePoint image_point(const DetSection& d, int k,
                       const std::optional<SectionOk>& rho = std::nullopt);

/// Equality of image points. Same-variant points compare canonical data;
/// points of different variants are equal iff they describe the same
/// determinant section (exact triple comparison).
bool image_equal(const ImagePoint& a, const ImagePoint& b);

/// Recovery of a (q, C) pair from a raw determinant triple, up to the
/// group action; nullopt when the triple is not of the form q (x) Sym2(C).
std::optional<std::pair<SectionOk, SectionTm1>> recover_qc(const Sym2Triple& t);

// ---- the two integrable shapes of Theorem det2 ---------------------------

/// phi = [[l, m], [m', -l]] (x) C' with l, m, m' in H^0(O(1)).
struct K1CommonFactor {
    SectionOk l{1, HomogeneousForm3(1)}, m{1, HomogeneousForm3(1)}, mp{1, HomogeneousForm3(1)};
    SectionTm1 Cprime;
};

/// phi = [[l, m], [1, -l]] (x) S with constant l, m and S in H^0(T).
struct K1ConstantShape {
    Scalar l, m;
    SectionT S;
};

std::optional<K1CommonFactor> k1_extract_common_factor(const CoHiggsK1& phi);
std::optional<K1ConstantShape> k1_extract_constant_shape(const CoHiggsK1& phi);

}  // namespace cohiggs
