#pragma once

#include "cohiggs/charts.hpp"

#include <array>
#include <optional>
#include <utility>

namespace cohiggs {

/// Global section of O(k): a homogeneous form of degree k.
struct SectionOk {
    int k = 0;
    HomogeneousForm3 form{0};

    SectionOk() = default;
    SectionOk(int k_, HomogeneousForm3 f);

    bool is_zero() const { return form.is_zero(); }
    AffinePoly local_rep(Chart c) const { return dehomogenize(form, chart_index(c)); }

    SectionOk operator*(const Scalar& s) const { return SectionOk(k, form * s); }
    SectionOk operator-() const { return SectionOk(k, -form); }
    bool operator==(const SectionOk& o) const { return k == o.k && form == o.form; }
    bool operator!=(const SectionOk& o) const { return !(*this == o); }
};

/// Global section of T(-1), modeled as the Euler-sequence quotient of a
/// coordinate triple: v maps to the class of the constant vector v mod the
/// tautological line. Vanishes exactly at the point [v0 : v1 : v2].
struct SectionTm1 {
    std::array<Scalar, 3> v{};

    bool is_zero() const { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

    /// Chart representative (s1, s2) of s1*e1 + s2*e2. On chart 0 this is
    /// (v0 - z*v2, v1 - w*v2).
    std::pair<AffinePoly, AffinePoly> local_rep(Chart c) const;

    SectionTm1 operator*(const Scalar& s) const { return {{v[0] * s, v[1] * s, v[2] * s}}; }
    SectionTm1 operator-() const { return {{-v[0], -v[1], -v[2]}}; }
    bool operator==(const SectionTm1& o) const { return v == o.v; }
    bool operator!=(const SectionTm1& o) const { return !(*this == o); }
};

/// Global section of T, modeled as a traceless 3x3 matrix m acting as the
/// linear vector field x -> m x (sections of T are 3x3 matrices modulo
/// scalars; the traceless representative is the canonical one).
struct SectionT {
    ScalarMatrix m{3, 3};

    SectionT() = default;
    explicit SectionT(ScalarMatrix mat);  // subtracts trace/3

    bool is_zero() const { return m.is_zero(); }
    std::pair<AffinePoly, AffinePoly> local_rep(Chart c) const;

    SectionT operator*(const Scalar& s) const;
    SectionT operator-() const;
    bool operator==(const SectionT& o) const { return m == o.m; }
    bool operator!=(const SectionT& o) const { return !(*this == o); }
};

/// Chart-0 components (t11, t12, t22) of a symmetric-square element
/// t11*e1^2 + 2*t12*e1*e2 + t22*e2^2. The middle slot stores the product
/// s1*s2 itself; the factor 2 lives in the basis pairing.
struct Sym2Triple {
    std::array<AffinePoly, 3> t{};

    bool is_zero() const { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

    Sym2Triple operator+(const Sym2Triple& o) const {
        return {{t[0] + o.t[0], t[1] + o.t[1], t[2] + o.t[2]}};
    }
    Sym2Triple operator-() const { return {{-t[0], -t[1], -t[2]}}; }
    Sym2Triple scaled(const AffinePoly& q) const { return {{t[0] * q, t[1] * q, t[2] * q}}; }
    Sym2Triple scaled(const Scalar& s) const { return {{t[0] * s, t[1] * s, t[2] * s}}; }
    bool operator==(const Sym2Triple& o) const { return t == o.t; }
    bool operator!=(const Sym2Triple& o) const { return !(*this == o); }
};

/// (s1^2, s1 s2, s2^2) from a chart representative.
Sym2Triple sym2_of_pair(const std::pair<AffinePoly, AffinePoly>& rep);

/// Symmetric square of a section, on the given chart (chart 0 by default,
/// which is the stored convention for Sym2Triple).
Sym2Triple sym2_section(const SectionTm1& c, Chart chart = Chart::c0);
Sym2Triple sym2_section(const SectionT& a, Chart chart = Chart::c0);

/// The unique zero of a nonzero section of T(-1): [v0 : v1 : v2].
PointP2 zero_point(const SectionTm1& c);

/// Inverse of sym2_section up to sign. Succeeds iff t is the symmetric
/// square of a global T(-1) section over the coefficient tower; the
/// returned representative is the lex-positive one of {C, -C}.
/// Throws NotASquare otherwise (e.g. when t12^2 != t11*t22).
/// allow_extension permits one sqrt adjunction for the leading coefficient.
SectionTm1 recover_sqrt(const Sym2Triple& t, bool allow_extension = false);

/// Same inversion for symmetric squares of tangent-bundle sections.
SectionT recover_tangent_sqrt(const Sym2Triple& t, bool allow_extension = false);

/// Fits a global T(-1) section to a chart-0 representative; nullopt when
/// the pair is not of the global shape (v0 - z v2, v1 - w v2).
std::optional<SectionTm1> tm1_from_chart0(const std::pair<AffinePoly, AffinePoly>& rep);

/// Fits a global T section (traceless matrix) to a chart-0 representative.
std::optional<SectionT> tangent_from_chart0(const std::pair<AffinePoly, AffinePoly>& rep);

}  // namespace cohiggs
