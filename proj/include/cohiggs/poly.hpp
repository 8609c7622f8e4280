#pragma once

#include "cohiggs/scalar.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace cohiggs {

/// Exponent pair for the chart variables (z, w).
struct Exp2 {
    int z = 0;
    int w = 0;
    int total() const { return z + w; }
    bool operator==(const Exp2& o) const { return z == o.z && w == o.w; }
};

/// Graded-lexicographic order: by total degree, then by z-exponent.
struct GradedLexLess {
    bool operator()(const Exp2& a, const Exp2& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        if (a.z != b.z) return a.z < b.z;
        return a.w < b.w;
    }
};

/// Sparse bivariate polynomial in the chart coordinates (z, w) with Scalar
/// coefficients. Zero coefficients are never stored; term order is
/// graded-lex, so iteration, serialization and equality are deterministic.
class AffinePoly {
public:
    using TermMap = std::map<Exp2, Scalar, GradedLexLess>;

    AffinePoly() = default;
    static AffinePoly constant(Scalar c);
    static AffinePoly var_z();
    static AffinePoly var_w();
    static AffinePoly monomial(int ez, int ew, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    /// Max total exponent; -1 for the zero polynomial.
    int degree() const;
    bool is_constant() const { return degree() <= 0; }
    const TermMap& terms() const { return terms_; }
    Scalar coeff(int ez, int ew) const;
    /// Leading term in graded-lex order (throws on zero polynomial).
    std::pair<Exp2, Scalar> leading() const;
    Scalar constant_term() const { return coeff(0, 0); }

    AffinePoly operator-() const;
    AffinePoly operator+(const AffinePoly& o) const;
    AffinePoly operator-(const AffinePoly& o) const;
    AffinePoly operator*(const AffinePoly& o) const;
    AffinePoly operator*(const Scalar& c) const;
    AffinePoly& operator+=(const AffinePoly& o) { return *this = *this + o; }
    AffinePoly& operator-=(const AffinePoly& o) { return *this = *this - o; }
    AffinePoly& operator*=(const AffinePoly& o) { return *this = *this * o; }

    bool operator==(const AffinePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const AffinePoly& o) const { return !(*this == o); }

    Scalar eval(const Scalar& z, const Scalar& w) const;

    /// Exact composition p(z_img, w_img).
    AffinePoly substitute(const AffinePoly& z_img, const AffinePoly& w_img) const;

    AffinePoly derivative_z() const;
    AffinePoly derivative_w() const;

    /// Division with remainder by a single nonzero divisor (graded-lex
    /// leading-term reduction). remainder == 0 iff divisor divides exactly.
    struct DivResult;
    DivResult divide(const AffinePoly& divisor) const;
    std::optional<AffinePoly> divide_exact(const AffinePoly& divisor) const;

    /// Polynomial square root within the current coefficient field; when
    /// allow_extension, the leading coefficient may adjoin one sqrt level.
    std::optional<AffinePoly> sqrt_exact(bool allow_extension = false) const;

    /// Deterministic text form, e.g. "2*z^2*w - 1/2*w + 3".
    std::string to_string() const;

    void set_term(const Exp2& e, Scalar c);  // inserts/erases keeping invariants

private:
    TermMap terms_;
};

inline AffinePoly operator*(const Scalar& c, const AffinePoly& p) { return p * c; }

struct AffinePoly::DivResult {
    AffinePoly quotient, remainder;
};

/// Exponent triple for homogeneous coordinates (x0, x1, x2).
struct Exp3 {
    int e0 = 0, e1 = 0, e2 = 0;
    int total() const { return e0 + e1 + e2; }
    bool operator==(const Exp3& o) const { return e0 == o.e0 && e1 == o.e1 && e2 == o.e2; }
    bool operator<(const Exp3& o) const {
        if (e0 != o.e0) return e0 < o.e0;
        if (e1 != o.e1) return e1 < o.e1;
        return e2 < o.e2;
    }
};

/// Homogeneous trivariate form of a fixed degree, sparse.
class HomogeneousForm3 {
public:
    using TermMap = std::map<Exp3, Scalar>;

    explicit HomogeneousForm3(int degree = 0) : degree_(degree) {}
    static HomogeneousForm3 monomial(int e0, int e1, int e2, Scalar c);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Scalar coeff(int e0, int e1, int e2) const;

    HomogeneousForm3 operator-() const;
    HomogeneousForm3 operator+(const HomogeneousForm3& o) const;
    HomogeneousForm3 operator-(const HomogeneousForm3& o) const;
    HomogeneousForm3 operator*(const HomogeneousForm3& o) const;  // degrees add
    HomogeneousForm3 operator*(const Scalar& c) const;

    bool operator==(const HomogeneousForm3& o) const {
        return (is_zero() && o.is_zero()) || (degree_ == o.degree_ && terms_ == o.terms_);
    }
    bool operator!=(const HomogeneousForm3& o) const { return !(*this == o); }

    Scalar eval(const Scalar& x0, const Scalar& x1, const Scalar& x2) const;

    std::string to_string() const;

    void set_term(const Exp3& e, Scalar c);

private:
    int degree_;
    TermMap terms_;
};

/// Chart-0 homogenization: z -> x0/x2, w -> x1/x2, cleared to target_degree.
/// Throws DegreeExceeded when deg(p) > target_degree.
HomogeneousForm3 homogenize(const AffinePoly& p, int target_degree);

/// Sets the chart's unit coordinate to 1. Chart index c uses affine
/// coordinates (z, w) = (x_a, x_b) with (a, b, unit) = (0,1,2), (0,2,1),
/// (1,2,0) for c = 0, 1, 2 respectively.
AffinePoly dehomogenize(const HomogeneousForm3& f, int chart_index);

}  // namespace cohiggs
