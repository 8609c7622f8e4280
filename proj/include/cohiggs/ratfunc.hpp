#pragma once

#include "cohiggs/linalg.hpp"
#include "cohiggs/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cohiggs {

/// Rational function in the chart variables: num/den with den a nonzero
/// polynomial. Normalization cancels common monomial content and makes the
/// denominator monic in graded-lex order — enough for canonical forms here,
/// where denominators are monomials of the chart overlaps. Equality is
/// decided by cross-multiplication, so it is exact regardless.
class RatFunc {
public:
    RatFunc() : num_(), den_(AffinePoly::constant(Scalar(1L))) {}
    /* implicit */ RatFunc(AffinePoly p) : num_(std::move(p)), den_(AffinePoly::constant(Scalar(1L))) {}
    RatFunc(AffinePoly num, AffinePoly den);

    static RatFunc constant(Scalar c) { return RatFunc(AffinePoly::constant(std::move(c))); }

    const AffinePoly& num() const { return num_; }
    const AffinePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Exact value; throws SingularEvaluationPoint when den vanishes.
    Scalar eval(const Scalar& z, const Scalar& w) const;

    /// Composition with rational coordinate expressions.
    RatFunc substitute(const RatFunc& z_img, const RatFunc& w_img) const;

    RatFunc derivative_z() const;
    RatFunc derivative_w() const;

    /// The polynomial this function equals, if the division is exact.
    std::optional<AffinePoly> as_polynomial() const;

    std::string to_string() const;

private:
    void normalize();
    AffinePoly num_, den_;
};

inline RatFunc operator*(const Scalar& c, const RatFunc& f) { return RatFunc::constant(c) * f; }

/// Matrix of rational functions (transition matrices, twisted endomorphism
/// local forms). Square operations up to 3x3.
class RatFuncMatrix {
public:
    RatFuncMatrix() = default;
    RatFuncMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    RatFuncMatrix(std::initializer_list<std::initializer_list<RatFunc>> rows);

    static RatFuncMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RatFunc& at(int r, int c) { return a_[r * cols_ + c]; }
    const RatFunc& at(int r, int c) const { return a_[r * cols_ + c]; }

    RatFuncMatrix operator+(const RatFuncMatrix& o) const;
    RatFuncMatrix operator-(const RatFuncMatrix& o) const;
    RatFuncMatrix operator*(const RatFuncMatrix& o) const;
    RatFuncMatrix operator*(const RatFunc& f) const;
    RatFuncMatrix operator-() const;
    bool operator==(const RatFuncMatrix& o) const;
    bool operator!=(const RatFuncMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    RatFunc trace() const;
    RatFunc det() const;                // up to 3x3
    RatFuncMatrix inverse() const;      // up to 3x3, via adjugate
    ScalarMatrix eval(const Scalar& z, const Scalar& w) const;
    RatFuncMatrix substitute(const RatFunc& z_img, const RatFunc& w_img) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<RatFunc> a_;
};

/// AB - BA for square matrices of equal dimension.
RatFuncMatrix commutator(const RatFuncMatrix& a, const RatFuncMatrix& b);

}  // namespace cohiggs
