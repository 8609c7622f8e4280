#pragma once

#include "cohiggs/gaussian.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cohiggs {

struct ScalarExt;

/// Exact scalar in a tower of quadratic extensions over Q(i).
///
/// Level 0 holds a Gaussian rational. Level n >= 1 holds x + y*sqrt(d) where
/// x, y live at most one nesting level below and d (the radicand) is a
/// non-square element of the field below. Representations are canonical:
/// a vanishing sqrt-coefficient demotes to the lower level at construction,
/// so equal values have equal nesting depth. The tower is capped at depth 2.
class Scalar {
public:
    static constexpr int kMaxLevel = 2;

    Scalar() = default;
    /* implicit */ Scalar(GaussianRational g) : base_(std::move(g)) {}
    /* implicit */ Scalar(Rational r) : base_(std::move(r)) {}
    /* implicit */ Scalar(long n) : base_(Rational(n)) {}

    /// x + y*sqrt(d). Demotes to x when y = 0; throws TowerDepthExceeded when
    /// the result would nest deeper than kMaxLevel. Callers must only pass
    /// radicands that are not squares in their own field (exact_sqrt and the
    /// parser enforce this), otherwise equality becomes representational.
    static Scalar ext(Scalar x, Scalar y, Scalar d);

    /// The adjoined symbol sqrt(d) itself: 0 + 1*sqrt(d).
    static Scalar sqrt_symbol(const Scalar& d) { return ext(Scalar(0L), Scalar(1L), d); }

    int level() const;
    bool is_zero() const { return !ext_ && base_.is_zero(); }
    bool is_gaussian() const { return !ext_; }
    const GaussianRational& gaussian() const;  // level 0 only

    const Scalar& x() const;         // level >= 1
    const Scalar& y() const;         // level >= 1
    const Scalar& radicand() const;  // level >= 1

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Coefficient vector over Q(i) in the basis of radical products,
    /// constant part first: level 0 -> [g]; level n -> flatten(x) ++ flatten(y).
    std::vector<GaussianRational> flatten() const;

    /// True when the first nonzero flattened coefficient is lex-positive.
    /// Extends the (re, im) rule of GaussianRational to tower elements.
    bool lex_positive() const;

    /// Diagnostic / canonical text form, e.g. "(1/2)+(3)*sqrt(2+1 i)".
    std::string to_string() const;

private:
    GaussianRational base_{};
    std::shared_ptr<const ScalarExt> ext_;
};

struct ScalarExt {
    Scalar x, y, d;
    int level;
};

struct SqrtResult {
    Scalar root;
    bool extended;  // true iff a new sqrt symbol was adjoined
};

/// Exact square root. Returns a root in the element's own field when one
/// exists (principal: lex-positive), otherwise adjoins sqrt(c) as a new
/// tower level. Throws TowerDepthExceeded past depth 2. sqrt(0) = 0.
SqrtResult exact_sqrt(const Scalar& c);

/// Square root within the element's own field only; nullopt if none exists.
std::optional<Scalar> sqrt_in_field(const Scalar& c);

}  // namespace cohiggs
