#pragma once

#include "cohiggs/rational.hpp"

#include <optional>
#include <string>

namespace cohiggs {

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
    Rational re{};
    Rational im{};

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(Rational r) : re(std::move(r)) {}
    explicit GaussianRational(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    /// re^2 + im^2 (the field norm down to Q).
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const;
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// Lexicographic sign: re > 0, or re = 0 and im > 0. Zero is not positive.
    bool lex_positive() const { return re > 0 || (re == 0 && im > 0); }
};

/// Principal square root inside Q(i), if the element is a square there.
/// Principal choice: the root with lex_positive() (for nonzero input).
std::optional<GaussianRational> gaussian_sqrt_exact(const GaussianRational& c);

/// "a/b", "a/b+c/d i", "a/b-c/d i", or "c/d i".
std::string gaussian_to_string(const GaussianRational& g);

std::optional<GaussianRational> parse_gaussian(std::string_view s);

}  // namespace cohiggs
