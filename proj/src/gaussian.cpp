#include "cohiggs/gaussian.hpp"

#include "cohiggs/errors.hpp"

namespace cohiggs {

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (n == 0) throw DivisionByZero("inverse of zero Gaussian rational");
    return {re / n, -im / n};
}

std::optional<GaussianRational> gaussian_sqrt_exact(const GaussianRational& c) {
    if (c.is_zero()) return GaussianRational{};
    if (c.im == 0) {
        if (c.re > 0) {
            if (auto r = rational_sqrt_exact(c.re)) return GaussianRational{*r, 0};
            return std::nullopt;
        }
        // negative rational: root is purely imaginary if -re is a square
        if (auto r = rational_sqrt_exact(-c.re)) return GaussianRational{0, *r};
        return std::nullopt;
    }
    // (x + yi)^2 = a + bi with b != 0 forces x != 0, y = b/(2x),
    // and (x^2 + y^2)^2 = a^2 + b^2.
    auto n = rational_sqrt_exact(c.norm());
    if (!n) return std::nullopt;
    Rational x2 = (c.re + *n) / 2;
    auto x = rational_sqrt_exact(x2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = c.im / (2 * *x);
    GaussianRational root{*x, y};
    if (root * root != c) return std::nullopt;
    if (!root.lex_positive()) root = -root;
    return root;
}

std::string gaussian_to_string(const GaussianRational& g) {
    if (g.im == 0) return rational_to_string(g.re);
    std::string imag = rational_to_string(g.im < 0 ? Rational(-g.im) : g.im) + " i";
    if (g.re == 0) return (g.im < 0 ? "-" : "") + imag;
    return rational_to_string(g.re) + (g.im < 0 ? "-" : "+") + imag;
}

std::optional<GaussianRational> parse_gaussian(std::string_view s) {
    // strip whitespace
    std::string t;
    t.reserve(s.size());
    for (char ch : s)
        if (ch != ' ' && ch != '\t') t.push_back(ch);
    if (t.empty()) return std::nullopt;

    bool imag_tail = !t.empty() && (t.back() == 'i' || t.back() == 'I');
    if (imag_tail) t.pop_back();
    if (t.empty()) return imag_tail ? std::optional<GaussianRational>({0, 1}) : std::nullopt;

    // split at the last top-level +/- that is not the leading sign
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
        if (t[i] == '+' || t[i] == '-') {
            if (t[i - 1] == '/' || t[i - 1] == '+' || t[i - 1] == '-') continue;
            split = i;
            break;
        }
    }
    if (!imag_tail) {
        if (split != std::string::npos) return std::nullopt;  // "a+b" without i
        auto re = parse_rational(t);
        if (!re) return std::nullopt;
        return GaussianRational{*re, 0};
    }
    if (split == std::string::npos) {
        std::string_view imag{t};
        bool neg = false;
        if (!imag.empty() && (imag[0] == '+' || imag[0] == '-')) {
            neg = imag[0] == '-';
            imag.remove_prefix(1);
        }
        auto im = imag.empty() ? std::optional<Rational>(Rational(1)) : parse_rational(imag);
        if (!im) return std::nullopt;
        return GaussianRational{0, neg ? Rational(-*im) : *im};
    }
    auto re = parse_rational(std::string_view(t).substr(0, split));
    std::string_view imag = std::string_view(t).substr(split + 1);
    bool neg = t[split] == '-';
    auto im = imag.empty() ? std::optional<Rational>(Rational(1)) : parse_rational(imag);
    if (!re || !im) return std::nullopt;
    return GaussianRational{*re, neg ? Rational(-*im) : *im};
}

}  // namespace cohiggs
