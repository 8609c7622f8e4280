#include "cohiggs/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace cohiggs {

std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

std::optional<Rational> rational_sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto num = int_sqrt_exact(boost::multiprecision::numerator(q));
    if (!num) return std::nullopt;
    auto den = int_sqrt_exact(boost::multiprecision::denominator(q));
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

std::string rational_to_string(const Rational& q) {
    const Int& num = boost::multiprecision::numerator(q);
    const Int& den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    const auto is_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(s)) return std::nullopt;
            return Rational(Int(std::string(s)));
        }
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Int d{std::string(den)};
        if (d == 0) return std::nullopt;
        return Rational(Int(std::string(num)), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace cohiggs
