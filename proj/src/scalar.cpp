#include "cohiggs/scalar.hpp"

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

int max3(int a, int b, int c) { return std::max(a, std::max(b, c)); }

}  // namespace

Scalar Scalar::ext(Scalar x, Scalar y, Scalar d) {
    if (y.is_zero()) return x;
    int lvl = max3(x.level(), y.level(), d.level()) + 1;
    if (lvl > kMaxLevel)
        throw TowerDepthExceeded("extension tower deeper than " + std::to_string(kMaxLevel));
    Scalar s;
    s.ext_ = std::make_shared<const ScalarExt>(ScalarExt{std::move(x), std::move(y), std::move(d), lvl});
    return s;
}

int Scalar::level() const { return ext_ ? ext_->level : 0; }

const GaussianRational& Scalar::gaussian() const {
    if (ext_) throw IncompatibleExtension("gaussian() on a proper tower element");
    return base_;
}

const Scalar& Scalar::x() const {
    if (!ext_) throw IncompatibleExtension("x() on level-0 scalar");
    return ext_->x;
}

const Scalar& Scalar::y() const {
    if (!ext_) throw IncompatibleExtension("y() on level-0 scalar");
    return ext_->y;
}

const Scalar& Scalar::radicand() const {
    if (!ext_) throw IncompatibleExtension("radicand() on level-0 scalar");
    return ext_->d;
}

Scalar Scalar::operator-() const {
    if (!ext_) return Scalar(-base_);
    return ext(-ext_->x, -ext_->y, ext_->d);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!ext_ && !o.ext_) return Scalar(base_ + o.base_);
    if (level() == o.level()) {
        if (ext_->d != o.ext_->d)
            throw IncompatibleExtension("adding elements of different extensions: sqrt(" +
                                        ext_->d.to_string() + ") vs sqrt(" + o.ext_->d.to_string() +
                                        ")");
        return ext(ext_->x + o.ext_->x, ext_->y + o.ext_->y, ext_->d);
    }
    if (level() < o.level()) return ext(*this + o.ext_->x, o.ext_->y, o.ext_->d);
    return ext(ext_->x + o, ext_->y, ext_->d);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (!ext_ && !o.ext_) return Scalar(base_ * o.base_);
    if (level() == o.level()) {
        if (ext_->d != o.ext_->d)
            throw IncompatibleExtension("multiplying elements of different extensions");
        const Scalar& x1 = ext_->x;
        const Scalar& y1 = ext_->y;
        const Scalar& x2 = o.ext_->x;
        const Scalar& y2 = o.ext_->y;
        return ext(x1 * x2 + y1 * y2 * ext_->d, x1 * y2 + y1 * x2, ext_->d);
    }
    if (level() < o.level()) return ext(*this * o.ext_->x, *this * o.ext_->y, o.ext_->d);
    return ext(ext_->x * o, ext_->y * o, ext_->d);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    if (!ext_) return Scalar(base_.inverse());
    // (x + y sqrt(d))^-1 = (x - y sqrt(d)) / (x^2 - y^2 d)
    Scalar n = ext_->x * ext_->x - ext_->y * ext_->y * ext_->d;
    if (n.is_zero())
        throw DivisionByZero("zero norm in extension inverse (radicand is a square?)");
    Scalar ninv = n.inverse();
    return ext(ext_->x * ninv, -ext_->y * ninv, ext_->d);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (level() != o.level()) return false;
    if (!ext_) return base_ == o.base_;
    return ext_->d == o.ext_->d && ext_->x == o.ext_->x && ext_->y == o.ext_->y;
}

std::vector<GaussianRational> Scalar::flatten() const {
    std::vector<GaussianRational> out;
    struct Rec {
        static void run(const Scalar& s, std::vector<GaussianRational>& acc, int pad_level) {
            // pad so every element of the same nominal level contributes the
            // same number of coefficients, regardless of internal demotions
            if (s.is_gaussian()) {
                acc.push_back(s.gaussian());
                for (int i = 1; i < (1 << pad_level); ++i) acc.emplace_back();
                return;
            }
            run(s.x(), acc, pad_level - 1);
            run(s.y(), acc, pad_level - 1);
        }
    };
    Rec::run(*this, out, level());
    return out;
}

bool Scalar::lex_positive() const {
    for (const auto& g : flatten()) {
        if (g.is_zero()) continue;
        return g.lex_positive();
    }
    return false;
}

std::string Scalar::to_string() const {
    if (!ext_) return gaussian_to_string(base_);
    return "(" + ext_->x.to_string() + ")+(" + ext_->y.to_string() + ")*sqrt(" +
           ext_->d.to_string() + ")";
}

namespace {

Scalar principal(Scalar r) { return r.lex_positive() || r.is_zero() ? r : -r; }

}  // namespace

std::optional<Scalar> sqrt_in_field(const Scalar& c) {
    if (c.is_zero()) return Scalar();
    if (c.is_gaussian()) {
        if (auto g = gaussian_sqrt_exact(c.gaussian())) return Scalar(*g);
        return std::nullopt;
    }
    // c = x + y sqrt(d), y != 0. A root u + v sqrt(d) requires the norm
    // x^2 - y^2 d to be a square n^2 in the field below, and (x +- n)/2 to be
    // a square there as well.
    const Scalar& x = c.x();
    const Scalar& y = c.y();
    const Scalar& d = c.radicand();
    auto n = sqrt_in_field(x * x - y * y * d);
    if (!n) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Scalar cand_n = sign == 0 ? *n : -*n;
        auto u = sqrt_in_field((x + cand_n) / Scalar(2L));
        if (!u || u->is_zero()) continue;
        Scalar v = y / (Scalar(2L) * *u);
        Scalar root = Scalar::ext(*u, v, d);
        if (root * root == c) return principal(root);
    }
    return std::nullopt;
}

SqrtResult exact_sqrt(const Scalar& c) {
    if (c.is_zero()) return {Scalar(), false};
    if (auto r = sqrt_in_field(c)) return {principal(*r), false};
    if (c.level() >= Scalar::kMaxLevel)
        throw TowerDepthExceeded("sqrt would require a third nesting level");
    return {Scalar::sqrt_symbol(c), true};
}

}  // namespace cohiggs
