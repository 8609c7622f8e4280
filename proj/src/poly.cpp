#include "cohiggs/poly.hpp"

#include "cohiggs/errors.hpp"

#include <sstream>

namespace cohiggs {

AffinePoly AffinePoly::constant(Scalar c) { return monomial(0, 0, std::move(c)); }
AffinePoly AffinePoly::var_z() { return monomial(1, 0, Scalar(1L)); }
AffinePoly AffinePoly::var_w() { return monomial(0, 1, Scalar(1L)); }

AffinePoly AffinePoly::monomial(int ez, int ew, Scalar c) {
    AffinePoly p;
    if (!c.is_zero()) p.terms_.emplace(Exp2{ez, ew}, std::move(c));
    return p;
}

int AffinePoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }

Scalar AffinePoly::coeff(int ez, int ew) const {
    auto it = terms_.find(Exp2{ez, ew});
    return it == terms_.end() ? Scalar() : it->second;
}

std::pair<Exp2, Scalar> AffinePoly::leading() const {
    if (terms_.empty()) throw ZeroInput("leading term of zero polynomial");
    return *terms_.rbegin();
}

void AffinePoly::set_term(const Exp2& e, Scalar c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

AffinePoly AffinePoly::operator-() const {
    AffinePoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

AffinePoly AffinePoly::operator+(const AffinePoly& o) const {
    AffinePoly out = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_.emplace(e, c);
        } else {
            Scalar s = it->second + c;
            if (s.is_zero())
                out.terms_.erase(it);
            else
                it->second = std::move(s);
        }
    }
    return out;
}

AffinePoly AffinePoly::operator-(const AffinePoly& o) const { return *this + (-o); }

AffinePoly AffinePoly::operator*(const AffinePoly& o) const {
    AffinePoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp2 e{e1.z + e2.z, e1.w + e2.w};
            Scalar prod = c1 * c2;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                if (!prod.is_zero()) out.terms_.emplace(e, std::move(prod));
            } else {
                Scalar s = it->second + prod;
                if (s.is_zero())
                    out.terms_.erase(it);
                else
                    it->second = std::move(s);
            }
        }
    return out;
}

AffinePoly AffinePoly::operator*(const Scalar& c) const {
    if (c.is_zero()) return {};
    AffinePoly out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

Scalar AffinePoly::eval(const Scalar& z, const Scalar& w) const {
    Scalar acc;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int i = 0; i < e.z; ++i) t *= z;
        for (int i = 0; i < e.w; ++i) t *= w;
        acc += t;
    }
    return acc;
}

AffinePoly AffinePoly::substitute(const AffinePoly& z_img, const AffinePoly& w_img) const {
    AffinePoly acc;
    for (const auto& [e, c] : terms_) {
        AffinePoly t = AffinePoly::constant(c);
        for (int i = 0; i < e.z; ++i) t *= z_img;
        for (int i = 0; i < e.w; ++i) t *= w_img;
        acc += t;
    }
    return acc;
}

AffinePoly AffinePoly::derivative_z() const {
    AffinePoly out;
    for (const auto& [e, c] : terms_)
        if (e.z > 0) out.terms_.emplace(Exp2{e.z - 1, e.w}, c * Scalar(long(e.z)));
    return out;
}

AffinePoly AffinePoly::derivative_w() const {
    AffinePoly out;
    for (const auto& [e, c] : terms_)
        if (e.w > 0) out.terms_.emplace(Exp2{e.z, e.w - 1}, c * Scalar(long(e.w)));
    return out;
}

AffinePoly::DivResult AffinePoly::divide(const AffinePoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    AffinePoly quotient, remainder;
    AffinePoly rest = *this;
    const auto [lead_e, lead_c] = divisor.leading();
    while (!rest.is_zero()) {
        auto [e, c] = rest.leading();
        if (e.z >= lead_e.z && e.w >= lead_e.w) {
            AffinePoly t = AffinePoly::monomial(e.z - lead_e.z, e.w - lead_e.w, c / lead_c);
            quotient += t;
            rest -= t * divisor;
        } else {
            AffinePoly t = AffinePoly::monomial(e.z, e.w, c);
            remainder += t;
            rest -= t;
        }
    }
    return {quotient, remainder};
}

std::optional<AffinePoly> AffinePoly::divide_exact(const AffinePoly& divisor) const {
    auto r = divide(divisor);
    if (!r.remainder.is_zero()) return std::nullopt;
    return r.quotient;
}

std::optional<AffinePoly> AffinePoly::sqrt_exact(bool allow_extension) const {
    if (is_zero()) return AffinePoly();
    auto [le, lc] = leading();
    if (le.z % 2 != 0 || le.w % 2 != 0) return std::nullopt;
    Scalar root_c;
    if (allow_extension) {
        try {
            root_c = exact_sqrt(lc).root;
        } catch (const TowerDepthExceeded&) {
            return std::nullopt;
        }
    } else {
        auto r = sqrt_in_field(lc);
        if (!r) return std::nullopt;
        root_c = *r;
    }
    AffinePoly root = AffinePoly::monomial(le.z / 2, le.w / 2, root_c);
    const Exp2 root_lead{le.z / 2, le.w / 2};
    const GradedLexLess less{};
    AffinePoly diff = *this - root * root;
    while (!diff.is_zero()) {
        auto [e, c] = diff.leading();
        // next term t satisfies 2 * LT(root) * t = LT(diff)
        if (e.z < root_lead.z || e.w < root_lead.w) return std::nullopt;
        Exp2 te{e.z - root_lead.z, e.w - root_lead.w};
        if (!less(te, root_lead)) return std::nullopt;  // genuine squares descend strictly
        AffinePoly t = AffinePoly::monomial(te.z, te.w, c / (Scalar(2L) * root_c));
        root += t;
        diff = *this - root * root;
    }
    return root;
}

namespace {

std::string term_to_string(const Scalar& c, const std::string& vars) {
    std::string cs = c.to_string();
    bool simple = c.is_gaussian() && c.gaussian().im == 0;
    if (vars.empty()) return cs;
    if (simple && c == Scalar(1L)) return vars;
    if (simple && c == Scalar(-1L)) return "-" + vars;
    if (!simple) cs = "(" + cs + ")";
    return cs + "*" + vars;
}

std::string var_power(const std::string& v, int e) {
    if (e == 0) return "";
    if (e == 1) return v;
    return v + "^" + std::to_string(e);
}

}  // namespace

std::string AffinePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string vars = var_power("z", it->first.z);
        std::string vw = var_power("w", it->first.w);
        if (!vars.empty() && !vw.empty()) vars += "*";
        vars += vw;
        std::string t = term_to_string(it->second, vars);
        if (!first && !t.empty() && t[0] != '-') os << " + ";
        if (!first && !t.empty() && t[0] == '-') {
            os << " - ";
            t = t.substr(1);
        }
        os << t;
        first = false;
    }
    return os.str();
}

HomogeneousForm3 HomogeneousForm3::monomial(int e0, int e1, int e2, Scalar c) {
    HomogeneousForm3 f(e0 + e1 + e2);
    if (!c.is_zero()) f.terms_.emplace(Exp3{e0, e1, e2}, std::move(c));
    return f;
}

Scalar HomogeneousForm3::coeff(int e0, int e1, int e2) const {
    auto it = terms_.find(Exp3{e0, e1, e2});
    return it == terms_.end() ? Scalar() : it->second;
}

void HomogeneousForm3::set_term(const Exp3& e, Scalar c) {
    if (e.total() != degree_)
        throw DegreeExceeded("homogeneous term of degree " + std::to_string(e.total()) +
                             " in form of degree " + std::to_string(degree_));
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

HomogeneousForm3 HomogeneousForm3::operator-() const {
    HomogeneousForm3 out(degree_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

HomogeneousForm3 HomogeneousForm3::operator+(const HomogeneousForm3& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw DegreeExceeded("adding forms of different degrees");
    HomogeneousForm3 out = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_.emplace(e, c);
        } else {
            Scalar s = it->second + c;
            if (s.is_zero())
                out.terms_.erase(it);
            else
                it->second = std::move(s);
        }
    }
    return out;
}

HomogeneousForm3 HomogeneousForm3::operator-(const HomogeneousForm3& o) const {
    return *this + (-o);
}

HomogeneousForm3 HomogeneousForm3::operator*(const HomogeneousForm3& o) const {
    HomogeneousForm3 out(degree_ + o.degree_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp3 e{e1.e0 + e2.e0, e1.e1 + e2.e1, e1.e2 + e2.e2};
            Scalar prod = c1 * c2;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                if (!prod.is_zero()) out.terms_.emplace(e, std::move(prod));
            } else {
                Scalar s = it->second + prod;
                if (s.is_zero())
                    out.terms_.erase(it);
                else
                    it->second = std::move(s);
            }
        }
    return out;
}

HomogeneousForm3 HomogeneousForm3::operator*(const Scalar& c) const {
    HomogeneousForm3 out(degree_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

Scalar HomogeneousForm3::eval(const Scalar& x0, const Scalar& x1, const Scalar& x2) const {
    Scalar acc;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int i = 0; i < e.e0; ++i) t *= x0;
        for (int i = 0; i < e.e1; ++i) t *= x1;
        for (int i = 0; i < e.e2; ++i) t *= x2;
        acc += t;
    }
    return acc;
}

std::string HomogeneousForm3::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string vars = var_power("x0", e.e0);
        for (const auto& [v, exp] : {std::pair{"x1", e.e1}, std::pair{"x2", e.e2}}) {
            std::string vp = var_power(v, exp);
            if (!vars.empty() && !vp.empty()) vars += "*";
            vars += vp;
        }
        std::string t = term_to_string(c, vars);
        if (!first && !t.empty() && t[0] != '-') os << " + ";
        if (!first && !t.empty() && t[0] == '-') {
            os << " - ";
            t = t.substr(1);
        }
        os << t;
        first = false;
    }
    return os.str();
}

HomogeneousForm3 homogenize(const AffinePoly& p, int target_degree) {
    if (p.degree() > target_degree)
        throw DegreeExceeded("polynomial degree " + std::to_string(p.degree()) +
                             " exceeds homogenization target " + std::to_string(target_degree));
    HomogeneousForm3 f(target_degree);
    for (const auto& [e, c] : p.terms())
        f.set_term(Exp3{e.z, e.w, target_degree - e.z - e.w}, c);
    return f;
}

AffinePoly dehomogenize(const HomogeneousForm3& f, int chart_index) {
    AffinePoly p;
    for (const auto& [e, c] : f.terms()) {
        Exp2 out;
        switch (chart_index) {
            case 0: out = {e.e0, e.e1}; break;
            case 1: out = {e.e0, e.e2}; break;
            case 2: out = {e.e1, e.e2}; break;
            default: throw DimensionMismatch("chart index out of range");
        }
        p.set_term(out, p.coeff(out.z, out.w) + c);
    }
    return p;
}

}  // namespace cohiggs
