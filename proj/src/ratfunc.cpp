#include "cohiggs/ratfunc.hpp"

#include "cohiggs/errors.hpp"

#include <algorithm>

namespace cohiggs {

RatFunc::RatFunc(AffinePoly num, AffinePoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

namespace {

Exp2 content_exponents(const AffinePoly& p) {
    Exp2 m{INT32_MAX, INT32_MAX};
    for (const auto& [e, c] : p.terms()) {
        m.z = std::min(m.z, e.z);
        m.w = std::min(m.w, e.w);
    }
    return m;
}

AffinePoly shift_down(const AffinePoly& p, const Exp2& m) {
    AffinePoly out;
    for (const auto& [e, c] : p.terms()) out.set_term(Exp2{e.z - m.z, e.w - m.w}, c);
    return out;
}

}  // namespace

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = AffinePoly::constant(Scalar(1L));
        return;
    }
    Exp2 cn = content_exponents(num_);
    Exp2 cd = content_exponents(den_);
    Exp2 common{std::min(cn.z, cd.z), std::min(cn.w, cd.w)};
    if (common.z > 0 || common.w > 0) {
        num_ = shift_down(num_, common);
        den_ = shift_down(den_, common);
    }
    Scalar lead = den_.leading().second;
    if (lead != Scalar(1L)) {
        Scalar inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

Scalar RatFunc::eval(const Scalar& z, const Scalar& w) const {
    Scalar d = den_.eval(z, w);
    if (d.is_zero())
        throw SingularEvaluationPoint("denominator vanishes at evaluation point");
    return num_.eval(z, w) / d;
}

RatFunc RatFunc::substitute(const RatFunc& z_img, const RatFunc& w_img) const {
    const auto subst_poly = [&](const AffinePoly& p) {
        RatFunc acc;
        for (const auto& [e, c] : p.terms()) {
            RatFunc t = RatFunc::constant(c);
            for (int i = 0; i < e.z; ++i) t *= z_img;
            for (int i = 0; i < e.w; ++i) t *= w_img;
            acc += t;
        }
        return acc;
    };
    return subst_poly(num_) / subst_poly(den_);
}

RatFunc RatFunc::derivative_z() const {
    return RatFunc(num_.derivative_z() * den_ - num_ * den_.derivative_z(), den_ * den_);
}

RatFunc RatFunc::derivative_w() const {
    return RatFunc(num_.derivative_w() * den_ - num_ * den_.derivative_w(), den_ * den_);
}

std::optional<AffinePoly> RatFunc::as_polynomial() const {
    if (num_.is_zero()) return AffinePoly();
    return num_.divide_exact(den_);
}

std::string RatFunc::to_string() const {
    if (den_ == AffinePoly::constant(Scalar(1L))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFuncMatrix::RatFuncMatrix(std::initializer_list<std::initializer_list<RatFunc>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
        for (const auto& v : r) a_.push_back(v);
    }
}

RatFuncMatrix RatFuncMatrix::identity(int n) {
    RatFuncMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc::constant(Scalar(1L));
    return m;
}

RatFuncMatrix RatFuncMatrix::operator+(const RatFuncMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
    RatFuncMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

RatFuncMatrix RatFuncMatrix::operator-(const RatFuncMatrix& o) const { return *this + (-o); }

RatFuncMatrix RatFuncMatrix::operator-() const {
    RatFuncMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

RatFuncMatrix RatFuncMatrix::operator*(const RatFuncMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
    RatFuncMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            RatFunc acc;
            for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
            m.at(i, j) = std::move(acc);
        }
    return m;
}

RatFuncMatrix RatFuncMatrix::operator*(const RatFunc& f) const {
    RatFuncMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * f;
    return m;
}

bool RatFuncMatrix::operator==(const RatFuncMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool RatFuncMatrix::is_zero() const {
    for (const auto& f : a_)
        if (!f.is_zero()) return false;
    return true;
}

RatFunc RatFuncMatrix::trace() const {
    RatFunc acc;
    for (int i = 0; i < std::min(rows_, cols_); ++i) acc += at(i, i);
    return acc;
}

RatFunc RatFuncMatrix::det() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    switch (rows_) {
        case 0: return RatFunc::constant(Scalar(1L));
        case 1: return at(0, 0);
        case 2: return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        case 3:
            return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                   at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                   at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        default: throw DimensionMismatch("determinant only implemented up to 3x3");
    }
}

RatFuncMatrix RatFuncMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    RatFunc d = det();
    if (d.is_zero()) throw DivisionByZero("inverse of singular matrix");
    RatFunc dinv = d.inverse();
    if (rows_ == 1) {
        RatFuncMatrix m(1, 1);
        m.at(0, 0) = dinv;
        return m;
    }
    if (rows_ == 2) {
        RatFuncMatrix m(2, 2);
        m.at(0, 0) = at(1, 1) * dinv;
        m.at(0, 1) = -at(0, 1) * dinv;
        m.at(1, 0) = -at(1, 0) * dinv;
        m.at(1, 1) = at(0, 0) * dinv;
        return m;
    }
    if (rows_ == 3) {
        RatFuncMatrix m(3, 3);
        const auto cof = [&](int r, int c) {
            int r0 = (r + 1) % 3, r1 = (r + 2) % 3;
            int c0 = (c + 1) % 3, c1 = (c + 2) % 3;
            if (r0 > r1) std::swap(r0, r1);
            if (c0 > c1) std::swap(c0, c1);
            RatFunc minor = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
            return ((r + c) % 2 == 0) ? minor : -minor;
        };
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = cof(c, r) * dinv;  // adjugate transpose
        return m;
    }
    throw DimensionMismatch("inverse only implemented up to 3x3");
}

ScalarMatrix RatFuncMatrix::eval(const Scalar& z, const Scalar& w) const {
    ScalarMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).eval(z, w);
    return m;
}

RatFuncMatrix RatFuncMatrix::substitute(const RatFunc& z_img, const RatFunc& w_img) const {
    RatFuncMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).substitute(z_img, w_img);
    return m;
}

RatFuncMatrix commutator(const RatFuncMatrix& a, const RatFuncMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw DimensionMismatch("commutator needs square matrices of equal dimension");
    return a * b - b * a;
}

}  // namespace cohiggs
