#include "cohiggs/classify.hpp"

#include "cohiggs/conic.hpp"
#include "cohiggs/errors.hpp"

#include <set>

namespace cohiggs {

namespace {

const AffinePoly& Z() {
    static const AffinePoly z = AffinePoly::var_z();
    return z;
}
const AffinePoly& W() {
    static const AffinePoly w = AffinePoly::var_w();
    return w;
}

}  // namespace

std::string square_case_name(SquareCase c) {
    switch (c) {
        case SquareCase::i: return "i";
        case SquareCase::ii: return "ii";
        case SquareCase::iii: return "iii";
        case SquareCase::iv: return "iv";
    }
    return "?";
}

SquareDecomposition complete_square(const AffinePoly& s) {
    if (s.degree() > 2) throw DegreeExceeded("complete_square needs degree <= 2");
    const Scalar a = s.coeff(2, 0);
    const Scalar b = s.coeff(1, 1);
    const Scalar c = s.coeff(0, 2);
    const Scalar d = s.coeff(1, 0);
    const Scalar e = s.coeff(0, 1);
    const Scalar f = s.coeff(0, 0);
    const Scalar two(2L), four(4L);

    SquareDecomposition out;
    if (!a.is_zero()) {
        out.case_tag = SquareCase::i;
        auto ra = exact_sqrt(a);
        out.extended = ra.extended;
        const Scalar& sa = ra.root;
        out.lambda = Z() * sa + W() * (b / (two * sa)) + AffinePoly::constant(d / (two * sa));
        out.mu = W() * W() * (c - b * b / (four * a)) + W() * (e - b * d / (two * a)) +
                 AffinePoly::constant(f - d * d / (four * a));
    } else if (!c.is_zero()) {
        out.case_tag = SquareCase::ii;
        auto rc = exact_sqrt(c);
        out.extended = rc.extended;
        const Scalar& sc = rc.root;
        out.lambda = W() * sc + Z() * (b / (two * sc)) + AffinePoly::constant(e / (two * sc));
        out.mu = Z() * Z() * (-(b * b) / (four * c)) + Z() * (d - b * e / (two * c)) +
                 AffinePoly::constant(f - e * e / (four * c));
    } else if (!b.is_zero()) {
        out.case_tag = SquareCase::iii;
        out.rotated = true;
        auto rb = exact_sqrt(b);
        out.extended = rb.extended;
        const Scalar& sb = rb.root;
        // rotated frame: z = z' + w', w = z' - w'
        out.lambda_rotated = Z() * sb + AffinePoly::constant((d + e) / (two * sb));
        out.mu_rotated = W() * W() * (-b) + W() * (d - e) +
                         AffinePoly::constant(f - (d + e) * (d + e) / (four * b));
        // back to original coordinates: z' = (z+w)/2, w' = (z-w)/2
        const Scalar half = Scalar(1L) / two;
        AffinePoly zp = (Z() + W()) * half;
        AffinePoly wp = (Z() - W()) * half;
        out.lambda = out.lambda_rotated.substitute(zp, wp);
        out.mu = out.mu_rotated.substitute(zp, wp);
    } else {
        out.case_tag = SquareCase::iv;
        out.mu = s;
    }
    return out;
}

namespace {

/// Factors a univariate quadratic alpha t^2 + beta t + gamma (in the poly
/// `t`) into two degree <= 1 polynomials. May adjoin one square root.
std::pair<AffinePoly, AffinePoly> split_univariate(const Scalar& alpha, const Scalar& beta,
                                                   const Scalar& gamma, const AffinePoly& t,
                                                   bool& extended) {
    if (alpha.is_zero())
        return {t * beta + AffinePoly::constant(gamma), AffinePoly::constant(Scalar(1L))};
    auto disc = exact_sqrt(beta * beta - Scalar(4L) * alpha * gamma);
    extended = extended || disc.extended;
    Scalar inv2a = (Scalar(2L) * alpha).inverse();
    Scalar r1 = (-beta + disc.root) * inv2a;
    Scalar r2 = (-beta - disc.root) * inv2a;
    return {(t - AffinePoly::constant(r1)) * alpha, t - AffinePoly::constant(r2)};
}

}  // namespace

LinearProductDecomposition decompose_linear_product(const AffinePoly& s) {
    if (s.degree() > 2) throw DegreeExceeded("decompose_linear_product needs degree <= 2");
    LinearProductDecomposition out;
    if (s.is_zero()) return out;
    if (s.degree() <= 1) {
        out.mu = s;
        out.mu_prime = AffinePoly::constant(Scalar(1L));
        return out;
    }
    // factorable conic first: the decomposition is then purely a product
    ConicClass cls = conic_rank(SectionOk(2, homogenize(s, 2)));
    if (cls.rank == 1) {
        out.lambda = dehomogenize(cls.factors[0], 0);
        return out;
    }
    if (cls.rank == 2) {
        out.mu = dehomogenize(cls.factors[0], 0);
        out.mu_prime = dehomogenize(cls.factors[1], 0);
        return out;
    }
    // irreducible: complete the square and split the univariate remainder
    SquareDecomposition sq = complete_square(s);
    out.extended = sq.extended;
    out.lambda = sq.lambda;
    const AffinePoly& rem = sq.rotated ? sq.mu_rotated : sq.mu;
    AffinePoly var;
    Scalar alpha, beta, gamma = rem.coeff(0, 0);
    switch (sq.case_tag) {
        case SquareCase::i:
        case SquareCase::iii:
            var = W();
            alpha = rem.coeff(0, 2);
            beta = rem.coeff(0, 1);
            break;
        case SquareCase::ii:
            var = Z();
            alpha = rem.coeff(2, 0);
            beta = rem.coeff(1, 0);
            break;
        case SquareCase::iv:
            // degree <= 1 was handled above; unreachable for rank-3 input
            throw DegreeExceeded("case iv cannot have an irreducible conic");
    }
    auto [m1, m2] = split_univariate(alpha, beta, gamma, var, out.extended);
    if (sq.rotated) {
        const Scalar half = Scalar(1L) / Scalar(2L);
        AffinePoly zp = (Z() + W()) * half;
        AffinePoly wp = (Z() - W()) * half;
        m1 = m1.substitute(zp, wp);
        m2 = m2.substitute(zp, wp);
    }
    out.mu = m1;
    out.mu_prime = m2;
    return out;
}

// ---- canonicalization -----------------------------------------------------

ImagePoint canonicalize_qc(const SectionOk& q, const SectionTm1& C) {
    if (q.is_zero() || C.is_zero()) throw ZeroInput("canonicalize_qc needs q != 0 and C != 0");
    Scalar alpha;
    for (const auto& v : C.v)
        if (!v.is_zero()) {
            alpha = v;
            break;
        }
    ImageQSym2 out;
    out.C = C * alpha.inverse();
    out.q = q * (alpha * alpha);
    return out;
}

SectionT canonicalize_pm(const SectionT& a) {
    if (a.is_zero()) throw ZeroInput("canonicalize_pm of the zero section");
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const Scalar& e = a.m.at(r, c);
            if (e.is_zero()) continue;
            return e.lex_positive() ? a : -a;
        }
    return a;
}

SectionTm1 canonicalize_pm(const SectionTm1& c) {
    if (c.is_zero()) throw ZeroInput("canonicalize_pm of the zero section");
    for (const auto& e : c.v) {
        if (e.is_zero()) continue;
        return e.lex_positive() ? c : -c;
    }
    return c;
}

namespace {

ScalarMatrix rho_key(const Scalar& lambda, const SectionTm1& C) {
    ScalarMatrix key(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) key.at(i, j) = lambda * C.v[i] * C.v[j];
    return key;
}

}  // namespace

ImagePoint canonicalize_rho(const Scalar& lambda, const SectionTm1& C, const SectionOk& rho) {
    if (lambda.is_zero() || C.is_zero())
        throw ZeroInput("canonicalize_rho needs lambda != 0 and C != 0");
    ImageRhoSym2 out;
    out.key = rho_key(lambda, C);
    out.rho = rho;
    Scalar root = exact_sqrt(lambda).root;
    out.C = canonicalize_pm(C * root);
    return out;
}

Sym2Triple point_det_triple(const ImagePoint& p) {
    if (std::holds_alternative<ImageZero>(p)) return Sym2Triple{};
    if (const auto* qc = std::get_if<ImageQSym2>(&p))
        return sym2_section(qc->C).scaled(qc->q.local_rep(Chart::c0));
    if (const auto* st = std::get_if<ImageSymTangent>(&p)) return -st->key;
    const auto& rp = std::get<ImageRhoSym2>(p);
    // lambda rho (x) Sym2(C), expanded from the extension-free key:
    // s1 = v0 - z v2, s2 = v1 - w v2 and lambda v_i v_j = key(i, j)
    AffinePoly rho0 = rp.rho.local_rep(Chart::c0);
    const AffinePoly z = AffinePoly::var_z();
    const AffinePoly w = AffinePoly::var_w();
    AffinePoly t11 = AffinePoly::constant(rp.key.at(0, 0)) - z * rp.key.at(0, 2) * Scalar(2L) +
                     z * z * rp.key.at(2, 2);
    AffinePoly t12 = AffinePoly::constant(rp.key.at(0, 1)) - w * rp.key.at(0, 2) -
                     z * rp.key.at(1, 2) + z * w * rp.key.at(2, 2);
    AffinePoly t22 = AffinePoly::constant(rp.key.at(1, 1)) - w * rp.key.at(1, 2) * Scalar(2L) +
                     w * w * rp.key.at(2, 2);
    return Sym2Triple{{t11 * rho0, t12 * rho0, t22 * rho0}};
}

// ---- raw-triple recovery ---------------------------------------------------

std::optional<std::pair<SectionOk, SectionTm1>> recover_qc(const Sym2Triple& t) {
    if (t.is_zero()) return std::nullopt;
    if (t.t[1] * t.t[1] != t.t[0] * t.t[2]) return std::nullopt;

    const AffinePoly z = AffinePoly::var_z();
    const AffinePoly w = AffinePoly::var_w();

    const auto finish = [&](const SectionTm1& C) -> std::optional<std::pair<SectionOk, SectionTm1>> {
        auto rep = C.local_rep(Chart::c0);
        Sym2Triple s2 = sym2_of_pair(rep);
        AffinePoly q;
        if (!s2.t[0].is_zero()) {
            auto d = t.t[0].divide_exact(s2.t[0]);
            if (!d) return std::nullopt;
            q = *d;
        } else if (!s2.t[2].is_zero()) {
            auto d = t.t[2].divide_exact(s2.t[2]);
            if (!d) return std::nullopt;
            q = *d;
        } else {
            return std::nullopt;
        }
        if (q.is_zero() || q.degree() > 2) return std::nullopt;
        if (s2.scaled(q) != t) return std::nullopt;
        return std::make_pair(SectionOk(2, homogenize(q, 2)), C);
    };

    // normalization v2 = 1: solve the proportionality identities
    //   t11 (v1 - w) = t12 (v0 - z),  t12 (v1 - w) = t22 (v0 - z)
    // as linear conditions on (v0, v1)
    {
        std::set<std::pair<int, int>> mons;
        const AffinePoly rhs1 = t.t[0] * w - t.t[1] * z;
        const AffinePoly rhs2 = t.t[1] * w - t.t[2] * z;
        for (const AffinePoly* p : {&t.t[0], &t.t[1], &t.t[2], &rhs1, &rhs2})
            for (const auto& [e, c] : p->terms()) mons.insert({e.z, e.w});
        ScalarMatrix A(static_cast<int>(mons.size()) * 2, 2);
        std::vector<Scalar> b(mons.size() * 2);
        int row = 0;
        for (const auto& [ez, ew] : mons) {
            // v1 * t11 - v0 * t12 = w t11 - z t12
            A.at(row, 0) = -t.t[1].coeff(ez, ew);
            A.at(row, 1) = t.t[0].coeff(ez, ew);
            b[row] = rhs1.coeff(ez, ew);
            ++row;
            A.at(row, 0) = -t.t[2].coeff(ez, ew);
            A.at(row, 1) = t.t[1].coeff(ez, ew);
            b[row] = rhs2.coeff(ez, ew);
            ++row;
        }
        if (auto sol = linear_solve(A, b)) {
            SectionTm1 C{{(*sol)[0], (*sol)[1], Scalar(1L)}};
            if (auto r = finish(C)) return r;
        }
    }
    // v2 = 0: constant representatives
    if (!t.t[0].is_zero()) {
        auto ratio = t.t[1].divide_exact(t.t[0]);
        if (ratio && ratio->degree() <= 0) {
            Scalar v1 = ratio->constant_term();
            SectionTm1 C{{Scalar(1L), v1, Scalar()}};
            if (auto r = finish(C)) return r;
        }
    } else {
        SectionTm1 C{{Scalar(), Scalar(1L), Scalar()}};
        if (auto r = finish(C)) return r;
    }
    return std::nullopt;
}

ImagePoint image_point(const DetSection& d, int k, const std::optional<SectionOk>& rho) {
    if (k == 3 || k < 0) throw ExcludedIndex("image_point: k must be in {0,1,2} or k > 3");
    if (d.triple.is_zero()) return ImageZero{};

    if (const auto* qc = std::get_if<DetStructureQC>(&d.structured)) {
        if (qc->q.is_zero() || qc->C.is_zero()) return ImageZero{};
        return canonicalize_qc(qc->q, qc->C);
    }
    if (const auto* sa = std::get_if<DetStructureSymA>(&d.structured)) {
        if (sa->A.is_zero()) return ImageZero{};
        SectionT a = canonicalize_pm(sa->A);
        return ImageSymTangent{a, sym2_section(a)};
    }
    if (const auto* rh = std::get_if<DetStructureRho>(&d.structured))
        return canonicalize_rho(rh->lambda, rh->C, rh->rho);

    // raw triple
    if (k > 3) {
        if (!rho) throw Unclassifiable("k > 3 raw triple needs the branch conic rho");
        AffinePoly rho0 = rho->local_rep(Chart::c0);
        auto d11 = d.triple.t[0].divide_exact(rho0);
        auto d12 = d.triple.t[1].divide_exact(rho0);
        auto d22 = d.triple.t[2].divide_exact(rho0);
        if (!d11 || !d12 || !d22) throw Unclassifiable("triple is not divisible by rho");
        Sym2Triple lam_sym{{*d11, *d12, *d22}};
        SectionTm1 ct;
        try {
            ct = recover_sqrt(lam_sym, /*allow_extension=*/true);
        } catch (const NotASquare&) {
            throw Unclassifiable("triple / rho is not the symmetric square of a T(-1) section");
        }
        ImageRhoSym2 out;
        out.C = canonicalize_pm(ct);
        out.rho = *rho;
        out.key = rho_key(Scalar(1L), out.C);  // sqrt(lambda) already absorbed in C
        return out;
    }
    if (auto qc = recover_qc(d.triple)) return canonicalize_qc(qc->first, qc->second);
    if (k == 1) {
        try {
            SectionT a = recover_tangent_sqrt(-d.triple);
            a = canonicalize_pm(a);
            return ImageSymTangent{a, sym2_section(a)};
        } catch (const NotASquare&) {
            // fall through
        }
    }
    throw Unclassifiable("raw determinant triple matches no theorem shape");
}

bool image_equal(const ImagePoint& a, const ImagePoint& b) {
    if (a.index() == b.index()) {
        if (std::holds_alternative<ImageZero>(a)) return true;
        if (const auto* qa = std::get_if<ImageQSym2>(&a))
            return *qa == std::get<ImageQSym2>(b);
        if (const auto* sa = std::get_if<ImageSymTangent>(&a))
            return *sa == std::get<ImageSymTangent>(b);
        return std::get<ImageRhoSym2>(a) == std::get<ImageRhoSym2>(b);
    }
    // across variants, equality means equality of determinant sections
    return point_det_triple(a) == point_det_triple(b);
}

// ---- Theorem det2 shapes ----------------------------------------------------

namespace {

/// Linear-form section of O(1) with chart-0 representative p (deg <= 1).
std::optional<SectionOk> o1_from_chart0(const AffinePoly& p) {
    if (p.degree() > 1) return std::nullopt;
    return SectionOk(1, homogenize(p, 1));
}

}  // namespace

std::optional<K1CommonFactor> k1_extract_common_factor(const CoHiggsK1& phi) {
    // find C' with every entry's chart-0 rep proportional to C' 's:
    // x1 (v1 - w v2) - x2 (v0 - z v2) = 0 for each entry section
    const AffinePoly z = AffinePoly::var_z();
    const AffinePoly w = AffinePoly::var_w();
    std::vector<std::pair<AffinePoly, AffinePoly>> reps;
    for (const SectionT* s : {&phi.A, &phi.B, &phi.C})
        if (!s->is_zero()) reps.push_back(s->local_rep(Chart::c0));
    if (reps.empty()) return std::nullopt;

    std::set<std::pair<int, int>> mons;
    std::vector<std::array<AffinePoly, 3>> rows;
    for (const auto& [x1, x2] : reps) {
        std::array<AffinePoly, 3> coeffs{-x2, x1, x2 * z - x1 * w};
        for (const auto& p : coeffs)
            for (const auto& [e, c] : p.terms()) mons.insert({e.z, e.w});
        rows.push_back(std::move(coeffs));
    }
    ScalarMatrix A(static_cast<int>(mons.size() * rows.size()), 3);
    int row = 0;
    for (const auto& coeffs : rows)
        for (const auto& [ez, ew] : mons) {
            for (int c = 0; c < 3; ++c) A.at(row, c) = coeffs[c].coeff(ez, ew);
            ++row;
        }
    auto ker = A.kernel();
    for (const auto& kv : ker) {
        SectionTm1 Cp{{kv[0], kv[1], kv[2]}};
        if (Cp.is_zero()) continue;
        auto rep = Cp.local_rep(Chart::c0);
        K1CommonFactor out;
        out.Cprime = Cp;
        bool ok = true;
        struct Slot {
            const SectionT* s;
            SectionOk* l;
        };
        Slot slots[3] = {{&phi.A, &out.l}, {&phi.B, &out.m}, {&phi.C, &out.mp}};
        for (auto& slot : slots) {
            if (slot.s->is_zero()) continue;  // zero factor, l stays 0
            auto [x1, x2] = slot.s->local_rep(Chart::c0);
            AffinePoly ell;
            if (!rep.first.is_zero()) {
                auto dv = x1.divide_exact(rep.first);
                if (!dv) {
                    ok = false;
                    break;
                }
                ell = *dv;
            } else if (!rep.second.is_zero()) {
                auto dv = x2.divide_exact(rep.second);
                if (!dv) {
                    ok = false;
                    break;
                }
                ell = *dv;
            } else {
                ok = false;
                break;
            }
            if (x1 != ell * rep.first || x2 != ell * rep.second) {
                ok = false;
                break;
            }
            auto sec = o1_from_chart0(ell);
            if (!sec) {
                ok = false;
                break;
            }
            *slot.l = *sec;
        }
        if (ok) return out;
    }
    return std::nullopt;
}

std::optional<K1ConstantShape> k1_extract_constant_shape(const CoHiggsK1& phi) {
    if (phi.C.is_zero()) return std::nullopt;
    const ScalarMatrix& s = phi.C.m;
    Scalar pivot;
    int pr = -1, pc = -1;
    for (int r = 0; r < 3 && pr < 0; ++r)
        for (int c = 0; c < 3; ++c)
            if (!s.at(r, c).is_zero()) {
                pivot = s.at(r, c);
                pr = r;
                pc = c;
                break;
            }
    K1ConstantShape out;
    out.S = phi.C;
    out.l = phi.A.m.at(pr, pc) / pivot;
    out.m = phi.B.m.at(pr, pc) / pivot;
    if (phi.A.m != s * out.l) return std::nullopt;
    if (phi.B.m != s * out.m) return std::nullopt;
    if (out.m.is_zero()) return std::nullopt;  // the shape requires mu != 0
    return out;
}

}  // namespace cohiggs
