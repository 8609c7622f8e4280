#include <doctest.h>

#include "cohiggs/classify.hpp"
#include "cohiggs/errors.hpp"
#include "cohiggs/rng.hpp"

using namespace cohiggs;

namespace {

const AffinePoly Z = AffinePoly::var_z();
const AffinePoly W = AffinePoly::var_w();

SectionOk nonsingular_conic() {
    return SectionOk(2, HomogeneousForm3::monomial(2, 0, 0, Scalar(1L)) +
                            HomogeneousForm3::monomial(0, 2, 0, Scalar(1L)) +
                            HomogeneousForm3::monomial(0, 0, 2, Scalar(1L)));
}

SquareCase expected_case(const AffinePoly& s) {
    if (!s.coeff(2, 0).is_zero()) return SquareCase::i;
    if (!s.coeff(0, 2).is_zero()) return SquareCase::ii;
    if (!s.coeff(1, 1).is_zero()) return SquareCase::iii;
    return SquareCase::iv;
}

}  // namespace

TEST_CASE("complete_square: pinned examples") {
    // perfect square (z + w + 1)^2
    AffinePoly s = (Z + W + AffinePoly::constant(Scalar(1L))) *
                   (Z + W + AffinePoly::constant(Scalar(1L)));
    SquareDecomposition d = complete_square(s);
    CHECK(d.case_tag == SquareCase::i);
    CHECK(d.mu.is_zero());
    CHECK(d.lambda * d.lambda == s);

    // s = z w: case iii via the rotation, lambda = (z+w)/2, mu = -((z-w)/2)^2
    SquareDecomposition r = complete_square(Z * W);
    CHECK(r.case_tag == SquareCase::iii);
    CHECK(r.rotated);
    const Scalar half = Scalar(1L) / Scalar(2L);
    CHECK(r.lambda == (Z + W) * half);
    AffinePoly wp = (Z - W) * half;
    CHECK(r.mu == -(wp * wp));
    CHECK(r.lambda * r.lambda + r.mu == Z * W);

    // linear: lambda = 0, mu = s
    AffinePoly lin = Z * Scalar(2L) + W * Scalar(3L) + AffinePoly::constant(Scalar(5L));
    SquareDecomposition l = complete_square(lin);
    CHECK(l.case_tag == SquareCase::iv);
    CHECK(l.lambda.is_zero());
    CHECK(l.mu == lin);

    CHECK_THROWS_AS(complete_square(Z * Z * Z), DegreeExceeded);
}

TEST_CASE("complete_square: identity and case tags at scale") {
    Gen gen(SplitMix64::substream(17, 0));
    for (int t = 0; t < 300; ++t) {
        AffinePoly s = gen.poly(2);
        SquareDecomposition d = complete_square(s);
        CHECK(d.lambda * d.lambda + d.mu == s);
        CHECK(d.case_tag == expected_case(s));
        CHECK(d.lambda.degree() <= 1);
        CHECK(d.mu.degree() <= 2);
    }
}

TEST_CASE("decompose_linear_product: pinned examples") {
    // z w -> (0, z, w) via the rank-2 conic route
    LinearProductDecomposition d = decompose_linear_product(Z * W);
    CHECK(d.lambda.is_zero());
    CHECK(d.mu * d.mu_prime == Z * W);
    CHECK(d.mu.degree() == 1);
    CHECK(d.mu_prime.degree() == 1);

    // z^2 + w^2 factors over Q(i)
    AffinePoly szw = Z * Z + W * W;
    LinearProductDecomposition d2 = decompose_linear_product(szw);
    CHECK(d2.lambda * d2.lambda + d2.mu * d2.mu_prime == szw);
    CHECK(!d2.extended);  // Gaussian rationals suffice

    // z^2 + z w + 1: case (i) + univariate factorization
    AffinePoly s3 = Z * Z + Z * W + AffinePoly::constant(Scalar(1L));
    LinearProductDecomposition d3 = decompose_linear_product(s3);
    CHECK(d3.lambda * d3.lambda + d3.mu * d3.mu_prime == s3);
    CHECK(d3.lambda.degree() <= 1);
    CHECK(d3.mu.degree() <= 1);
    CHECK(d3.mu_prime.degree() <= 1);

    // zero
    LinearProductDecomposition dz = decompose_linear_product(AffinePoly{});
    CHECK(dz.lambda.is_zero());
    CHECK(dz.mu.is_zero());
}

TEST_CASE("decompose_linear_product at scale") {
    Gen gen(SplitMix64::substream(17, 1));
    for (int t = 0; t < 200; ++t) {
        AffinePoly s = gen.poly(2);
        LinearProductDecomposition d = decompose_linear_product(s);
        CHECK(d.lambda * d.lambda + d.mu * d.mu_prime == s);
        CHECK(d.lambda.degree() <= 1);
        CHECK(d.mu.degree() <= 1);
        CHECK(d.mu_prime.degree() <= 1);
    }
}

TEST_CASE("canonicalize_qc") {
    Gen gen(SplitMix64::substream(17, 2));

    // C = (2, 0, 0): alpha = 2, canonical C' = (1, 0, 0), q' = 4q
    SectionOk q = gen.nonzero_section_ok(2);
    SectionTm1 c{{Scalar(2L), Scalar(0L), Scalar(0L)}};
    ImagePoint p = canonicalize_qc(q, c);
    const auto& qp = std::get<ImageQSym2>(p);
    CHECK(qp.C.v[0] == Scalar(1L));
    CHECK(qp.q == q * Scalar(4L));

    // orbit invariance and idempotence
    for (int t = 0; t < 100; ++t) {
        SectionOk q2 = gen.nonzero_section_ok(2);
        SectionTm1 c2 = gen.nonzero_section_tm1();
        Scalar alpha = gen.nonzero_scalar();
        ImagePoint a = canonicalize_qc(q2, c2);
        ImagePoint b = canonicalize_qc(q2 * (alpha * alpha), c2 * alpha.inverse());
        CHECK(image_equal(a, b));
        CHECK(std::get<ImageQSym2>(a) == std::get<ImageQSym2>(b));
        ImagePoint again =
            canonicalize_qc(std::get<ImageQSym2>(a).q, std::get<ImageQSym2>(a).C);
        CHECK(std::get<ImageQSym2>(again) == std::get<ImageQSym2>(a));
        // alpha = -1 lies in the group
        ImagePoint neg = canonicalize_qc(q2, -c2);
        CHECK(image_equal(a, neg));
    }
    CHECK_THROWS_AS(canonicalize_qc(SectionOk(2, HomogeneousForm3(2)), c), ZeroInput);
}

TEST_CASE("canonicalize_pm") {
    Gen gen(SplitMix64::substream(17, 3));
    // first nonzero entry -3 flips the sign
    ScalarMatrix m(3, 3);
    m.at(0, 1) = Scalar(-3L);
    SectionT a(m);
    SectionT ca = canonicalize_pm(a);
    CHECK(ca == -a);

    // first entry i is kept (re = 0, im > 0)
    ScalarMatrix mi(3, 3);
    mi.at(0, 1) = Scalar(GaussianRational{0, 1});
    SectionT ai(mi);
    CHECK(canonicalize_pm(ai) == ai);

    for (int t = 0; t < 200; ++t) {
        SectionT x = gen.nonzero_section_t();
        CHECK(canonicalize_pm(x) == canonicalize_pm(-x));
        CHECK(canonicalize_pm(canonicalize_pm(x)) == canonicalize_pm(x));
        SectionTm1 y = gen.nonzero_section_tm1();
        CHECK(canonicalize_pm(y) == canonicalize_pm(-y));
        CHECK(canonicalize_pm(canonicalize_pm(y)) == canonicalize_pm(y));
    }
    CHECK_THROWS_AS(canonicalize_pm(SectionT{}), ZeroInput);
}

TEST_CASE("canonicalize_rho") {
    Gen gen(SplitMix64::substream(17, 4));
    SectionOk rho = nonsingular_conic();

    // lambda = 4 absorbs as 2C
    SectionTm1 c{{Scalar(1L), Scalar(2L), Scalar(3L)}};
    ImagePoint p = canonicalize_rho(Scalar(4L), c, rho);
    const auto& rp = std::get<ImageRhoSym2>(p);
    CHECK(rp.C == canonicalize_pm(c * Scalar(2L)));

    for (int t = 0; t < 100; ++t) {
        SectionTm1 c2 = gen.nonzero_section_tm1();
        Scalar lambda = gen.nonzero_scalar();
        Scalar beta = gen.nonzero_scalar();
        ImagePoint a = canonicalize_rho(lambda, c2, rho);
        ImagePoint b = canonicalize_rho(lambda / (beta * beta), c2 * beta, rho);
        CHECK(image_equal(a, b));
        CHECK(std::get<ImageRhoSym2>(a) == std::get<ImageRhoSym2>(b));
        ImagePoint neg = canonicalize_rho(lambda, -c2, rho);
        CHECK(image_equal(a, neg));
        // both parametrize the same determinant triple
        CHECK(point_det_triple(a) ==
              sym2_section(c2).scaled(rho.local_rep(Chart::c0) * lambda));
    }
    CHECK_THROWS_AS(canonicalize_rho(Scalar(), c, rho), ZeroInput);
}

TEST_CASE("image_point: structured routes") {
    Gen gen(SplitMix64::substream(17, 5));

    // zero determinant
    CoHiggsK0 zf{SectionOk(1, HomogeneousForm3(1)), SectionOk(2, HomogeneousForm3(2)),
                 gen.nonzero_section_tm1()};
    CHECK(std::holds_alternative<ImageZero>(image_point(determinant(CoHiggsField(zf)), 0)));

    // K0 with lambda = 0, mu = x2^2, C = (0,0,1): q = -x2^2, C normalized
    CoHiggsK0 f{SectionOk(1, HomogeneousForm3(1)),
                SectionOk(2, HomogeneousForm3::monomial(0, 0, 2, Scalar(1L))),
                SectionTm1{{Scalar(0L), Scalar(0L), Scalar(1L)}}};
    ImagePoint p = image_point(determinant(CoHiggsField(f)), 0);
    const auto& qp = std::get<ImageQSym2>(p);
    CHECK(qp.q.form == -HomogeneousForm3::monomial(0, 0, 2, Scalar(1L)));
    CHECK(qp.C == SectionTm1{{Scalar(0L), Scalar(0L), Scalar(1L)}});
    // the canonical point reconstructs the determinant triple exactly
    CHECK(point_det_triple(p) == determinant(CoHiggsField(f)).triple);

    // K1 triangular: SymTangent(canonicalize_pm(A))
    for (int t = 0; t < 20; ++t) {
        CoHiggsK1 tri{gen.nonzero_section_t(), gen.section_t(), SectionT{}};
        ImagePoint tp = image_point(determinant(CoHiggsField(tri)), 1);
        const auto& st = std::get<ImageSymTangent>(tp);
        CHECK(st.A == canonicalize_pm(tri.A));
        CHECK(point_det_triple(tp) == determinant(CoHiggsField(tri)).triple);
    }
}

TEST_CASE("image_point: raw-triple recovery") {
    Gen gen(SplitMix64::substream(17, 6));

    // q (x) Sym2(C) with the structure stripped
    for (int t = 0; t < 60; ++t) {
        SectionOk q = gen.nonzero_section_ok(2);
        SectionTm1 c = gen.nonzero_section_tm1();
        DetSection raw;
        raw.triple = sym2_section(c).scaled(q.local_rep(Chart::c0));
        if (raw.triple.is_zero()) continue;
        ImagePoint p = image_point(raw, 0);
        ImagePoint expected = canonicalize_qc(q, c);
        CHECK(image_equal(p, expected));
        CHECK(std::get<ImageQSym2>(p) == std::get<ImageQSym2>(expected));
    }

    // -Sym2(A) raw triples for k = 1
    for (int t = 0; t < 40; ++t) {
        SectionT a = gen.nonzero_section_t();
        DetSection raw;
        raw.triple = -sym2_section(a);
        ImagePoint p = image_point(raw, 1);
        // points may classify as QSym2 when A = l (x) C'; either way they
        // agree with the SymTangent point as determinant sections
        SectionT ca = canonicalize_pm(a);
        ImagePoint expected = ImageSymTangent{ca, sym2_section(ca)};
        CHECK(image_equal(p, expected));
    }

    // KBig raw route: divide by rho, recover sqrt(lambda) C
    SectionOk rho = nonsingular_conic();
    for (int t = 0; t < 30; ++t) {
        Scalar lambda = gen.nonzero_scalar();
        SectionTm1 c = gen.nonzero_section_tm1();
        DetSection raw;
        raw.triple = sym2_section(c).scaled(rho.local_rep(Chart::c0) * lambda);
        ImagePoint p = image_point(raw, 5, rho);
        ImagePoint expected = canonicalize_rho(lambda, c, rho);
        CHECK(image_equal(p, expected));
        CHECK(std::get<ImageRhoSym2>(p) == std::get<ImageRhoSym2>(expected));
    }

    // unclassifiable triple
    DetSection junk;
    junk.triple = Sym2Triple{{Z, W, AffinePoly::constant(Scalar(1L))}};
    CHECK_THROWS_AS(image_point(junk, 0), Unclassifiable);
}

TEST_CASE("image_equal agrees with invariant triples") {
    Gen gen(SplitMix64::substream(17, 7));
    for (int t = 0; t < 100; ++t) {
        SectionOk q = gen.nonzero_section_ok(2);
        SectionTm1 c = gen.nonzero_section_tm1();
        Scalar alpha = gen.nonzero_scalar();
        ImagePoint a = canonicalize_qc(q, c);
        ImagePoint b = canonicalize_qc(q * (alpha * alpha), c * alpha.inverse());
        CHECK(image_equal(a, b));
        CHECK(point_det_triple(a) == point_det_triple(b));

        // perturbed pairs disagree in both senses
        SectionOk q2 = q * Scalar(2L);
        ImagePoint d = canonicalize_qc(q2, c);
        CHECK(!image_equal(a, d));
        CHECK(point_det_triple(a) != point_det_triple(d));
    }

    // cross-variant: -Sym2(l (x) C') equals QSym2(-l^2, C')
    for (int t = 0; t < 30; ++t) {
        SectionTm1 c = gen.nonzero_section_tm1();
        AffinePoly ell = gen.nonzero_poly(1);
        SectionOk lsec(1, homogenize(ell, 1));
        // A = l (x) C' as a tangent section: matrix v * coeffs(l)^T
        ScalarMatrix m(3, 3);
        std::array<Scalar, 3> lc{lsec.form.coeff(1, 0, 0), lsec.form.coeff(0, 1, 0),
                                 lsec.form.coeff(0, 0, 1)};
        for (int r = 0; r < 3; ++r)
            for (int cc = 0; cc < 3; ++cc) m.at(r, cc) = c.v[r] * lc[cc];
        SectionT a(m);
        if (a.is_zero()) continue;
        SectionOk qneg = SectionOk(2, -(lsec.form * lsec.form));
        ImagePoint sym = ImageSymTangent{canonicalize_pm(a), sym2_section(canonicalize_pm(a))};
        ImagePoint qcp = canonicalize_qc(qneg, c);
        CHECK(image_equal(sym, qcp));
    }
}

TEST_CASE("K1 shape extraction") {
    Gen gen(SplitMix64::substream(17, 8));

    // common-factor shape round trip
    for (int t = 0; t < 40; ++t) {
        SectionTm1 cp = gen.nonzero_section_tm1();
        AffinePoly l = gen.poly(1), m1 = gen.nonzero_poly(1), m2 = gen.nonzero_poly(1);
        const auto tangent_of = [&](const AffinePoly& ell) {
            SectionOk sec(1, homogenize(ell, 1));
            ScalarMatrix mm(3, 3);
            std::array<Scalar, 3> lc{sec.form.coeff(1, 0, 0), sec.form.coeff(0, 1, 0),
                                     sec.form.coeff(0, 0, 1)};
            for (int r = 0; r < 3; ++r)
                for (int cc = 0; cc < 3; ++cc) mm.at(r, cc) = cp.v[r] * lc[cc];
            return SectionT(mm);
        };
        CoHiggsK1 phi{tangent_of(l), tangent_of(m1), tangent_of(m2)};
        CHECK(integrable(CoHiggsField(phi), Chart::c0));
        auto shape = k1_extract_common_factor(phi);
        REQUIRE(shape);
        // the extraction reproduces the entries exactly
        const auto check_entry = [&](const SectionT& entry, const SectionOk& ell) {
            auto rep = entry.local_rep(Chart::c0);
            auto crep = shape->Cprime.local_rep(Chart::c0);
            CHECK(rep.first == ell.local_rep(Chart::c0) * crep.first);
            CHECK(rep.second == ell.local_rep(Chart::c0) * crep.second);
        };
        check_entry(phi.A, shape->l);
        check_entry(phi.B, shape->m);
        check_entry(phi.C, shape->mp);
    }

    // constant shape round trip
    for (int t = 0; t < 40; ++t) {
        SectionT s = gen.nonzero_section_t();
        Scalar l = gen.scalar();
        Scalar m = gen.nonzero_scalar();
        CoHiggsK1 phi{s * l, s * m, s};
        CHECK(integrable(CoHiggsField(phi), Chart::c0));
        auto shape = k1_extract_constant_shape(phi);
        REQUIRE(shape);
        CHECK(shape->l == l);
        CHECK(shape->m == m);
    }

    // a generic non-integrable field matches neither shape
    int neither = 0;
    for (int t = 0; t < 20; ++t) {
        CoHiggsK1 phi{gen.nonzero_section_t(), gen.nonzero_section_t(), gen.nonzero_section_t()};
        if (integrable(CoHiggsField(phi), Chart::c0)) continue;
        if (!k1_extract_common_factor(phi) && !k1_extract_constant_shape(phi)) ++neither;
    }
    CHECK(neither > 0);
}

TEST_CASE("theorem det1 round trip: surjectivity realized") {
    Gen gen(SplitMix64::substream(17, 9));
    for (int t = 0; t < 50; ++t) {
        SectionOk q = gen.nonzero_section_ok(2);
        SectionTm1 c = gen.nonzero_section_tm1();
        // build a K0 field whose determinant is q (x) Sym2(C):
        // -(lambda^2 + mu) = q, so complete the square on -q
        SquareDecomposition sq = complete_square(-q.local_rep(Chart::c0));
        CoHiggsK0 f{SectionOk(1, homogenize(sq.lambda, 1)), SectionOk(2, homogenize(sq.mu, 2)),
                    c};
        DetSection d = determinant(CoHiggsField(f));
        CHECK(d.triple == sym2_section(c).scaled(q.local_rep(Chart::c0)));
        ImagePoint p = image_point(d, 0);
        ImagePoint expected = canonicalize_qc(q, c);
        CHECK(image_equal(p, expected));
        CHECK(std::get<ImageQSym2>(p) == std::get<ImageQSym2>(expected));
    }
}
