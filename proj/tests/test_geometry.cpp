#include <doctest.h>

#include "cohiggs/conic.hpp"
#include "cohiggs/errors.hpp"
#include "cohiggs/rng.hpp"
#include "cohiggs/transitions.hpp"

using namespace cohiggs;

namespace {

const AffinePoly Z = AffinePoly::var_z();
const AffinePoly W = AffinePoly::var_w();

}  // namespace

TEST_CASE("local representatives") {
    // T(-1): v = (0,0,1) on chart 0 -> (-z, -w)
    SectionTm1 e2{{Scalar(0L), Scalar(0L), Scalar(1L)}};
    auto rep = e2.local_rep(Chart::c0);
    CHECK(rep.first == -Z);
    CHECK(rep.second == -W);

    // O(2): x2^2 on chart 0 -> 1
    SectionOk x2sq(2, HomogeneousForm3::monomial(0, 0, 2, Scalar(1L)));
    CHECK(x2sq.local_rep(Chart::c0) == AffinePoly::constant(Scalar(1L)));

    // T: zero matrix -> (0, 0); identity matrix is the Euler field -> 0
    SectionT zero;
    CHECK(zero.local_rep(Chart::c1).first.is_zero());
    SectionT euler(ScalarMatrix::identity(3));
    CHECK(euler.is_zero());
    CHECK(euler.local_rep(Chart::c0).first.is_zero());
}

TEST_CASE("section gluing across charts") {
    Gen gen(SplitMix64::substream(11, 0));
    for (int t = 0; t < 100; ++t) {
        CHECK(glue_check(gen.section_ok(1)));
        CHECK(glue_check(gen.section_ok(2)));
        CHECK(glue_check(gen.section_tm1()));
        CHECK(glue_check(gen.section_t()));
    }
}

TEST_CASE("global-section model dimensions") {
    // O(1): 3 independent monomials; O(2): 6
    const auto monomial_count = [](int degree) {
        int n = 0;
        for (int a = 0; a <= degree; ++a)
            for (int b = 0; a + b <= degree; ++b) ++n;
        return n;
    };
    CHECK(monomial_count(1) == 3);
    CHECK(monomial_count(2) == 6);

    // T(-1): the three coordinate parameters are independent (the local-rep
    // map has full rank 3)
    {
        ScalarMatrix M(12, 3);
        int row = 0;
        for (Chart c : kAllCharts) {
            for (int k = 0; k < 3; ++k) {
                SectionTm1 e;
                e.v[k] = Scalar(1L);
                auto rep = e.local_rep(c);
                M.at(row + 0, k) = rep.first.coeff(0, 0);
                M.at(row + 1, k) = rep.first.coeff(1, 0);
                M.at(row + 2, k) = rep.second.coeff(0, 0);
                M.at(row + 3, k) = rep.second.coeff(0, 1);
            }
            row += 4;
        }
        CHECK(M.rank() == 3);
    }

    // T: the 9 matrix parameters act through an 8-dimensional space of
    // sections (kernel = scalar matrices)
    {
        const std::array<Exp2, 6> mons{{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};
        ScalarMatrix M(12, 9);
        for (int k = 0; k < 9; ++k) {
            ScalarMatrix ek(3, 3);
            ek.at(k / 3, k % 3) = Scalar(1L);
            SectionT s;
            s.m = ek;  // raw, without the traceless normalization
            auto rep = s.local_rep(Chart::c0);
            for (int mi = 0; mi < 6; ++mi) {
                M.at(mi, k) = rep.first.coeff(mons[mi].z, mons[mi].w);
                M.at(6 + mi, k) = rep.second.coeff(mons[mi].z, mons[mi].w);
            }
        }
        CHECK(M.rank() == 8);
        auto ker = M.kernel();
        REQUIRE(ker.size() == 1);
        // kernel vector is the identity matrix direction
        CHECK(ker[0][0] == ker[0][4]);
        CHECK(ker[0][4] == ker[0][8]);
        CHECK(!ker[0][0].is_zero());
    }
}


TEST_CASE("transition inverses at random points") {
    Gen gen(SplitMix64::substream(11, 1));
    for (int t = 0; t < 20; ++t) {
        PointP2 p = gen.point_all_coords_nonzero();
        for (Chart i : kAllCharts)
            for (Chart j : kAllCharts) {
                if (i == j) continue;
                auto ci = p.coords(i);
                auto cj = p.coords(j);
                ScalarMatrix gij = tangent_transition(i, j).eval(ci.first, ci.second);
                ScalarMatrix gji = tangent_transition(j, i).eval(cj.first, cj.second);
                CHECK(gij * gji == ScalarMatrix::identity(2));
            }
    }
}

TEST_CASE("O(k) transitions are k-th powers") {
    for (Chart i : kAllCharts)
        for (Chart j : kAllCharts) {
            if (i == j) continue;
            RatFunc t1 = line_transition(1, i, j);
            CHECK(line_transition(2, i, j) == t1 * t1);
            CHECK(line_transition(3, i, j) == t1 * t1 * t1);
        }
}

TEST_CASE("cocycle identity for jacobian-derived transitions") {
    for (Bundle b : {Bundle::O1, Bundle::O2, Bundle::T, Bundle::Tm1, Bundle::Sym2T,
                     Bundle::Sym2Tm1}) {
        CocycleReport r = cocycle_check(b, 2024, 20);
        CHECK(r.points == 20);
        CHECK(r.failures == 0);
        CHECK(r.inverse_ok);
    }
}

TEST_CASE("paper transition matrices vs jacobian derivation") {
    auto reports = compare_paper_transitions(2024, 20);
    REQUIRE(reports.size() == 3);

    // g'_12 agrees under both coordinate readings (the chart change is an
    // involution as a formula)
    CHECK(reports[0].name == "g12");
    CHECK(reports[0].forward_match);
    CHECK(reports[0].reverse_match);

    // g'_23: the (2,1) entry disagrees under either reading; everything
    // else matches. This is the suspected typo (-z/w^2 instead of -w/z^2).
    CHECK(reports[1].name == "g23");
    CHECK(!reports[1].forward_match);
    CHECK(!reports[1].reverse_match);
    CHECK(reports[1].forward_entry[0][0]);
    CHECK(reports[1].forward_entry[0][1]);
    CHECK(!reports[1].forward_entry[1][0]);
    CHECK(reports[1].forward_entry[1][1]);
    CHECK(reports[1].reverse_entry[0][0]);
    CHECK(reports[1].reverse_entry[0][1]);
    CHECK(!reports[1].reverse_entry[1][0]);
    CHECK(reports[1].reverse_entry[1][1]);

    // g'_31 matches exactly under the reverse reading
    CHECK(reports[2].name == "g31");
    CHECK(reports[2].reverse_match);
}

TEST_CASE("sym2 matrix: golden entries and representation laws") {
    // g = [[0,1],[1,0]] -> rows (0,0,1), (0,1,0), (1,0,0)
    ScalarMatrix swap{{Scalar(0L), Scalar(1L)}, {Scalar(1L), Scalar(0L)}};
    ScalarMatrix s = sym2_matrix(swap);
    ScalarMatrix expected{{Scalar(0L), Scalar(0L), Scalar(1L)},
                          {Scalar(0L), Scalar(1L), Scalar(0L)},
                          {Scalar(1L), Scalar(0L), Scalar(0L)}};
    CHECK(s == expected);

    // identity -> identity
    CHECK(sym2_matrix(ScalarMatrix::identity(2)) == ScalarMatrix::identity(3));

    // diag(2,3) -> diag(4,6,9) with determinant 216 = 6^3
    ScalarMatrix d{{Scalar(2L), Scalar(0L)}, {Scalar(0L), Scalar(3L)}};
    ScalarMatrix sd = sym2_matrix(d);
    CHECK(sd.at(0, 0) == Scalar(4L));
    CHECK(sd.at(1, 1) == Scalar(6L));
    CHECK(sd.at(2, 2) == Scalar(9L));
    CHECK(sd.det() == Scalar(216L));

    Gen gen(SplitMix64::substream(11, 2));
    for (int t = 0; t < 50; ++t) {
        ScalarMatrix g = gen.invertible_matrix2();
        ScalarMatrix h = gen.invertible_matrix2();
        CHECK(sym2_matrix(g * h) == sym2_matrix(g) * sym2_matrix(h));
        Scalar dg = g.det();
        CHECK(sym2_matrix(g).det() == dg * dg * dg);
    }
}

TEST_CASE("sym2_section and recover_sqrt") {
    // v = (0,0,1) -> (z^2, z w, w^2)
    SectionTm1 e2{{Scalar(0L), Scalar(0L), Scalar(1L)}};
    Sym2Triple t = sym2_section(e2);
    CHECK(t.t[0] == Z * Z);
    CHECK(t.t[1] == Z * W);
    CHECK(t.t[2] == W * W);

    SectionTm1 rec = recover_sqrt(t);
    CHECK((rec == e2 || rec == -e2));

    // sign invariance and round trip at scale
    Gen gen(SplitMix64::substream(11, 3));
    for (int t2 = 0; t2 < 100; ++t2) {
        SectionTm1 c = gen.nonzero_section_tm1();
        CHECK(sym2_section(c) == sym2_section(-c));
        SectionTm1 r = recover_sqrt(sym2_section(c));
        CHECK((r == c || r == -c));
    }

    // constant non-square triple (1, 1, 2): 1*2 != 1^2
    Sym2Triple bad{{AffinePoly::constant(Scalar(1L)), AffinePoly::constant(Scalar(1L)),
                    AffinePoly::constant(Scalar(2L))}};
    CHECK_THROWS_AS(recover_sqrt(bad), NotASquare);

    // zero triple -> zero section
    CHECK(recover_sqrt(Sym2Triple{}).is_zero());

    // a square triple that is not a global T(-1) section is rejected
    Sym2Triple notglobal{{W * W, W * Z, Z * Z}};
    CHECK_THROWS_AS(recover_sqrt(notglobal), NotASquare);
}

TEST_CASE("sym2 triples glue under the sym2 transition") {
    Gen gen(SplitMix64::substream(11, 4));
    for (int t = 0; t < 25; ++t) {
        SectionTm1 c = gen.nonzero_section_tm1();
        Sym2Triple t0 = sym2_section(c);
        Sym2Triple t1 = sym2_section(c, Chart::c1);
        Sym2Triple t2 = sym2_section(c, Chart::c2);
        std::array<const Sym2Triple*, 3> direct{nullptr, &t1, &t2};
        CHECK(glue_check_triple(t0, Bundle::Tm1, &direct));

        SectionT a = gen.nonzero_section_t();
        Sym2Triple a0 = sym2_section(a);
        Sym2Triple a1 = sym2_section(a, Chart::c1);
        Sym2Triple a2 = sym2_section(a, Chart::c2);
        std::array<const Sym2Triple*, 3> adirect{nullptr, &a1, &a2};
        CHECK(glue_check_triple(a0, Bundle::T, &adirect));
    }
}

TEST_CASE("recover_tangent_sqrt") {
    Gen gen(SplitMix64::substream(11, 5));
    for (int t = 0; t < 60; ++t) {
        SectionT a = gen.nonzero_section_t();
        SectionT r = recover_tangent_sqrt(sym2_section(a));
        CHECK((r == a || r == -a));
    }
}

TEST_CASE("zero_point") {
    SectionTm1 e2{{Scalar(0L), Scalar(0L), Scalar(1L)}};
    CHECK(zero_point(e2).projective_equal(PointP2{{Scalar(0L), Scalar(0L), Scalar(1L)}}));

    SectionTm1 e0{{Scalar(1L), Scalar(0L), Scalar(0L)}};
    CHECK(zero_point(e0).projective_equal(PointP2{{Scalar(1L), Scalar(0L), Scalar(0L)}}));

    SectionTm1 v{{Scalar(1L), Scalar(2L), Scalar(3L)}};
    PointP2 p = zero_point(v);
    CHECK(p.projective_equal(PointP2{{Scalar(2L), Scalar(4L), Scalar(6L)}}));
    // the local representatives vanish there
    for (Chart c : kAllCharts) {
        auto [zc, wc] = p.coords(c);
        auto rep = v.local_rep(c);
        CHECK(rep.first.eval(zc, wc).is_zero());
        CHECK(rep.second.eval(zc, wc).is_zero());
    }
    CHECK_THROWS_AS(zero_point(SectionTm1{}), ZeroSection);
}

TEST_CASE("conic classification") {
    // x0 * x1: rank 2 with factors (x0, x1)
    SectionOk q1(2, HomogeneousForm3::monomial(1, 1, 0, Scalar(1L)));
    ConicClass c1 = conic_rank(q1);
    CHECK(c1.rank == 2);
    REQUIRE(c1.factors.size() == 2);
    CHECK(c1.factors[0] * c1.factors[1] == q1.form);

    // x0^2: rank 1
    SectionOk q2(2, HomogeneousForm3::monomial(2, 0, 0, Scalar(1L)));
    ConicClass c2 = conic_rank(q2);
    CHECK(c2.rank == 1);
    REQUIRE(c2.factors.size() == 1);
    CHECK(c2.factors[0] * c2.factors[0] == q2.form);

    // x0^2 + x1^2 + x2^2: rank 3, irreducible
    HomogeneousForm3 sum = HomogeneousForm3::monomial(2, 0, 0, Scalar(1L)) +
                           HomogeneousForm3::monomial(0, 2, 0, Scalar(1L)) +
                           HomogeneousForm3::monomial(0, 0, 2, Scalar(1L));
    ConicClass c3 = conic_rank(SectionOk(2, sum));
    CHECK(c3.rank == 3);
    CHECK(c3.factors.empty());

    // random products of two lines classify as rank <= 2 with exact factors
    Gen gen(SplitMix64::substream(11, 6));
    for (int t = 0; t < 40; ++t) {
        HomogeneousForm3 l1 = gen.nonzero_form(1);
        HomogeneousForm3 l2 = gen.nonzero_form(1);
        SectionOk q(2, l1 * l2);
        ConicClass c = conic_rank(q);
        CHECK(c.rank <= 2);
        if (c.rank == 2) {
            REQUIRE(c.factors.size() == 2);
            CHECK(c.factors[0] * c.factors[1] == q.form);
        }
    }

    CHECK_THROWS_AS(conic_rank(SectionOk(2, HomogeneousForm3(2))), ZeroSection);
}
