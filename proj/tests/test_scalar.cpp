#include <doctest.h>

#include "cohiggs/errors.hpp"
#include "cohiggs/rng.hpp"
#include "cohiggs/scalar.hpp"

using namespace cohiggs;

namespace {

Scalar random_level2(Gen& gen) {
    // fixed tower Q(i)(sqrt(2))(sqrt(3)): 3 is not a square in Q(i)(sqrt 2)
    Scalar d1(2L);
    Scalar d2(3L);
    Scalar a = Scalar::ext(gen.scalar(), gen.nonzero_scalar(), d1);
    Scalar b = Scalar::ext(gen.scalar(), gen.nonzero_scalar(), d1);
    return Scalar::ext(a, b, d2);
}

}  // namespace

TEST_CASE("rational sqrt") {
    CHECK(*rational_sqrt_exact(Rational(4)) == 2);
    CHECK(*rational_sqrt_exact(Rational(9, 4)) == Rational(3, 2));
    CHECK(!rational_sqrt_exact(Rational(2)));
    CHECK(!rational_sqrt_exact(Rational(-4)));
}

TEST_CASE("gaussian arithmetic and sqrt") {
    GaussianRational i{0, 1};
    CHECK(i * i == GaussianRational{-1, 0});
    CHECK((i * i * i * i) == GaussianRational{1, 0});

    // 2i = (1+i)^2
    auto r = gaussian_sqrt_exact(GaussianRational{0, 2});
    REQUIRE(r);
    CHECK(*r == GaussianRational{1, 1});

    // -4 = (2i)^2
    auto r2 = gaussian_sqrt_exact(GaussianRational{-4, 0});
    REQUIRE(r2);
    CHECK(*r2 == GaussianRational{0, 2});

    CHECK(!gaussian_sqrt_exact(GaussianRational{2, 0}));
    CHECK(!gaussian_sqrt_exact(GaussianRational{1, 1}));
}

TEST_CASE("exact_sqrt examples") {
    // 4 -> 2 in the base field
    auto r = exact_sqrt(Scalar(4L));
    CHECK(!r.extended);
    CHECK(r.root == Scalar(2L));

    // 2 -> sqrt(2), proper extension with radicand 2
    auto r2 = exact_sqrt(Scalar(2L));
    CHECK(r2.extended);
    CHECK(r2.root.level() == 1);
    CHECK(r2.root.radicand() == Scalar(2L));
    CHECK(r2.root * r2.root == Scalar(2L));

    // 2i -> 1 + i, no extension
    auto r3 = exact_sqrt(Scalar(GaussianRational{0, 2}));
    CHECK(!r3.extended);
    CHECK(r3.root == Scalar(GaussianRational{1, 1}));

    // sqrt(0) = 0 at the same level
    auto r0 = exact_sqrt(Scalar());
    CHECK(!r0.extended);
    CHECK(r0.root.is_zero());
}

TEST_CASE("sqrt inside an extension field") {
    // 3 + 2*sqrt(2) = (1 + sqrt(2))^2 is a square in Q(i)(sqrt 2)
    Scalar sqrt2 = exact_sqrt(Scalar(2L)).root;
    Scalar c = Scalar(3L) + Scalar(2L) * sqrt2;
    auto r = exact_sqrt(c);
    CHECK(!r.extended);
    CHECK(r.root * r.root == c);
    CHECK(r.root == Scalar(1L) + sqrt2);

    // 1 + sqrt(2) is not a square there: needs a second level
    auto r2 = exact_sqrt(Scalar(1L) + sqrt2);
    CHECK(r2.extended);
    CHECK(r2.root.level() == 2);
    CHECK(r2.root * r2.root == Scalar(1L) + sqrt2);

    // a third nesting level is refused
    CHECK_THROWS_AS(exact_sqrt(Scalar(1L) + r2.root), TowerDepthExceeded);
}

TEST_CASE("field axioms on random towers") {
    // 1000 triples at each tower level
    Gen gen(SplitMix64::substream(42, 1));
    for (int trial = 0; trial < 3000; ++trial) {
        Scalar a, b, c;
        switch (trial % 3) {
            case 0:
                a = gen.scalar();
                b = gen.scalar();
                c = gen.scalar();
                break;
            case 1: {
                Scalar d(2L);
                a = Scalar::ext(gen.scalar(), gen.scalar(), d);
                b = Scalar::ext(gen.scalar(), gen.scalar(), d);
                c = Scalar::ext(gen.scalar(), gen.scalar(), d);
                break;
            }
            default:
                a = random_level2(gen);
                b = random_level2(gen);
                c = random_level2(gen);
                break;
        }
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1L));
            CHECK(a / a == Scalar(1L));
        }
    }
}

TEST_CASE("mixed-level arithmetic lifts into the tower") {
    Scalar sqrt2 = exact_sqrt(Scalar(2L)).root;
    Scalar x = Scalar(3L) + sqrt2;
    CHECK(x - sqrt2 == Scalar(3L));
    CHECK(x * Scalar(2L) == Scalar(6L) + Scalar(2L) * sqrt2);
    CHECK((sqrt2 * sqrt2).level() == 0);

    Scalar sqrt3_over = exact_sqrt(Scalar(3L) + sqrt2).root;  // level 2
    Scalar y = sqrt3_over + Scalar(1L);
    CHECK(y - sqrt3_over == Scalar(1L));
    CHECK(y.level() == 2);
}

TEST_CASE("incompatible extensions are rejected") {
    Scalar sqrt2 = exact_sqrt(Scalar(2L)).root;
    Scalar sqrt3 = exact_sqrt(Scalar(3L)).root;
    CHECK_THROWS_AS(sqrt2 + sqrt3, IncompatibleExtension);
}

TEST_CASE("principal root choice is deterministic") {
    // perfect squares: lex-positive representative
    CHECK(exact_sqrt(Scalar(9L)).root == Scalar(3L));
    CHECK(exact_sqrt(Scalar(GaussianRational{-1, 0})).root == Scalar(GaussianRational{0, 1}));
    Scalar sqrt2 = exact_sqrt(Scalar(2L)).root;
    Scalar sq = (Scalar(1L) - sqrt2) * (Scalar(1L) - sqrt2);
    Scalar r = exact_sqrt(sq).root;
    // lex-positivity scans the constant coefficient first
    CHECK(r == Scalar(1L) - sqrt2);
    CHECK(r.lex_positive());
}
