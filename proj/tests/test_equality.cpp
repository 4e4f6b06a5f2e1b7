#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lrgap/equality.hpp"
#include "lrgap/exact.hpp"

using namespace lrgap;

namespace {
SpeedVector sv(std::vector<std::int64_t> s) { return SpeedVector(std::move(s)); }
}  // namespace

TEST_CASE("detect_thm12: all-odd speeds") {
    const EqualityCase c = detect_thm12(sv({1, 3, 5}));
    REQUIRE(c.kind == EqualityCase::Kind::AllOdd);
    CHECK(c.predicted_gap == Rational(1, 2));
    CHECK(c.describe() == "all-odd");
    // Witness cos^2(pi v_1 x): support {0, v_1}, nonnegative.
    CHECK(c.polynomial.coeff(0) == doctest::Approx(0.5));
    CHECK(c.polynomial.coeff(1) == doctest::Approx(0.25));
    CHECK(gap(sv({1, 3, 5})).gap == c.predicted_gap);
}

TEST_CASE("detect_thm12: dilated Fejer containment") {
    const EqualityCase c = detect_thm12(sv({1, 2, 3}));
    REQUIRE(c.kind == EqualityCase::Kind::FejerDilate);
    CHECK(c.a == 1);
    CHECK(c.m == 4);
    CHECK(c.predicted_gap == Rational(1, 4));

    // An extra speed coprime to m does not break the containment.
    const EqualityCase d = detect_thm12(sv({1, 2, 3, 5}));
    REQUIRE(d.kind == EqualityCase::Kind::FejerDilate);
    CHECK(d.a == 1);
    CHECK(d.m == 4);
    CHECK(gap(sv({1, 2, 3, 5})).gap == Rational(1, 4));

    // Dilated containment: 3*{1,2,3} with gcd(3,4)=1 and the leftover
    // speed off 4Z.
    const EqualityCase e = detect_thm12(sv({3, 5, 6, 9}));
    REQUIRE(e.kind == EqualityCase::Kind::FejerDilate);
    CHECK(e.a == 3);
    CHECK(e.m == 4);
    CHECK(gap(sv({3, 5, 6, 9})).gap == Rational(1, 4));
}

TEST_CASE("detect_thm12: gcd reduction wraps an inner case") {
    const EqualityCase c = detect_thm12(sv({2, 6, 10}));
    REQUIRE(c.kind == EqualityCase::Kind::GcdReduce);
    CHECK(c.a == 2);
    REQUIRE(c.inner);
    CHECK(c.inner->kind == EqualityCase::Kind::AllOdd);
    CHECK(c.predicted_gap == Rational(1, 2));
    CHECK(c.describe() == "gcd-reduce(2, all-odd)");
    CHECK(gap(sv({2, 6, 10})).gap == Rational(1, 2));
    // The witness is the dilated inner witness.
    CHECK(c.polynomial.coeff(2) == doctest::Approx(0.25));
}

TEST_CASE("detect_thm12: no match") {
    CHECK(detect_thm12(sv({1, 4, 7})).kind == EqualityCase::Kind::None);
    CHECK_FALSE(detect_thm12(sv({1, 4, 7})).matched());
    CHECK(detect_thm12(sv({2, 3, 8})).kind == EqualityCase::Kind::None);
}

TEST_CASE("detect_thm31") {
    const EqualityCase c = detect_thm31(sv({1, 2, 3}), 4);
    REQUIRE(c.kind == EqualityCase::Kind::Thm31);
    CHECK(c.a == 1);
    CHECK(c.m == 4);
    CHECK(c.predicted_gap == Rational(1, 4));
    CHECK(c.polynomial.eval(0.0) == doctest::Approx(4.0));
    CHECK(c.polynomial.mass() == doctest::Approx(1.0));

    const EqualityCase d = detect_thm31(sv({2, 4, 6}), 4);
    REQUIRE(d.kind == EqualityCase::Kind::GcdReduce);
    REQUIRE(d.inner);
    CHECK(d.inner->kind == EqualityCase::Kind::Thm31);
    CHECK(d.predicted_gap == Rational(1, 4));

    const EqualityCase e = detect_thm31(sv({1, 2, 3, 4}), 5);
    REQUIRE(e.kind == EqualityCase::Kind::Thm31);
    CHECK(e.predicted_gap == Rational(1, 5));

    CHECK(detect_thm31(sv({1, 4, 7}), 8).kind == EqualityCase::Kind::None);
    CHECK(detect_thm31(sv({1, 2, 3}), 2).kind == EqualityCase::Kind::None);
}

TEST_CASE("slackness holds exactly in the equality cases") {
    const SlacknessReport a = slackness_check(fejer(4), sv({1, 2, 3}));
    CHECK(a.holds());
    CHECK(a.max_offsupport_coeff == 0.0);
    CHECK(a.max_orbit_value < 1e-10);

    const SlacknessReport b = slackness_check(cos_sq(1), sv({1, 3, 5}));
    CHECK(b.holds());

    // The same kernel against a vector it is not optimal for fails the
    // orbit condition: fejer(4) does not vanish on the 3/8 orbit.
    const SlacknessReport c = slackness_check(fejer(4), sv({1, 4, 7}));
    CHECK_FALSE(c.holds());
    CHECK(c.max_orbit_value > 0.1);
}

TEST_CASE("montgomery chain: equality cases collapse the chain") {
    const MontgomeryChain a = montgomery_chain(fejer(4), sv({1, 2, 3}));
    CHECK(a.lhs == doctest::Approx(0.25));
    CHECK(a.mid == doctest::Approx(0.25));
    CHECK(a.rhs == doctest::Approx(0.25));

    const MontgomeryChain b = montgomery_chain(cos_sq(3), sv({1, 3, 5}));
    CHECK(b.lhs == doctest::Approx(0.25));
    CHECK(b.mid == doctest::Approx(0.25));
    CHECK(b.rhs == doctest::Approx(0.25));
}

TEST_CASE("montgomery chain: inequalities for generic admissible members") {
    struct Pair { TrigPoly f; SpeedVector v; };
    const std::vector<Pair> pairs = {
        {TrigPoly({1.0}), sv({1, 2, 3})},
        {fejer(4), sv({1, 2, 3, 5})},
        {cos_sq(1), sv({1, 4, 7})},
        {dilate(fejer(3), 2), sv({2, 4})},
    };
    for (const Pair& p : pairs) {
        const MontgomeryChain ch = montgomery_chain(p.f, p.v);
        CHECK(ch.lhs >= ch.mid - 1e-9);
        CHECK(ch.mid >= ch.rhs - 1e-9);
    }
    // The constant polynomial is strictly slack in the second link:
    // lhs = mid = delta but rhs = delta^2.
    const MontgomeryChain c = montgomery_chain(TrigPoly({1.0}), sv({1, 2, 3}));
    CHECK(c.mid > c.rhs + 0.1);
}

TEST_CASE("every detected case predicts the exact gap (exhaustive small range)") {
    for (std::int64_t a = 1; a <= 8; ++a)
        for (std::int64_t b = a + 1; b <= 8; ++b)
            for (std::int64_t c = b + 1; c <= 8; ++c) {
                const SpeedVector v = sv({a, b, c});
                const EqualityCase e = detect_thm12(v);
                if (!e.matched()) continue;
                const GapResult g = gap(v);
                CHECK(g.gap == e.predicted_gap);
                CHECK(slackness_check(e.polynomial, v).holds(1e-8));
            }
}

TEST_CASE("goddyn_wong_family") {
    const SpeedVector a8 = goddyn_wong_family(8, 'A');
    CHECK(a8.speeds() == std::vector<std::int64_t>{1, 2, 3, 4, 5, 7, 12});
    const GapResult g8 = gap(a8);
    CHECK(g8.gap == Rational(1, 8));
    CHECK(g8.t_min.den() == 8);

    const SpeedVector a14 = goddyn_wong_family(14, 'A');
    CHECK(a14.size() == 13u);
    CHECK(a14.max_speed() == 24);
    CHECK(gap(a14).gap == Rational(1, 14));

    const SpeedVector b33 = goddyn_wong_family(33, 'B');
    CHECK(b33.size() == 32u);
    CHECK(b33.max_speed() == 60);
    CHECK(b33.contains(31));
    CHECK(b33.contains(32));
    CHECK_FALSE(b33.contains(30));

    CHECK_THROWS_AS(goddyn_wong_family(9, 'A'), std::invalid_argument);
    CHECK_THROWS_AS(goddyn_wong_family(8, 'B'), std::invalid_argument);
    CHECK_THROWS_AS(goddyn_wong_family(8, 'C'), std::invalid_argument);
}
