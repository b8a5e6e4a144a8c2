#include "doctest.h"

#include "jac/error.hpp"
#include "jac/ratfun.hpp"
#include "support.hpp"

using namespace jac;

namespace {

ShiftRatFun rf(PolyQ num, std::map<long, int> den = {}) {
    return rf_make(std::move(num), std::move(den));
}

// Independent long-division oracle over dense rational polynomials, written
// from the schoolbook definition.
std::pair<PolyQ, PolyQ> naive_divmod(PolyQ a, const PolyQ& b) {
    PolyQ q;
    while (!a.empty() && a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Rational c = a.back() / b.back();
        if (q.size() < shift + 1) q.resize(shift + 1);
        q[shift] = q[shift] + c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = poly_trim(std::move(a));
    }
    return {poly_trim(std::move(q)), std::move(a)};
}

} // namespace

TEST_SUITE("ratfun") {

TEST_CASE("construction normal forms") {
    CHECK(rf({0, 1}) == rf_H());
    CHECK(rf({1}, {{0, 1}, {1, 1}}).den == std::map<long, int>{{0, 1}, {1, 1}});
    // H/H cancels to the constant 1
    CHECK(rf({0, 1}, {{0, 1}}) == rf({1}));
    CHECK(rf({}).is_zero());
    CHECK(rf({0}).is_zero());
    CHECK_THROWS_AS(rf({1}, {{0, 0}}), Error);
}

TEST_CASE("addition") {
    ShiftRatFun invH = rf({1}, {{0, 1}});
    CHECK((invH + rf_scale(Rational(-1), invH)).is_zero());
    // 1/H + 1/(H+1) = (2H+1)/(H(H+1))
    CHECK(invH + rf({1}, {{1, 1}}) == rf({1, 2}, {{0, 1}, {1, 1}}));
    CHECK(rf_H() + rf({}) == rf_H());
}

TEST_CASE("multiplication") {
    CHECK(rf({1}, {{0, 1}}) * rf({1}, {{1, 1}}) == rf({1}, {{0, 1}, {1, 1}}));
    // (H-1) * 1/(H-1) = 1
    CHECK(rf({-1, 1}) * rf({1}, {{-1, 1}}) == rf({1}));
}

TEST_CASE("shift") {
    CHECK(rf_shift(rf_H(), 1) == rf({-1, 1}));                   // sigma(H) = H - 1
    CHECK(rf_shift(rf({1}, {{0, 1}}), -1) == rf({1}, {{1, 1}})); // 1/H -> 1/(H+1)
    ShiftRatFun a = rf({2, 3}, {{2, 1}});
    CHECK(rf_shift(a, 0) == a);
    CHECK(rf_shift(rf_shift(a, 5), -5) == a);
}

TEST_CASE("partial fractions: standard identity") {
    PartialFractions pf = rf_partial_fractions(rf({1}, {{0, 1}, {1, 1}}));
    CHECK(pf.poly.empty());
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.terms.at({0, 1}) == Rational(1));
    CHECK(pf.terms.at({1, 1}) == Rational(-1));
}

TEST_CASE("partial fractions: polynomial part against the division oracle") {
    // H^2 / (H-1)
    ShiftRatFun a = rf({0, 0, 1}, {{-1, 1}});
    auto [q, r] = naive_divmod({Rational(0), Rational(0), Rational(1)}, {Rational(-1), Rational(1)});
    REQUIRE(q == PolyQ{Rational(1), Rational(1)}); // H + 1
    REQUIRE(r == PolyQ{Rational(1)});
    PartialFractions pf = rf_partial_fractions(a);
    CHECK(pf.poly == q);
    REQUIRE(pf.terms.size() == 1);
    CHECK(pf.terms.at({-1, 1}) == r[0]);
}

TEST_CASE("partial fractions: pure polynomial") {
    PartialFractions pf = rf_partial_fractions(rf_H());
    CHECK(pf.poly == PolyQ{Rational(0), Rational(1)});
    CHECK(pf.terms.empty());
}

TEST_CASE("regularized evaluation") {
    ShiftRatFun pole1 = rf({1}, {{-1, 1}}); // 1/(H-1)
    CHECK(rf_eval_regularized(pole1, 1) == Rational(0));
    CHECK(rf_eval_regularized(pole1, 3) == Rational(1, 2));
    CHECK(rf_eval_regularized(rf_H(), 4) == Rational(4));
    CHECK_THROWS_AS(rf_eval_regularized(pole1, 0), Error);
    CHECK_THROWS_AS(rf_eval_regularized(pole1, -2), Error);
}

TEST_CASE("decompose-reassemble is the identity on random functions") {
    jactest::Rng rng(20240801);
    for (int t = 0; t < 1000; ++t) {
        ShiftRatFun a = jactest::rand_ratfun(rng);
        CHECK(rf_reassemble(rf_partial_fractions(a)) == a);
    }
}

TEST_CASE("regularized evaluation is linear off the poles") {
    jactest::Rng rng(20240802);
    for (int t = 0; t < 300; ++t) {
        ShiftRatFun a = jactest::rand_ratfun(rng, 4, 3);
        ShiftRatFun b = jactest::rand_ratfun(rng, 4, 3);
        long m = jactest::rand_in(rng, 1, 9);
        if (a.den.count(-m) || b.den.count(-m)) continue;
        CHECK(rf_eval_regularized(a + b, m) ==
              rf_eval_regularized(a, m) + rf_eval_regularized(b, m));
    }
}

TEST_CASE("shift is a ring homomorphism") {
    jactest::Rng rng(20240803);
    for (int t = 0; t < 300; ++t) {
        ShiftRatFun a = jactest::rand_ratfun(rng, 3, 2);
        ShiftRatFun b = jactest::rand_ratfun(rng, 3, 2);
        long d = jactest::rand_in(rng, -4, 4);
        CHECK(rf_shift(a * b, d) == rf_shift(a, d) * rf_shift(b, d));
        CHECK(rf_shift(a + b, d) == rf_shift(a, d) + rf_shift(b, d));
    }
}

TEST_CASE("reduction is canonical across construction orders") {
    jactest::Rng rng(20240804);
    for (int t = 0; t < 200; ++t) {
        ShiftRatFun a = jactest::rand_ratfun(rng, 3, 2);
        ShiftRatFun b = jactest::rand_ratfun(rng, 3, 2);
        ShiftRatFun c = jactest::rand_ratfun(rng, 3, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
    // Inflating numerator and denominator by a common linear factor lands in
    // the same normal form.
    CHECK(rf_make(poly_mul({Rational(1), Rational(1)}, {Rational(3), Rational(1)}),
                  {{0, 1}, {3, 1}}) == rf({1, 1}, {{0, 1}}));
}

} // TEST_SUITE
