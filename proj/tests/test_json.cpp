#include "doctest.h"

#include "jac/json_io.hpp"
#include "support.hpp"

using namespace jac;

TEST_SUITE("json") {

TEST_CASE("schemas") {
    ShiftRatFun r = rf_make({Rational(1, 2), Rational(3)}, {{-2, 1}, {0, 2}});
    CHECK(rf_to_json(r).dump() == R"({"den":{"-2":1,"0":2},"num":["1/2","3"]})");
    CHECK(fm_to_json(fm_unit({1, 0}, {0, 2}, Rational(-5, 3))).dump() ==
          R"({"dim":2,"entries":[[[1,0],[0,2],"-5/3"]]})");
    IdealNF a2 = id_sum(prime_to_ideal({2, 0b01}), prime_to_ideal({2, 0b10}));
    CHECK(ideal_to_json(a2).dump() == R"({"antichain":[[0,1],[1,0]],"n":2})");
    UnitFactorization uf{Rational(2), HUnit{{{-1, 2}, {0, 1}}}, fm_unit1(0, 1)};
    CHECK(uf_to_json(uf).dump() ==
          R"({"f":{"dim":1,"entries":[[[0],[1],"1"]]},"h":{"-1":2,"0":1},"lambda":"2"})");
}

TEST_CASE("round trips") {
    jactest::Rng rng(20240881);
    for (int t = 0; t < 100; ++t) {
        ShiftRatFun r = jactest::rand_ratfun(rng);
        CHECK(rf_from_json(rf_to_json(r)) == r);

        SkewLaurent s = jactest::rand_skew(rng);
        CHECK(sk_from_json(sk_to_json(s)) == s);

        FiniteMatrix f = jactest::rand_fmatrix_n(rng, 2, 3, 4);
        CHECK(fm_from_json(fm_to_json(f)) == f);

        A1Element a = jactest::rand_element(rng);
        CHECK(a1_from_json(a1_to_json(a)) == a);
    }
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : enumerate_ideals(n)) CHECK(ideal_from_json(ideal_to_json(a)) == a);
    for (int t = 0; t < 20; ++t) {
        PolyN p;
        p.n = 2;
        for (int k = 0; k < 4; ++k)
            pn_accumulate(p,
                          {static_cast<unsigned>(jactest::rand_in(rng, 0, 6)),
                           static_cast<unsigned>(jactest::rand_in(rng, 0, 6))},
                          jactest::rand_rational(rng));
        CHECK(pn_from_json(pn_to_json(p)) == p);
    }
    // tensor elements: compare basis expansions, the well-defined query
    for (int t = 0; t < 20; ++t) {
        TensorElement a = tn_zero(2);
        TensorTerm term;
        term.coeff = jactest::rand_nonzero_rational(rng);
        term.factors = {jactest::rand_element(rng), jactest::rand_element(rng)};
        a.terms.push_back(term);
        TensorElement back = tn_from_json(tn_to_json(a));
        CHECK(tensor_basis_expand(back) == tensor_basis_expand(a));
    }
}

} // TEST_SUITE
