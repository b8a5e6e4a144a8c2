#include "jac/units.hpp"

#include <sstream>

#include "jac/error.hpp"

namespace jac {

HUnit h_mul(const HUnit& a, const HUnit& b) {
    HUnit r = a;
    for (auto& [i, e] : b.exps) {
        r.exps[i] += e;
        if (r.exps[i] == 0) r.exps.erase(i);
    }
    return r;
}

HUnit h_negate(const HUnit& a) {
    HUnit r;
    for (auto& [i, e] : a.exps) r.exps.emplace(i, -e);
    return r;
}

std::string h_str(const HUnit& h) {
    if (h.exps.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [i, e] : h.exps) {
        if (!first) os << "*";
        first = false;
        if (i == 0)
            os << "H";
        else if (i > 0)
            os << "(H+" << i << ")";
        else
            os << "(H-" << -i << ")_1";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

// One factor to the power +-1. For i >= 1, (H-i)_1 = H - i + E_{i-1,i-1} and
// its inverse has skew part (H-i)^{-1} (lifted) plus E_{i-1,i-1}.
static A1Element h_factor(long i, bool inverse) {
    if (i >= 0) {
        if (!inverse)
            return a1_from_skew(sk_component(0, rf_make({Rational(i), Rational(1)}, {})));
        return a1_from_skew(sk_component(0, rf_make({Rational(1)}, {{i, 1}})));
    }
    long m = -i;
    A1Element a;
    if (!inverse)
        a.skew = sk_component(0, rf_make({Rational(-m), Rational(1)}, {}));
    else
        a.skew = sk_component(0, rf_make({Rational(1)}, {{-m, 1}}));
    fm_accumulate(a.mat, {static_cast<unsigned>(m - 1)}, {static_cast<unsigned>(m - 1)}, Rational(1));
    return a;
}

A1Element h_build(const HUnit& h) {
    A1Element acc = a1_one();
    for (auto& [i, e] : h.exps) {
        A1Element base = h_factor(i, e < 0);
        for (long t = 0; t < (e < 0 ? -e : e); ++t) acc = acc * base;
    }
    return acc;
}

A1Element h_inverse(const HUnit& h) { return h_build(h_negate(h)); }

UnitFactorization factor_unit(const A1Element& u) {
    for (auto& [d, r] : u.skew.comps)
        if (d != 0)
            fail(ErrCode::NotAUnitNonScalarDegree,
                 "skew part has degree " + std::to_string(d) + " component; units sit in degree 0");
    auto bu = sk_is_base_unit(u.skew);
    if (!bu)
        fail(ErrCode::NotAUnitBadBaseSymbol,
             "degree-0 coefficient is not of the form lambda * prod (H+j)^e");
    UnitFactorization uf;
    uf.lambda = bu->lambda;
    for (auto& [j, e] : bu->shift_exps) uf.h.exps.emplace(j, e);
    A1Element v = a1_scale(uf.lambda.inv(), h_inverse(uf.h) * u);
    if (!v.skew.is_one())
        fail(ErrCode::NotAUnitResidueNotInF, "residue after stripping the base unit is not 1 + F");
    uf.f = v.mat;
    if (fm_det_one_plus(uf.f).is_zero())
        fail(ErrCode::NotAUnitSingularMatrix, "det(1+f) = 0");
    return uf;
}

A1Element unit_reassemble(const UnitFactorization& uf) {
    A1Element one_plus_f = a1_one();
    one_plus_f.mat = uf.f;
    return a1_scale(uf.lambda, h_build(uf.h) * one_plus_f);
}

A1Element invert_unit(const A1Element& u) {
    UnitFactorization uf = factor_unit(u);
    A1Element inv_one_plus = a1_one();
    inv_one_plus.mat = fm_invert_one_plus(uf.f);
    return a1_scale(uf.lambda.inv(), inv_one_plus * h_inverse(uf.h));
}

Poly1 solve_1(const A1Element& u, const Poly1& f) { return a1_apply(invert_unit(u), f); }

ExtendedDet det_extended(const A1Element& u) {
    UnitFactorization uf = factor_unit(u);
    return ExtendedDet{uf.lambda, uf.h, fm_det_one_plus(uf.f)};
}

} // namespace jac
