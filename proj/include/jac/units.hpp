#pragma once

#include <map>
#include <string>

#include "jac/a1.hpp"

namespace jac {

// Element of the free abelian unit group: index i >= 0 stands for (H+i),
// index -i (i >= 1) for the corrected unit (H-i)_1 = H - i + pi_{i-1}.
// Exponents are nonzero; the group law is exponent addition.
struct HUnit {
    std::map<long, long> exps;

    friend bool operator==(const HUnit& a, const HUnit& b) = default;
};

HUnit h_mul(const HUnit& a, const HUnit& b);
HUnit h_negate(const HUnit& a);
std::string h_str(const HUnit& h);

// Canonical form of the product of the listed factors (they all commute).
A1Element h_build(const HUnit& h);
// Canonical form of the inverse, via the explicit (H-i)_1^{-1} formula.
A1Element h_inverse(const HUnit& h);

// a = lambda * h * (1+f) with det(1+f) != 0; unique.
struct UnitFactorization {
    Rational lambda;
    HUnit h;
    FiniteMatrix f;

    friend bool operator==(const UnitFactorization& a, const UnitFactorization& b) = default;
};

// Throws the staged NotAUnit errors: NonScalarDegree when the skew part is
// not concentrated in degree 0, BadBaseSymbol when the degree-0 coefficient
// is not lambda*prod(H+j)^e, ResidueNotInF when stripping the base leaves a
// non-matrix residue, SingularMatrix when det(1+f) = 0.
UnitFactorization factor_unit(const A1Element& u);

A1Element unit_reassemble(const UnitFactorization& uf);

A1Element invert_unit(const A1Element& u);

// Solve u y = f for polynomial f.
Poly1 solve_1(const A1Element& u, const Poly1& f);

// The extended determinant (lambda, h, det(1+f)); multiplicative coordinatewise.
struct ExtendedDet {
    Rational lambda;
    HUnit h;
    Rational det;

    friend bool operator==(const ExtendedDet& a, const ExtendedDet& b) = default;
};
ExtendedDet det_extended(const A1Element& u);

} // namespace jac
