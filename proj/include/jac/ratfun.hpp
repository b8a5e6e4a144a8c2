#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jac/rational.hpp"

namespace jac {

// Dense univariate polynomial over Q, little-endian coefficients (index =
// power of H), no trailing zeros; the zero polynomial is the empty vector.
using PolyQ = std::vector<Rational>;

PolyQ poly_trim(PolyQ p);
PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
PolyQ poly_scale(const Rational& c, const PolyQ& p);
Rational poly_eval(const PolyQ& p, const Rational& at);
// p(H - d)
PolyQ poly_compose_shift(const PolyQ& p, long d);
// Quotient and remainder of a by b (b nonzero).
std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b);
// Exact division by (H + shift); the caller guarantees -shift is a root.
PolyQ poly_div_linear(const PolyQ& p, long shift);

// Rational function p(H) / prod_j (H+j)^{m_j} with integer shifts j, fully
// reduced: no factor (H+j) of the denominator divides the numerator. The zero
// function has empty num and empty den.
struct ShiftRatFun {
    PolyQ num;
    std::map<long, int> den; // shift j -> multiplicity m_j >= 1

    bool is_zero() const { return num.empty(); }
    bool is_one() const {
        return den.empty() && num.size() == 1 && num[0].is_one();
    }
    friend bool operator==(const ShiftRatFun& a, const ShiftRatFun& b) = default;
};

// Exact decomposition poly(H) + sum_{j,k} c_{jk} (H+j)^{-k}; all stored
// coefficients nonzero.
struct PartialFractions {
    PolyQ poly;
    std::map<std::pair<long, int>, Rational> terms; // (shift j, order k>=1) -> coeff

    friend bool operator==(const PartialFractions& a, const PartialFractions& b) = default;
};

// Factory; cancels common (H+j) factors and normalizes. den multiplicities
// must be >= 1.
ShiftRatFun rf_make(PolyQ num, std::map<long, int> den);
ShiftRatFun rf_const(const Rational& c);
ShiftRatFun rf_H(); // the polynomial H

ShiftRatFun operator+(const ShiftRatFun& a, const ShiftRatFun& b);
ShiftRatFun operator-(const ShiftRatFun& a, const ShiftRatFun& b);
ShiftRatFun operator*(const ShiftRatFun& a, const ShiftRatFun& b);
ShiftRatFun operator-(const ShiftRatFun& a);
ShiftRatFun rf_scale(const Rational& c, const ShiftRatFun& a);

// sigma^d: H |-> H - d.
ShiftRatFun rf_shift(const ShiftRatFun& a, long d);

PartialFractions rf_partial_fractions(const ShiftRatFun& a);
// Rebuild the function from its decomposition through ordinary rf arithmetic.
ShiftRatFun rf_reassemble(const PartialFractions& pf);

// Value of the pi'-lifted function at H = m (m >= 1): partial-fraction terms
// whose pole sits exactly at m contribute 0, everything else evaluates
// normally. Throws PoleAtNonPositive for m < 1.
Rational rf_eval_regularized(const ShiftRatFun& a, long m);
Rational pf_eval_regularized(const PartialFractions& pf, long m);

// Factored-denominator display form; as_factor parenthesizes a compound
// numerator so the result can sit inside a product.
std::string rf_str(const ShiftRatFun& a, bool as_factor = false);

} // namespace jac
