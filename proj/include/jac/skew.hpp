#pragma once

#include <map>
#include <optional>
#include <string>

#include "jac/ratfun.hpp"

namespace jac {

// Element of the localized Weyl algebra in mixed normal form: the component
// at degree d >= 0 is x^d * r(H) (coefficient on the right), the component at
// degree d = -e < 0 is r(H) * D^e (coefficient on the left). No zero
// components are stored; the empty map is 0.
struct SkewLaurent {
    std::map<long, ShiftRatFun> comps;

    bool is_zero() const { return comps.empty(); }
    bool is_one() const {
        return comps.size() == 1 && comps.begin()->first == 0 && comps.begin()->second.is_one();
    }
    friend bool operator==(const SkewLaurent& a, const SkewLaurent& b) = default;
};

SkewLaurent sk_zero();
SkewLaurent sk_one();
SkewLaurent sk_component(long d, ShiftRatFun r); // single mixed component, normalized

SkewLaurent operator+(const SkewLaurent& a, const SkewLaurent& b);
SkewLaurent operator-(const SkewLaurent& a, const SkewLaurent& b);
SkewLaurent operator*(const SkewLaurent& a, const SkewLaurent& b);
SkewLaurent sk_scale(const Rational& c, const SkewLaurent& a);

// Rising product H(H+1)...(H+e-1) as a rational function (e >= 0 gives 1 for
// e = 0); this is the left-form coefficient of D^e.
ShiftRatFun rising_product(long e);

// lambda * prod_j (H+j)^{e_j} decomposition of a degree-0 element whose sole
// coefficient splits into integer-shift linear factors; empty otherwise.
struct BaseUnit {
    Rational lambda;
    std::map<long, long> shift_exps; // shift j -> exponent e_j != 0
};
std::optional<BaseUnit> sk_is_base_unit(const SkewLaurent& a);

} // namespace jac
