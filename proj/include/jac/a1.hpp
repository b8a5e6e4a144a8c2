#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jac/fmatrix.hpp"
#include "jac/skew.hpp"

namespace jac {

// Polynomial in one variable, sparse by degree, no stored zeros.
struct Poly1 {
    std::map<unsigned, Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const Poly1& a, const Poly1& b) = default;
};

Poly1 p1_monomial(unsigned k, Rational c = Rational(1));
Poly1 operator+(const Poly1& a, const Poly1& b);
Poly1 p1_scale(const Rational& c, const Poly1& a);
void p1_accumulate(Poly1& p, unsigned k, const Rational& c);

// Canonical form of a one-variable integro-differential operator: a
// skew-Laurent part (lifted through the basis section) plus a finite matrix.
// The decomposition is direct, so structural equality is operator equality.
struct A1Element {
    SkewLaurent skew;
    FiniteMatrix mat = fm_zero(1);

    bool is_zero() const { return skew.is_zero() && mat.is_zero(); }
    bool is_one() const { return skew.is_one() && mat.is_zero(); }
    friend bool operator==(const A1Element& a, const A1Element& b) = default;
};

A1Element a1_zero();
A1Element a1_one();
A1Element a1_from_skew(SkewLaurent s);
A1Element a1_from_mat(FiniteMatrix m);

// Named operators.
A1Element gen_x();
A1Element gen_partial();
A1Element gen_H();
A1Element gen_H_inv();
A1Element gen_h();                                // x*D = H - 1
A1Element gen_int();                              // the integration x*H^-1
A1Element gen_shift_inv(long j, int k);           // (H+j)^{-k}, j >= 0, k >= 1
A1Element gen_shifted_pi_prime(long i, int k);    // (H-i)^{-k} with the pole column lifted to 0
A1Element gen_E(unsigned i, unsigned j);
A1Element gen_pi(unsigned i);                     // projection onto Kx^i
A1Element gen_rho(unsigned i);                    // 1 on degrees >= i, 0 below
A1Element gen_rho(unsigned j, unsigned i);        // (H-i)^{-j} restricted to degrees >= i

// Projection onto the span of the listed degrees / of everything outside them.
A1Element a1_projector_finite(const std::vector<unsigned>& degrees);
A1Element a1_projector_cofinite(const std::vector<unsigned>& excluded);

A1Element operator+(const A1Element& a, const A1Element& b);
A1Element operator-(const A1Element& a, const A1Element& b);
A1Element a1_scale(const Rational& c, const A1Element& a);
A1Element operator*(const A1Element& a, const A1Element& b);

// Action of one lifted skew component on x^k: for d >= 0 the component
// x^d r(H) sends x^k to r~(k+1) x^{k+d}; for d = -e < 0 the component
// r(H) D^e sends x^k to k(k-1)...(k-e+1) r~(k-e+1) x^{k-e} and annihilates
// k < e (r~ = regularized evaluation). Returns (out-degree, coefficient), or
// nothing when annihilated.
std::optional<std::pair<unsigned, Rational>> a1_lift_apply_component(long d, const ShiftRatFun& r,
                                                                     unsigned k);

Poly1 a1_apply(const A1Element& a, const Poly1& p);

// Homogeneous components; mat entries (i,j) carry degree i - j.
std::map<long, A1Element> a1_grade(const A1Element& a);

// The involutive anti-automorphism x <-> D fixing H.
A1Element a1_theta(const A1Element& a);

} // namespace jac
