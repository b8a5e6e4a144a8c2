#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "jac/a1.hpp"
#include "jac/lattice.hpp"
#include "jac/units.hpp"

namespace jac {

// Polynomial in n variables, exponent vector -> coefficient, no stored zeros.
struct PolyN {
    int n = 1;
    std::map<std::vector<unsigned>, Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const PolyN& a, const PolyN& b) = default;
};

PolyN pn_monomial(int n, std::vector<unsigned> alpha, Rational c = Rational(1));
PolyN operator+(const PolyN& a, const PolyN& b);
PolyN operator*(const PolyN& a, const PolyN& b);
PolyN pn_scale(const Rational& c, const PolyN& a);
void pn_accumulate(PolyN& p, const std::vector<unsigned>& alpha, const Rational& c);

// Finite sum of pure tensors of one-variable canonical elements. Deliberately
// not a canonical form: only the action and the basis expansion are
// well-defined queries, so no equality operator is provided.
struct TensorTerm {
    Rational coeff;
    std::vector<A1Element> factors; // length n
};

struct TensorElement {
    int n = 1;
    std::vector<TensorTerm> terms;

    bool has_no_terms() const { return terms.empty(); }
};

TensorElement tn_zero(int n);
TensorElement tn_one(int n);
TensorElement tn_scalar(int n, const Rational& c);
TensorElement tn_embed(int n, int slot, A1Element a); // 1 x ... x a x ... x 1, slot is 1-based
TensorElement tn_from_matrix(int n, const FiniteMatrix& f); // sum of pure matrix-unit tensors

TensorElement tn_add(const TensorElement& a, const TensorElement& b);
TensorElement tn_mul(const TensorElement& a, const TensorElement& b);
TensorElement tn_scale(const Rational& c, const TensorElement& a);
TensorElement tn_theta(const TensorElement& a);

PolyN tn_apply(const TensorElement& a, const PolyN& p);

// Collapse an arity-1 tensor to its canonical one-variable form.
A1Element tn_as_a1(const TensorElement& a);

// One slot of the tensor basis: a skew basis element (polynomial power of H
// or a partial-fraction pole term, at some x-degree) or a matrix unit.
struct BasisKey {
    enum Kind : int { SkewPoly = 0, SkewPF = 1, Mat = 2 };
    int kind;
    long d; // x-degree for skew kinds; row index for Mat
    long a; // H-power (SkewPoly); shift j (SkewPF); column index (Mat)
    long b; // order k (SkewPF); 0 otherwise

    bool is_skew() const { return kind != Mat; }
    friend auto operator<=>(const BasisKey& x, const BasisKey& y) = default;
};

std::vector<std::pair<BasisKey, Rational>> a1_basis_terms(const A1Element& u);

// Expand into the linearly independent pure-tensor basis, resolving all
// cancellations; exponential in the number of slots at worst.
std::map<std::vector<BasisKey>, Rational> tensor_basis_expand(const TensorElement& a);

// Support patterns {f_b : lambda_b != 0} of the basis expansion.
std::set<std::uint64_t> tn_basis_patterns(const TensorElement& a);

// The two-sided ideal generated by the element, in ideal normal form.
IdealNF generated_ideal(const TensorElement& a);

// lambda * (h_1 x...x h_n) * (1 + f) with det(1+f) != 0.
struct MinimalUnit {
    Rational lambda;
    std::vector<HUnit> hs; // length n
    FiniteMatrix f;        // dim n

    friend bool operator==(const MinimalUnit& a, const MinimalUnit& b) = default;
};

TensorElement minimal_unit_build(const MinimalUnit& u);
TensorElement minimal_unit_invert(const MinimalUnit& u);
PolyN solve_n(const MinimalUnit& u, const PolyN& f);

// Recover the (lambda, hs, f) presentation of a minimal integro-differential
// operator given as a tensor element. Stages mirror the one-variable
// factorization; elements invertible only through the wider unit group are
// rejected as Unsupported.
MinimalUnit factor_minimal_unit(const TensorElement& u);

} // namespace jac
