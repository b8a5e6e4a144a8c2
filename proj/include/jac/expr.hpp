#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jac/lattice.hpp"
#include "jac/tensor.hpp"

namespace jac {

// Surface-syntax atoms. X/D/H/Int carry a 1-based variable slot; E, Pi and
// Rho are one-variable operators; En is the n-variable matrix unit.
struct GenAtom {
    enum class Type { X, D, H, Int, E, En, Pi, Rho } type;
    int slot = 1;
    long i = 0, j = 0;
    bool rho_two = false; // RHO[j,i] as opposed to RHO[i]
    std::vector<unsigned> alpha, beta; // En row/column multi-indices

    friend bool operator==(const GenAtom& a, const GenAtom& b) = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Gen, Add, Sub, Mul, Neg, Pow } kind;
    Rational value;  // Number
    GenAtom gen{};   // Gen
    ExprPtr a, b;    // operands (a only for Neg and Pow)
    long exponent = 0;
};

bool expr_equal(const Expr& x, const Expr& y);

ExprPtr expr_number(Rational v);
ExprPtr expr_gen(GenAtom g);
ExprPtr expr_binary(Expr::Kind k, ExprPtr a, ExprPtr b);
ExprPtr expr_neg(ExprPtr a);
ExprPtr expr_pow(ExprPtr base, long e);

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := '-' factor | atom ('^' int)?; atom := rational | generator |
// '(' expr ')'. Errors carry 1-based column positions.
ExprPtr parse_expr(const std::string& src, int n);

std::string pretty_expr(const Expr& e, int n);

// Atoms map to canonical generators, folds through the tensor arithmetic.
// Negative powers are admitted on nonzero rationals and on (H_s + j) factors
// only (for j < 0 the result is the basis lift with the pole column zeroed).
TensorElement elaborate(const Expr& e, int n);

// The same grammar restricted to x-atoms and rationals with nonnegative powers.
PolyN parse_poly(const std::string& src, int n);

// Display forms of canonical values.
std::string pretty_a1(const A1Element& a);
std::string pretty_tensor(const TensorElement& t);
std::string pretty_poly(const PolyN& p);

// Ideal expressions over the atoms 0, F, A, p1..pN with +, * and & (meet).
IdealNF parse_ideal_expr(const std::string& src, int n);

} // namespace jac
