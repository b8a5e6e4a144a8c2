#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jac/rational.hpp"

namespace jac {

// Multi-index into N^dim.
using MIdx = std::vector<unsigned>;

// Finitely supported matrix over Q indexed by N^dim x N^dim; matrix units
// E_{alpha,beta} are tensor products of one-dimensional matrix units per
// slot. No zero entries stored.
struct FiniteMatrix {
    int dim = 1;
    std::map<std::pair<MIdx, MIdx>, Rational> entries;

    bool is_zero() const { return entries.empty(); }
    friend bool operator==(const FiniteMatrix& a, const FiniteMatrix& b) = default;
};

FiniteMatrix fm_zero(int dim = 1);
FiniteMatrix fm_unit(MIdx i, MIdx j, Rational c = Rational(1)); // c * E_{ij}
FiniteMatrix fm_unit1(unsigned i, unsigned j, Rational c = Rational(1));

void fm_accumulate(FiniteMatrix& m, const MIdx& i, const MIdx& j, const Rational& c);

FiniteMatrix operator+(const FiniteMatrix& a, const FiniteMatrix& b);
FiniteMatrix operator-(const FiniteMatrix& a, const FiniteMatrix& b);
FiniteMatrix operator*(const FiniteMatrix& a, const FiniteMatrix& b); // throws DimMismatch
FiniteMatrix fm_scale(const Rational& c, const FiniteMatrix& a);

// Determinant of 1+f on the minimal block [0..d)^dim covering the support,
// padded with diagonal ones; the stable value over all larger blocks.
Rational fm_det_one_plus(const FiniteMatrix& f);
// As fm_det_one_plus but over the block [0..d)^dim for a caller-chosen d
// covering the support (padding-invariance test hook).
Rational fm_det_one_plus_block(const FiniteMatrix& f, unsigned d);

// g with (1+f)(1+g) = (1+g)(1+f) = 1; throws Singular when det(1+f) = 0.
FiniteMatrix fm_invert_one_plus(const FiniteMatrix& f);

// E_{alpha,beta} |-> (alpha!/beta!) E_{beta,alpha}, extended linearly.
FiniteMatrix fm_theta(const FiniteMatrix& f);

// lambda * E_{ij} with i != j; 1 + result is unipotent.
FiniteMatrix fm_transvection(const MIdx& i, const MIdx& j, const Rational& lambda);

Rational midx_factorial(const MIdx& a); // prod a_i!

std::string fm_str(const FiniteMatrix& f);

} // namespace jac
