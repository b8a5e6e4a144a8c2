#pragma once

// Shared helpers for the test and acceptance suites: deterministic random
// generators and the naive word-action oracle that the canonical arithmetic
// is checked against. The oracle applies generator words symbol by symbol
// with the textbook action rules and never touches the canonical-form code
// paths.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "jac/a1.hpp"
#include "jac/expr.hpp"
#include "jac/tensor.hpp"
#include "jac/units.hpp"

namespace jactest {

using jac::A1Element;
using jac::Poly1;
using jac::Rational;

using Rng = std::mt19937_64;

inline long rand_in(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, long max_num = 9, long max_den = 9) {
    long num = rand_in(rng, -max_num, max_num);
    long den = rand_in(rng, 1, max_den);
    return Rational(num, den);
}

inline Rational rand_nonzero_rational(Rng& rng, long max_num = 9, long max_den = 9) {
    for (;;) {
        Rational q = rand_rational(rng, max_num, max_den);
        if (!q.is_zero()) return q;
    }
}

// --- generator words -------------------------------------------------------

// Alphabet used by the action-oracle tests: x, D, H^-1, (H+2)^-1, E_ij with
// i,j <= 4, and the integration.
struct WordSym {
    enum class Kind { X, D, HInv, H2Inv, E, Int } kind;
    unsigned i = 0, j = 0;
};

inline WordSym rand_symbol(Rng& rng) {
    switch (rand_in(rng, 0, 5)) {
        case 0: return {WordSym::Kind::X};
        case 1: return {WordSym::Kind::D};
        case 2: return {WordSym::Kind::HInv};
        case 3: return {WordSym::Kind::H2Inv};
        case 4:
            return {WordSym::Kind::E, static_cast<unsigned>(rand_in(rng, 0, 4)),
                    static_cast<unsigned>(rand_in(rng, 0, 4))};
        default: return {WordSym::Kind::Int};
    }
}

inline std::vector<WordSym> rand_word(Rng& rng, int max_len = 8) {
    std::vector<WordSym> w(static_cast<size_t>(rand_in(rng, 1, max_len)));
    for (auto& s : w) s = rand_symbol(rng);
    return w;
}

inline A1Element symbol_element(const WordSym& s) {
    switch (s.kind) {
        case WordSym::Kind::X: return jac::gen_x();
        case WordSym::Kind::D: return jac::gen_partial();
        case WordSym::Kind::HInv: return jac::gen_H_inv();
        case WordSym::Kind::H2Inv: return jac::gen_shift_inv(2, 1);
        case WordSym::Kind::E: return jac::gen_E(s.i, s.j);
        case WordSym::Kind::Int: return jac::gen_int();
    }
    return jac::a1_zero();
}

// Canonical form of the word through the algebra arithmetic.
inline A1Element word_element(const std::vector<WordSym>& w) {
    A1Element acc = jac::a1_one();
    for (const auto& s : w) acc = acc * symbol_element(s);
    return acc;
}

// Direct action of one symbol on a monomial c*x^k.
inline std::optional<std::pair<unsigned, Rational>> symbol_action(const WordSym& s, unsigned k,
                                                                  const Rational& c) {
    switch (s.kind) {
        case WordSym::Kind::X: return {{k + 1, c}};
        case WordSym::Kind::D:
            if (k == 0) return std::nullopt;
            return {{k - 1, c * Rational(static_cast<long>(k))}};
        case WordSym::Kind::HInv: return {{k, c / Rational(static_cast<long>(k) + 1)}};
        case WordSym::Kind::H2Inv: return {{k, c / Rational(static_cast<long>(k) + 3)}};
        case WordSym::Kind::E:
            if (k != s.j) return std::nullopt;
            return {{s.i, c}};
        case WordSym::Kind::Int: return {{k + 1, c / Rational(static_cast<long>(k) + 1)}};
    }
    return std::nullopt;
}

// Word action on a polynomial, rightmost symbol first.
inline Poly1 word_action(const std::vector<WordSym>& w, const Poly1& p) {
    Poly1 cur = p;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Poly1 next;
        for (auto& [k, c] : cur.coeffs)
            if (auto img = symbol_action(*it, k, c)) jac::p1_accumulate(next, img->first, img->second);
        cur = std::move(next);
    }
    return cur;
}

// --- random structured values ----------------------------------------------

inline jac::ShiftRatFun rand_ratfun(Rng& rng, int max_deg = 6, int max_shifts = 4) {
    jac::PolyQ num(static_cast<size_t>(rand_in(rng, 0, max_deg)) + 1);
    for (auto& c : num) c = rand_rational(rng, 6, 4);
    std::map<long, int> den;
    int shifts = static_cast<int>(rand_in(rng, 0, max_shifts));
    for (int t = 0; t < shifts; ++t) den[rand_in(rng, -5, 5)] = static_cast<int>(rand_in(rng, 1, 2));
    return jac::rf_make(std::move(num), std::move(den));
}

inline jac::SkewLaurent rand_skew(Rng& rng, long min_deg = -3, long max_deg = 3) {
    jac::SkewLaurent s;
    int comps = static_cast<int>(rand_in(rng, 1, 3));
    for (int t = 0; t < comps; ++t) {
        long d = rand_in(rng, min_deg, max_deg);
        jac::ShiftRatFun r = rand_ratfun(rng, 2, 2);
        if (!r.is_zero()) s = s + jac::sk_component(d, r);
    }
    return s;
}

inline jac::FiniteMatrix rand_fmatrix(Rng& rng, unsigned max_idx = 4, int max_entries = 5) {
    jac::FiniteMatrix m = jac::fm_zero(1);
    int entries = static_cast<int>(rand_in(rng, 0, max_entries));
    for (int t = 0; t < entries; ++t)
        jac::fm_accumulate(m, {static_cast<unsigned>(rand_in(rng, 0, max_idx))},
                           {static_cast<unsigned>(rand_in(rng, 0, max_idx))}, rand_rational(rng));
    return m;
}

inline jac::FiniteMatrix rand_fmatrix_n(Rng& rng, int dim, unsigned max_idx, int max_entries) {
    jac::FiniteMatrix m = jac::fm_zero(dim);
    int entries = static_cast<int>(rand_in(rng, 0, max_entries));
    for (int t = 0; t < entries; ++t) {
        jac::MIdx row, col;
        for (int s = 0; s < dim; ++s) {
            row.push_back(static_cast<unsigned>(rand_in(rng, 0, max_idx)));
            col.push_back(static_cast<unsigned>(rand_in(rng, 0, max_idx)));
        }
        jac::fm_accumulate(m, row, col, rand_rational(rng));
    }
    return m;
}

// Random element with both a word-built part and extra matrix noise.
inline A1Element rand_element(Rng& rng) {
    A1Element a = word_element(rand_word(rng, 5));
    a.mat = a.mat + rand_fmatrix(rng, 3, 3);
    return a;
}

inline jac::HUnit rand_hunit(Rng& rng, long max_idx = 4, int max_factors = 3) {
    jac::HUnit h;
    int factors = static_cast<int>(rand_in(rng, 0, max_factors));
    for (int t = 0; t < factors; ++t) {
        long i = rand_in(rng, -max_idx, max_idx);
        long e = rand_in(rng, -2, 2);
        if (e) h.exps[i] += e;
    }
    std::erase_if(h.exps, [](auto& kv) { return kv.second == 0; });
    return h;
}

// Random f with det(1+f) != 0, support within [0..max_idx]^2.
inline jac::FiniteMatrix rand_invertible_f(Rng& rng, unsigned max_idx = 4) {
    for (;;) {
        jac::FiniteMatrix f = rand_fmatrix(rng, max_idx, 6);
        if (!jac::fm_det_one_plus(f).is_zero()) return f;
    }
}

inline jac::FiniteMatrix rand_invertible_f_n(Rng& rng, int dim, unsigned max_idx) {
    for (;;) {
        jac::FiniteMatrix f = rand_fmatrix_n(rng, dim, max_idx, 5);
        if (!jac::fm_det_one_plus(f).is_zero()) return f;
    }
}

// --- random surface-syntax ASTs ---------------------------------------------
// Grammar-directed so chains associate the way the parser builds them.

jac::ExprPtr rand_ast(Rng& rng, int n, int depth);

inline jac::ExprPtr rand_atom(Rng& rng, int n, int depth) {
    using jac::GenAtom;
    switch (rand_in(rng, 0, depth > 0 ? 7 : 6)) {
        case 0:
            return jac::expr_number(Rational(rand_in(rng, 0, 9), rand_in(rng, 1, 9)));
        case 1: return jac::expr_gen({GenAtom::Type::X, static_cast<int>(rand_in(rng, 1, n))});
        case 2: return jac::expr_gen({GenAtom::Type::D, static_cast<int>(rand_in(rng, 1, n))});
        case 3: return jac::expr_gen({GenAtom::Type::H, static_cast<int>(rand_in(rng, 1, n))});
        case 4: return jac::expr_gen({GenAtom::Type::Int, static_cast<int>(rand_in(rng, 1, n))});
        case 5: {
            if (n == 1) {
                GenAtom g{GenAtom::Type::E};
                g.i = rand_in(rng, 0, 4);
                g.j = rand_in(rng, 0, 4);
                return jac::expr_gen(g);
            }
            GenAtom g{GenAtom::Type::En};
            for (int s = 0; s < n; ++s) {
                g.alpha.push_back(static_cast<unsigned>(rand_in(rng, 0, 3)));
                g.beta.push_back(static_cast<unsigned>(rand_in(rng, 0, 3)));
            }
            return jac::expr_gen(g);
        }
        case 6: {
            if (n == 1) {
                GenAtom g{GenAtom::Type::Rho};
                if (rand_in(rng, 0, 1)) {
                    g.rho_two = true;
                    g.j = rand_in(rng, 0, 3);
                    g.i = rand_in(rng, 1, 4);
                } else {
                    g.i = rand_in(rng, 0, 4);
                }
                return jac::expr_gen(g);
            }
            return jac::expr_gen({GenAtom::Type::H, static_cast<int>(rand_in(rng, 1, n))});
        }
        default: return rand_ast(rng, n, depth - 1); // parenthesized group
    }
}

inline jac::ExprPtr rand_factor(Rng& rng, int n, int depth) {
    if (depth > 0 && rand_in(rng, 0, 4) == 0) return jac::expr_neg(rand_factor(rng, n, depth - 1));
    jac::ExprPtr base = rand_atom(rng, n, depth);
    if (rand_in(rng, 0, 3) == 0) return jac::expr_pow(base, rand_in(rng, -3, 3));
    return base;
}

inline jac::ExprPtr rand_term(Rng& rng, int n, int depth) {
    jac::ExprPtr e = rand_factor(rng, n, depth);
    int factors = static_cast<int>(rand_in(rng, 0, 2));
    for (int t = 0; t < factors; ++t)
        e = jac::expr_binary(jac::Expr::Kind::Mul, std::move(e), rand_factor(rng, n, depth));
    return e;
}

inline jac::ExprPtr rand_ast(Rng& rng, int n, int depth) {
    jac::ExprPtr e = rand_term(rng, n, depth);
    int terms = static_cast<int>(rand_in(rng, 0, 2));
    for (int t = 0; t < terms; ++t) {
        jac::Expr::Kind k = rand_in(rng, 0, 1) ? jac::Expr::Kind::Add : jac::Expr::Kind::Sub;
        e = jac::expr_binary(k, std::move(e), rand_term(rng, n, depth));
    }
    return e;
}

} // namespace jactest
