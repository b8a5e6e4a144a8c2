#include "jac/a1.hpp"

#include <algorithm>

#include "jac/error.hpp"

namespace jac {

Poly1 p1_monomial(unsigned k, Rational c) {
    Poly1 p;
    if (!c.is_zero()) p.coeffs.emplace(k, std::move(c));
    return p;
}

void p1_accumulate(Poly1& p, unsigned k, const Rational& c) {
    if (c.is_zero()) return;
    auto it = p.coeffs.find(k);
    if (it == p.coeffs.end()) {
        p.coeffs.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.coeffs.erase(it);
    }
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
    Poly1 r = a;
    for (auto& [k, c] : b.coeffs) p1_accumulate(r, k, c);
    return r;
}

Poly1 p1_scale(const Rational& c, const Poly1& a) {
    Poly1 r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : a.coeffs) r.coeffs.emplace(k, v * c);
    return r;
}

A1Element a1_zero() { return {}; }
A1Element a1_one() { return a1_from_skew(sk_one()); }

A1Element a1_from_skew(SkewLaurent s) {
    A1Element a;
    a.skew = std::move(s);
    return a;
}

A1Element a1_from_mat(FiniteMatrix m) {
    if (m.dim != 1) fail(ErrCode::DimMismatch, "A1 matrix part must have arity 1");
    A1Element a;
    a.mat = std::move(m);
    return a;
}

A1Element gen_x() { return a1_from_skew(sk_component(1, rf_const(Rational(1)))); }
A1Element gen_partial() { return a1_from_skew(sk_component(-1, rf_const(Rational(1)))); }
A1Element gen_H() { return a1_from_skew(sk_component(0, rf_H())); }
A1Element gen_H_inv() { return gen_shift_inv(0, 1); }
A1Element gen_h() { return a1_from_skew(sk_component(0, rf_make({Rational(-1), Rational(1)}, {}))); }
A1Element gen_int() { return a1_from_skew(sk_component(1, rf_make({Rational(1)}, {{0, 1}}))); }

A1Element gen_shift_inv(long j, int k) {
    if (j < 0 || k < 1) fail(ErrCode::BadIndex, "shift_inv needs j >= 0, k >= 1");
    return a1_from_skew(sk_component(0, rf_make({Rational(1)}, {{j, k}})));
}

A1Element gen_shifted_pi_prime(long i, int k) {
    if (i < 1 || k < 1) fail(ErrCode::BadIndex, "shifted_pi_prime needs i >= 1, k >= 1");
    return a1_from_skew(sk_component(0, rf_make({Rational(1)}, {{-i, k}})));
}

A1Element gen_E(unsigned i, unsigned j) { return a1_from_mat(fm_unit1(i, j)); }
A1Element gen_pi(unsigned i) { return gen_E(i, i); }

A1Element gen_rho(unsigned i) {
    if (i == 0) return a1_one();
    std::vector<unsigned> below(i);
    for (unsigned t = 0; t < i; ++t) below[t] = t;
    return a1_projector_cofinite(below);
}

A1Element gen_rho(unsigned j, unsigned i) {
    if (i < 1) fail(ErrCode::BadIndex, "rho_{ji} needs i >= 1");
    if (j == 0) return gen_rho(i);
    A1Element a = gen_shifted_pi_prime(static_cast<long>(i), static_cast<int>(j));
    // Kill the degrees below i that the lift of (H-i)^{-j} leaves alive.
    for (unsigned t = 0; t + 1 < i; ++t) {
        Rational val = Rational(1) / Rational(Int::pow(Int(static_cast<long>(t) + 1 - static_cast<long>(i)),
                                                       static_cast<unsigned long>(j)));
        fm_accumulate(a.mat, {t}, {t}, -val);
    }
    return a;
}

A1Element a1_projector_finite(const std::vector<unsigned>& degrees) {
    A1Element a;
    for (unsigned i : degrees) fm_accumulate(a.mat, {i}, {i}, Rational(1));
    return a;
}

A1Element a1_projector_cofinite(const std::vector<unsigned>& excluded) {
    A1Element a = a1_one();
    for (unsigned i : excluded) fm_accumulate(a.mat, {i}, {i}, Rational(-1));
    return a;
}

A1Element operator+(const A1Element& a, const A1Element& b) {
    A1Element r;
    r.skew = a.skew + b.skew;
    r.mat = a.mat + b.mat;
    return r;
}

A1Element operator-(const A1Element& a, const A1Element& b) { return a + a1_scale(Rational(-1), b); }

A1Element a1_scale(const Rational& c, const A1Element& a) {
    A1Element r;
    r.skew = sk_scale(c, a.skew);
    r.mat = fm_scale(c, a.mat);
    return r;
}

static Rational falling(unsigned k, unsigned e) {
    Int r(1);
    for (unsigned t = 0; t < e; ++t) r *= Int(static_cast<long>(k - t));
    return Rational(std::move(r));
}

std::optional<std::pair<unsigned, Rational>> a1_lift_apply_component(long d, const ShiftRatFun& r,
                                                                     unsigned k) {
    if (d >= 0) return std::make_pair(k + static_cast<unsigned>(d), rf_eval_regularized(r, k + 1));
    unsigned e = static_cast<unsigned>(-d);
    if (k < e) return std::nullopt;
    Rational c = falling(k, e) * rf_eval_regularized(r, static_cast<long>(k - e) + 1);
    return std::make_pair(k - e, std::move(c));
}

// Per-component decompositions cached for repeated lifted evaluation.
using SkewPF = std::vector<std::pair<long, PartialFractions>>;

static SkewPF skew_pf(const SkewLaurent& s) {
    SkewPF out;
    out.reserve(s.comps.size());
    for (auto& [d, r] : s.comps) out.emplace_back(d, rf_partial_fractions(r));
    return out;
}

static std::vector<std::pair<unsigned, Rational>> lift_apply(const SkewPF& comps, unsigned k) {
    std::vector<std::pair<unsigned, Rational>> out;
    for (auto& [d, pf] : comps) {
        if (d >= 0) {
            Rational c = pf_eval_regularized(pf, k + 1);
            if (!c.is_zero()) out.emplace_back(k + static_cast<unsigned>(d), std::move(c));
        } else {
            unsigned e = static_cast<unsigned>(-d);
            if (k < e) continue;
            Rational c = falling(k, e) * pf_eval_regularized(pf, static_cast<long>(k - e) + 1);
            if (!c.is_zero()) out.emplace_back(k - e, std::move(c));
        }
    }
    return out;
}

static long max_positive_pole(const SkewLaurent& s) {
    long m = 0;
    for (auto& [d, r] : s.comps)
        for (auto& [j, mult] : r.den)
            if (-j > m) m = -j;
    return m;
}

static long partial_depth(const SkewLaurent& s) {
    long m = 0;
    for (auto& [d, r] : s.comps)
        if (d < 0) m = std::max(m, -d);
    return m;
}

A1Element operator*(const A1Element& a, const A1Element& b) {
    A1Element r;
    r.skew = a.skew * b.skew;
    r.mat = a.mat * b.mat;

    SkewPF pfA, pfB;
    if (!a.skew.is_zero()) pfA = skew_pf(a.skew);
    if (!b.skew.is_zero()) pfB = skew_pf(b.skew);

    if (!a.skew.is_zero() && !b.skew.is_zero()) {
        // Section defect Delta = s(A)s(B) - s(AB). Beyond all regularized
        // pole columns and the partial-degree window the lifted components
        // act as genuine rational functions, so the defect is supported on
        // finitely many columns; N bounds them.
        long poles = std::max({max_positive_pole(a.skew), max_positive_pole(b.skew),
                               max_positive_pole(r.skew)});
        long N = 1 + poles + partial_depth(a.skew) + partial_depth(b.skew);
        SkewPF pfS = skew_pf(r.skew);
        for (long k = 0; k < N + 6; ++k) {
            unsigned uk = static_cast<unsigned>(k);
            std::map<unsigned, Rational> col;
            for (auto& [mid, c] : lift_apply(pfB, uk))
                for (auto& [out, c2] : lift_apply(pfA, mid)) {
                    auto [it, fresh] = col.emplace(out, c * c2);
                    if (!fresh) it->second += c * c2;
                }
            for (auto& [out, c] : lift_apply(pfS, uk)) {
                auto [it, fresh] = col.emplace(out, -c);
                if (!fresh) it->second -= c;
            }
            for (auto& [row, c] : col) {
                if (c.is_zero()) continue;
                if (k >= N) fail(ErrCode::Internal, "section defect escaped its support bound");
                fm_accumulate(r.mat, {row}, {static_cast<unsigned>(k)}, c);
            }
        }
    }

    // s(A) * g: columns of g get pushed through the lifted action on x^i.
    if (!a.skew.is_zero() && !b.mat.is_zero()) {
        for (auto& [ij, v] : b.mat.entries)
            for (auto& [out, c] : lift_apply(pfA, ij.first[0]))
                fm_accumulate(r.mat, {out}, ij.second, v * c);
    }

    // f * s(B): E_{ij} s_d = lambda_d E_{i,j-d} with lambda_d produced by the
    // degree-d component on x^{j-d}.
    if (!a.mat.is_zero() && !b.skew.is_zero()) {
        for (auto& [ij, v] : a.mat.entries) {
            long j = ij.second[0];
            for (auto& [d, pf] : pfB) {
                long src = j - d;
                if (src < 0) continue;
                Rational lambda;
                if (d >= 0) {
                    lambda = pf_eval_regularized(pf, src + 1);
                } else {
                    unsigned e = static_cast<unsigned>(-d);
                    lambda = falling(static_cast<unsigned>(src), e) * pf_eval_regularized(pf, j + 1);
                }
                if (!lambda.is_zero())
                    fm_accumulate(r.mat, ij.first, {static_cast<unsigned>(src)}, v * lambda);
            }
        }
    }

    return r;
}

Poly1 a1_apply(const A1Element& a, const Poly1& p) {
    Poly1 out;
    SkewPF pf = skew_pf(a.skew);
    for (auto& [k, c] : p.coeffs)
        for (auto& [deg, v] : lift_apply(pf, k)) p1_accumulate(out, deg, c * v);
    for (auto& [ij, v] : a.mat.entries) {
        auto it = p.coeffs.find(ij.second[0]);
        if (it != p.coeffs.end()) p1_accumulate(out, ij.first[0], v * it->second);
    }
    return out;
}

std::map<long, A1Element> a1_grade(const A1Element& a) {
    std::map<long, A1Element> out;
    for (auto& [d, r] : a.skew.comps) out[d].skew.comps.emplace(d, r);
    for (auto& [ij, v] : a.mat.entries) {
        long d = static_cast<long>(ij.first[0]) - static_cast<long>(ij.second[0]);
        fm_accumulate(out[d].mat, ij.first, ij.second, v);
    }
    return out;
}

A1Element a1_theta(const A1Element& a) {
    A1Element r;
    // theta(x^d r(H)) = r(H) D^d and theta(r(H) D^e) = x^e r(H): the mixed
    // presentation just flips the degree key.
    for (auto& [d, rf] : a.skew.comps) r.skew.comps.emplace(-d, rf);
    r.mat = fm_theta(a.mat);
    return r;
}

} // namespace jac
