#include "jac/ratfun.hpp"

#include <algorithm>
#include <sstream>

#include "jac/error.hpp"

namespace jac {

PolyQ poly_trim(PolyQ p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return poly_trim(std::move(r));
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) { return poly_add(a, poly_scale(Rational(-1), b)); }

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(std::move(r));
}

PolyQ poly_scale(const Rational& c, const PolyQ& p) {
    if (c.is_zero()) return {};
    PolyQ r = p;
    for (auto& x : r) x *= c;
    return r;
}

Rational poly_eval(const PolyQ& p, const Rational& at) {
    Rational acc;
    for (size_t i = p.size(); i-- > 0;) acc = acc * at + p[i];
    return acc;
}

PolyQ poly_compose_shift(const PolyQ& p, long d) {
    if (d == 0) return p;
    // Horner in (H - d).
    PolyQ lin = {Rational(-d), Rational(1)};
    PolyQ acc;
    for (size_t i = p.size(); i-- > 0;) acc = poly_add(poly_mul(acc, lin), PolyQ{p[i]});
    return acc;
}

std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b) {
    if (b.empty()) fail(ErrCode::Singular, "polynomial division by zero");
    PolyQ rem = a, quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rational(0));
    while (rem.size() >= b.size()) {
        size_t shift = rem.size() - b.size();
        Rational c = rem.back() / b.back();
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        rem = poly_trim(std::move(rem));
        if (rem.size() >= b.size() && rem.size() == shift + b.size())
            fail(ErrCode::Internal, "division failed to reduce degree");
    }
    return {poly_trim(std::move(quot)), std::move(rem)};
}

PolyQ poly_div_linear(const PolyQ& p, long shift) {
    // Synthetic division by (H + shift); root at H = -shift.
    if (p.empty()) return {};
    PolyQ q(p.size() - 1);
    Rational carry = p.back();
    Rational root(-shift);
    for (size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * root;
    }
    if (!carry.is_zero()) fail(ErrCode::Internal, "poly_div_linear: not a root");
    return poly_trim(std::move(q));
}

ShiftRatFun rf_make(PolyQ num, std::map<long, int> den) {
    num = poly_trim(std::move(num));
    for (auto& [j, m] : den)
        if (m < 1) fail(ErrCode::BadIndex, "denominator multiplicity must be >= 1");
    if (num.empty()) return {};
    for (auto it = den.begin(); it != den.end();) {
        long j = it->first;
        while (it->second > 0 && poly_eval(num, Rational(-j)).is_zero()) {
            num = poly_div_linear(num, j);
            --it->second;
        }
        if (it->second == 0)
            it = den.erase(it);
        else
            ++it;
    }
    return ShiftRatFun{std::move(num), std::move(den)};
}

ShiftRatFun rf_const(const Rational& c) {
    if (c.is_zero()) return {};
    return ShiftRatFun{{c}, {}};
}

ShiftRatFun rf_H() { return ShiftRatFun{{Rational(0), Rational(1)}, {}}; }

static PolyQ den_expand(const std::map<long, int>& den) {
    PolyQ r = {Rational(1)};
    for (auto& [j, m] : den)
        for (int t = 0; t < m; ++t) r = poly_mul(r, PolyQ{Rational(j), Rational(1)});
    return r;
}

ShiftRatFun operator+(const ShiftRatFun& a, const ShiftRatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::map<long, int> den;
    for (auto& [j, m] : a.den) den[j] = m;
    for (auto& [j, m] : b.den) den[j] = std::max(den[j], m);
    std::map<long, int> coA, coB; // den / a.den and den / b.den
    for (auto& [j, m] : den) {
        int ma = a.den.count(j) ? a.den.at(j) : 0;
        int mb = b.den.count(j) ? b.den.at(j) : 0;
        if (m - ma) coA[j] = m - ma;
        if (m - mb) coB[j] = m - mb;
    }
    PolyQ num = poly_add(poly_mul(a.num, den_expand(coA)), poly_mul(b.num, den_expand(coB)));
    return rf_make(std::move(num), std::move(den));
}

ShiftRatFun operator-(const ShiftRatFun& a) { return rf_scale(Rational(-1), a); }

ShiftRatFun operator-(const ShiftRatFun& a, const ShiftRatFun& b) { return a + (-b); }

ShiftRatFun operator*(const ShiftRatFun& a, const ShiftRatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<long, int> den = a.den;
    for (auto& [j, m] : b.den) den[j] += m;
    return rf_make(poly_mul(a.num, b.num), std::move(den));
}

ShiftRatFun rf_scale(const Rational& c, const ShiftRatFun& a) {
    if (c.is_zero() || a.is_zero()) return {};
    ShiftRatFun r = a;
    for (auto& x : r.num) x *= c;
    return r;
}

ShiftRatFun rf_shift(const ShiftRatFun& a, long d) {
    if (a.is_zero() || d == 0) return a;
    std::map<long, int> den;
    for (auto& [j, m] : a.den) den[j - d] = m;
    // Already reduced: shifting moves roots and poles in lockstep.
    return ShiftRatFun{poly_compose_shift(a.num, d), std::move(den)};
}

PartialFractions rf_partial_fractions(const ShiftRatFun& a) {
    PartialFractions pf;
    if (a.is_zero()) return pf;
    if (a.den.empty()) {
        pf.poly = a.num;
        return pf;
    }
    PolyQ D = den_expand(a.den);
    auto [quot, rem] = poly_divmod(a.num, D);
    pf.poly = std::move(quot);
    for (auto& [j, m] : a.den) {
        // Taylor-expand rem / prod_{j' != j}(H+j')^{m'} around H = -j in
        // t = H + j up to order m-1 by power-series division; the t^k
        // coefficient is the coefficient of (H+j)^{-(m-k)}.
        std::map<long, int> others = a.den;
        others.erase(j);
        PolyQ numT = poly_compose_shift(rem, j);             // rem(t - j)
        PolyQ denT = poly_compose_shift(den_expand(others), j); // nonzero at t = 0
        std::vector<Rational> s(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) {
            Rational acc = k < static_cast<int>(numT.size()) ? numT[k] : Rational(0);
            for (int l = 0; l < k; ++l) {
                size_t idx = static_cast<size_t>(k - l);
                if (idx < denT.size()) acc -= s[l] * denT[idx];
            }
            s[k] = acc / denT[0];
            if (!s[k].is_zero()) pf.terms[{j, m - k}] = s[k];
        }
    }
    return pf;
}

ShiftRatFun rf_reassemble(const PartialFractions& pf) {
    ShiftRatFun acc = rf_make(pf.poly, {});
    for (auto& [jk, c] : pf.terms) acc = acc + rf_make({c}, {{jk.first, jk.second}});
    return acc;
}

Rational pf_eval_regularized(const PartialFractions& pf, long m) {
    if (m < 1) fail(ErrCode::PoleAtNonPositive, "regularized evaluation point must be >= 1");
    Rational val = poly_eval(pf.poly, Rational(m));
    for (auto& [jk, c] : pf.terms) {
        auto [j, k] = jk;
        if (-j == m) continue; // pole column, lifted to 0
        val += c / Rational(Int::pow(Int(m + j), static_cast<unsigned long>(k)));
    }
    return val;
}

Rational rf_eval_regularized(const ShiftRatFun& a, long m) {
    return pf_eval_regularized(rf_partial_fractions(a), m);
}

static std::string poly_str_H(const PolyQ& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        Rational c = p[i];
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        if (i == 0)
            os << c.str();
        else {
            if (!c.is_one()) os << c.str() << "*";
            os << "H";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

static int poly_term_count(const PolyQ& p) {
    int c = 0;
    for (auto& x : p)
        if (!x.is_zero()) ++c;
    return c;
}

std::string rf_str(const ShiftRatFun& a, bool as_factor) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    std::string num = poly_str_H(a.num);
    bool trivial_num = a.num.size() == 1 && a.num[0].is_one();
    bool compound = poly_term_count(a.num) > 1 ||
                    (a.num.size() == 1 && a.num[0].sign() < 0 && (as_factor || !a.den.empty()));
    if (!trivial_num || a.den.empty()) {
        if (compound && (as_factor || !a.den.empty()))
            os << "(" << num << ")";
        else
            os << num;
        if (!a.den.empty()) os << "*";
    }
    bool first = true;
    for (auto& [j, m] : a.den) {
        if (!first) os << "*";
        first = false;
        if (j == 0)
            os << "H";
        else if (j > 0)
            os << "(H+" << j << ")";
        else
            os << "(H-" << -j << ")";
        os << "^-" << m;
    }
    return os.str();
}

} // namespace jac
