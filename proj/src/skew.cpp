#include "jac/skew.hpp"


#include "jac/error.hpp"

namespace jac {

SkewLaurent sk_zero() { return {}; }

SkewLaurent sk_one() { return sk_component(0, rf_const(Rational(1))); }

SkewLaurent sk_component(long d, ShiftRatFun r) {
    SkewLaurent s;
    if (!r.is_zero()) s.comps.emplace(d, std::move(r));
    return s;
}

SkewLaurent operator+(const SkewLaurent& a, const SkewLaurent& b) {
    SkewLaurent r = a;
    for (auto& [d, rb] : b.comps) {
        auto it = r.comps.find(d);
        if (it == r.comps.end()) {
            r.comps.emplace(d, rb);
        } else {
            it->second = it->second + rb;
            if (it->second.is_zero()) r.comps.erase(it);
        }
    }
    return r;
}

SkewLaurent sk_scale(const Rational& c, const SkewLaurent& a) {
    SkewLaurent r;
    if (c.is_zero()) return r;
    for (auto& [d, ra] : a.comps) r.comps.emplace(d, rf_scale(c, ra));
    return r;
}

SkewLaurent operator-(const SkewLaurent& a, const SkewLaurent& b) {
    return a + sk_scale(Rational(-1), b);
}

ShiftRatFun rising_product(long e) {
    PolyQ p = {Rational(1)};
    for (long t = 0; t < e; ++t) p = poly_mul(p, PolyQ{Rational(t), Rational(1)});
    return ShiftRatFun{p, {}};
}

// Uniform left form Sum r_d(H) x^d: x^d r(H) = sigma^d(r) x^d, and
// D^e = H(H+1)...(H+e-1) x^{-e}.
static std::map<long, ShiftRatFun> to_left(const SkewLaurent& a) {
    std::map<long, ShiftRatFun> l;
    for (auto& [d, r] : a.comps) {
        if (d >= 0)
            l[d] = rf_shift(r, d);
        else
            l[d] = r * rising_product(-d);
    }
    return l;
}

static SkewLaurent from_left(std::map<long, ShiftRatFun> l) {
    SkewLaurent s;
    for (auto& [d, r] : l) {
        if (r.is_zero()) continue;
        if (d >= 0)
            s.comps.emplace(d, rf_shift(r, -d));
        else {
            std::map<long, int> den;
            for (long t = 0; t < -d; ++t) den[t] += 1;
            s.comps.emplace(d, r * rf_make({Rational(1)}, std::move(den)));
        }
    }
    return s;
}

SkewLaurent operator*(const SkewLaurent& a, const SkewLaurent& b) {
    auto la = to_left(a), lb = to_left(b);
    std::map<long, ShiftRatFun> acc;
    for (auto& [p, rp] : la)
        for (auto& [q, rq] : lb) {
            ShiftRatFun piece = rp * rf_shift(rq, p); // (r x^p)(s x^q) = r sigma^p(s) x^{p+q}
            if (piece.is_zero()) continue;
            auto it = acc.find(p + q);
            if (it == acc.end())
                acc.emplace(p + q, std::move(piece));
            else
                it->second = it->second + piece;
        }
    return from_left(std::move(acc));
}

// Integer roots of p with multiplicities, found by a synthetic-division scan
// over [-B, B] where B is the Fujiwara root bound (capped; any root of a
// fully-splitting numerator at desk scale sits far below the cap).
static std::map<long, int> extract_integer_roots(PolyQ& work) {
    std::map<long, int> roots;
    if (work.size() <= 1) return roots;
    const long kCap = 1000000;
    Rational lead = work.back();
    Int bound(1);
    for (size_t k = 1; k < work.size(); ++k) {
        const Rational& c = work[work.size() - 1 - k];
        if (c.is_zero()) continue;
        Rational ratio = c / lead;
        // ceil(|ratio|)^(1/k), rounded up
        Int mag = (ratio.num().abs() + ratio.den() - Int(1)) / ratio.den();
        Int root = mag.root_ceil(static_cast<unsigned long>(k));
        if (root > bound) bound = root;
    }
    bound = bound * Int(2) + Int(1);
    long B = bound > Int(kCap) ? kCap : bound.to_long();
    for (long r = -B; r <= B && work.size() > 1; ++r) {
        while (work.size() > 1 && poly_eval(work, Rational(r)).is_zero()) {
            work = poly_div_linear(work, -r); // factor (H - r)
            roots[-r] += 1;                   // stored as shift j with root -j
        }
    }
    return roots;
}

std::optional<BaseUnit> sk_is_base_unit(const SkewLaurent& a) {
    if (a.comps.size() != 1 || a.comps.begin()->first != 0) return std::nullopt;
    const ShiftRatFun& r = a.comps.begin()->second;
    PolyQ work = r.num;
    std::map<long, int> num_factors = extract_integer_roots(work);
    if (work.size() != 1) return std::nullopt; // leftover non-split factor
    BaseUnit bu;
    bu.lambda = work[0];
    for (auto& [j, m] : num_factors) bu.shift_exps[j] += m;
    for (auto& [j, m] : r.den) bu.shift_exps[j] -= m; // disjoint from num: r is reduced
    std::erase_if(bu.shift_exps, [](auto& kv) { return kv.second == 0; });
    return bu;
}

} // namespace jac
