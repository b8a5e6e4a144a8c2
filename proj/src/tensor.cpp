#include "jac/tensor.hpp"

#include <algorithm>

#include "jac/error.hpp"

namespace jac {

PolyN pn_monomial(int n, std::vector<unsigned> alpha, Rational c) {
    if (static_cast<int>(alpha.size()) != n) fail(ErrCode::ArityMismatch, "monomial arity");
    PolyN p;
    p.n = n;
    if (!c.is_zero()) p.coeffs.emplace(std::move(alpha), std::move(c));
    return p;
}

void pn_accumulate(PolyN& p, const std::vector<unsigned>& alpha, const Rational& c) {
    if (c.is_zero()) return;
    auto it = p.coeffs.find(alpha);
    if (it == p.coeffs.end()) {
        p.coeffs.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.coeffs.erase(it);
    }
}

PolyN operator+(const PolyN& a, const PolyN& b) {
    if (a.n != b.n) fail(ErrCode::ArityMismatch, "polynomial arities differ");
    PolyN r = a;
    for (auto& [al, c] : b.coeffs) pn_accumulate(r, al, c);
    return r;
}

PolyN operator*(const PolyN& a, const PolyN& b) {
    if (a.n != b.n) fail(ErrCode::ArityMismatch, "polynomial arities differ");
    PolyN r;
    r.n = a.n;
    for (auto& [al, c] : a.coeffs)
        for (auto& [be, d] : b.coeffs) {
            std::vector<unsigned> exps(al.size());
            for (size_t i = 0; i < al.size(); ++i) exps[i] = al[i] + be[i];
            pn_accumulate(r, exps, c * d);
        }
    return r;
}

PolyN pn_scale(const Rational& c, const PolyN& a) {
    PolyN r;
    r.n = a.n;
    if (c.is_zero()) return r;
    for (auto& [al, v] : a.coeffs) r.coeffs.emplace(al, v * c);
    return r;
}

static void check_tn(const TensorElement& a, const TensorElement& b) {
    if (a.n != b.n) fail(ErrCode::ArityMismatch, "tensor arities differ");
}

TensorElement tn_zero(int n) {
    if (n < 1) fail(ErrCode::BadIndex, "arity must be >= 1");
    return TensorElement{n, {}};
}

TensorElement tn_scalar(int n, const Rational& c) {
    TensorElement t = tn_zero(n);
    if (!c.is_zero())
        t.terms.push_back(TensorTerm{c, std::vector<A1Element>(static_cast<size_t>(n), a1_one())});
    return t;
}

TensorElement tn_one(int n) { return tn_scalar(n, Rational(1)); }

TensorElement tn_embed(int n, int slot, A1Element a) {
    if (slot < 1 || slot > n) fail(ErrCode::BadIndex, "tensor slot out of range");
    TensorElement t = tn_zero(n);
    if (a.is_zero()) return t;
    std::vector<A1Element> factors(static_cast<size_t>(n), a1_one());
    factors[static_cast<size_t>(slot - 1)] = std::move(a);
    t.terms.push_back(TensorTerm{Rational(1), std::move(factors)});
    return t;
}

TensorElement tn_from_matrix(int n, const FiniteMatrix& f) {
    if (f.dim != n) fail(ErrCode::DimMismatch, "matrix arity differs from tensor arity");
    TensorElement t = tn_zero(n);
    for (auto& [ij, c] : f.entries) {
        std::vector<A1Element> factors;
        factors.reserve(static_cast<size_t>(n));
        for (int s = 0; s < n; ++s)
            factors.push_back(gen_E(ij.first[static_cast<size_t>(s)], ij.second[static_cast<size_t>(s)]));
        t.terms.push_back(TensorTerm{c, std::move(factors)});
    }
    return t;
}

static bool term_dead(const TensorTerm& t) {
    if (t.coeff.is_zero()) return true;
    for (auto& f : t.factors)
        if (f.is_zero()) return true;
    return false;
}

// Merge structurally identical factor lists; the term count stays small at
// desk scale, so a quadratic scan is fine.
static TensorElement tn_normalize(TensorElement t) {
    std::vector<TensorTerm> merged;
    for (auto& term : t.terms) {
        if (term_dead(term)) continue;
        bool hit = false;
        for (auto& m : merged)
            if (m.factors == term.factors) {
                m.coeff += term.coeff;
                hit = true;
                break;
            }
        if (!hit) merged.push_back(std::move(term));
    }
    std::erase_if(merged, [](const TensorTerm& x) { return x.coeff.is_zero(); });
    t.terms = std::move(merged);
    return t;
}

TensorElement tn_add(const TensorElement& a, const TensorElement& b) {
    check_tn(a, b);
    TensorElement r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return tn_normalize(std::move(r));
}

TensorElement tn_mul(const TensorElement& a, const TensorElement& b) {
    check_tn(a, b);
    TensorElement r = tn_zero(a.n);
    for (auto& ta : a.terms)
        for (auto& tb : b.terms) {
            TensorTerm t;
            t.coeff = ta.coeff * tb.coeff;
            t.factors.reserve(ta.factors.size());
            for (size_t s = 0; s < ta.factors.size(); ++s)
                t.factors.push_back(ta.factors[s] * tb.factors[s]);
            r.terms.push_back(std::move(t));
        }
    return tn_normalize(std::move(r));
}

TensorElement tn_scale(const Rational& c, const TensorElement& a) {
    TensorElement r = a;
    for (auto& t : r.terms) t.coeff *= c;
    return tn_normalize(std::move(r));
}

TensorElement tn_theta(const TensorElement& a) {
    TensorElement r = a;
    for (auto& t : r.terms)
        for (auto& f : t.factors) f = a1_theta(f);
    return tn_normalize(std::move(r));
}

PolyN tn_apply(const TensorElement& a, const PolyN& p) {
    if (a.n != p.n) fail(ErrCode::ArityMismatch, "tensor and polynomial arities differ");
    PolyN out;
    out.n = p.n;
    for (auto& term : a.terms) {
        for (auto& [alpha, c] : p.coeffs) {
            // Per-slot images of x^{alpha_s}, combined multilinearly.
            std::vector<Poly1> images(term.factors.size());
            bool dead = false;
            for (size_t s = 0; s < term.factors.size() && !dead; ++s) {
                images[s] = a1_apply(term.factors[s], p1_monomial(alpha[s]));
                dead = images[s].is_zero();
            }
            if (dead) continue;
            std::vector<std::pair<std::vector<unsigned>, Rational>> acc = {
                {std::vector<unsigned>{}, term.coeff * c}};
            for (auto& img : images) {
                std::vector<std::pair<std::vector<unsigned>, Rational>> next;
                for (auto& [exps, v] : acc)
                    for (auto& [deg, w] : img.coeffs) {
                        auto e2 = exps;
                        e2.push_back(deg);
                        next.emplace_back(std::move(e2), v * w);
                    }
                acc = std::move(next);
            }
            for (auto& [exps, v] : acc) pn_accumulate(out, exps, v);
        }
    }
    return out;
}

A1Element tn_as_a1(const TensorElement& a) {
    if (a.n != 1) fail(ErrCode::ArityMismatch, "not an arity-1 element");
    A1Element r;
    for (auto& t : a.terms) r = r + a1_scale(t.coeff, t.factors[0]);
    return r;
}

std::vector<std::pair<BasisKey, Rational>> a1_basis_terms(const A1Element& u) {
    std::vector<std::pair<BasisKey, Rational>> out;
    for (auto& [d, r] : u.skew.comps) {
        PartialFractions pf = rf_partial_fractions(r);
        for (size_t i = 0; i < pf.poly.size(); ++i)
            if (!pf.poly[i].is_zero())
                out.push_back({BasisKey{BasisKey::SkewPoly, d, static_cast<long>(i), 0}, pf.poly[i]});
        for (auto& [jk, c] : pf.terms)
            out.push_back({BasisKey{BasisKey::SkewPF, d, jk.first, jk.second}, c});
    }
    for (auto& [ij, c] : u.mat.entries)
        out.push_back({BasisKey{BasisKey::Mat, static_cast<long>(ij.first[0]),
                                static_cast<long>(ij.second[0]), 0},
                       c});
    return out;
}

std::map<std::vector<BasisKey>, Rational> tensor_basis_expand(const TensorElement& a) {
    std::map<std::vector<BasisKey>, Rational> acc;
    for (auto& term : a.terms) {
        std::vector<std::pair<std::vector<BasisKey>, Rational>> partial = {
            {std::vector<BasisKey>{}, term.coeff}};
        for (auto& factor : term.factors) {
            auto basis = a1_basis_terms(factor);
            std::vector<std::pair<std::vector<BasisKey>, Rational>> next;
            next.reserve(partial.size() * basis.size());
            for (auto& [keys, v] : partial)
                for (auto& [bk, c] : basis) {
                    auto k2 = keys;
                    k2.push_back(bk);
                    next.emplace_back(std::move(k2), v * c);
                }
            partial = std::move(next);
        }
        for (auto& [keys, v] : partial) {
            auto it = acc.find(keys);
            if (it == acc.end())
                acc.emplace(std::move(keys), v);
            else
                it->second += v;
        }
    }
    std::erase_if(acc, [](auto& kv) { return kv.second.is_zero(); });
    return acc;
}

std::set<std::uint64_t> tn_basis_patterns(const TensorElement& a) {
    std::set<std::uint64_t> pats;
    for (auto& [keys, c] : tensor_basis_expand(a)) {
        std::uint64_t mask = 0;
        for (size_t s = 0; s < keys.size(); ++s)
            if (keys[s].is_skew()) mask |= 1ull << s;
        pats.insert(mask);
    }
    return pats;
}

IdealNF generated_ideal(const TensorElement& a) {
    auto pats = tn_basis_patterns(a);
    return id_canon(a.n, std::vector<std::uint64_t>(pats.begin(), pats.end()));
}

static void check_minimal_unit_shape(const MinimalUnit& u, int* n_out) {
    int n = static_cast<int>(u.hs.size());
    if (n < 1) fail(ErrCode::BadIndex, "minimal unit needs at least one slot");
    if (u.f.dim != n) fail(ErrCode::DimMismatch, "matrix arity differs from the H-unit list");
    if (u.lambda.is_zero()) fail(ErrCode::BadIndex, "unit scalar must be nonzero");
    *n_out = n;
}

TensorElement minimal_unit_build(const MinimalUnit& u) {
    int n = 0;
    check_minimal_unit_shape(u, &n);
    TensorElement hpart = tn_zero(n);
    {
        std::vector<A1Element> factors;
        factors.reserve(static_cast<size_t>(n));
        for (auto& h : u.hs) factors.push_back(h_build(h));
        hpart.terms.push_back(TensorTerm{Rational(1), std::move(factors)});
    }
    TensorElement one_plus_f = tn_add(tn_one(n), tn_from_matrix(n, u.f));
    return tn_scale(u.lambda, tn_mul(hpart, one_plus_f));
}

TensorElement minimal_unit_invert(const MinimalUnit& u) {
    int n = 0;
    check_minimal_unit_shape(u, &n);
    FiniteMatrix g = fm_invert_one_plus(u.f); // throws Singular when det = 0
    TensorElement one_plus_g = tn_add(tn_one(n), tn_from_matrix(n, g));
    TensorElement hinv = tn_zero(n);
    {
        std::vector<A1Element> factors;
        factors.reserve(static_cast<size_t>(n));
        for (auto& h : u.hs) factors.push_back(h_inverse(h));
        hinv.terms.push_back(TensorTerm{Rational(1), std::move(factors)});
    }
    return tn_scale(u.lambda.inv(), tn_mul(one_plus_g, hinv));
}

PolyN solve_n(const MinimalUnit& u, const PolyN& f) { return tn_apply(minimal_unit_invert(u), f); }

MinimalUnit factor_minimal_unit(const TensorElement& u) {
    int n = u.n;
    auto expansion = tensor_basis_expand(u);
    if (expansion.empty()) fail(ErrCode::NotAUnitBadBaseSymbol, "the zero element is not a unit");

    // Image modulo the maximal ideal: keep the all-skew basis terms.
    std::map<std::vector<BasisKey>, Rational> image;
    for (auto& [keys, c] : expansion) {
        bool skew = true;
        for (auto& k : keys) skew = skew && k.is_skew();
        if (skew) image.emplace(keys, c);
    }
    if (image.empty())
        fail(ErrCode::NotAUnitBadBaseSymbol, "image modulo the maximal ideal is zero");
    for (auto& [keys, c] : image)
        for (auto& k : keys)
            if (k.d != 0)
                fail(ErrCode::NotAUnitNonScalarDegree,
                     "image modulo the maximal ideal has nonzero multidegree");

    // Rank-1 pivot factorization of the image: slot s varies, others pinned.
    const auto& pivot = image.begin()->first;
    std::vector<HUnit> hs;
    for (int s = 0; s < n; ++s) {
        PartialFractions slice;
        for (auto& [keys, c] : image) {
            bool on_axis = true;
            for (int t = 0; t < n && on_axis; ++t)
                if (t != s) on_axis = keys[static_cast<size_t>(t)] == pivot[static_cast<size_t>(t)];
            if (!on_axis) continue;
            const BasisKey& k = keys[static_cast<size_t>(s)];
            if (k.kind == BasisKey::SkewPoly) {
                size_t deg = static_cast<size_t>(k.a);
                if (slice.poly.size() <= deg) slice.poly.resize(deg + 1);
                slice.poly[deg] = c;
            } else {
                slice.terms[{k.a, static_cast<int>(k.b)}] = c;
            }
        }
        auto bu = sk_is_base_unit(sk_component(0, rf_reassemble(slice)));
        if (!bu)
            fail(ErrCode::NotAUnitBadBaseSymbol,
                 "slot " + std::to_string(s + 1) + " symbol is not lambda * prod (H+j)^e");
        HUnit h;
        for (auto& [j, e] : bu->shift_exps) h.exps.emplace(j, e);
        hs.push_back(std::move(h));
    }

    // Strip the H-part; what is left must be lambda * (1 + f) with f a matrix.
    TensorElement hinv = tn_zero(n);
    {
        std::vector<A1Element> factors;
        for (auto& h : hs) factors.push_back(h_inverse(h));
        hinv.terms.push_back(TensorTerm{Rational(1), std::move(factors)});
    }
    auto residue = tensor_basis_expand(tn_mul(hinv, u));
    std::vector<BasisKey> idkey(static_cast<size_t>(n), BasisKey{BasisKey::SkewPoly, 0, 0, 0});
    Rational lambda;
    if (auto it = residue.find(idkey); it != residue.end()) lambda = it->second;
    if (lambda.is_zero())
        fail(ErrCode::NotAUnitBadBaseSymbol, "no identity component after stripping the H-part");
    FiniteMatrix f = fm_zero(n);
    for (auto& [keys, c] : residue) {
        if (keys == idkey) continue;
        MIdx row, col;
        for (auto& k : keys) {
            if (k.kind != BasisKey::Mat) {
                if (n == 1)
                    fail(ErrCode::NotAUnitResidueNotInF,
                         "residue after stripping the base unit is not 1 + F");
                fail(ErrCode::Unsupported,
                     "invertible only through the full unit group, if at all; inversion is "
                     "implemented for minimal integro-differential operators");
            }
            row.push_back(static_cast<unsigned>(k.d));
            col.push_back(static_cast<unsigned>(k.a));
        }
        fm_accumulate(f, row, col, c / lambda);
    }
    if (fm_det_one_plus(f).is_zero()) fail(ErrCode::NotAUnitSingularMatrix, "det(1+f) = 0");
    return MinimalUnit{lambda, std::move(hs), std::move(f)};
}

} // namespace jac
