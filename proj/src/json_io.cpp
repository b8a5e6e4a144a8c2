#include "jac/json_io.hpp"

#include <algorithm>

#include "jac/error.hpp"

namespace jac {

namespace {

Rational rat(const Json& j) {
    if (!j.is_string()) fail(ErrCode::Syntax, "expected a rational string");
    return Rational::from_string(j.get<std::string>());
}

long key_to_long(const std::string& s) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(ErrCode::Syntax, "bad integer key '" + s + "'");
    }
}

} // namespace

Json rf_to_json(const ShiftRatFun& a) {
    Json num = Json::array();
    for (auto& c : a.num) num.push_back(c.str());
    Json den = Json::object();
    for (auto& [j, m] : a.den) den[std::to_string(j)] = m;
    return Json{{"num", num}, {"den", den}};
}

ShiftRatFun rf_from_json(const Json& j) {
    PolyQ num;
    for (auto& c : j.at("num")) num.push_back(rat(c));
    std::map<long, int> den;
    for (auto& [key, m] : j.at("den").items()) den[key_to_long(key)] = m.get<int>();
    return rf_make(std::move(num), std::move(den));
}

Json sk_to_json(const SkewLaurent& a) {
    Json comps = Json::object();
    for (auto& [d, r] : a.comps) comps[std::to_string(d)] = rf_to_json(r);
    return Json{{"comps", comps}};
}

SkewLaurent sk_from_json(const Json& j) {
    SkewLaurent s;
    for (auto& [key, rv] : j.at("comps").items()) {
        ShiftRatFun r = rf_from_json(rv);
        if (!r.is_zero()) s.comps.emplace(key_to_long(key), std::move(r));
    }
    return s;
}

Json fm_to_json(const FiniteMatrix& a) {
    Json entries = Json::array();
    for (auto& [ij, c] : a.entries) {
        Json row = Json::array(), col = Json::array();
        for (unsigned x : ij.first) row.push_back(x);
        for (unsigned x : ij.second) col.push_back(x);
        entries.push_back(Json::array({row, col, c.str()}));
    }
    return Json{{"dim", a.dim}, {"entries", entries}};
}

FiniteMatrix fm_from_json(const Json& j) {
    FiniteMatrix m = fm_zero(j.at("dim").get<int>());
    for (auto& e : j.at("entries")) {
        MIdx row, col;
        for (auto& x : e.at(0)) row.push_back(x.get<unsigned>());
        for (auto& x : e.at(1)) col.push_back(x.get<unsigned>());
        if (static_cast<int>(row.size()) != m.dim || static_cast<int>(col.size()) != m.dim)
            fail(ErrCode::DimMismatch, "matrix entry arity differs from dim");
        fm_accumulate(m, row, col, rat(e.at(2)));
    }
    return m;
}

Json a1_to_json(const A1Element& a) {
    return Json{{"skew", sk_to_json(a.skew)}, {"mat", fm_to_json(a.mat)}};
}

A1Element a1_from_json(const Json& j) {
    A1Element a;
    a.skew = sk_from_json(j.at("skew"));
    a.mat = fm_from_json(j.at("mat"));
    if (a.mat.dim != 1) fail(ErrCode::DimMismatch, "one-variable element with non-unit matrix arity");
    return a;
}

Json pn_to_json(const PolyN& p) {
    Json terms = Json::array();
    for (auto& [exps, c] : p.coeffs) {
        Json e = Json::array();
        for (unsigned x : exps) e.push_back(x);
        terms.push_back(Json::array({e, c.str()}));
    }
    return Json{{"n", p.n}, {"terms", terms}};
}

PolyN pn_from_json(const Json& j) {
    PolyN p;
    p.n = j.at("n").get<int>();
    for (auto& t : j.at("terms")) {
        std::vector<unsigned> exps;
        for (auto& x : t.at(0)) exps.push_back(x.get<unsigned>());
        if (static_cast<int>(exps.size()) != p.n)
            fail(ErrCode::ArityMismatch, "monomial arity differs from n");
        pn_accumulate(p, exps, rat(t.at(1)));
    }
    return p;
}

Json hu_to_json(const HUnit& h) {
    Json exps = Json::object();
    for (auto& [i, e] : h.exps) exps[std::to_string(i)] = e;
    return exps;
}

HUnit hu_from_json(const Json& j) {
    HUnit h;
    for (auto& [key, e] : j.items()) {
        long v = e.get<long>();
        if (v != 0) h.exps[key_to_long(key)] = v;
    }
    return h;
}

Json uf_to_json(const UnitFactorization& uf) {
    return Json{{"lambda", uf.lambda.str()}, {"h", hu_to_json(uf.h)}, {"f", fm_to_json(uf.f)}};
}

Json mu_to_json(const MinimalUnit& mu) {
    Json hs = Json::array();
    for (auto& h : mu.hs) hs.push_back(hu_to_json(h));
    return Json{{"lambda", mu.lambda.str()}, {"hs", hs}, {"f", fm_to_json(mu.f)}};
}

Json ideal_to_json(const IdealNF& a) {
    Json antichain = Json::array();
    for (std::uint64_t f : a.antichain) {
        Json bits = Json::array();
        for (int i = 0; i < a.n; ++i) bits.push_back(static_cast<int>(f >> i & 1));
        antichain.push_back(bits);
    }
    return Json{{"n", a.n}, {"antichain", antichain}};
}

IdealNF ideal_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::uint64_t> pats;
    for (auto& bits : j.at("antichain")) {
        if (static_cast<int>(bits.size()) != n) fail(ErrCode::ArityMismatch, "pattern length");
        std::uint64_t mask = 0;
        for (int i = 0; i < n; ++i)
            if (bits.at(static_cast<size_t>(i)).get<int>()) mask |= 1ull << i;
        pats.push_back(mask);
    }
    return id_canon(n, std::move(pats));
}

Json tn_to_json(const TensorElement& t) {
    std::vector<Json> terms;
    for (auto& term : t.terms) {
        Json factors = Json::array();
        for (auto& f : term.factors) factors.push_back(a1_to_json(f));
        terms.push_back(Json{{"coeff", term.coeff.str()}, {"factors", factors}});
    }
    std::sort(terms.begin(), terms.end(),
              [](const Json& a, const Json& b) { return a.dump() < b.dump(); });
    return Json{{"n", t.n}, {"terms", terms}};
}

TensorElement tn_from_json(const Json& j) {
    TensorElement t = tn_zero(j.at("n").get<int>());
    for (auto& term : j.at("terms")) {
        TensorTerm tt;
        tt.coeff = rat(term.at("coeff"));
        for (auto& f : term.at("factors")) tt.factors.push_back(a1_from_json(f));
        if (static_cast<int>(tt.factors.size()) != t.n)
            fail(ErrCode::ArityMismatch, "tensor term arity");
        t.terms.push_back(std::move(tt));
    }
    return tn_add(t, tn_zero(t.n)); // normalize
}

Json elem_to_json(const TensorElement& t) {
    if (t.n == 1) return a1_to_json(tn_as_a1(t));
    return tn_to_json(t);
}

} // namespace jac
