#include "jac.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "jac/error.hpp"
#include "jac/expr.hpp"
#include "jac/json_io.hpp"
#include "jac/lattice.hpp"
#include "jac/tensor.hpp"
#include "jac/units.hpp"

struct jac_elem {
    jac::TensorElement t;
};
struct jac_poly {
    jac::PolyN p;
};
struct jac_ideal {
    jac::IdealNF a;
};

namespace {

thread_local std::string g_error_msg;
thread_local std::string g_error_kind;

jac_rc set_error(const jac::Error& e) {
    g_error_msg = e.what();
    g_error_kind = jac::errcode_name(e.code());
    return e.parse_stage() ? JAC_ERR_PARSE : JAC_ERR_DOMAIN;
}

jac_rc set_error(const std::exception& e) {
    g_error_msg = e.what();
    g_error_kind = "Internal";
    return JAC_ERR_DOMAIN;
}

jac_rc arg_error(const char* msg) {
    g_error_msg = msg;
    g_error_kind = "InvalidArgument";
    return JAC_ERR_ARG;
}

template <typename F>
jac_rc guarded(F&& f) {
    try {
        f();
        return JAC_OK;
    } catch (const jac::Error& e) {
        return set_error(e);
    } catch (const std::exception& e) {
        return set_error(e);
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Pretty block for a factorization, shared by arity 1 and arity n.
std::string factorization_pretty(const jac::Rational& lambda, const std::vector<jac::HUnit>& hs,
                                 const jac::FiniteMatrix& f, const jac::Rational& det) {
    std::ostringstream os;
    os << "lambda: " << lambda.str() << "\n";
    if (hs.size() == 1) {
        os << "h: " << jac::h_str(hs[0]) << "\n";
    } else {
        for (size_t s = 0; s < hs.size(); ++s)
            os << "h" << (s + 1) << ": " << jac::h_str(hs[s]) << "\n";
    }
    os << "f: " << jac::fm_str(f) << "\n";
    os << "det(1+f): " << det.str() << "\n";
    return os.str();
}

} // namespace

extern "C" {

const char* jac_last_error(void) { return g_error_msg.c_str(); }
const char* jac_last_error_kind(void) { return g_error_kind.c_str(); }

void jac_str_free(char* s) { std::free(s); }
void jac_elem_free(jac_elem* e) { delete e; }
void jac_poly_free(jac_poly* p) { delete p; }
void jac_ideal_free(jac_ideal* a) { delete a; }

jac_rc jac_elem_parse(const char* src, int n, jac_elem** out) {
    if (!src || !out) return arg_error("null argument");
    return guarded([&] {
        auto ast = jac::parse_expr(src, n);
        *out = new jac_elem{jac::elaborate(*ast, n)};
    });
}

jac_rc jac_elem_arity(const jac_elem* e, int* out) {
    if (!e || !out) return arg_error("null argument");
    *out = e->t.n;
    return JAC_OK;
}

jac_rc jac_elem_pretty(const jac_elem* e, char** out) {
    if (!e || !out) return arg_error("null argument");
    return guarded([&] { *out = dup_string(jac::pretty_tensor(e->t)); });
}

jac_rc jac_elem_json(const jac_elem* e, char** out) {
    if (!e || !out) return arg_error("null argument");
    return guarded([&] { *out = dup_string(jac::elem_to_json(e->t).dump()); });
}

jac_rc jac_elem_add(const jac_elem* a, const jac_elem* b, jac_elem** out) {
    if (!a || !b || !out) return arg_error("null argument");
    return guarded([&] { *out = new jac_elem{jac::tn_add(a->t, b->t)}; });
}

jac_rc jac_elem_mul(const jac_elem* a, const jac_elem* b, jac_elem** out) {
    if (!a || !b || !out) return arg_error("null argument");
    return guarded([&] { *out = new jac_elem{jac::tn_mul(a->t, b->t)}; });
}

jac_rc jac_elem_theta(const jac_elem* e, jac_elem** out) {
    if (!e || !out) return arg_error("null argument");
    return guarded([&] { *out = new jac_elem{jac::tn_theta(e->t)}; });
}

jac_rc jac_elem_invert(const jac_elem* e, jac_elem** inverse, char** factorization_json,
                       char** factorization_pretty_out) {
    if (!e) return arg_error("null argument");
    return guarded([&] {
        if (e->t.n == 1) {
            jac::A1Element u = jac::tn_as_a1(e->t);
            jac::UnitFactorization uf = jac::factor_unit(u);
            jac::Rational det = jac::fm_det_one_plus(uf.f);
            if (inverse) {
                jac::A1Element inv = jac::invert_unit(u);
                *inverse = new jac_elem{jac::tn_add(jac::tn_embed(1, 1, inv), jac::tn_zero(1))};
            }
            if (factorization_json) {
                jac::Json j = jac::uf_to_json(uf);
                j["det"] = det.str();
                *factorization_json = dup_string(j.dump());
            }
            if (factorization_pretty_out)
                *factorization_pretty_out =
                    dup_string(factorization_pretty(uf.lambda, {uf.h}, uf.f, det));
        } else {
            jac::MinimalUnit mu = jac::factor_minimal_unit(e->t);
            jac::Rational det = jac::fm_det_one_plus(mu.f);
            if (inverse) *inverse = new jac_elem{jac::minimal_unit_invert(mu)};
            if (factorization_json) {
                jac::Json j = jac::mu_to_json(mu);
                j["det"] = det.str();
                *factorization_json = dup_string(j.dump());
            }
            if (factorization_pretty_out)
                *factorization_pretty_out =
                    dup_string(factorization_pretty(mu.lambda, mu.hs, mu.f, det));
        }
    });
}

jac_rc jac_poly_parse(const char* src, int n, jac_poly** out) {
    if (!src || !out) return arg_error("null argument");
    return guarded([&] { *out = new jac_poly{jac::parse_poly(src, n)}; });
}

jac_rc jac_poly_pretty(const jac_poly* p, char** out) {
    if (!p || !out) return arg_error("null argument");
    return guarded([&] { *out = dup_string(jac::pretty_poly(p->p)); });
}

jac_rc jac_poly_json(const jac_poly* p, char** out) {
    if (!p || !out) return arg_error("null argument");
    return guarded([&] { *out = dup_string(jac::pn_to_json(p->p).dump()); });
}

jac_rc jac_apply(const jac_elem* e, const jac_poly* p, jac_poly** out) {
    if (!e || !p || !out) return arg_error("null argument");
    return guarded([&] { *out = new jac_poly{jac::tn_apply(e->t, p->p)}; });
}

jac_rc jac_solve(const jac_elem* e, const jac_poly* p, jac_poly** out) {
    if (!e || !p || !out) return arg_error("null argument");
    return guarded([&] {
        if (e->t.n != p->p.n) jac::fail(jac::ErrCode::ArityMismatch, "operator and polynomial arities differ");
        if (e->t.n == 1) {
            jac::Poly1 f;
            for (auto& [exps, c] : p->p.coeffs) f.coeffs.emplace(exps[0], c);
            jac::Poly1 y = jac::solve_1(jac::tn_as_a1(e->t), f);
            jac::PolyN yn;
            yn.n = 1;
            for (auto& [k, c] : y.coeffs) yn.coeffs.emplace(std::vector<unsigned>{k}, c);
            *out = new jac_poly{std::move(yn)};
        } else {
            jac::MinimalUnit mu = jac::factor_minimal_unit(e->t);
            *out = new jac_poly{jac::solve_n(mu, p->p)};
        }
    });
}

jac_rc jac_spec_text(int n, int as_dot, char** out) {
    if (!out) return arg_error("null argument");
    return guarded([&] {
        auto spec = jac::spec_enum(n);
        int dim = jac::krull_dim(n);
        std::ostringstream os;
        if (as_dot) {
            os << "digraph spec {\n  rankdir=BT;\n";
            for (auto& [p, h] : spec)
                os << "  \"" << jac::prime_str(p) << "\" [label=\"" << jac::prime_str(p)
                   << "\\nheight " << h << "\"];\n";
            for (auto& [p, hp] : spec)
                for (auto& [q, hq] : spec)
                    if (hq == hp + 1 && (p.idx & q.idx) == p.idx)
                        os << "  \"" << jac::prime_str(p) << "\" -> \"" << jac::prime_str(q)
                           << "\";\n";
            os << "}\n";
        } else {
            os << "Spec(A_" << n << "): " << spec.size() << " prime ideals, Krull dimension " << dim
               << "\n";
            for (auto& [p, h] : spec) os << jac::prime_str(p) << "  height " << h << "\n";
        }
        *out = dup_string(os.str());
    });
}

jac_rc jac_ideal_count(int n, uint64_t* out) {
    if (!out) return arg_error("null argument");
    return guarded([&] { *out = jac::count_ideals(n); });
}

jac_rc jac_ideal_parse(const char* src, int n, jac_ideal** out) {
    if (!src || !out) return arg_error("null argument");
    return guarded([&] { *out = new jac_ideal{jac::parse_ideal_expr(src, n)}; });
}

jac_rc jac_ideal_pretty(const jac_ideal* a, char** out) {
    if (!a || !out) return arg_error("null argument");
    return guarded([&] {
        std::ostringstream os;
        if (a->a.is_zero()) {
            os << "0";
        } else if (a->a.is_full()) {
            os << "A";
        } else {
            os << "I{";
            for (size_t i = 0; i < a->a.antichain.size(); ++i)
                os << (i ? "," : "") << jac::pattern_str(jac::Pattern{a->a.n, a->a.antichain[i]});
            os << "}";
        }
        *out = dup_string(os.str());
    });
}

jac_rc jac_ideal_json(const jac_ideal* a, char** out) {
    if (!a || !out) return arg_error("null argument");
    return guarded([&] { *out = dup_string(jac::ideal_to_json(a->a).dump()); });
}

jac_rc jac_ideal_class(const jac_ideal* a, char** out) {
    if (!a || !out) return arg_error("null argument");
    return guarded([&] { *out = dup_string(jac::class_str(jac::classify(a->a))); });
}

jac_rc jac_ideal_factor_text(const jac_ideal* a, char** out) {
    if (!a || !out) return arg_error("null argument");
    return guarded([&] {
        auto primes = jac::factor_primes(a->a);
        std::ostringstream os;
        for (size_t i = 0; i < primes.size(); ++i)
            os << (i ? " * " : "") << jac::prime_str(primes[i]);
        *out = dup_string(os.str());
    });
}

jac_rc jac_ideal_factor_json(const jac_ideal* a, char** out) {
    if (!a || !out) return arg_error("null argument");
    return guarded([&] {
        jac::Json primes = jac::Json::array();
        for (auto& p : jac::factor_primes(a->a)) {
            jac::Json idx = jac::Json::array();
            for (int i = 0; i < p.n; ++i)
                if (p.idx >> i & 1) idx.push_back(i + 1);
            primes.push_back(idx);
        }
        *out = dup_string(jac::Json{{"n", a->a.n}, {"primes", primes}}.dump());
    });
}

} // extern "C"
