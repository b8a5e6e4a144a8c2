// Command-line front end; talks to the kernel exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "jac.h"

namespace {

// Exit codes: 0 ok, 2 parse error, 3 domain error.
[[noreturn]] void die(jac_rc rc) {
    std::fprintf(stderr, "error: %s: %s\n", jac_last_error_kind(), jac_last_error());
    std::exit(rc == JAC_ERR_PARSE ? 2 : 3);
}

void check(jac_rc rc) {
    if (rc != JAC_OK) die(rc);
}

struct StrOut {
    char* s = nullptr;
    ~StrOut() { jac_str_free(s); }
};

using ElemPtr = std::unique_ptr<jac_elem, decltype(&jac_elem_free)>;
using PolyPtr = std::unique_ptr<jac_poly, decltype(&jac_poly_free)>;
using IdealPtr = std::unique_ptr<jac_ideal, decltype(&jac_ideal_free)>;

ElemPtr parse_elem(const std::string& src, int n) {
    jac_elem* e = nullptr;
    check(jac_elem_parse(src.c_str(), n, &e));
    return ElemPtr(e, &jac_elem_free);
}

PolyPtr parse_poly(const std::string& src, int n) {
    jac_poly* p = nullptr;
    check(jac_poly_parse(src.c_str(), n, &p));
    return PolyPtr(p, &jac_poly_free);
}

IdealPtr parse_ideal(const std::string& src, int n) {
    jac_ideal* a = nullptr;
    check(jac_ideal_parse(src.c_str(), n, &a));
    return IdealPtr(a, &jac_ideal_free);
}

void print_poly(const jac_poly* p, bool as_json) {
    StrOut s;
    check(as_json ? jac_poly_json(p, &s.s) : jac_poly_pretty(p, &s.s));
    std::printf("%s\n", s.s);
}

void print_elem(const jac_elem* e, bool as_json) {
    StrOut s;
    check(as_json ? jac_elem_json(e, &s.s) : jac_elem_pretty(e, &s.s));
    std::printf("%s\n", s.s);
}

int max_enum_arity() {
    const char* env = std::getenv("JAC_MAX_N");
    if (!env || !*env) return 6;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 6;
    return static_cast<int>(v);
}

void check_enum_arity(int n) {
    if (n > max_enum_arity()) {
        std::fprintf(stderr, "error: TooLarge: arity %d exceeds JAC_MAX_N = %d\n", n,
                     max_enum_arity());
        std::exit(3);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integro-differential operator calculus"};
    app.require_subcommand(1);
    bool as_json = false;

    int n_apply = 1, n_canon = 1, n_theta = 1, n_invert = 1, n_solve = 1, n_spec = 1;
    int n_count = 1, n_factor = 1, n_op = 1;
    std::string expr, poly, ideal_expr;
    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit JSON instead of pretty text");
    };

    auto* apply = app.add_subcommand("apply", "apply an operator to a polynomial");
    apply->add_option("-n", n_apply, "arity")->default_val(1);
    apply->add_option("EXPR", expr)->required();
    apply->add_option("POLY", poly)->required();
    add_json(apply);

    auto* canon = app.add_subcommand("canon", "canonical form of an operator expression");
    canon->add_option("-n", n_canon, "arity")->default_val(1);
    canon->add_option("EXPR", expr)->required();
    add_json(canon);

    auto* theta = app.add_subcommand("theta", "apply the involution x <-> D");
    theta->add_option("-n", n_theta, "arity")->default_val(1);
    theta->add_option("EXPR", expr)->required();
    add_json(theta);

    auto* invert = app.add_subcommand("invert", "factor a unit and compute its inverse");
    invert->add_option("-n", n_invert, "arity")->default_val(1);
    invert->add_option("EXPR", expr)->required();
    add_json(invert);

    auto* solve = app.add_subcommand("solve", "solve EXPR y = POLY");
    solve->add_option("-n", n_solve, "arity")->default_val(1);
    solve->add_option("EXPR", expr)->required();
    solve->add_option("POLY", poly)->required();
    add_json(solve);

    bool dot = false;
    auto* spec = app.add_subcommand("spec", "the prime spectrum");
    spec->add_option("-n", n_spec, "arity")->default_val(1);
    spec->add_flag("--dot", dot, "emit a Hasse diagram in DOT form");

    auto* ideal = app.add_subcommand("ideal", "ideal lattice operations");
    ideal->require_subcommand(1);
    auto* count = ideal->add_subcommand("count", "number of ideals");
    count->add_option("-n", n_count, "arity")->default_val(1);
    auto* factor = ideal->add_subcommand("factor", "unique factorization into primes");
    factor->add_option("-n", n_factor, "arity")->default_val(1);
    factor->add_option("IDEAL", ideal_expr)->required();
    add_json(factor);
    auto* op = ideal->add_subcommand("op", "evaluate an ideal expression");
    op->add_option("-n", n_op, "arity")->default_val(1);
    op->add_option("IDEAL", ideal_expr)->required();
    add_json(op);

    CLI11_PARSE(app, argc, argv);

    if (apply->parsed()) {
        auto e = parse_elem(expr, n_apply);
        auto p = parse_poly(poly, n_apply);
        jac_poly* out = nullptr;
        check(jac_apply(e.get(), p.get(), &out));
        PolyPtr guard(out, &jac_poly_free);
        print_poly(out, as_json);
    } else if (canon->parsed()) {
        auto e = parse_elem(expr, n_canon);
        print_elem(e.get(), as_json);
    } else if (theta->parsed()) {
        auto e = parse_elem(expr, n_theta);
        jac_elem* out = nullptr;
        check(jac_elem_theta(e.get(), &out));
        ElemPtr guard(out, &jac_elem_free);
        print_elem(out, as_json);
    } else if (invert->parsed()) {
        auto e = parse_elem(expr, n_invert);
        jac_elem* inv = nullptr;
        StrOut fact_json, fact_pretty;
        check(jac_elem_invert(e.get(), &inv, &fact_json.s, &fact_pretty.s));
        ElemPtr guard(inv, &jac_elem_free);
        if (as_json) {
            StrOut inv_json;
            check(jac_elem_json(inv, &inv_json.s));
            // factorization json already carries lambda/h/f/det
            std::string merged = fact_json.s;
            merged.pop_back(); // strip '}'
            std::printf("%s,\"inverse\":%s}\n", merged.c_str(), inv_json.s);
        } else {
            std::printf("%s", fact_pretty.s);
            StrOut inv_pretty;
            check(jac_elem_pretty(inv, &inv_pretty.s));
            std::printf("inverse: %s\n", inv_pretty.s);
        }
    } else if (solve->parsed()) {
        auto e = parse_elem(expr, n_solve);
        auto p = parse_poly(poly, n_solve);
        jac_poly* y = nullptr;
        check(jac_solve(e.get(), p.get(), &y));
        PolyPtr guard(y, &jac_poly_free);
        print_poly(y, as_json);
    } else if (spec->parsed()) {
        check_enum_arity(n_spec);
        StrOut s;
        check(jac_spec_text(n_spec, dot ? 1 : 0, &s.s));
        std::printf("%s", s.s);
    } else if (count->parsed()) {
        check_enum_arity(n_count);
        uint64_t c = 0;
        check(jac_ideal_count(n_count, &c));
        std::printf("%llu\n", static_cast<unsigned long long>(c));
    } else if (factor->parsed()) {
        check_enum_arity(n_factor);
        auto a = parse_ideal(ideal_expr, n_factor);
        StrOut s;
        check(as_json ? jac_ideal_factor_json(a.get(), &s.s)
                      : jac_ideal_factor_text(a.get(), &s.s));
        std::printf("%s\n", s.s);
    } else if (op->parsed()) {
        check_enum_arity(n_op);
        auto a = parse_ideal(ideal_expr, n_op);
        if (as_json) {
            StrOut s;
            check(jac_ideal_json(a.get(), &s.s));
            std::printf("%s\n", s.s);
        } else {
            StrOut s, cls;
            check(jac_ideal_pretty(a.get(), &s.s));
            check(jac_ideal_class(a.get(), &cls.s));
            std::printf("%s\nclass: %s\n", s.s, cls.s);
        }
    }
    return 0;
}
