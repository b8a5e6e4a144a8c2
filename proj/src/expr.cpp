#include "jac/expr.hpp"

#include <cctype>
#include <sstream>

#include "jac/error.hpp"

namespace jac {

bool expr_equal(const Expr& x, const Expr& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Expr::Kind::Number: return x.value == y.value;
        case Expr::Kind::Gen: return x.gen == y.gen;
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Mul: return expr_equal(*x.a, *y.a) && expr_equal(*x.b, *y.b);
        case Expr::Kind::Neg: return expr_equal(*x.a, *y.a);
        case Expr::Kind::Pow: return x.exponent == y.exponent && expr_equal(*x.a, *y.a);
    }
    return false;
}

ExprPtr expr_number(Rational v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Number;
    e->value = std::move(v);
    return e;
}

ExprPtr expr_gen(GenAtom g) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Gen;
    e->gen = std::move(g);
    return e;
}

ExprPtr expr_binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

ExprPtr expr_neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Neg;
    e->a = std::move(a);
    return e;
}

ExprPtr expr_pow(ExprPtr base, long ex) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->a = std::move(base);
    e->exponent = ex;
    return e;
}

namespace {

struct Token {
    enum class Kind { Number, Name, Punct, End } kind;
    std::string text;
    Rational value;
    size_t col; // 1-based
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrCode::Syntax, msg + " at column " + std::to_string(tok_.col));
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        tok_.col = pos_ + 1;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::Kind::End;
            tok_.text = "<end of input>";
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '/' && pos_ + 1 < src_.size() &&
                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
            tok_.kind = Token::Kind::Number;
            tok_.text = src_.substr(start, pos_ - start);
            tok_.value = Rational::from_string(tok_.text);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])))) ++pos_;
            tok_.kind = Token::Kind::Name;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        tok_.kind = Token::Kind::Punct;
        tok_.text = std::string(1, c);
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& src, int n) : lex_(src), n_(n) {
        if (n < 1) fail(ErrCode::Arity, "arity must be >= 1");
    }

    ExprPtr parse() {
        ExprPtr e = expr();
        if (lex_.peek().kind != Token::Kind::End) lex_.error("unexpected '" + lex_.peek().text + "'");
        return e;
    }

private:
    bool punct(const char* p) {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
    }

    void expect(const char* p, const char* what) {
        if (!punct(p)) lex_.error(std::string("expected '") + p + "' " + what);
        lex_.take();
    }

    long integer(const char* what) {
        bool neg = false;
        if (punct("-")) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Token::Kind::Number || !lex_.peek().value.is_integer())
            lex_.error(std::string("expected integer ") + what);
        long v = lex_.take().value.num().to_long();
        return neg ? -v : v;
    }

    std::vector<unsigned> index_tuple() {
        expect("(", "to open an index tuple");
        std::vector<unsigned> out;
        while (true) {
            long v = integer("index");
            if (v < 0) lex_.error("matrix indices must be nonnegative");
            out.push_back(static_cast<unsigned>(v));
            if (punct(",")) {
                lex_.take();
                continue;
            }
            break;
        }
        expect(")", "to close the index tuple");
        return out;
    }

    int slot_of(const std::string& name, size_t prefix_len) {
        if (name.size() == prefix_len) {
            if (n_ != 1)
                fail(ErrCode::Arity, "'" + name + "' needs a variable index when the arity is " +
                                         std::to_string(n_));
            return 1;
        }
        int slot = 0;
        for (size_t k = prefix_len; k < name.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(name[k]))) lex_.error("bad name '" + name + "'");
            slot = slot * 10 + (name[k] - '0');
            if (slot > 1000) break;
        }
        if (slot < 1 || slot > n_)
            fail(ErrCode::Arity, "variable index " + std::to_string(slot) + " out of range 1.." +
                                     std::to_string(n_));
        return slot;
    }

    ExprPtr atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) return expr_number(lex_.take().value);
        if (punct("(")) {
            lex_.take();
            ExprPtr e = expr();
            expect(")", "to close the group");
            return e;
        }
        if (t.kind != Token::Kind::Name) lex_.error("expected an operand, got '" + t.text + "'");
        std::string name = lex_.take().text;
        GenAtom g;
        if (name == "E") {
            if (n_ != 1) fail(ErrCode::Arity, "E[i,j] is the arity-1 matrix unit; use En[(..),(..)]");
            g.type = GenAtom::Type::E;
            expect("[", "after E");
            g.i = integer("row index");
            expect(",", "between matrix indices");
            g.j = integer("column index");
            expect("]", "to close the matrix unit");
            if (g.i < 0 || g.j < 0) fail(ErrCode::Arity, "matrix indices must be nonnegative");
            return expr_gen(g);
        }
        if (name == "En") {
            g.type = GenAtom::Type::En;
            expect("[", "after En");
            g.alpha = index_tuple();
            expect(",", "between index tuples");
            g.beta = index_tuple();
            expect("]", "to close the matrix unit");
            if (static_cast<int>(g.alpha.size()) != n_ || static_cast<int>(g.beta.size()) != n_)
                fail(ErrCode::Arity, "En index tuples must have length " + std::to_string(n_));
            return expr_gen(g);
        }
        if (name == "PI") {
            if (n_ != 1) fail(ErrCode::Arity, "PI[i] is an arity-1 operator");
            g.type = GenAtom::Type::Pi;
            expect("[", "after PI");
            g.i = integer("index");
            expect("]", "to close PI");
            if (g.i < 0) fail(ErrCode::Arity, "PI index must be nonnegative");
            return expr_gen(g);
        }
        if (name == "RHO") {
            if (n_ != 1) fail(ErrCode::Arity, "RHO is an arity-1 operator");
            g.type = GenAtom::Type::Rho;
            expect("[", "after RHO");
            long first = integer("index");
            if (punct(",")) {
                lex_.take();
                long second = integer("index");
                g.rho_two = true;
                g.j = first;
                g.i = second;
                if (g.j < 0 || g.i < 1) fail(ErrCode::Arity, "RHO[j,i] needs j >= 0, i >= 1");
            } else {
                g.i = first;
                if (g.i < 0) fail(ErrCode::Arity, "RHO index must be nonnegative");
            }
            expect("]", "to close RHO");
            return expr_gen(g);
        }
        auto prefixed = [&](const char* p) {
            size_t l = std::string(p).size();
            return name.size() >= l && name.compare(0, l, p) == 0 &&
                   (name.size() == l || std::isdigit(static_cast<unsigned char>(name[l])));
        };
        if (prefixed("INT")) {
            g.type = GenAtom::Type::Int;
            g.slot = slot_of(name, 3);
            return expr_gen(g);
        }
        if (prefixed("x")) {
            g.type = GenAtom::Type::X;
            g.slot = slot_of(name, 1);
            return expr_gen(g);
        }
        if (prefixed("D")) {
            g.type = GenAtom::Type::D;
            g.slot = slot_of(name, 1);
            return expr_gen(g);
        }
        if (prefixed("H")) {
            g.type = GenAtom::Type::H;
            g.slot = slot_of(name, 1);
            return expr_gen(g);
        }
        lex_.error("unknown name '" + name + "'");
    }

    ExprPtr factor() {
        if (punct("-")) {
            lex_.take();
            return expr_neg(factor());
        }
        ExprPtr base = atom();
        if (punct("^")) {
            lex_.take();
            return expr_pow(std::move(base), integer("exponent"));
        }
        return base;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (punct("*")) {
            lex_.take();
            e = expr_binary(Expr::Kind::Mul, std::move(e), factor());
        }
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (punct("+") || punct("-")) {
            bool plus = lex_.peek().text == "+";
            lex_.take();
            e = expr_binary(plus ? Expr::Kind::Add : Expr::Kind::Sub, std::move(e), term());
        }
        return e;
    }

    Lexer lex_;
    int n_;
};

} // namespace

ExprPtr parse_expr(const std::string& src, int n) { return Parser(src, n).parse(); }

// ---------------------------------------------------------------------------
// Pretty form of the AST. Precedence: +,- < * < unary- < ^ < atoms.

namespace {

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

std::string gen_str(const GenAtom& g, int n) {
    auto var = [&](const char* base, int slot) {
        std::string s = base;
        if (n > 1) s += std::to_string(slot);
        return s;
    };
    std::ostringstream os;
    switch (g.type) {
        case GenAtom::Type::X: return var("x", g.slot);
        case GenAtom::Type::D: return var("D", g.slot);
        case GenAtom::Type::H: return var("H", g.slot);
        case GenAtom::Type::Int: return var("INT", g.slot);
        case GenAtom::Type::E: os << "E[" << g.i << "," << g.j << "]"; return os.str();
        case GenAtom::Type::Pi: os << "PI[" << g.i << "]"; return os.str();
        case GenAtom::Type::Rho:
            if (g.rho_two)
                os << "RHO[" << g.j << "," << g.i << "]";
            else
                os << "RHO[" << g.i << "]";
            return os.str();
        case GenAtom::Type::En: {
            os << "En[(";
            for (size_t k = 0; k < g.alpha.size(); ++k) os << (k ? "," : "") << g.alpha[k];
            os << "),(";
            for (size_t k = 0; k < g.beta.size(); ++k) os << (k ? "," : "") << g.beta[k];
            os << ")]";
            return os.str();
        }
    }
    return "?";
}

std::string print_expr(const Expr& e, int n, int parent_prec) {
    std::string out;
    switch (e.kind) {
        case Expr::Kind::Number: out = e.value.str(); break;
        case Expr::Kind::Gen: out = gen_str(e.gen, n); break;
        case Expr::Kind::Add:
            out = print_expr(*e.a, n, 1) + " + " + print_expr(*e.b, n, 2);
            break;
        case Expr::Kind::Sub:
            out = print_expr(*e.a, n, 1) + " - " + print_expr(*e.b, n, 2);
            break;
        case Expr::Kind::Mul:
            out = print_expr(*e.a, n, 2) + "*" + print_expr(*e.b, n, 3);
            break;
        case Expr::Kind::Neg: out = "-" + print_expr(*e.a, n, 3); break;
        case Expr::Kind::Pow:
            out = print_expr(*e.a, n, 5) + "^" + std::to_string(e.exponent);
            break;
    }
    if (precedence(e) < parent_prec) return "(" + out + ")";
    return out;
}

} // namespace

std::string pretty_expr(const Expr& e, int n) { return print_expr(e, n, 0); }

// ---------------------------------------------------------------------------
// Elaboration.

namespace {

TensorElement elaborate_gen(const GenAtom& g, int n) {
    switch (g.type) {
        case GenAtom::Type::X: return tn_embed(n, g.slot, gen_x());
        case GenAtom::Type::D: return tn_embed(n, g.slot, gen_partial());
        case GenAtom::Type::H: return tn_embed(n, g.slot, gen_H());
        case GenAtom::Type::Int: return tn_embed(n, g.slot, gen_int());
        case GenAtom::Type::E:
            return tn_embed(n, 1, gen_E(static_cast<unsigned>(g.i), static_cast<unsigned>(g.j)));
        case GenAtom::Type::Pi: return tn_embed(n, 1, gen_pi(static_cast<unsigned>(g.i)));
        case GenAtom::Type::Rho:
            if (g.rho_two)
                return tn_embed(n, 1, gen_rho(static_cast<unsigned>(g.j), static_cast<unsigned>(g.i)));
            return tn_embed(n, 1, gen_rho(static_cast<unsigned>(g.i)));
        case GenAtom::Type::En: {
            TensorElement t = tn_zero(n);
            std::vector<A1Element> factors;
            for (int s = 0; s < n; ++s)
                factors.push_back(gen_E(g.alpha[static_cast<size_t>(s)], g.beta[static_cast<size_t>(s)]));
            t.terms.push_back(TensorTerm{Rational(1), std::move(factors)});
            return t;
        }
    }
    fail(ErrCode::Internal, "unhandled atom");
}

// Matches H_s, H_s + j, H_s - j, j + H_s (with an integer literal j).
struct HForm {
    int slot;
    long offset;
};
std::optional<HForm> match_h_form(const Expr& e) {
    if (e.kind == Expr::Kind::Gen && e.gen.type == GenAtom::Type::H) return HForm{e.gen.slot, 0};
    auto lit = [](const Expr& x) -> std::optional<long> {
        if (x.kind == Expr::Kind::Number && x.value.is_integer()) return x.value.num().to_long();
        if (x.kind == Expr::Kind::Neg && x.a->kind == Expr::Kind::Number &&
            x.a->value.is_integer())
            return -x.a->value.num().to_long();
        return std::nullopt;
    };
    auto h_atom = [](const Expr& x) -> std::optional<int> {
        if (x.kind == Expr::Kind::Gen && x.gen.type == GenAtom::Type::H) return x.gen.slot;
        return std::nullopt;
    };
    if (e.kind == Expr::Kind::Add || e.kind == Expr::Kind::Sub) {
        int sign = e.kind == Expr::Kind::Sub ? -1 : 1;
        if (auto slot = h_atom(*e.a))
            if (auto off = lit(*e.b)) return HForm{*slot, sign * *off};
        if (e.kind == Expr::Kind::Add)
            if (auto off = lit(*e.a))
                if (auto slot = h_atom(*e.b)) return HForm{*slot, *off};
    }
    return std::nullopt;
}

TensorElement elaborate_pow(const Expr& base, long ex, int n) {
    if (ex == 0) return tn_one(n);
    if (ex > 0) {
        TensorElement b = elaborate(base, n);
        TensorElement acc = tn_one(n);
        for (long t = 0; t < ex; ++t) acc = tn_mul(acc, b);
        return acc;
    }
    // Negative power: nonzero scalars and (H_s + j) factors only.
    if (base.kind == Expr::Kind::Number) {
        if (base.value.is_zero()) fail(ErrCode::NotInvertibleAtom, "zero has no inverse");
        Rational inv = base.value.inv();
        Rational acc(1);
        for (long t = 0; t < -ex; ++t) acc *= inv;
        return tn_scalar(n, acc);
    }
    if (auto hf = match_h_form(base)) {
        int k = static_cast<int>(-ex);
        if (hf->offset >= 0) return tn_embed(n, hf->slot, gen_shift_inv(hf->offset, k));
        return tn_embed(n, hf->slot, gen_shifted_pi_prime(-hf->offset, k));
    }
    fail(ErrCode::NotInvertibleAtom,
         "negative powers are only available on rationals and on H-shift factors; x and D have "
         "no inverses in this algebra");
}

} // namespace

TensorElement elaborate(const Expr& e, int n) {
    switch (e.kind) {
        case Expr::Kind::Number: return tn_scalar(n, e.value);
        case Expr::Kind::Gen: return elaborate_gen(e.gen, n);
        case Expr::Kind::Add: return tn_add(elaborate(*e.a, n), elaborate(*e.b, n));
        case Expr::Kind::Sub:
            return tn_add(elaborate(*e.a, n), tn_scale(Rational(-1), elaborate(*e.b, n)));
        case Expr::Kind::Mul: return tn_mul(elaborate(*e.a, n), elaborate(*e.b, n));
        case Expr::Kind::Neg: return tn_scale(Rational(-1), elaborate(*e.a, n));
        case Expr::Kind::Pow: return elaborate_pow(*e.a, e.exponent, n);
    }
    fail(ErrCode::Internal, "unhandled expression kind");
}

namespace {

void collect_poly(const Expr& e, int n, PolyN& out, const Rational& scale);

PolyN poly_value(const Expr& e, int n) {
    PolyN p;
    p.n = n;
    collect_poly(e, n, p, Rational(1));
    return p;
}

void collect_poly(const Expr& e, int n, PolyN& out, const Rational& scale) {
    switch (e.kind) {
        case Expr::Kind::Number:
            pn_accumulate(out, std::vector<unsigned>(static_cast<size_t>(n), 0), scale * e.value);
            return;
        case Expr::Kind::Gen: {
            if (e.gen.type != GenAtom::Type::X)
                fail(ErrCode::Syntax, "polynomials admit only rationals and x-variables");
            std::vector<unsigned> exps(static_cast<size_t>(n), 0);
            exps[static_cast<size_t>(e.gen.slot - 1)] = 1;
            pn_accumulate(out, exps, scale);
            return;
        }
        case Expr::Kind::Add:
            collect_poly(*e.a, n, out, scale);
            collect_poly(*e.b, n, out, scale);
            return;
        case Expr::Kind::Sub:
            collect_poly(*e.a, n, out, scale);
            collect_poly(*e.b, n, out, -scale);
            return;
        case Expr::Kind::Neg: collect_poly(*e.a, n, out, -scale); return;
        case Expr::Kind::Mul: {
            PolyN prod = poly_value(*e.a, n) * poly_value(*e.b, n);
            for (auto& [al, c] : prod.coeffs) pn_accumulate(out, al, scale * c);
            return;
        }
        case Expr::Kind::Pow: {
            if (e.exponent < 0) fail(ErrCode::Syntax, "polynomials admit only nonnegative powers");
            PolyN acc = pn_monomial(n, std::vector<unsigned>(static_cast<size_t>(n), 0));
            PolyN b = poly_value(*e.a, n);
            for (long t = 0; t < e.exponent; ++t) acc = acc * b;
            for (auto& [al, c] : acc.coeffs) pn_accumulate(out, al, scale * c);
            return;
        }
    }
}

} // namespace

PolyN parse_poly(const std::string& src, int n) { return poly_value(*parse_expr(src, n), n); }

// ---------------------------------------------------------------------------
// Display forms of canonical values.

namespace {

struct Piece {
    int sign;
    std::string body;
};

void join_pieces(std::ostringstream& os, const std::vector<Piece>& pieces) {
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0) {
            if (pieces[i].sign < 0) os << "-";
        } else {
            os << (pieces[i].sign < 0 ? " - " : " + ");
        }
        os << pieces[i].body;
    }
}

Piece skew_piece(long d, const ShiftRatFun& r) {
    int sign = r.num.back().sign();
    ShiftRatFun abs = sign < 0 ? rf_scale(Rational(-1), r) : r;
    std::ostringstream os;
    if (d == 1 && abs == rf_make({Rational(1)}, {{0, 1}})) {
        // x * H^-1 is the integration operator
        return Piece{sign, "INT"};
    }
    if (d > 0) {
        os << "x";
        if (d > 1) os << "^" << d;
        if (!abs.is_one()) os << "*" << rf_str(abs, /*as_factor=*/true);
    } else if (d < 0) {
        if (!abs.is_one()) os << rf_str(abs, /*as_factor=*/true) << "*";
        os << "D";
        if (d < -1) os << "^" << -d;
    } else {
        os << rf_str(abs);
    }
    return Piece{sign, os.str()};
}

Piece mat_piece(const MIdx& row, const MIdx& col, const Rational& c) {
    int sign = c.sign();
    Rational abs = sign < 0 ? -c : c;
    std::ostringstream os;
    if (!abs.is_one()) os << abs.str() << "*";
    if (row.size() == 1) {
        if (row == col)
            os << "PI[" << row[0] << "]";
        else
            os << "E[" << row[0] << "," << col[0] << "]";
    } else {
        os << "En[(";
        for (size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
        os << "),(";
        for (size_t k = 0; k < col.size(); ++k) os << (k ? "," : "") << col[k];
        os << ")]";
    }
    return Piece{sign, os.str()};
}

} // namespace

std::string pretty_a1(const A1Element& a) {
    if (a.is_zero()) return "0";
    std::vector<Piece> pieces;
    for (auto& [d, r] : a.skew.comps) pieces.push_back(skew_piece(d, r));
    for (auto& [ij, c] : a.mat.entries) pieces.push_back(mat_piece(ij.first, ij.second, c));
    std::ostringstream os;
    join_pieces(os, pieces);
    return os.str();
}

std::string pretty_tensor(const TensorElement& t) {
    if (t.n == 1) return pretty_a1(tn_as_a1(t));
    if (t.has_no_terms()) return "0";
    std::vector<Piece> pieces;
    for (auto& term : t.terms) {
        std::ostringstream os;
        int sign = term.coeff.sign();
        Rational abs = sign < 0 ? -term.coeff : term.coeff;
        if (!abs.is_one()) os << abs.str() << "*";
        os << "[";
        for (size_t s = 0; s < term.factors.size(); ++s)
            os << (s ? " | " : "") << pretty_a1(term.factors[s]);
        os << "]";
        pieces.push_back(Piece{sign, os.str()});
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.body < b.body; });
    std::ostringstream os;
    join_pieces(os, pieces);
    return os.str();
}

std::string pretty_poly(const PolyN& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<std::vector<unsigned>, Rational>> monos(p.coeffs.begin(), p.coeffs.end());
    std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
        unsigned ta = 0, tb = 0;
        for (unsigned x : a.first) ta += x;
        for (unsigned x : b.first) tb += x;
        if (ta != tb) return ta > tb;
        return a.first < b.first;
    });
    std::vector<Piece> pieces;
    for (auto& [exps, c] : monos) {
        int sign = c.sign();
        Rational abs = sign < 0 ? -c : c;
        std::ostringstream os;
        bool constant = true;
        for (unsigned e : exps) constant = constant && e == 0;
        if (constant) {
            os << abs.str();
        } else {
            bool printed = false;
            if (!abs.is_one()) {
                os << abs.str();
                printed = true;
            }
            for (size_t s = 0; s < exps.size(); ++s) {
                if (exps[s] == 0) continue;
                if (printed) os << "*";
                printed = true;
                os << "x";
                if (p.n > 1) os << (s + 1);
                if (exps[s] > 1) os << "^" << exps[s];
            }
        }
        pieces.push_back(Piece{sign, os.str()});
    }
    std::ostringstream os;
    join_pieces(os, pieces);
    return os.str();
}

// ---------------------------------------------------------------------------
// Ideal expressions.

namespace {

class IdealParser {
public:
    IdealParser(const std::string& src, int n) : lex_(src), n_(n) {}

    IdealNF parse() {
        IdealNF e = sum();
        if (lex_.peek().kind != Token::Kind::End)
            lex_.error("unexpected '" + lex_.peek().text + "'");
        return e;
    }

private:
    bool punct(const char* p) {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
    }

    IdealNF atom() {
        const Token& t = lex_.peek();
        if (punct("(")) {
            lex_.take();
            IdealNF e = sum();
            if (!punct(")")) lex_.error("expected ')'");
            lex_.take();
            return e;
        }
        if (t.kind == Token::Kind::Number && t.value.is_zero()) {
            lex_.take();
            return id_zero(n_);
        }
        if (t.kind == Token::Kind::Name) {
            std::string name = lex_.take().text;
            if (name == "F") return id_smallest(n_);
            if (name == "A") return id_full(n_);
            if (name.size() >= 2 && name[0] == 'p') {
                int idx = 0;
                for (size_t k = 1; k < name.size(); ++k) {
                    if (!std::isdigit(static_cast<unsigned char>(name[k])))
                        lex_.error("unknown ideal atom '" + name + "'");
                    idx = idx * 10 + (name[k] - '0');
                }
                if (idx < 1 || idx > n_)
                    fail(ErrCode::Arity, "prime index " + std::to_string(idx) + " out of range 1.." +
                                             std::to_string(n_));
                return prime_to_ideal(PrimeIdeal{n_, 1ull << (idx - 1)});
            }
            lex_.error("unknown ideal atom '" + name + "'");
        }
        lex_.error("expected an ideal atom, got '" + t.text + "'");
    }

    IdealNF product() {
        IdealNF e = atom();
        while (punct("*") || punct("&")) {
            lex_.take();
            e = id_product(e, atom());
        }
        return e;
    }

    IdealNF sum() {
        IdealNF e = product();
        while (punct("+")) {
            lex_.take();
            e = id_sum(e, product());
        }
        return e;
    }

    Lexer lex_;
    int n_;
};

} // namespace

IdealNF parse_ideal_expr(const std::string& src, int n) {
    if (n < 1 || n > 62) fail(ErrCode::Arity, "ideal arity out of range");
    return IdealParser(src, n).parse();
}

} // namespace jac
