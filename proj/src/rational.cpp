#include "jac/rational.hpp"

#include <ostream>

#include "jac/error.hpp"

namespace jac {

const char* errcode_name(ErrCode code) {
    switch (code) {
        case ErrCode::Syntax: return "SyntaxError";
        case ErrCode::Arity: return "ArityError";
        case ErrCode::BadIndex: return "BadIndex";
        case ErrCode::ArityMismatch: return "ArityMismatch";
        case ErrCode::DimMismatch: return "DimMismatch";
        case ErrCode::Singular: return "Singular";
        case ErrCode::DegenerateTransvection: return "DegenerateTransvection";
        case ErrCode::NotAUnitNonScalarDegree: return "NotAUnit(NonScalarDegree)";
        case ErrCode::NotAUnitBadBaseSymbol: return "NotAUnit(BadBaseSymbol)";
        case ErrCode::NotAUnitResidueNotInF: return "NotAUnit(ResidueNotInF)";
        case ErrCode::NotAUnitSingularMatrix: return "NotAUnit(SingularMatrix)";
        case ErrCode::FullRing: return "FullRing";
        case ErrCode::TooLarge: return "TooLarge";
        case ErrCode::NotInvertibleAtom: return "NotInvertibleAtom";
        case ErrCode::PoleAtNonPositive: return "PoleAtNonPositive";
        case ErrCode::Unsupported: return "Unsupported";
        case ErrCode::Internal: return "Internal";
    }
    return "Unknown";
}

Int Int::from_string(const std::string& s) {
    if (s.empty()) fail(ErrCode::Syntax, "empty integer literal");
    Int r;
    if (mpz_set_str(r.z_, s.c_str(), 10) != 0)
        fail(ErrCode::Syntax, "bad integer literal '" + s + "'");
    return r;
}

long Int::to_long() const {
    if (!fits_long()) fail(ErrCode::TooLarge, "integer out of machine range: " + str());
    return mpz_get_si(z_);
}

Int Int::root_ceil(unsigned long k) const {
    if (sign() < 0 || k == 0) fail(ErrCode::Internal, "root_ceil needs a nonnegative base");
    Int r;
    int exact = mpz_root(r.z_, z_, k);
    if (!exact && sign() > 0) mpz_add_ui(r.z_, r.z_, 1);
    return r;
}

std::string Int::str() const {
    std::string out(mpz_sizeinbase(z_, 10) + 2, '\0');
    mpz_get_str(out.data(), 10, z_);
    out.resize(out.find('\0'));
    return out;
}

void Rational::normalize() {
    if (den_.is_zero()) fail(ErrCode::Singular, "zero denominator");
    if (num_.is_zero()) {
        den_ = Int(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = Int::gcd(num_.abs(), den_);
    if (!g.is_one()) {
        num_ = Int::divexact(num_, g);
        den_ = Int::divexact(den_, g);
    }
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int::from_string(s));
    return Rational(Int::from_string(s.substr(0, slash)), Int::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::inv() const {
    if (is_zero()) fail(ErrCode::Singular, "division by zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(ErrCode::Singular, "division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace jac
