#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace jac {

// Arbitrary-precision integer, value semantics over mpz_t.
class Int {
public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); } // NOLINT: implicit by design
    Int(int v) : Int(static_cast<long>(v)) {}
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    ~Int() { mpz_clear(z_); }

    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }

    static Int from_string(const std::string& s); // throws Error(Syntax) on garbage

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const; // throws Error(TooLarge) when out of range

    friend Int operator+(const Int& a, const Int& b) {
        Int r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator-(const Int& a, const Int& b) {
        Int r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator*(const Int& a, const Int& b) {
        Int r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Int operator-() const {
        Int r;
        mpz_neg(r.z_, z_);
        return r;
    }

    Int& operator+=(const Int& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Int& operator-=(const Int& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    // Truncated division; exact division available where the caller knows it divides.
    friend Int operator/(const Int& a, const Int& b) {
        Int r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    static Int divexact(const Int& a, const Int& b) {
        Int r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }
    static Int gcd(const Int& a, const Int& b) {
        Int r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    static Int pow(const Int& base, unsigned long e) {
        Int r;
        mpz_pow_ui(r.z_, base.z_, e);
        return r;
    }
    static Int factorial(unsigned long n) {
        Int r;
        mpz_fac_ui(r.z_, n);
        return r;
    }
    Int abs() const {
        Int r;
        mpz_abs(r.z_, z_);
        return r;
    }
    // Smallest integer r with r^k >= this (this >= 0, k >= 1).
    Int root_ceil(unsigned long k) const;

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const;

private:
    mpz_t z_;
};

// Reduced fraction: gcd(num, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long v) : num_(v), den_(1) {} // NOLINT: implicit by design
    Rational(int v) : Rational(static_cast<long>(v)) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long n, long d) : Rational(Int(n), Int(d)) {}

    static Rational from_string(const std::string& s); // "p" or "p/q"

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational inv() const; // throws Error(Singular) on zero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string str() const; // "p" when integral, else "p/q"

private:
    void normalize();
    Int num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace jac
