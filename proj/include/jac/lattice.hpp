#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jac {

// A 0/1 pattern on {1..n}: bit (i-1) of mask set means f(i) = 1. The
// all-ones pattern is the full ring, all-zeros is the smallest nonzero ideal.
struct Pattern {
    int n;
    std::uint64_t mask;

    friend bool operator==(const Pattern& a, const Pattern& b) = default;
};

std::string pattern_str(const Pattern& p); // digits f(1)f(2)...f(n)

// Normal form of an ideal: an antichain of patterns, pairwise incomparable
// under the componentwise order, canonically sorted by (popcount, lexicographic
// bits). Empty = the zero ideal; {all-ones} = the full ring.
struct IdealNF {
    int n = 1;
    std::vector<std::uint64_t> antichain;

    bool is_zero() const { return antichain.empty(); }
    bool is_full() const;
    friend bool operator==(const IdealNF& a, const IdealNF& b) = default;
};

IdealNF id_zero(int n);
IdealNF id_full(int n);
IdealNF id_smallest(int n); // the n-fold matrix ideal, pattern all-zeros

// Prime ideal p_I = sum of the height-1 primes indexed by I; empty I is the
// zero prime.
struct PrimeIdeal {
    int n;
    std::uint64_t idx; // subset of {1..n}, bit (i-1) <=> i in I

    friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) = default;
    friend auto operator<=>(const PrimeIdeal& a, const PrimeIdeal& b) = default;
};

std::string prime_str(const PrimeIdeal& p);

// Keep only maximal patterns; the unique normal form of the sum of the I_f.
IdealNF id_canon(int n, std::vector<std::uint64_t> patterns);

IdealNF id_sum(const IdealNF& a, const IdealNF& b);
IdealNF id_product(const IdealNF& a, const IdealNF& b);
IdealNF id_intersect(const IdealNF& a, const IdealNF& b); // equals the product
bool id_contains(const IdealNF& a, const IdealNF& b);     // a contains b

// Minimal primes over a, as the minimal transversals of the co-support family
// (branch-and-bound); Min(0) = {zero prime}. Throws FullRing on the full ring.
std::vector<PrimeIdeal> min_primes(const IdealNF& a);

// The unique factorization into incomparable primes; identical to min_primes,
// with the product re-checked against a.
std::vector<PrimeIdeal> factor_primes(const IdealNF& a);

IdealNF prime_to_ideal(const PrimeIdeal& p);

// All 2^n primes with their heights, ordered by (height, index set).
std::vector<std::pair<PrimeIdeal, int>> spec_enum(int n);

// Length of the longest strict chain in the computed spectrum poset.
int krull_dim(int n);

struct IdealClass {
    bool zero = false;
    bool full = false;
    bool prime = false;
    bool completely_prime = false;
    bool other = false;

    friend bool operator==(const IdealClass& a, const IdealClass& b) = default;
};
IdealClass classify(const IdealNF& a);
std::string class_str(const IdealClass& c);

// Support complement on every pattern; c(0) = 0.
IdealNF c_involution(const IdealNF& a);
// Complement the index set of every minimal prime, then intersect.
IdealNF tau_involution(const IdealNF& a);

// All antichains of subsets of {1..n}; n <= 6 (TooLarge beyond).
std::vector<IdealNF> enumerate_ideals(int n);
std::uint64_t count_ideals(int n);

} // namespace jac
