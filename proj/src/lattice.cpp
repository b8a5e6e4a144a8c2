#include "jac/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "jac/error.hpp"

namespace jac {

static void check_n(int n, int hard_cap, const char* what) {
    if (n < 1) fail(ErrCode::BadIndex, std::string(what) + ": arity must be >= 1");
    if (n > hard_cap)
        fail(ErrCode::TooLarge,
             std::string(what) + ": arity " + std::to_string(n) + " exceeds the supported bound " +
                 std::to_string(hard_cap));
}

static std::uint64_t full_mask(int n) { return (n == 64) ? ~0ull : ((1ull << n) - 1); }

std::string pattern_str(const Pattern& p) {
    std::string s(static_cast<size_t>(p.n), '0');
    for (int i = 0; i < p.n; ++i)
        if (p.mask >> i & 1) s[static_cast<size_t>(i)] = '1';
    return s;
}

bool IdealNF::is_full() const { return antichain.size() == 1 && antichain[0] == full_mask(n); }

IdealNF id_zero(int n) {
    check_n(n, 62, "ideal");
    return IdealNF{n, {}};
}

IdealNF id_full(int n) {
    check_n(n, 62, "ideal");
    return IdealNF{n, {full_mask(n)}};
}

IdealNF id_smallest(int n) {
    check_n(n, 62, "ideal");
    return IdealNF{n, {0}};
}

std::string prime_str(const PrimeIdeal& p) {
    std::ostringstream os;
    os << "p{";
    bool first = true;
    for (int i = 0; i < p.n; ++i)
        if (p.idx >> i & 1) {
            if (!first) os << ",";
            first = false;
            os << (i + 1);
        }
    os << "}";
    return os.str();
}

// (popcount, lexicographic on the tuple (f(1),...,f(n)) with 0 < 1)
static bool pattern_less(int n, std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    for (int i = 0; i < n; ++i) {
        unsigned ba = a >> i & 1, bb = b >> i & 1;
        if (ba != bb) return ba < bb;
    }
    return false;
}

IdealNF id_canon(int n, std::vector<std::uint64_t> patterns) {
    check_n(n, 62, "ideal");
    for (std::uint64_t p : patterns)
        if (p & ~full_mask(n)) fail(ErrCode::ArityMismatch, "pattern exceeds arity");
    std::vector<std::uint64_t> keep;
    for (std::uint64_t p : patterns) {
        bool dominated = false;
        for (std::uint64_t q : patterns)
            if (p != q && (p & q) == p) {
                dominated = true;
                break;
            }
        if (!dominated && std::find(keep.begin(), keep.end(), p) == keep.end()) keep.push_back(p);
    }
    std::sort(keep.begin(), keep.end(),
              [n](std::uint64_t a, std::uint64_t b) { return pattern_less(n, a, b); });
    return IdealNF{n, std::move(keep)};
}

static void check_arity(const IdealNF& a, const IdealNF& b) {
    if (a.n != b.n) fail(ErrCode::ArityMismatch, "ideal arities differ");
}

IdealNF id_sum(const IdealNF& a, const IdealNF& b) {
    check_arity(a, b);
    std::vector<std::uint64_t> all = a.antichain;
    all.insert(all.end(), b.antichain.begin(), b.antichain.end());
    return id_canon(a.n, std::move(all));
}

IdealNF id_product(const IdealNF& a, const IdealNF& b) {
    check_arity(a, b);
    std::vector<std::uint64_t> prods;
    for (std::uint64_t f : a.antichain)
        for (std::uint64_t g : b.antichain) prods.push_back(f & g);
    return id_canon(a.n, std::move(prods));
}

IdealNF id_intersect(const IdealNF& a, const IdealNF& b) { return id_product(a, b); }

bool id_contains(const IdealNF& a, const IdealNF& b) {
    check_arity(a, b);
    for (std::uint64_t g : b.antichain) {
        bool covered = false;
        for (std::uint64_t f : a.antichain)
            if ((g & f) == g) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

// Enumerate all minimal transversals of the edge family: branch on the first
// unhit edge, banning already-tried vertices in later branches, then filter
// to inclusion-minimal sets.
static void transversal_rec(const std::vector<std::uint64_t>& edges, std::uint64_t chosen,
                            std::uint64_t banned, std::vector<std::uint64_t>& out) {
    const std::uint64_t* unhit = nullptr;
    for (const auto& e : edges)
        if (!(e & chosen)) {
            unhit = &e;
            break;
        }
    if (!unhit) {
        out.push_back(chosen);
        return;
    }
    std::uint64_t cand = *unhit & ~banned;
    std::uint64_t tried = 0;
    while (cand) {
        std::uint64_t v = cand & (~cand + 1);
        cand ^= v;
        transversal_rec(edges, chosen | v, banned | tried, out);
        tried |= v;
    }
}

static std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& edges) {
    std::vector<std::uint64_t> raw;
    transversal_rec(edges, 0, 0, raw);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<std::uint64_t> out;
    for (std::uint64_t t : raw) {
        bool minimal = true;
        for (std::uint64_t s : raw)
            if (s != t && (s & t) == s) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(t);
    }
    return out;
}

std::vector<PrimeIdeal> min_primes(const IdealNF& a) {
    if (a.is_full()) fail(ErrCode::FullRing, "the full ring has no minimal primes over it");
    if (a.is_zero()) return {PrimeIdeal{a.n, 0}};
    std::vector<std::uint64_t> csupps;
    for (std::uint64_t f : a.antichain) csupps.push_back(~f & full_mask(a.n));
    std::vector<PrimeIdeal> out;
    for (std::uint64_t t : minimal_transversals(csupps)) out.push_back(PrimeIdeal{a.n, t});
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& p, const PrimeIdeal& q) {
        return std::make_pair(std::popcount(p.idx), p.idx) < std::make_pair(std::popcount(q.idx), q.idx);
    });
    return out;
}

IdealNF prime_to_ideal(const PrimeIdeal& p) {
    if (p.idx == 0) return id_zero(p.n);
    std::vector<std::uint64_t> pats;
    for (int i = 0; i < p.n; ++i)
        if (p.idx >> i & 1) pats.push_back(full_mask(p.n) & ~(1ull << i));
    return id_canon(p.n, std::move(pats));
}

std::vector<PrimeIdeal> factor_primes(const IdealNF& a) {
    std::vector<PrimeIdeal> primes = min_primes(a);
    IdealNF prod = id_full(a.n);
    for (const auto& p : primes) prod = id_product(prod, prime_to_ideal(p));
    if (!(prod == a)) fail(ErrCode::Internal, "prime factorization failed to reproduce the ideal");
    return primes;
}

std::vector<std::pair<PrimeIdeal, int>> spec_enum(int n) {
    check_n(n, 16, "spectrum");
    std::vector<std::pair<PrimeIdeal, int>> out;
    for (std::uint64_t idx = 0; idx <= full_mask(n); ++idx)
        out.emplace_back(PrimeIdeal{n, idx}, std::popcount(idx));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.second, a.first.idx) < std::make_pair(b.second, b.first.idx);
    });
    return out;
}

int krull_dim(int n) {
    check_n(n, 14, "krull_dim");
    // Longest strict chain in the inclusion poset of the enumerated spectrum.
    std::uint64_t top = full_mask(n);
    std::vector<int> dp(static_cast<size_t>(top) + 1, 0);
    std::vector<std::uint64_t> order;
    for (std::uint64_t m = 0; m <= top; ++m) order.push_back(m);
    std::sort(order.begin(), order.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    int best = 0;
    for (std::uint64_t m : order) {
        int d = 0;
        // proper subsets
        for (std::uint64_t s = (m - 1) & m; ; s = (s - 1) & m) {
            d = std::max(d, dp[s] + 1);
            if (s == 0) break;
        }
        if (m == 0) d = 0;
        dp[m] = d;
        best = std::max(best, d);
    }
    return best;
}

IdealClass classify(const IdealNF& a) {
    IdealClass c;
    if (a.is_zero()) {
        c.zero = true;
        c.prime = true;
        return c;
    }
    if (a.is_full()) {
        c.full = true;
        return c;
    }
    bool all_single_zero = true;
    for (std::uint64_t f : a.antichain)
        if (std::popcount(full_mask(a.n) & ~f) != 1) all_single_zero = false;
    if (all_single_zero) {
        c.prime = true;
        if (a.antichain.size() == static_cast<size_t>(a.n)) c.completely_prime = true;
    }
    if (!c.prime) c.other = true;
    return c;
}

std::string class_str(const IdealClass& c) {
    std::vector<std::string> parts;
    if (c.zero) parts.push_back("zero");
    if (c.full) parts.push_back("full");
    if (c.prime) parts.push_back("prime");
    if (c.completely_prime) parts.push_back("completely prime");
    if (c.other) parts.push_back("other");
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    return out;
}

IdealNF c_involution(const IdealNF& a) {
    std::vector<std::uint64_t> pats;
    for (std::uint64_t f : a.antichain) pats.push_back(~f & full_mask(a.n));
    return id_canon(a.n, std::move(pats));
}

IdealNF tau_involution(const IdealNF& a) {
    if (a.is_full()) fail(ErrCode::FullRing, "tau is undefined on the full ring");
    IdealNF acc = id_full(a.n);
    for (const PrimeIdeal& q : min_primes(a)) {
        PrimeIdeal comp{a.n, full_mask(a.n) & ~q.idx};
        acc = id_intersect(acc, prime_to_ideal(comp));
    }
    return acc;
}

// DFS over patterns in id order; cand tracks patterns still addable (above
// the last chosen one and incomparable with everything chosen).
namespace {
struct AntichainEnum {
    int n;
    std::vector<std::uint64_t> incomp; // per pattern id: ids incomparable with it
    std::vector<IdealNF>* sink = nullptr;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> cur;

    void run() {
        unsigned npat = 1u << n;
        incomp.assign(npat, 0);
        for (unsigned p = 0; p < npat; ++p)
            for (unsigned q = 0; q < npat; ++q) {
                std::uint64_t meet = p & q;
                if (meet != p && meet != q) incomp[p] |= 1ull << q;
            }
        std::uint64_t all = (npat == 64) ? ~0ull : ((1ull << npat) - 1);
        rec(all);
    }

    void rec(std::uint64_t cand) {
        ++count;
        if (sink) {
            // cur is pairwise incomparable by construction; only sort it
            std::vector<std::uint64_t> sorted = cur;
            std::sort(sorted.begin(), sorted.end(), [this](std::uint64_t a, std::uint64_t b) {
                return pattern_less(n, a, b);
            });
            sink->push_back(IdealNF{n, std::move(sorted)});
        }
        while (cand) {
            std::uint64_t bit = cand & (~cand + 1);
            unsigned q = static_cast<unsigned>(std::countr_zero(bit));
            cand ^= bit;
            cur.push_back(q);
            rec(cand & incomp[q]); // only ids above q survive: cand was already above q
            cur.pop_back();
        }
    }
};
} // namespace

std::vector<IdealNF> enumerate_ideals(int n) {
    check_n(n, 6, "ideal enumeration");
    AntichainEnum e;
    e.n = n;
    std::vector<IdealNF> out;
    e.sink = &out;
    e.run();
    return out;
}

std::uint64_t count_ideals(int n) {
    check_n(n, 6, "ideal enumeration");
    AntichainEnum e;
    e.n = n;
    e.run();
    return e.count;
}

} // namespace jac
