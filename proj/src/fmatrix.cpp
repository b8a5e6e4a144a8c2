#include "jac/fmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "jac/error.hpp"

namespace jac {

FiniteMatrix fm_zero(int dim) {
    FiniteMatrix m;
    m.dim = dim;
    return m;
}

FiniteMatrix fm_unit(MIdx i, MIdx j, Rational c) {
    if (i.size() != j.size() || i.empty()) fail(ErrCode::BadIndex, "matrix unit index arity");
    FiniteMatrix m;
    m.dim = static_cast<int>(i.size());
    if (!c.is_zero()) m.entries.emplace(std::make_pair(std::move(i), std::move(j)), std::move(c));
    return m;
}

FiniteMatrix fm_unit1(unsigned i, unsigned j, Rational c) {
    return fm_unit(MIdx{i}, MIdx{j}, std::move(c));
}

void fm_accumulate(FiniteMatrix& m, const MIdx& i, const MIdx& j, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = m.entries.find(key);
    if (it == m.entries.end()) {
        m.entries.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.entries.erase(it);
    }
}

static void check_dims(const FiniteMatrix& a, const FiniteMatrix& b) {
    if (a.dim != b.dim)
        fail(ErrCode::DimMismatch,
             "matrix index arities differ: " + std::to_string(a.dim) + " vs " + std::to_string(b.dim));
}

FiniteMatrix operator+(const FiniteMatrix& a, const FiniteMatrix& b) {
    check_dims(a, b);
    FiniteMatrix r = a;
    for (auto& [ij, c] : b.entries) fm_accumulate(r, ij.first, ij.second, c);
    return r;
}

FiniteMatrix fm_scale(const Rational& c, const FiniteMatrix& a) {
    FiniteMatrix r = fm_zero(a.dim);
    if (c.is_zero()) return r;
    for (auto& [ij, v] : a.entries) r.entries.emplace(ij, v * c);
    return r;
}

FiniteMatrix operator-(const FiniteMatrix& a, const FiniteMatrix& b) {
    return a + fm_scale(Rational(-1), b);
}

FiniteMatrix operator*(const FiniteMatrix& a, const FiniteMatrix& b) {
    check_dims(a, b);
    FiniteMatrix r = fm_zero(a.dim);
    // E_{ij} E_{kl} = delta_{jk} E_{il}, componentwise on multi-indices
    for (auto& [ij, u] : a.entries)
        for (auto& [kl, v] : b.entries)
            if (ij.second == kl.first) fm_accumulate(r, ij.first, kl.second, u * v);
    return r;
}

static unsigned support_bound(const FiniteMatrix& f) {
    unsigned d = 0;
    for (auto& [ij, c] : f.entries) {
        for (unsigned x : ij.first) d = std::max(d, x + 1);
        for (unsigned x : ij.second) d = std::max(d, x + 1);
    }
    return d;
}

static size_t flatten(const MIdx& a, unsigned d) {
    size_t idx = 0;
    for (unsigned x : a) idx = idx * d + x;
    return idx;
}

static MIdx unflatten(size_t idx, unsigned d, int dim) {
    MIdx a(static_cast<size_t>(dim));
    for (int k = dim - 1; k >= 0; --k) {
        a[static_cast<size_t>(k)] = static_cast<unsigned>(idx % d);
        idx /= d;
    }
    return a;
}

static std::vector<std::vector<Rational>> dense_one_plus(const FiniteMatrix& f, unsigned d) {
    size_t n = 1;
    for (int k = 0; k < f.dim; ++k) n *= d;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
    for (auto& [ij, c] : f.entries) m[flatten(ij.first, d)][flatten(ij.second, d)] += c;
    return m;
}

Rational fm_det_one_plus_block(const FiniteMatrix& f, unsigned d) {
    if (d < support_bound(f)) fail(ErrCode::BadIndex, "block does not cover the matrix support");
    if (d == 0) return Rational(1);
    auto m = dense_one_plus(f, d);
    size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = m[col][col].inv();
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Rational factor = m[row][col] * inv;
            for (size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

Rational fm_det_one_plus(const FiniteMatrix& f) {
    return fm_det_one_plus_block(f, support_bound(f));
}

FiniteMatrix fm_invert_one_plus(const FiniteMatrix& f) {
    unsigned d = support_bound(f);
    FiniteMatrix g = fm_zero(f.dim);
    if (d == 0) return g;
    auto m = dense_one_plus(f, d);
    size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) fail(ErrCode::Singular, "det(1+f) = 0, no inverse");
        if (piv != col) {
            std::swap(m[piv], m[col]);
            std::swap(inv[piv], inv[col]);
        }
        Rational scale = m[col][col].inv();
        for (size_t k = 0; k < n; ++k) {
            m[col][k] *= scale;
            inv[col][k] *= scale;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational factor = m[row][col];
            for (size_t k = 0; k < n; ++k) {
                m[row][k] -= factor * m[col][k];
                inv[row][k] -= factor * inv[col][k];
            }
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational v = inv[i][j];
            if (i == j) v -= Rational(1);
            if (!v.is_zero())
                g.entries.emplace(std::make_pair(unflatten(i, d, f.dim), unflatten(j, d, f.dim)),
                                  std::move(v));
        }
    return g;
}

Rational midx_factorial(const MIdx& a) {
    Int r(1);
    for (unsigned x : a) r *= Int::factorial(x);
    return Rational(std::move(r));
}

FiniteMatrix fm_theta(const FiniteMatrix& f) {
    FiniteMatrix r = fm_zero(f.dim);
    for (auto& [ij, c] : f.entries) {
        Rational scale = midx_factorial(ij.first) / midx_factorial(ij.second);
        r.entries.emplace(std::make_pair(ij.second, ij.first), c * scale);
    }
    return r;
}

FiniteMatrix fm_transvection(const MIdx& i, const MIdx& j, const Rational& lambda) {
    if (i == j) fail(ErrCode::DegenerateTransvection, "transvection requires i != j");
    if (lambda.is_zero()) fail(ErrCode::BadIndex, "transvection scalar must be nonzero");
    return fm_unit(i, j, lambda);
}

std::string fm_str(const FiniteMatrix& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [ij, c] : f.entries) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c.str() << "*";
        if (ij.first.size() == 1) {
            os << "E[" << ij.first[0] << "," << ij.second[0] << "]";
        } else {
            os << "En[(";
            for (size_t k = 0; k < ij.first.size(); ++k) os << (k ? "," : "") << ij.first[k];
            os << "),(";
            for (size_t k = 0; k < ij.second.size(); ++k) os << (k ? "," : "") << ij.second[k];
            os << ")]";
        }
    }
    return os.str();
}

} // namespace jac
