#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the engine's fast paths.

#include <cstdlib>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "ado/braid.hpp"
#include "ado/quantum_algebra.hpp"

namespace oracle {

using QPoly = std::vector<mpq_class>;  // lowest degree first

inline void trim(QPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// det over Q by plain Gaussian elimination
inline mpq_class det(std::vector<std::vector<mpq_class>> m) {
    const size_t n = m.size();
    mpq_class d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            const mpq_class f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

inline std::vector<std::vector<mpq_class>> matmul(const std::vector<std::vector<mpq_class>>& a,
                                                 const std::vector<std::vector<mpq_class>>& b) {
    const size_t n = a.size();
    std::vector<std::vector<mpq_class>> r(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (sgn(a[i][k]) != 0)
                for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

// Reduced Burau matrix of sigma_i^{+-1} at a numeric t, size (n-1).
inline std::vector<std::vector<mpq_class>> burau_letter(int n, int letter, const mpq_class& t) {
    const int m = n - 1;
    std::vector<std::vector<mpq_class>> b(static_cast<size_t>(m), std::vector<mpq_class>(static_cast<size_t>(m), 0));
    for (int k = 0; k < m; ++k) b[k][k] = 1;
    const int i = std::abs(letter) - 1;
    if (letter > 0) {
        b[i][i] = -t;
        if (i > 0) b[i][i - 1] = t;
        if (i + 1 < m) b[i][i + 1] = 1;
    } else {
        const mpq_class ti = 1 / t;
        b[i][i] = -ti;
        if (i > 0) b[i][i - 1] = 1;
        if (i + 1 < m) b[i][i + 1] = ti;
    }
    return b;
}

// t^shift * Delta(t) * (1 + t + ... + t^{n-1}) = t^shift * det(I - burau(beta)),
// sampled and interpolated. Returns Delta with the unit t^j stripped and a
// positive lowest coefficient.
inline QPoly alexander_via_burau(const ado::BraidWord& b) {
    const int n = b.strands;
    if (n == 1) return {1};
    // entries of the product have t-degree in [-L, L]
    const int shift = (n - 1) * static_cast<int>(b.letters.size());
    const int deg = 2 * shift;
    std::vector<mpq_class> xs, ys;
    for (int s = 0; s <= deg; ++s) {
        const mpq_class t(s + 2, 1);
        std::vector<std::vector<mpq_class>> m(static_cast<size_t>(n - 1), std::vector<mpq_class>(static_cast<size_t>(n - 1), 0));
        for (int k = 0; k < n - 1; ++k) m[k][k] = 1;
        for (int l : b.letters) m = matmul(burau_letter(n, l, t), m);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) m[i][j] = (i == j ? 1 : 0) - m[i][j];
        mpq_class tp = 1;
        for (int k = 0; k < shift; ++k) tp *= t;
        xs.push_back(t);
        ys.push_back(det(m) * tp);
    }
    // Lagrange interpolation into the monomial basis
    QPoly poly(xs.size(), 0);
    for (size_t i = 0; i < xs.size(); ++i) {
        QPoly basis{1};
        mpq_class denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            QPoly nb(basis.size() + 1, 0);
            for (size_t k = 0; k < basis.size(); ++k) {
                nb[k + 1] += basis[k];
                nb[k] -= basis[k] * xs[j];
            }
            basis = nb;
            denom *= xs[i] - xs[j];
        }
        for (size_t k = 0; k < basis.size(); ++k) poly[k] += basis[k] * ys[i] / denom;
    }
    trim(poly);
    // divide by 1 + t + ... + t^{n-1}
    QPoly q(poly.size(), 0);
    QPoly r = poly;
    const int dd = n - 1;
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        const mpq_class c = r[k];
        q[k - dd] = c;
        for (int j = 0; j <= dd; ++j) r[k - dd + j] -= c;
    }
    trim(r);
    if (!r.empty()) return {};  // not divisible: signals a bug in the oracle
    trim(q);
    size_t lo = 0;
    while (lo < q.size() && sgn(q[lo]) == 0) ++lo;
    QPoly out(q.begin() + static_cast<long>(lo), q.end());
    if (!out.empty() && sgn(out[0]) < 0)
        for (auto& c : out) c = -c;
    return out;
}

// Operator of a braid word on V^{(x)n} as a dense matrix, built from Kronecker
// products of the pair braiding. Letters act in order, first letter first.
inline ado::LMatrix dense_braid(int p, const ado::BraidWord& b) {
    const ado::RingCtx& ring = ado::RingCtx::get(p);
    int dim = 1;
    for (int k = 0; k < b.strands; ++k) dim *= p;
    ado::LMatrix op = ado::identity_matrix(ring, dim);
    for (int l : b.letters) {
        const int i = std::abs(l);
        int left = 1, right = 1;
        for (int k = 1; k < i; ++k) left *= p;
        for (int k = i + 2; k <= b.strands; ++k) right *= p;
        const ado::LMatrix& r = l > 0 ? ado::braiding_vv(p).m : ado::braiding_vv_inv(p).m;
        const ado::LMatrix full = kron(kron(ado::identity_matrix(ring, left), r), ado::identity_matrix(ring, right));
        op = full * op;
    }
    return op;
}

// Partial trace of a dense operator over strands 2..n with K^e on each closed
// strand. Returns the remaining p x p matrix.
inline ado::LMatrix dense_partial_trace(const ado::LMatrix& op, int p, int n, int e) {
    const ado::RingCtx& ring = ado::RingCtx::get(p);
    int top = 1;
    for (int k = 1; k < n; ++k) top *= p;
    ado::LMatrix out = ado::zero_matrix(ring, p, p);
    const ado::LMatrix kp = ado::k_power(p, e);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            for (int rest = 0; rest < top; ++rest) {
                ado::LaurentA w = ado::LaurentA::one(ring);
                int r = rest;
                for (int k = 1; k < n; ++k) {
                    w = w * kp(r % p, r % p);
                    r /= p;
                }
                const auto& v = op(i * top + rest, j * top + rest);
                if (!v.is_zero()) out(i, j) += w * v;
            }
    return out;
}

}  // namespace oracle
