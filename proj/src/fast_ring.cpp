#include "ado/fast_ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace ado {

QRing::QRing(int p) : p_(p) {
    const std::vector<long> phi = cyclotomic_polynomial(2 * p);
    d_ = static_cast<int>(phi.size()) - 1;
    // q^k as a coordinate vector, starting from q^{d-1} and shifting.
    std::vector<int64_t> cur(static_cast<size_t>(d_), 0);
    cur[static_cast<size_t>(d_ - 1)] = 1;
    for (int k = d_; k <= 2 * d_ - 2; ++k) {
        const int64_t top = cur[static_cast<size_t>(d_ - 1)];
        for (int j = d_ - 1; j > 0; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
        cur[0] = 0;
        for (int j = 0; j < d_; ++j) cur[static_cast<size_t>(j)] -= top * phi[static_cast<size_t>(j)];
        red_.push_back(cur);
    }
}

const QRing& QRing::get(int p) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<QRing>> cache;
    if (p < 2) throw Error(ErrorKind::InvalidArgument, "p must be at least 2");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[p];
    if (!slot) slot.reset(new QRing(p));
    return *slot;
}

void IntLaurent::widen(int lo, int hi, int d) {
    if (n_ == 0) {
        lo_ = lo;
        n_ = hi - lo + 1;
        d_ = d;
        c_.assign(static_cast<size_t>(n_) * static_cast<size_t>(d_), 0);
        return;
    }
    const int nlo = std::min(lo, lo_), nhi = std::max(hi, lo_ + n_ - 1);
    if (nlo == lo_ && nhi == lo_ + n_ - 1) return;
    std::vector<int64_t> c(static_cast<size_t>(nhi - nlo + 1) * static_cast<size_t>(d_), 0);
    std::copy(c_.begin(), c_.end(), c.begin() + static_cast<long>(lo_ - nlo) * d_);
    c_.swap(c);
    lo_ = nlo;
    n_ = nhi - nlo + 1;
}

void IntLaurent::trim() {
    auto zero_at = [&](int k) {
        for (int j = 0; j < d_; ++j)
            if (c_[static_cast<size_t>(k) * static_cast<size_t>(d_) + static_cast<size_t>(j)] != 0) return false;
        return true;
    };
    int b = 0, e = n_;
    while (b < e && zero_at(b)) ++b;
    while (e > b && zero_at(e - 1)) --e;
    if (b == e) {
        clear();
        return;
    }
    if (b == 0 && e == n_) return;
    c_.erase(c_.begin() + static_cast<long>(e) * d_, c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(b) * d_);
    lo_ += b;
    n_ = e - b;
}

IntLaurent IntLaurent::monomial(const QRing& r, int64_t c, int qexp, int aexp) {
    IntLaurent x;
    if (c == 0) return x;
    const int d = r.dim();
    const int m = ((qexp % (2 * r.p())) + 2 * r.p()) % (2 * r.p());
    // q^m for 0 <= m < 2p, reduced by repeated shifting.
    std::vector<int64_t> v(static_cast<size_t>(d), 0);
    v[0] = 1;
    for (int s = 0; s < m; ++s) {
        const int64_t top = v[static_cast<size_t>(d - 1)];
        for (int j = d - 1; j > 0; --j) v[static_cast<size_t>(j)] = v[static_cast<size_t>(j - 1)];
        v[0] = 0;
        if (top != 0) {
            const auto& row = r.reduction_row(d);
            for (int j = 0; j < d; ++j) v[static_cast<size_t>(j)] += top * row[static_cast<size_t>(j)];
        }
    }
    x.widen(aexp, aexp, d);
    for (int j = 0; j < d; ++j) x.c_[static_cast<size_t>(j)] = c * v[static_cast<size_t>(j)];
    return x;
}

IntLaurent IntLaurent::from_laurent(const LaurentA& x, const QRing& r) {
    IntLaurent out;
    if (x.is_zero()) return out;
    const int d = r.dim();
    out.widen(x.min_exp(), x.max_exp(), d);
    for (const auto& [e, c] : x.terms()) {
        const auto& z = c.coords();
        if (static_cast<int>(z.size()) != 2 * d)
            throw Error(ErrorKind::InvalidArgument, "ring dimensions disagree");
        for (size_t k = 0; k < z.size(); ++k) {
            const mpq_class& v = z[k];
            if (v == 0) continue;
            if ((k & 1) || v.get_den() != 1 || !v.get_num().fits_slong_p())
                throw Error(ErrorKind::InvalidArgument, "coefficient not in Z[q]: " + c.to_string());
            out.c_[static_cast<size_t>(e - out.lo_) * static_cast<size_t>(d) + k / 2] = v.get_num().get_si();
        }
    }
    out.trim();
    return out;
}

LaurentA IntLaurent::to_laurent(const RingCtx& ring) const {
    LaurentA r(ring);
    for (int k = 0; k < n_; ++k) {
        std::vector<mpq_class> z(static_cast<size_t>(ring.dim()), 0);
        for (int j = 0; j < d_; ++j) z[2 * static_cast<size_t>(j)] = mpq_class(static_cast<long>(c_[static_cast<size_t>(k * d_ + j)]));
        r.add_term(lo_ + k, CycloNum(ring, std::move(z)));
    }
    return r;
}

void IntLaurent::fma(const IntLaurent& a, const IntLaurent& b, const QRing& r) {
    if (a.n_ == 0 || b.n_ == 0) return;
    const int d = r.dim(), w = 2 * d - 1;
    const int rn = a.n_ + b.n_ - 1;
    thread_local std::vector<__int128> buf;
    buf.assign(static_cast<size_t>(rn) * static_cast<size_t>(w), 0);
    for (int ea = 0; ea < a.n_; ++ea) {
        const int64_t* pa = &a.c_[static_cast<size_t>(ea * d)];
        for (int eb = 0; eb < b.n_; ++eb) {
            const int64_t* pb = &b.c_[static_cast<size_t>(eb * d)];
            __int128* acc = &buf[static_cast<size_t>((ea + eb) * w)];
            for (int i = 0; i < d; ++i) {
                if (pa[i] == 0) continue;
                const __int128 x = pa[i];
                for (int j = 0; j < d; ++j) acc[i + j] += x * pb[j];
            }
        }
    }
    widen(a.lo_ + b.lo_, a.lo_ + b.lo_ + rn - 1, d);
    constexpr __int128 lim = std::numeric_limits<int64_t>::max();
    for (int e = 0; e < rn; ++e) {
        __int128* acc = &buf[static_cast<size_t>(e * w)];
        for (int k = w - 1; k >= d; --k) {
            if (acc[k] == 0) continue;
            const auto& row = r.reduction_row(k);
            for (int j = 0; j < d; ++j) acc[j] += acc[k] * row[static_cast<size_t>(j)];
        }
        int64_t* dst = &c_[static_cast<size_t>(a.lo_ + b.lo_ + e - lo_) * static_cast<size_t>(d)];
        for (int j = 0; j < d; ++j) {
            const __int128 v = acc[j] + dst[j];
            if (v > lim || v < -lim) throw Error(ErrorKind::Overflow, "coefficient exceeds 64 bits");
            dst[j] = static_cast<int64_t>(v);
        }
    }
    trim();
}

void IntLaurent::add(const IntLaurent& a) {
    if (a.n_ == 0) return;
    widen(a.lo_, a.lo_ + a.n_ - 1, a.d_);
    for (int k = 0; k < a.n_; ++k)
        for (int j = 0; j < d_; ++j) {
            int64_t& dst = c_[static_cast<size_t>((a.lo_ + k - lo_) * d_ + j)];
            if (__builtin_add_overflow(dst, a.c_[static_cast<size_t>(k * d_ + j)], &dst))
                throw Error(ErrorKind::Overflow, "coefficient exceeds 64 bits");
        }
    trim();
}

bool operator==(const IntLaurent& a, const IntLaurent& b) {
    return a.n_ == b.n_ && (a.n_ == 0 || (a.lo_ == b.lo_ && a.c_ == b.c_));
}

}  // namespace ado
