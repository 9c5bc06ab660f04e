#include "ado/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace ado {

namespace {

using IntPoly = std::vector<long>;

void trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic divisor.
IntPoly div_exact(IntPoly num, const IntPoly& den) {
    const size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw Error(ErrorKind::InvalidArgument, "cyclotomic division degree");
    IntPoly quot(num.size() - dn, 0);
    for (size_t k = num.size(); k-- > dn;) {
        const long c = num[k];
        quot[k - dn] = c;
        for (size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw Error(ErrorKind::InvalidArgument, "cyclotomic division not exact");
    return quot;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPoly num(static_cast<size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    IntPoly den{1};
    for (int d = 1; d < n; ++d)
        if (n % d == 0) den = mul(den, cyclotomic_polynomial(d));
    IntPoly result = div_exact(num, den);
    std::lock_guard lock(mu);
    cache.emplace(n, result);
    return result;
}

RingCtx::RingCtx(int p) : p_(p) {
    phi_ = cyclotomic_polynomial(4 * p);
    dim_ = static_cast<int>(phi_.size()) - 1;

    // zeta^k by repeated multiplication with X, reducing with the monic phi.
    const int table = std::max(2 * dim_ - 1, 4 * p);
    std::vector<std::vector<long>> rows;
    std::vector<long> cur(static_cast<size_t>(dim_), 0);
    cur[0] = 1;
    for (int k = 0; k < table; ++k) {
        rows.push_back(cur);
        std::vector<long> next(static_cast<size_t>(dim_), 0);
        for (int i = 0; i + 1 < dim_; ++i) next[static_cast<size_t>(i + 1)] = cur[static_cast<size_t>(i)];
        const long top = cur[static_cast<size_t>(dim_ - 1)];
        for (int i = 0; i < dim_; ++i) next[static_cast<size_t>(i)] -= top * phi_[static_cast<size_t>(i)];
        cur = std::move(next);
    }
    reduce_.assign(rows.begin(), rows.begin() + (2 * dim_ - 1));
    powers_.assign(rows.begin(), rows.begin() + 4 * p);
}

const RingCtx& RingCtx::get(int p) {
    if (p < 2) throw Error(ErrorKind::InvalidArgument, "root order p must be >= 2, got " + std::to_string(p));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<RingCtx>> rings;
    std::lock_guard lock(mu);
    auto& slot = rings[p];
    if (!slot) slot.reset(new RingCtx(p));
    return *slot;
}

const std::vector<long>& RingCtx::zeta_coords(long k) const {
    long m = k % order();
    if (m < 0) m += order();
    return powers_[static_cast<size_t>(m)];
}

CycloNum::CycloNum(const RingCtx& ring) : ring_(&ring), c_(static_cast<size_t>(ring.dim())) {}

CycloNum::CycloNum(const RingCtx& ring, long value) : CycloNum(ring) { c_[0] = value; }

CycloNum::CycloNum(const RingCtx& ring, std::vector<mpq_class> coords) : ring_(&ring), c_(std::move(coords)) {
    if (c_.size() != static_cast<size_t>(ring.dim()))
        throw Error(ErrorKind::InvalidArgument, "coordinate vector has wrong length");
    for (auto& x : c_) {
        if (x.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in a coordinate");
        x.canonicalize();
    }
}

void CycloNum::check_same(const CycloNum& o) const {
    if (ring_ != o.ring_) throw Error(ErrorKind::InvalidArgument, "mixing cyclotomic rings");
}

bool CycloNum::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool CycloNum::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool CycloNum::is_integral() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

CycloNum CycloNum::operator-() const {
    CycloNum r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    *this = *this * o;
    return *this;
}

CycloNum& CycloNum::operator*=(const mpq_class& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    a.check_same(b);
    const int d = a.ring_->dim();
    std::vector<mpq_class> prod(static_cast<size_t>(2 * d - 1));
    for (int i = 0; i < d; ++i) {
        if (sgn(a.c_[static_cast<size_t>(i)]) == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (sgn(b.c_[static_cast<size_t>(j)]) == 0) continue;
            prod[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    CycloNum r(*a.ring_);
    for (int k = 0; k < 2 * d - 1; ++k) {
        const auto& pk = prod[static_cast<size_t>(k)];
        if (sgn(pk) == 0) continue;
        const auto& row = a.ring_->reduction_row(k);
        for (int i = 0; i < d; ++i)
            if (row[static_cast<size_t>(i)] != 0) r.c_[static_cast<size_t>(i)] += pk * row[static_cast<size_t>(i)];
    }
    return r;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    a.check_same(b);
    return a.c_ == b.c_;
}

CycloNum CycloNum::times_zeta(long k) const {
    return *this * zeta_pow(*ring_, k);
}

bool solve_rational(std::vector<mpq_class> a, std::vector<mpq_class> b, int rows, int cols,
                    std::vector<mpq_class>& x) {
    auto at = [&](int r, int c) -> mpq_class& { return a[static_cast<size_t>(r * cols + c)]; };
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(at(i, c)) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
            std::swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(r)]);
        }
        const mpq_class inv = 1 / at(r, c);
        for (int j = c; j < cols; ++j) at(r, j) *= inv;
        b[static_cast<size_t>(r)] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(at(i, c)) == 0) continue;
            const mpq_class f = at(i, c);
            for (int j = c; j < cols; ++j) at(i, j) -= f * at(r, j);
            b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(r)];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (sgn(b[static_cast<size_t>(i)]) != 0) return false;
    x.assign(static_cast<size_t>(cols), mpq_class(0));
    for (int i = 0; i < r; ++i) x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = b[static_cast<size_t>(i)];
    return true;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero cyclotomic number");
    // Column j of the multiplication matrix holds the coordinates of this * zeta^j.
    const int d = ring_->dim();
    std::vector<mpq_class> m(static_cast<size_t>(d * d));
    for (int j = 0; j < d; ++j) {
        const CycloNum col = times_zeta(j);
        for (int i = 0; i < d; ++i) m[static_cast<size_t>(i * d + j)] = col.c_[static_cast<size_t>(i)];
    }
    std::vector<mpq_class> rhs(static_cast<size_t>(d));
    rhs[0] = 1;
    std::vector<mpq_class> sol;
    if (!solve_rational(std::move(m), std::move(rhs), d, d, sol))
        throw Error(ErrorKind::DivisionByZero, "singular multiplication matrix");
    return CycloNum(*ring_, std::move(sol));
}

CycloNum CycloNum::pow(long e) const {
    CycloNum base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    CycloNum r(*ring_, 1);
    while (n) {
        if (n & 1UL) r *= base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

std::complex<double> CycloNum::approx() const {
    std::complex<double> z = 0;
    const double step = std::numbers::pi / (2.0 * ring_->p());
    for (size_t k = 0; k < c_.size(); ++k)
        if (sgn(c_[k]) != 0) z += c_[k].get_d() * std::polar(1.0, step * static_cast<double>(k));
    return z;
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        if (!first) os << (sgn(c_[k]) > 0 ? "+" : "");
        first = false;
        if (k == 0) {
            os << c_[k];
        } else {
            if (c_[k] == -1) os << "-";
            else if (c_[k] != 1) os << c_[k] << "*";
            os << "z" << (k > 1 ? "^" + std::to_string(k) : "");
        }
    }
    return first ? "0" : os.str();
}

CycloNum zeta_pow(const RingCtx& ring, long k) {
    const auto& row = ring.zeta_coords(k);
    std::vector<mpq_class> c(row.size());
    for (size_t i = 0; i < row.size(); ++i) c[i] = row[i];
    return CycloNum(ring, std::move(c));
}

CycloNum quantum_int(const RingCtx& ring, long n) {
    const CycloNum num = q_pow(ring, n) - q_pow(ring, -n);
    static thread_local std::map<int, CycloNum> den_inv;
    auto it = den_inv.find(ring.p());
    if (it == den_inv.end()) it = den_inv.emplace(ring.p(), (q_pow(ring, 1) - q_pow(ring, -1)).inverse()).first;
    return num * it->second;
}

CycloNum quantum_factorial(const RingCtx& ring, long n) {
    CycloNum r(ring, 1);
    for (long k = 2; k <= n; ++k) r *= quantum_int(ring, k);
    return r;
}

bool in_Zq2(const CycloNum& x) {
    const RingCtx& ring = x.ring();
    const int p = ring.p();
    const int d = ring.dim();
    // Z[q^2] = Z[omega], omega = zeta^4 a primitive p-th root with Z-basis 1..omega^{phi(p)-1}.
    const int basis = static_cast<int>(cyclotomic_polynomial(p).size()) - 1;
    std::vector<mpq_class> a(static_cast<size_t>(d * basis));
    for (int j = 0; j < basis; ++j) {
        const auto& col = ring.zeta_coords(4L * j);
        for (int i = 0; i < d; ++i) a[static_cast<size_t>(i * basis + j)] = col[static_cast<size_t>(i)];
    }
    std::vector<mpq_class> sol;
    if (!solve_rational(std::move(a), x.coords(), d, basis, sol)) return false;
    for (const auto& s : sol)
        if (s.get_den() != 1) return false;
    return true;
}

int zeta_log(const CycloNum& x) {
    const RingCtx& ring = x.ring();
    for (int k = 0; k < ring.order(); ++k) {
        const auto& row = ring.zeta_coords(k);
        bool eq = true;
        for (size_t i = 0; i < row.size() && eq; ++i) eq = (x.coords()[i] == row[i]);
        if (eq) return k;
    }
    return -1;
}

std::complex<double> approx_complex(const CycloNum& x) { return x.approx(); }

}  // namespace ado
