#pragma once

// Exact arithmetic in Q(zeta) with zeta a primitive 4p-th root of unity.
// q = zeta^2 is the primitive 2p-th root the invariants are defined over;
// the extra square root is needed by the ribbon element.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ado/error.hpp"

namespace ado {

class RingCtx {
public:
    // Cached per p; the returned reference lives for the whole program.
    static const RingCtx& get(int p);

    int p() const noexcept { return p_; }
    int order() const noexcept { return 4 * p_; }
    int dim() const noexcept { return dim_; }

    // Coefficients of Phi_{4p}, lowest degree first.
    const std::vector<long>& phi() const noexcept { return phi_; }

    // Power-basis coordinates of zeta^k for 0 <= k < 2*dim - 1 (reduction table).
    const std::vector<long>& reduction_row(int k) const { return reduce_[static_cast<size_t>(k)]; }

    // Coordinates of zeta^k for any k (taken mod 4p).
    const std::vector<long>& zeta_coords(long k) const;

private:
    explicit RingCtx(int p);

    int p_;
    int dim_;
    std::vector<long> phi_;
    std::vector<std::vector<long>> reduce_;
    std::vector<std::vector<long>> powers_;
};

// Cyclotomic polynomial Phi_n with integer coefficients, lowest degree first.
std::vector<long> cyclotomic_polynomial(int n);

class CycloNum {
public:
    explicit CycloNum(const RingCtx& ring);
    CycloNum(const RingCtx& ring, long value);
    CycloNum(const RingCtx& ring, std::vector<mpq_class> coords);

    const RingCtx& ring() const noexcept { return *ring_; }
    const std::vector<mpq_class>& coords() const noexcept { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_integral() const;  // all coordinates are integers

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator*=(const mpq_class& s);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(CycloNum a, const mpq_class& s) { return a *= s; }

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    // Multiply by zeta^k.
    CycloNum times_zeta(long k) const;

    CycloNum inverse() const;  // throws DivisionByZero on zero
    CycloNum pow(long e) const;

    std::complex<double> approx() const;
    std::string to_string() const;

private:
    void check_same(const CycloNum& o) const;

    const RingCtx* ring_;
    std::vector<mpq_class> c_;
};

CycloNum zeta_pow(const RingCtx& ring, long k);
inline CycloNum q_pow(const RingCtx& ring, long m) { return zeta_pow(ring, 2 * m); }

// [n] = (q^n - q^-n) / (q - q^-1)
CycloNum quantum_int(const RingCtx& ring, long n);
CycloNum quantum_factorial(const RingCtx& ring, long n);

// Membership in the subring Z[q^2].
bool in_Zq2(const CycloNum& x);

// If x = zeta^k for some k, returns k in [0, 4p); otherwise -1.
int zeta_log(const CycloNum& x);

std::complex<double> approx_complex(const CycloNum& x);

// Solve A x = b over Q; A is rows x cols (row-major). Returns false when
// the system is inconsistent. Free variables are set to zero.
bool solve_rational(std::vector<mpq_class> a, std::vector<mpq_class> b, int rows, int cols,
                    std::vector<mpq_class>& x);

}  // namespace ado
