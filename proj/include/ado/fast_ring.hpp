#pragma once

// Integral Laurent polynomials in A over Z[q], q a primitive 2p-th root of
// unity, with machine-word coordinates. This is the ring the braid operators
// live in; products accumulate in 128 bits and are range-checked on store.

#include <cstdint>
#include <vector>

#include "ado/laurent.hpp"

namespace ado {

class QRing {
public:
    static const QRing& get(int p);

    int p() const noexcept { return p_; }
    int dim() const noexcept { return d_; }
    // Coordinates of q^k for d <= k <= 2d-2.
    const std::vector<int64_t>& reduction_row(int k) const { return red_[static_cast<size_t>(k - d_)]; }

private:
    explicit QRing(int p);
    int p_;
    int d_;
    std::vector<std::vector<int64_t>> red_;
};

class IntLaurent {
public:
    IntLaurent() = default;

    bool is_zero() const noexcept { return n_ == 0; }
    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + n_ - 1; }
    int width() const noexcept { return n_; }
    const int64_t* coeff(int e) const { return &c_[static_cast<size_t>(e - lo_) * static_cast<size_t>(d_)]; }

    // c q^qexp A^aexp
    static IntLaurent monomial(const QRing& r, int64_t c, int qexp, int aexp);
    // Throws InvalidArgument unless every coefficient lies in Z[q].
    static IntLaurent from_laurent(const LaurentA& x, const QRing& r);
    LaurentA to_laurent(const RingCtx& ring) const;

    // *this += a * b
    void fma(const IntLaurent& a, const IntLaurent& b, const QRing& r);
    void add(const IntLaurent& a);
    void clear() noexcept { n_ = 0; c_.clear(); }

    friend bool operator==(const IntLaurent& a, const IntLaurent& b);

private:
    void widen(int lo, int hi, int d);
    void trim();

    int lo_ = 0;
    int n_ = 0;
    int d_ = 0;
    std::vector<int64_t> c_;
};

}  // namespace ado
