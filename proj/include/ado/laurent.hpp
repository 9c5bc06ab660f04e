#pragma once

// Laurent polynomials in the formal colour symbol A = q^lambda.

#include <map>
#include <string>

#include "ado/cyclotomic.hpp"

namespace ado {

class LaurentA {
public:
    using Terms = std::map<int, CycloNum>;

    explicit LaurentA(const RingCtx& ring) : ring_(&ring) {}
    LaurentA(const CycloNum& c);  // constant
    static LaurentA monomial(const CycloNum& c, int exponent);
    static LaurentA zero(const RingCtx& ring) { return LaurentA(ring); }
    static LaurentA one(const RingCtx& ring) { return LaurentA(CycloNum(ring, 1)); }

    // [lambda - c] = (A q^-c - A^-1 q^c) / (q - q^-1)
    static LaurentA bracket_shift(const RingCtx& ring, int c);

    const RingCtx& ring() const noexcept { return *ring_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    int min_exp() const;
    int max_exp() const;
    CycloNum coeff(int e) const;

    void add_term(int e, const CycloNum& c);

    LaurentA operator-() const;
    LaurentA& operator+=(const LaurentA& o);
    LaurentA& operator-=(const LaurentA& o);
    LaurentA& operator*=(const CycloNum& s);
    friend LaurentA operator+(LaurentA a, const LaurentA& b) { return a += b; }
    friend LaurentA operator-(LaurentA a, const LaurentA& b) { return a -= b; }
    friend LaurentA operator*(const LaurentA& a, const LaurentA& b);
    friend LaurentA operator*(LaurentA a, const CycloNum& s) { return a *= s; }
    friend bool operator==(const LaurentA& a, const LaurentA& b);
    friend bool operator!=(const LaurentA& a, const LaurentA& b) { return !(a == b); }

    LaurentA shifted(int e) const;          // multiply by A^e
    LaurentA monomial_inverse() const;      // throws unless a single term
    LaurentA pow(int e) const;

    // Substitute A -> q^n.
    CycloNum eval_at_integer_lambda(long n) const;

    std::string to_string() const;

private:
    const RingCtx* ring_;
    Terms terms_;
};

// A body multiplied by q^{lam2 * lambda^2 / 2}; lam2 is the doubled exponent.
struct ScaledLaurent {
    int lam2 = 0;
    LaurentA body;

    explicit ScaledLaurent(LaurentA b, int l2 = 0) : lam2(l2), body(std::move(b)) {}

    bool is_pure() const noexcept { return lam2 == 0; }

    friend ScaledLaurent operator*(const ScaledLaurent& a, const ScaledLaurent& b) {
        return ScaledLaurent(a.body * b.body, a.lam2 + b.lam2);
    }
    friend bool operator==(const ScaledLaurent& a, const ScaledLaurent& b) {
        return a.lam2 == b.lam2 && a.body == b.body;
    }
};

}  // namespace ado
