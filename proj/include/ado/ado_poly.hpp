#pragma once

// The invariant as a Laurent polynomial in x = q^2 A^2, with exponents stored
// doubled so that half-integer powers (even component counts) stay exact.

#include <map>
#include <string>

#include "ado/cyclotomic.hpp"
#include "ado/laurent.hpp"

namespace ado {

class AdoPoly {
public:
    using Terms = std::map<int, CycloNum>;  // doubled exponent -> coefficient

    AdoPoly(const RingCtx& ring, int components);

    const RingCtx& ring() const noexcept { return *ring_; }
    int p() const noexcept { return ring_->p(); }
    int components() const noexcept { return components_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Parity every doubled exponent must have: (p-1)(s-1) mod 2.
    int exponent_parity() const noexcept { return ((p() - 1) * (components_ - 1)) & 1; }

    void add_term(int exp2, const CycloNum& c);
    CycloNum coeff(int exp2) const;

    friend bool operator==(const AdoPoly& a, const AdoPoly& b);
    friend bool operator!=(const AdoPoly& a, const AdoPoly& b) { return !(a == b); }
    friend AdoPoly operator*(const AdoPoly& a, const AdoPoly& b);

private:
    const RingCtx* ring_;
    int components_;
    Terms terms_;
};

struct DegreeData {
    int max_exp2;   // doubled
    int min_exp2;   // doubled
    int breadth;    // max - min, always an integer
    CycloNum top_coeff;
};

DegreeData degree_data(const AdoPoly& f);
bool is_symmetric(const AdoPoly& f);
// Coefficients in Z[q^2] after the change of variable t = q^-2 x.
bool all_coefficients_in_Zq2(const AdoPoly& f);

// A^e -> q^{-e} x^{e/2}.
AdoPoly to_x(const ScaledLaurent& v, int p, int components);

// Coefficient in the style of the reference tables: a+bi for p = 2, 4,
// otherwise a polynomial in q.
std::string format_coeff(const CycloNum& c);
// Nonnegative powers only, e.g. "7+6x+3x^2+x^3".
std::string pretty_positive(const AdoPoly& f);
// Every term, lowest power first.
std::string pretty_full(const AdoPoly& f);

}  // namespace ado
