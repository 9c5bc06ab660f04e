#include "ado/laurent.hpp"

#include <sstream>

namespace ado {

LaurentA::LaurentA(const CycloNum& c) : ring_(&c.ring()) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentA LaurentA::monomial(const CycloNum& c, int exponent) {
    LaurentA r(c.ring());
    if (!c.is_zero()) r.terms_.emplace(exponent, c);
    return r;
}

LaurentA LaurentA::bracket_shift(const RingCtx& ring, int c) {
    const CycloNum den = (q_pow(ring, 1) - q_pow(ring, -1)).inverse();
    LaurentA r(ring);
    r.add_term(1, q_pow(ring, -c) * den);
    r.add_term(-1, -(q_pow(ring, c) * den));
    return r;
}

int LaurentA::min_exp() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "min_exp of zero Laurent polynomial");
    return terms_.begin()->first;
}

int LaurentA::max_exp() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "max_exp of zero Laurent polynomial");
    return terms_.rbegin()->first;
}

CycloNum LaurentA::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycloNum(*ring_) : it->second;
}

void LaurentA::add_term(int e, const CycloNum& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentA LaurentA::operator-() const {
    LaurentA r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentA& LaurentA::operator+=(const LaurentA& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentA& LaurentA::operator-=(const LaurentA& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentA& LaurentA::operator*=(const CycloNum& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

LaurentA operator*(const LaurentA& a, const LaurentA& b) {
    LaurentA r(*a.ring_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

bool operator==(const LaurentA& a, const LaurentA& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

LaurentA LaurentA::shifted(int e) const {
    LaurentA r(*ring_);
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k + e, c);
    return r;
}

LaurentA LaurentA::monomial_inverse() const {
    if (!is_monomial()) throw Error(ErrorKind::InversionFailure, "Laurent polynomial is not a unit: " + to_string());
    const auto& [e, c] = *terms_.begin();
    return monomial(c.inverse(), -e);
}

LaurentA LaurentA::pow(int e) const {
    if (e < 0) return monomial_inverse().pow(-e);
    LaurentA r = one(*ring_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

CycloNum LaurentA::eval_at_integer_lambda(long n) const {
    CycloNum r(*ring_);
    for (const auto& [e, c] : terms_) r += c * q_pow(*ring_, n * e);
    return r;
}

std::string LaurentA::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (e != 0) os << "*A^" << e;
    }
    return os.str();
}

}  // namespace ado
