#include "ado/ado_poly.hpp"

#include <cstdlib>
#include <sstream>

namespace ado {

AdoPoly::AdoPoly(const RingCtx& ring, int components) : ring_(&ring), components_(components) {
    if (components < 1) throw Error(ErrorKind::InvalidArgument, "component count must be >= 1");
}

void AdoPoly::add_term(int exp2, const CycloNum& c) {
    if (c.is_zero()) return;
    if (((exp2 - exponent_parity()) & 1) != 0)
        throw Error(ErrorKind::ParityError, "exponent " + std::to_string(exp2) + "/2 outside the support lattice");
    auto it = terms_.find(exp2);
    if (it == terms_.end()) {
        terms_.emplace(exp2, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

CycloNum AdoPoly::coeff(int exp2) const {
    auto it = terms_.find(exp2);
    return it == terms_.end() ? CycloNum(*ring_) : it->second;
}

bool operator==(const AdoPoly& a, const AdoPoly& b) {
    if (a.ring_ != b.ring_ || a.components_ != b.components_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
        if (ib->first != e || ib->second != c) return false;
        ++ib;
    }
    return true;
}

AdoPoly operator*(const AdoPoly& a, const AdoPoly& b) {
    // Components add minus one for a connected sum; the product only needs
    // a consistent parity lattice, which the sum of parities provides.
    const int comps = a.components_ + b.components_ - 1;
    AdoPoly r(*a.ring_, comps);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

DegreeData degree_data(const AdoPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
    const int hi = f.terms().rbegin()->first;
    const int lo = f.terms().begin()->first;
    return DegreeData{hi, lo, (hi - lo) / 2, f.terms().rbegin()->second};
}

bool is_symmetric(const AdoPoly& f) {
    for (const auto& [e, c] : f.terms())
        if (f.coeff(-e) != c) return false;
    return true;
}

bool all_coefficients_in_Zq2(const AdoPoly& f) {
    // Tested in t = q^-2 x, where c x^{e/2} becomes c q^e t^{e/2}.
    for (const auto& [e, c] : f.terms())
        if (!in_Zq2(c * q_pow(f.ring(), e))) return false;
    return true;
}

AdoPoly to_x(const ScaledLaurent& v, int p, int components) {
    if (!v.is_pure())
        throw Error(ErrorKind::NonPureScale, "lambda^2 exponent " + std::to_string(v.lam2) + "/2 did not cancel");
    const RingCtx& ring = RingCtx::get(p);
    AdoPoly r(ring, components);
    for (const auto& [e, c] : v.body.terms()) {
        if (((e - r.exponent_parity()) & 1) != 0)
            throw Error(ErrorKind::ParityError, "A-exponent " + std::to_string(e) + " has the wrong parity for " +
                                                    std::to_string(components) + " component(s)");
        r.add_term(e, c * q_pow(ring, -e));
    }
    return r;
}

namespace {

// Coordinates in the basis 1, q, q^2, ... when c lies in Q(q).
bool q_coordinates(const CycloNum& c, std::vector<mpq_class>& out) {
    const auto& z = c.coords();
    out.clear();
    for (size_t k = 0; k < z.size(); ++k) {
        if (k % 2 == 1) {
            if (sgn(z[k]) != 0) return false;
        } else {
            out.push_back(z[k]);
        }
    }
    while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
    return true;
}

std::string rat(const mpq_class& v) { return v.get_str(); }

std::string join_terms(const std::vector<std::pair<mpq_class, std::string>>& parts) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, sym] : parts) {
        if (sgn(v) == 0) continue;
        const bool neg = sgn(v) < 0;
        const mpq_class mag = neg ? mpq_class(-v) : v;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? "-" : "+");
        first = false;
        if (sym.empty()) os << rat(mag);
        else if (mag == 1) os << sym;
        else os << rat(mag) << sym;
    }
    return first ? "0" : os.str();
}

}  // namespace

std::string format_coeff(const CycloNum& c) {
    const int p = c.ring().p();
    std::vector<mpq_class> qc;
    if (!q_coordinates(c, qc)) {
        std::vector<std::pair<mpq_class, std::string>> parts;
        for (size_t k = 0; k < c.coords().size(); ++k)
            parts.emplace_back(c.coords()[k], k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k)));
        return join_terms(parts);
    }
    if (p == 2 || p == 4) {
        // Q(q) = Q(i); i = q for p = 2 and i = q^2 for p = 4.
        mpq_class re, im;
        if (p == 2) {
            re = qc.size() > 0 ? qc[0] : 0;
            im = qc.size() > 1 ? qc[1] : 0;
        } else {
            // basis 1, q, q^2, q^3 with q^2 = i; anything using odd q powers is not Gaussian
            if ((qc.size() > 1 && sgn(qc[1]) != 0) || (qc.size() > 3 && sgn(qc[3]) != 0)) {
                std::vector<std::pair<mpq_class, std::string>> parts;
                for (size_t k = 0; k < qc.size(); ++k)
                    parts.emplace_back(qc[k], k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k)));
                return join_terms(parts);
            }
            re = qc.size() > 0 ? qc[0] : 0;
            im = qc.size() > 2 ? qc[2] : 0;
        }
        return join_terms({{re, ""}, {im, "i"}});
    }
    std::vector<std::pair<mpq_class, std::string>> parts;
    for (size_t k = 0; k < qc.size(); ++k) parts.emplace_back(qc[k], k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k)));
    return join_terms(parts);
}

namespace {

std::string x_power(int exp2) {
    if (exp2 == 0) return "";
    if (exp2 == 2) return "x";
    if (exp2 % 2 == 0) return "x^" + std::to_string(exp2 / 2);
    return "x^(" + std::to_string(exp2) + "/2)";
}

bool is_compound(const std::string& s) {
    // more than one summand after the leading sign
    return s.find_first_of("+-", 1) != std::string::npos;
}

std::string render(const AdoPoly& f, bool positive_only) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (positive_only && e < 0) continue;
        std::string cs = format_coeff(c);
        const std::string xp = x_power(e);
        std::string body;
        bool neg = false;
        if (is_compound(cs)) {
            body = "(" + cs + ")";
        } else {
            if (cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            body = (cs == "1" && !xp.empty()) ? "" : cs;
        }
        if (first) os << (neg ? "-" : "");
        else os << (neg ? "-" : "+");
        first = false;
        os << body << xp;
    }
    return first ? "0" : os.str();
}

}  // namespace

std::string pretty_positive(const AdoPoly& f) { return render(f, true); }
std::string pretty_full(const AdoPoly& f) { return render(f, false); }

}  // namespace ado
