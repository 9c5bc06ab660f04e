#include "ado/fibred.hpp"

#include <cstdlib>
#include <numeric>

namespace ado {

int genus_bound(int g, int s, int p) {
    if (g < 0 || s < 1 || p < 2) throw Error(ErrorKind::InvalidArgument, "genus bound needs g >= 0, s >= 1, p >= 2");
    return (2 * g + s - 1) * (p - 1);
}

CycloNum minus_q_pow(const RingCtx& ring, long k) {
    // -q = zeta^{2 + 2p}
    return zeta_pow(ring, k * (2 + 2L * ring.p()));
}

static int minus_q_order(int p) { return p % 2 == 0 ? 2 * p : p; }

TopData top_data(const AdoPoly& f) {
    const DegreeData d = degree_data(f);
    TopData t{d.max_exp2, d.breadth, d.top_coeff, std::nullopt};
    for (int k = 0; k < minus_q_order(f.p()); ++k)
        if (minus_q_pow(f.ring(), k) == d.top_coeff) {
            t.unit_exponent = k;
            break;
        }
    return t;
}

static long mod(long a, long m) { return ((a % m) + m) % m; }

FibredVerdict fibred_obstruction(const AdoResult& res, int g, int s) {
    const int p = res.p;
    const int bound = genus_bound(g, s, p);
    const TopData t = top_data(res.poly);
    FibredVerdict v;
    if (t.breadth > bound) {
        v.kind = FibredVerdict::Kind::Inconclusive;
        v.reason = "breadth " + std::to_string(t.breadth) + " exceeds the genus bound " + std::to_string(bound) +
                   "; genus metadata is inconsistent";
        return v;
    }
    if (t.breadth < bound) {
        v.kind = FibredVerdict::Kind::NotFibred;
        v.reason = "breadth " + std::to_string(t.breadth) + " below " + std::to_string(bound);
        return v;
    }
    if (!t.unit_exponent) {
        v.kind = FibredVerdict::Kind::NotFibred;
        v.reason = "top coefficient " + format_coeff(t.top_coeff) + " is not a power of -q";
        return v;
    }
    const int e = 2 * g + s - 1;
    int k = *t.unit_exponent;
    // For odd p, -q has order p and k is only known mod p; pick the lift
    // with the parity the congruence needs.
    if (p % 2 == 1 && (k - e) % 2 != 0) k += p;
    if ((k - e) % 2 != 0) {
        v.kind = FibredVerdict::Kind::NotFibred;
        v.reason = "top coefficient (-q)^" + std::to_string(k) + " has the wrong parity for 2g+s-1 = " + std::to_string(e);
        return v;
    }
    v.kind = FibredVerdict::Kind::ConsistentWithFibred;
    v.modulus = p;
    v.hopf_residue = mod((e - k) / 2, p);
    v.reason = "maximal breadth and unit top coefficient (-q)^" + std::to_string(k);
    return v;
}

Residue combine_residues(const std::vector<std::pair<long, long>>& entries) {
    if (entries.empty()) throw Error(ErrorKind::InvalidArgument, "no residues to combine");
    Residue r{0, 1};
    for (const auto& [m, a] : entries) {
        if (m < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
        // Solve x = r.value (mod r.modulus), x = a (mod m).
        const long g = std::gcd(r.modulus, m);
        const long diff = a - r.value;
        if (mod(diff, g) != 0)
            throw Error(ErrorKind::InconsistentResidues, std::to_string(a) + " mod " + std::to_string(m) +
                                                             " contradicts " + std::to_string(r.value) + " mod " +
                                                             std::to_string(r.modulus));
        const long m1 = r.modulus / g, m2 = m / g;
        // inverse of m1 modulo m2
        long t = 0, nt = 1, rr = m2, nr = mod(m1, m2);
        while (nr != 0) {
            const long qd = rr / nr;
            t -= qd * nt;
            std::swap(t, nt);
            rr -= qd * nr;
            std::swap(rr, nr);
        }
        const long inv = m2 == 1 ? 0 : mod(t, m2);
        const long l = r.modulus * m2;
        r.value = mod(r.value + r.modulus * mod((diff / g) * inv, m2), l);
        r.modulus = l;
    }
    return r;
}

Prediction plumbing_predict(const CycloNum& base_coeff, int base_breadth, const PlumbingSpec& spec, int p) {
    const int breadth = base_breadth + spec.betti() * (p - 1);
    return {minus_q_pow(RingCtx::get(p), spec.n_plus - spec.n_minus - spec.m_plus + spec.m_minus) * base_coeff, breadth,
            breadth};
}

Prediction homogeneous_predict(const BraidWord& b, int p) {
    std::vector<int> sign(static_cast<size_t>(b.strands), 0);
    for (int l : b.letters) {
        int& s = sign[static_cast<size_t>(std::abs(l))];
        const int ls = l > 0 ? 1 : -1;
        if (s != 0 && s != ls)
            throw Error(ErrorKind::NotHomogeneous, "generator " + std::to_string(std::abs(l)) + " appears with both signs");
        s = ls;
    }
    int kp = 0, km = 0;
    for (int i = 1; i < b.strands; ++i) {
        if (sign[static_cast<size_t>(i)] == 0)
            throw Error(ErrorKind::NotHomogeneous, "generator " + std::to_string(i) + " does not appear");
        (sign[static_cast<size_t>(i)] > 0 ? kp : km)++;
    }
    const int breadth = (static_cast<int>(b.letters.size()) - (b.strands - 1)) * (p - 1);
    return {minus_q_pow(RingCtx::get(p), b.writhe() - kp + km), breadth, breadth};
}

Prediction sqp_predict(int g, int s, int p) {
    const int breadth = genus_bound(g, s, p);
    return {minus_q_pow(RingCtx::get(p), 2 * g + s - 1), breadth, breadth};
}

const char* to_string(FibredVerdict::Kind k) {
    switch (k) {
    case FibredVerdict::Kind::NotFibred: return "not_fibred";
    case FibredVerdict::Kind::ConsistentWithFibred: return "consistent";
    case FibredVerdict::Kind::Inconclusive: return "inconclusive";
    }
    return "?";
}

json verdict_to_json(const std::string& knot, int p, const FibredVerdict& v) {
    json j{{"knot", knot}, {"p", p}, {"verdict", to_string(v.kind)}, {"reason", v.reason}};
    if (v.hopf_residue) j["hopf_residue"] = {{"mod", v.modulus}, {"value", *v.hopf_residue}};
    return j;
}

FibredVerdict verdict_from_json(const json& j) {
    FibredVerdict v;
    try {
        const std::string k = j.at("verdict").get<std::string>();
        if (k == "not_fibred") v.kind = FibredVerdict::Kind::NotFibred;
        else if (k == "consistent") v.kind = FibredVerdict::Kind::ConsistentWithFibred;
        else if (k == "inconclusive") v.kind = FibredVerdict::Kind::Inconclusive;
        else throw Error(ErrorKind::ParseError, "unknown verdict " + k);
        v.reason = j.value("reason", std::string());
        if (j.contains("hopf_residue")) {
            v.modulus = j["hopf_residue"].at("mod").get<long>();
            v.hopf_residue = j["hopf_residue"].at("value").get<long>();
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return v;
}

}  // namespace ado
