#pragma once

// Necessary conditions for fibredness read off the top of N_p, and the
// predicted top terms for plumbings, homogeneous braids and fibred strongly
// quasipositive links.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ado/catalog.hpp"

namespace ado {

// (2g + s - 1)(p - 1): the breadth of N_p when the link is fibred.
int genus_bound(int g, int s, int p);

// (-q)^k
CycloNum minus_q_pow(const RingCtx& ring, long k);

struct TopData {
    int max_exp2 = 0;  // doubled
    int breadth = 0;
    CycloNum top_coeff;
    // k in [0, order of -q) with top_coeff = (-q)^k. The order is 2p for even
    // p and p for odd p.
    std::optional<int> unit_exponent;
};

TopData top_data(const AdoPoly& f);

struct FibredVerdict {
    enum class Kind { NotFibred, ConsistentWithFibred, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::string reason;
    std::optional<long> hopf_residue;
    long modulus = 0;
};

FibredVerdict fibred_obstruction(const AdoResult& res, int g, int s);

struct Residue {
    long value = 0;
    long modulus = 1;
};

// Chinese remaindering of (modulus, value) pairs; moduli need not be coprime.
// Throws InconsistentResidues when no common solution exists.
Residue combine_residues(const std::vector<std::pair<long, long>>& entries);

struct PlumbingSpec {
    int n_plus = 0, n_minus = 0, m_plus = 0, m_minus = 0;
    int betti() const { return n_plus + n_minus - m_plus - m_minus; }
    int hopf() const { return n_minus - m_minus; }
};

struct Prediction {
    CycloNum top_coeff;
    int breadth = 0;
    int max_exp2 = 0;  // doubled; breadth is symmetric about zero
};

Prediction plumbing_predict(const CycloNum& base_coeff, int base_breadth, const PlumbingSpec& spec, int p);
// Throws NotHomogeneous on mixed signs or a missing generator.
Prediction homogeneous_predict(const BraidWord& b, int p);
Prediction sqp_predict(int g, int s, int p);

const char* to_string(FibredVerdict::Kind k);
json verdict_to_json(const std::string& knot, int p, const FibredVerdict& v);
FibredVerdict verdict_from_json(const json& j);

}  // namespace ado
