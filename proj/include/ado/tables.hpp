#pragma once

// Reference values: N_4 of the knots up to seven crossings and the
// top terms of N_3, N_4 for the non-fibred 12-crossing knots with monic
// Alexander polynomial of maximal degree.

#include <string>
#include <utility>
#include <vector>

#include "ado/ado_poly.hpp"

namespace ado {

struct Table1Row {
    std::string name;
    bool fibred;
    std::vector<std::pair<long, long>> positive;  // a+bi coefficient of x^k, k = 0, 1, ...
};

struct Table2Row {
    std::string name;
    int genus;
    std::vector<long> top_p3;  // coefficient as a polynomial in q at p = 3
    std::vector<long> top_p4;  // same at p = 4
};

const std::vector<Table1Row>& table1();
const std::vector<Table2Row>& table2();

CycloNum gaussian(const RingCtx& ring, long re, long im);
CycloNum q_polynomial(const RingCtx& ring, const std::vector<long>& coeffs);

// The full symmetric N_4 of a Table 1 row.
AdoPoly table1_poly(const Table1Row& row);

// Complex conjugation zeta -> zeta^{-1}.
CycloNum conjugate(const CycloNum& x);
AdoPoly conjugate(const AdoPoly& f);

}  // namespace ado
