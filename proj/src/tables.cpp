#include "ado/tables.hpp"

namespace ado {

const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = {
        {"3_1", true, {{1, 2}, {1, 1}, {0, 1}, {0, 1}}},
        {"4_1", true, {{7, 0}, {6, 0}, {3, 0}, {1, 0}}},
        {"5_1", true, {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 1}, {-1, 0}, {-1, 0}}},
        {"5_2", false, {{-5, 10}, {-4, 8}, {-3, 5}, {-2, 2}}},
        {"6_1", false, {{7, 10}, {4, 8}, {3, 5}, {2, 2}}},
        {"6_2", true, {{19, 2}, {17, 3}, {11, 6}, {6, 8}, {2, 6}, {0, 3}, {0, 1}}},
        {"6_3", true, {{41, 0}, {36, 0}, {25, 0}, {14, 0}, {6, 0}, {3, 0}, {1, 0}}},
        {"7_1", true, {{1, -2}, {0, -2}, {0, -1}, {0, 0}, {-1, 0}, {-1, 0}, {-1, -1}, {-1, -1}, {0, -1}, {0, -1}}},
        {"7_2", false, {{-5, 4}, {-4, 2}, {-3, 2}, {-1, 2}}},
        {"7_3", false, {{-5, 16}, {-7, 15}, {-10, 9}, {-11, 2}, {-9, -1}, {-5, -3}, {-2, -2}}},
        {"7_4", false, {{-35, 0}, {-28, 0}, {-18, 0}, {-8, 0}}},
        {"7_5", false, {{-37, 34}, {-36, 30}, {-34, 18}, {-28, 6}, {-17, -1}, {-8, -4}, {-2, -2}}},
        {"7_6", true, {{59, 54}, {50, 50}, {32, 41}, {15, 29}, {3, 15}, {0, 5}, {0, 1}}},
        {"7_7", true, {{101, -64}, {91, -55}, {64, -35}, {35, -15}, {15, -3}, {5, 0}, {1, 0}}},
    };
    return rows;
}

// At p = 3: q^4 = -1/2 - i sqrt3/2, 2q = 1 + i sqrt3, -2+i sqrt3 = 2q - 3.
// At p = 4: a + bi = a + b q^2.
const std::vector<Table2Row>& table2() {
    static const std::vector<Table2Row> rows = {
        {"12n57", 2, {1}, {1}},
        {"12n210", 3, {-2}, {-1, 0, -4}},
        {"12n214", 3, {-2}, {-1, 0, -4}},
        {"12n258", 2, {0, 0, 0, 0, 1}, {-2, 0, 1}},
        {"12n279", 2, {0, 0, 0, 0, 1}, {1, 0, -2}},
        {"12n382", 2, {0, 2}, {2, 0, 1}},
        {"12n394", 2, {0, 2}, {1, 0, 2}},
        {"12n464", 2, {1}, {2, 0, 1}},
        {"12n483", 2, {0, 0, 0, 0, 1}, {-2, 0, 1}},
        {"12n535", 2, {0, 0, -2}, {2, 0, -1}},
        {"12n650", 2, {0, 0, 0, 0, 1}, {1, 0, -2}},
        {"12n801", 2, {-3, 2}, {0, 0, 3}},
        {"12n815", 2, {0, 0, 0, 0, 1}, {-2, 0, 1}},
    };
    return rows;
}

CycloNum gaussian(const RingCtx& ring, long re, long im) {
    // i = zeta^p
    return CycloNum(ring, re) + zeta_pow(ring, ring.p()) * CycloNum(ring, im);
}

CycloNum q_polynomial(const RingCtx& ring, const std::vector<long>& coeffs) {
    CycloNum r(ring);
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) r += q_pow(ring, static_cast<long>(k)) * CycloNum(ring, coeffs[k]);
    return r;
}

AdoPoly table1_poly(const Table1Row& row) {
    const RingCtx& ring = RingCtx::get(4);
    AdoPoly f(ring, 1);
    for (size_t k = 0; k < row.positive.size(); ++k) {
        const CycloNum c = gaussian(ring, row.positive[k].first, row.positive[k].second);
        const int e2 = 2 * static_cast<int>(k);
        f.add_term(e2, c);
        if (k != 0) f.add_term(-e2, c);
    }
    return f;
}

CycloNum conjugate(const CycloNum& x) {
    const RingCtx& ring = x.ring();
    CycloNum r(ring);
    for (int k = 0; k < ring.dim(); ++k) {
        const mpq_class& v = x.coords()[static_cast<size_t>(k)];
        if (v != 0) r += zeta_pow(ring, -k) * v;
    }
    return r;
}

AdoPoly conjugate(const AdoPoly& f) {
    AdoPoly r(f.ring(), f.components());
    for (const auto& [e, c] : f.terms()) r.add_term(e, conjugate(c));
    return r;
}

}  // namespace ado
