#pragma once

#include <string>
#include <vector>

#include "ado/catalog.hpp"

namespace ado {

struct RegressLine {
    std::string knot;
    int p = 0;
    bool match = false;
    std::string expected;
    std::string got;
    double seconds = 0;
};

// Table 1: full N_4. Table 2: top terms at each p in ps (3 and/or 4). An empty
// subset means every row. Jobs run on `workers` threads; the result is sorted
// by knot name, then p.
std::vector<RegressLine> regress_table1(const std::vector<KnotRecord>& cat, const std::vector<std::string>& subset,
                                        int workers = 0);
std::vector<RegressLine> regress_table2(const std::vector<KnotRecord>& cat, const std::vector<std::string>& subset,
                                        const std::vector<int>& ps = {3, 4}, int workers = 0);

// "c x^k" in the style of the reference tables.
std::string format_top_term(const CycloNum& c, int exp2);

}  // namespace ado
