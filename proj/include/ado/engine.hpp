#pragma once

// Reshetikhin-Turaev evaluation of braid closures with every strand coloured
// by V_lambda. The first strand is left open; the remaining ones are closed
// with the pivotal weight.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ado/ado_poly.hpp"
#include "ado/braid.hpp"
#include "ado/fast_ring.hpp"

namespace ado {

// Operator on V^{(x)n}, block diagonal in the total index sum. States are
// encoded base p with strand 1 as the most significant digit.
struct GradedOp {
    struct Block {
        std::vector<int> states;
        // cols[j] lists (row position, entry) with nonzero entries only.
        std::vector<std::vector<std::pair<int, IntLaurent>>> cols;
    };

    int p = 2;
    int n = 1;
    int lam2 = 0;
    std::map<int, Block> blocks;
};

GradedOp eval_braid(int p, const BraidWord& b);

// Partial quantum trace over strands 2..n, strand by strand from the right.
// Closed strands carry K^{1-p}, or K^{p-1} when alt_pivot is set. Throws
// NonScalarResult unless the remaining p x p matrix is scalar.
ScaledLaurent close_and_cut(const GradedOp& op, bool alt_pivot = false);

// Same value as close_and_cut(eval_braid(p, b)) without storing the operator:
// each basis column is pushed through the word and traced on the fly.
ScaledLaurent closure_trace(int p, const BraidWord& b, bool alt_pivot = false, int workers = 0);

struct Calibration {
    int p = 2;
    int kappa2 = 1;           // doubled lambda^2 exponent removed per unit of writhe
    bool alt_pivot = false;   // closing weight K^{p-1} instead of K^{1-p}
    int c_norm = 1;           // framing factor A^{c_norm (p-1) w}
    int e_norm = 0;           // framing factor q^{e_norm w}
    int sigma_sq_hopf = 0;    // sign s with closure(sigma_1^2) = H_s
    bool trefoil_conjugated = false;  // sigma_1^3 gives the conjugate of the printed 3_1 row

    std::string describe() const;
};

struct CalibrationReport {
    Calibration chosen;
    std::vector<std::pair<std::string, std::string>> tried;  // candidate, outcome
};

// Cached per p. Throws CalibrationFailure when no candidate passes the gates.
const CalibrationReport& calibrate(int p);

AdoPoly normalize(const Calibration& cal, const ScaledLaurent& alpha, int writhe, int components);

struct AdoChecks {
    bool symmetric = false;
    bool integral = false;
    bool scalar_matrix = false;
    bool all() const { return symmetric && integral && scalar_matrix; }
};

struct AdoResult {
    AdoPoly poly;
    int p;
    BraidWord braid;
    int writhe;
    int components;
    AdoChecks checks;
};

AdoResult compute_ado(int p, const BraidWord& b, int workers = 0);
// Also validates the record's declared component count (RecordInvalid).
AdoResult compute_ado(int p, const KnotRecord& rec, int workers = 0);

// Closed forms of the positive (+1) and negative (-1) Hopf links.
AdoPoly hopf_closed_form(int p, int sign);

// Worker count from ADO_WORKERS, defaulting to the hardware concurrency.
int default_workers();

}  // namespace ado
