#pragma once

// Verma modules over unrolled quantum sl2 at q = exp(i pi / p), with symbolic
// highest weight lambda entering only through A = q^lambda. Weight functions
// are affine in lambda; H itself is never materialised.

#include <string>
#include <utility>
#include <vector>

#include "ado/laurent.hpp"
#include "ado/matrix.hpp"

namespace ado {

using LMatrix = Matrix<LaurentA>;
using CMatrix = Matrix<CycloNum>;

LMatrix zero_matrix(const RingCtx& ring, int rows, int cols);
LMatrix identity_matrix(const RingCtx& ring, int n);
CMatrix evaluate(const LMatrix& m, long lambda);

// Action of E, F, K, K^{-1} on a weight module in its standard basis.
struct ModuleAction {
    LMatrix E, F, K, Kinv;
};

// Coproduct action on X1 (x) X2; the left factor is the most significant index.
ModuleAction tensor_action(const ModuleAction& x1, const ModuleAction& x2);

struct VermaData {
    int p;
    const RingCtx* ring;
    ModuleAction V;     // basis v_0..v_{p-1}, weight lambda - 2i
    ModuleAction Vdual; // dual basis v'_0..v'_{p-1}, weight -lambda + 2i
};

VermaData verma(int p);

struct CheckReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_pass() const;
    std::string summary() const;
};

// Algebra relations on V, V* and Y = V* (x) V.
CheckReport check_relations(const VermaData& vd);

// An operator on an ordered pair of V_lambda strands together with the
// doubled exponent of q^{lambda^2} it contributes.
struct PairOp {
    LMatrix m;
    int lam2;
};

// c_m = (q - q^-1)^m / [m]! * q^{m(m-1)/2}
CycloNum braiding_coefficient(const RingCtx& ring, int m);

const PairOp& braiding_vv(int p);
const PairOp& braiding_vv_inv(int p);

// Exact inverse of an operator on V (x) V that is block diagonal in the index
// sum; every block must reduce with unit (monomial) pivots.
LMatrix invert_graded_pair(const LMatrix& m, int p);

struct Evaluations {
    LMatrix ev_left;     // V* (x) V -> 1, v' (x) v -> v'(v)
    LMatrix coev_left;   // 1 -> V (x) V*, sum v_i (x) v'_i
    LMatrix ev_right;    // V (x) V* -> 1, v (x) v' -> v'(K^{1-p} v)
    LMatrix coev_right;  // 1 -> V* (x) V, sum v'_i (x) K^{p-1} v_i
};

Evaluations evaluations(int p);

// Diagonal matrix of K^{e} on V_lambda.
LMatrix k_power(int p, int e);

// j_V(v''_i) = q^{(p-1)(lambda - 2i)} v_i
LMatrix pivotal_j(int p);

// Scalar of a single kink closed on the right. The closing evaluation uses
// K^{1-p}, or K^{p-1} when alt_pivot is set. sign = +1 uses the positive
// crossing, -1 its inverse. Throws NonScalarTwist.
ScaledLaurent twist_scalar(int p, int sign = +1, bool alt_pivot = false);

// c o Delta(X) = Delta(X) o c on V (x) V for X = E, F, K.
CheckReport check_naturality(int p);

// Yang-Baxter on V^{(x)3}: symbolic when lambda_samples is empty, otherwise
// at the given integer lambda values.
CheckReport check_yang_baxter(int p, const std::vector<long>& lambda_samples = {});

struct Ribbon {
    LMatrix theta;
    LMatrix theta_inv;
};

// Ribbon element of the small quantum group (with k^2 = K) acting on V* (x) V.
Ribbon ribbon_on_Y(int p);

// Closed forms N_p(H_+, lambda) and N_p(H_-, lambda) as Laurent polynomials in A.
LaurentA hopf_in_A(int p, int sign);

CheckReport lemma_suite(int p);

// theta_Y - N_p(H_-) coev_R ev_L and theta_Y^{-1} - N_p(H_+) coev_R ev_L must
// have entries that are polynomials in A^2 of degree < p - 1.
CheckReport top_decomposition_check(int p);

}  // namespace ado
