#include <gtest/gtest.h>

#include <random>

#include "ado/ado_poly.hpp"
#include "ado/quantum_algebra.hpp"

using namespace ado;

namespace {

void expect_all(const CheckReport& r) { EXPECT_TRUE(r.all_pass()) << r.summary(); }

std::vector<long> random_lambdas(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> d(-40, 40);
    std::vector<long> out;
    for (int i = 0; i < count; ++i) out.push_back(d(rng));
    return out;
}

}  // namespace

TEST(QuantumAlgebra, RelationsOnVDualAndY) {
    for (int p = 2; p <= 6; ++p) expect_all(check_relations(verma(p)));
}

TEST(QuantumAlgebra, CommutatorAtRandomWeights) {
    // [E, F] = (K - K^-1)/(q - q^-1) after substituting lambda
    for (int p = 2; p <= 5; ++p) {
        const VermaData vd = verma(p);
        const RingCtx& ring = *vd.ring;
        const CycloNum inv = (q_pow(ring, 1) - q_pow(ring, -1)).inverse();
        for (long lam : random_lambdas(20, static_cast<unsigned>(p))) {
            for (const ModuleAction* m : {&vd.V, &vd.Vdual}) {
                const CMatrix e = evaluate(m->E, lam), f = evaluate(m->F, lam);
                const CMatrix k = evaluate(m->K, lam), ki = evaluate(m->Kinv, lam);
                EXPECT_EQ(e * f - f * e, (k - ki).scaled(inv)) << "p=" << p << " lambda=" << lam;
            }
        }
    }
}

TEST(QuantumAlgebra, NaturalityOfTheBraiding) {
    for (int p = 2; p <= 5; ++p) expect_all(check_naturality(p));
}

TEST(QuantumAlgebra, BraidingInverse) {
    for (int p = 2; p <= 5; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        const PairOp& c = braiding_vv(p);
        const PairOp& ci = braiding_vv_inv(p);
        EXPECT_EQ(c.m * ci.m, identity_matrix(ring, p * p));
        EXPECT_EQ(ci.m * c.m, identity_matrix(ring, p * p));
        EXPECT_EQ(c.lam2 + ci.lam2, 0);
    }
}

TEST(QuantumAlgebra, YangBaxterSymbolic) {
    for (int p = 2; p <= 4; ++p) expect_all(check_yang_baxter(p));
}

TEST(QuantumAlgebra, YangBaxterSampled) {
    for (int p = 5; p <= 6; ++p) expect_all(check_yang_baxter(p, random_lambdas(50, 100u + static_cast<unsigned>(p))));
}

TEST(QuantumAlgebra, BraidingCoefficients) {
    for (int p = 2; p <= 5; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        EXPECT_TRUE(braiding_coefficient(ring, 0).is_one());
        EXPECT_EQ(braiding_coefficient(ring, 1), q_pow(ring, 1) - q_pow(ring, -1));
    }
}

TEST(QuantumAlgebra, TwistIsScalar) {
    for (int p = 2; p <= 6; ++p) {
        const ScaledLaurent tp = twist_scalar(p, +1);
        const ScaledLaurent tm = twist_scalar(p, -1);
        EXPECT_EQ(tp.lam2, 1) << "p=" << p;
        EXPECT_EQ(tm.lam2, -1);
        EXPECT_TRUE(tp.body.is_monomial());
        EXPECT_EQ(tp * tm, ScaledLaurent(LaurentA::one(RingCtx::get(p))));
        EXPECT_EQ(tp.body.min_exp(), 1 - p);
    }
}

TEST(QuantumAlgebra, AlternatePivotIsNotScalar) {
    for (int p = 3; p <= 4; ++p) {
        try {
            (void)twist_scalar(p, +1, true);
            FAIL() << "expected NonScalarTwist at p=" << p;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NonScalarTwist);
        }
    }
}

TEST(QuantumAlgebra, EvaluationsZigZag) {
    for (int p = 2; p <= 5; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        const Evaluations ev = evaluations(p);
        const LMatrix id = identity_matrix(ring, p);
        // (id_V (x) ev_L)(coev_L (x) id_V) = id_V
        EXPECT_EQ(kron(id, ev.ev_left) * kron(ev.coev_left, id), id);
        // (ev_R (x) id_V)(id_V (x) coev_R) = id_V
        EXPECT_EQ(kron(ev.ev_right, id) * kron(id, ev.coev_right), id);
    }
}

TEST(QuantumAlgebra, HopfClosedFormsAreNegativeQSums) {
    for (int p = 2; p <= 5; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        const AdoPoly hp = to_x(ScaledLaurent(hopf_in_A(p, +1)), p, 2);
        const AdoPoly hm = to_x(ScaledLaurent(hopf_in_A(p, -1)), p, 2);
        AdoPoly wp(ring, 2), wm(ring, 2);
        for (int i = 0; i < p; ++i) {
            wp.add_term(p - 1 - 2 * i, -q_pow(ring, 1));
            wm.add_term(p - 1 - 2 * i, -q_pow(ring, -1));
        }
        EXPECT_EQ(hp, wp) << "p=" << p;
        EXPECT_EQ(hm, wm) << "p=" << p;
    }
}

TEST(QuantumAlgebra, LemmaSuite) {
    for (int p = 2; p <= 6; ++p) expect_all(lemma_suite(p));
}

TEST(QuantumAlgebra, TopDecomposition) {
    for (int p = 2; p <= 4; ++p) expect_all(top_decomposition_check(p));
}

TEST(QuantumAlgebra, GradedInverseRejectsSingularInput) {
    const RingCtx& ring = RingCtx::get(2);
    EXPECT_THROW((void)invert_graded_pair(zero_matrix(ring, 4, 4), 2), Error);
}
