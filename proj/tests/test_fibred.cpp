#include <gtest/gtest.h>

#include <numeric>

#include "ado/fibred.hpp"

using namespace ado;

TEST(Residues, CoprimeModuli) {
    const Residue r = combine_residues({{3, 0}, {4, 1}});
    EXPECT_EQ(r.value, 9);
    EXPECT_EQ(r.modulus, 12);
    const Residue s = combine_residues({{3, 1}, {4, 1}});
    EXPECT_EQ(s.value, 1);
    EXPECT_EQ(s.modulus, 12);
}

TEST(Residues, SharedFactor) {
    const Residue r = combine_residues({{4, 2}, {6, 4}});
    EXPECT_EQ(r.modulus, 12);
    EXPECT_EQ(r.value, 10);
    const Residue single = combine_residues({{5, 7}});
    EXPECT_EQ(single.value, 2);
}

TEST(Residues, Inconsistent) {
    try {
        (void)combine_residues({{4, 1}, {6, 2}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InconsistentResidues);
    }
    EXPECT_THROW((void)combine_residues({}), Error);
}

TEST(Residues, BruteForceAgreement) {
    for (long m1 = 1; m1 <= 8; ++m1)
        for (long m2 = 1; m2 <= 8; ++m2)
            for (long a = 0; a < m1; ++a)
                for (long b = 0; b < m2; ++b) {
                    long found = -1, lcm = m1 * m2;
                    for (long x = 0; x < lcm; ++x)
                        if (x % m1 == a && x % m2 == b) {
                            found = x;
                            break;
                        }
                    if (found < 0) {
                        EXPECT_THROW((void)combine_residues({{m1, a}, {m2, b}}), Error);
                    } else {
                        const Residue r = combine_residues({{m1, a}, {m2, b}});
                        EXPECT_EQ(r.value % m1, a);
                        EXPECT_EQ(r.value % m2, b);
                        EXPECT_EQ(r.modulus, std::lcm(m1, m2));
                    }
                }
}

TEST(Fibred, GenusBound) {
    EXPECT_EQ(genus_bound(1, 1, 4), 6);
    EXPECT_EQ(genus_bound(0, 2, 3), 2);
    EXPECT_THROW((void)genus_bound(-1, 1, 3), Error);
}

TEST(Fibred, MinusQOrder) {
    for (int p = 2; p <= 7; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        const int order = p % 2 == 0 ? 2 * p : p;
        EXPECT_TRUE(minus_q_pow(ring, order).is_one());
        for (int k = 1; k < order; ++k) EXPECT_FALSE(minus_q_pow(ring, k).is_one());
        EXPECT_EQ(minus_q_pow(ring, 1), -q_pow(ring, 1));
    }
}

TEST(Fibred, TopDataOfHopfLink) {
    const AdoPoly h = hopf_closed_form(4, +1);
    const TopData t = top_data(h);
    EXPECT_EQ(t.max_exp2, 3);
    EXPECT_EQ(t.breadth, 3);
    ASSERT_TRUE(t.unit_exponent.has_value());
    EXPECT_EQ(*t.unit_exponent, 1);
}

TEST(Fibred, VerdictsOnComputedKnots) {
    // trefoil: fibred, genus 1
    const AdoResult tre = compute_ado(4, BraidWord(2, {1, 1, 1}));
    const FibredVerdict v = fibred_obstruction(tre, 1, 1);
    EXPECT_EQ(v.kind, FibredVerdict::Kind::ConsistentWithFibred);
    ASSERT_TRUE(v.hopf_residue.has_value());
    EXPECT_EQ(v.modulus, 4);
    // genus claimed too large: breadth falls short
    EXPECT_EQ(fibred_obstruction(tre, 2, 1).kind, FibredVerdict::Kind::NotFibred);
    // genus claimed too small: metadata contradicts the bound
    EXPECT_EQ(fibred_obstruction(compute_ado(4, BraidWord(2, {1, 1, 1, 1, 1})), 1, 1).kind,
              FibredVerdict::Kind::Inconclusive);
}

TEST(Fibred, FigureEightHopfResidues) {
    const BraidWord b(3, {1, -2, 1, -2});
    std::vector<std::pair<long, long>> res;
    for (int p : {3, 4}) {
        const FibredVerdict v = fibred_obstruction(compute_ado(p, b), 1, 1);
        ASSERT_EQ(v.kind, FibredVerdict::Kind::ConsistentWithFibred) << v.reason;
        res.emplace_back(v.modulus, *v.hopf_residue);
    }
    const Residue r = combine_residues(res);
    EXPECT_EQ(r.value, 1);
    EXPECT_EQ(r.modulus, 12);
}

TEST(Fibred, VerdictJsonRoundTrip) {
    FibredVerdict v;
    v.kind = FibredVerdict::Kind::ConsistentWithFibred;
    v.reason = "ok";
    v.hopf_residue = 3;
    v.modulus = 4;
    const FibredVerdict w = verdict_from_json(verdict_to_json("k", 4, v));
    EXPECT_EQ(w.kind, v.kind);
    EXPECT_EQ(w.reason, v.reason);
    EXPECT_EQ(w.hopf_residue, v.hopf_residue);
    EXPECT_EQ(w.modulus, v.modulus);
    EXPECT_THROW((void)verdict_from_json(json{{"verdict", "maybe"}}), Error);
}

TEST(Predict, PlumbingOfTwoPositiveBands) {
    const Prediction pr = plumbing_predict(CycloNum(RingCtx::get(4), 1), 0, PlumbingSpec{2, 0, 0, 0}, 4);
    EXPECT_EQ(pr.top_coeff, q_pow(RingCtx::get(4), 2));  // i
    EXPECT_EQ(pr.max_exp2, 6);
    EXPECT_EQ(pr.breadth, 6);
}

TEST(Predict, StronglyQuasipositive) {
    const Prediction pr = sqp_predict(3, 1, 4);
    EXPECT_EQ(pr.top_coeff, minus_q_pow(RingCtx::get(4), 6));
    EXPECT_EQ(pr.breadth, 18);
}

TEST(Predict, HomogeneousMatchesComputation) {
    const std::vector<BraidWord> words{
        BraidWord(2, {1, 1, 1}), BraidWord(3, {1, -2, 1, -2}), BraidWord(2, {1, 1, 1, 1, 1}),
        BraidWord(2, {-1, -1, -1}), BraidWord(3, {1, 2, 1, 2, 1, 2}), BraidWord(3, {-1, 2, -1, 2, 2})};
    for (int p : {3, 4, 5})
        for (const auto& b : words) {
            const Prediction pr = homogeneous_predict(b, p);
            const TopData t = top_data(compute_ado(p, b).poly);
            EXPECT_EQ(t.top_coeff, pr.top_coeff) << b.to_string() << " p=" << p;
            EXPECT_EQ(t.breadth, pr.breadth);
            EXPECT_EQ(t.max_exp2, pr.max_exp2);
        }
}

TEST(Predict, NotHomogeneous) {
    try {
        (void)homogeneous_predict(BraidWord(2, {1, -1, 1}), 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotHomogeneous);
    }
    EXPECT_THROW((void)homogeneous_predict(BraidWord(3, {1, 1}), 4), Error);
}
