#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ado/cyclotomic.hpp"
#include "ado/laurent.hpp"
#include "oracles.hpp"

using namespace ado;
using oracle::QPoly;

namespace {

// Phi_n from x^n - 1 divided by Phi_d for every proper divisor d.
QPoly phi_oracle(int n) {
    QPoly num(static_cast<size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const QPoly den = phi_oracle(d);
        QPoly q(num.size(), 0);
        for (int k = static_cast<int>(num.size()) - 1; k >= static_cast<int>(den.size()) - 1; --k) {
            const mpq_class c = num[k] / den.back();
            const int s = k - static_cast<int>(den.size()) + 1;
            q[s] = c;
            for (size_t j = 0; j < den.size(); ++j) num[s + j] -= c * den[j];
        }
        oracle::trim(q);
        num = q;
    }
    return num;
}

void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    oracle::trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        const size_t s = a.size() - b.size();
        const mpq_class c = a.back() / b.back();
        q[s] = c;
        for (size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
        oracle::trim(a);
    }
    r = a;
    oracle::trim(q);
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    oracle::trim(r);
    return r;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    oracle::trim(a);
    return a;
}

// inverse of f modulo m by the extended Euclidean algorithm
QPoly inverse_mod(const QPoly& f, const QPoly& m) {
    QPoly r0 = m, r1 = f, s0{}, s1{1};
    oracle::trim(r1);
    while (!(r1.size() == 1)) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s = sub(s0, mul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    for (auto& c : s1) c /= r1[0];
    QPoly q, r;
    divmod(s1, m, q, r);
    return r;
}

CycloNum random_num(const RingCtx& ring, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<mpq_class> c;
    for (int k = 0; k < ring.dim(); ++k) c.emplace_back(d(rng), 1 + std::abs(d(rng)));
    return CycloNum(ring, c);
}

}  // namespace

TEST(Cyclotomic, MinimalPolynomialMatchesDivisionOracle) {
    for (int p = 2; p <= 7; ++p) {
        const QPoly ref = phi_oracle(4 * p);
        const auto& got = RingCtx::get(p).phi();
        ASSERT_EQ(got.size(), ref.size()) << "p=" << p;
        for (size_t k = 0; k < ref.size(); ++k) EXPECT_EQ(mpq_class(got[k]), ref[k]) << "p=" << p << " k=" << k;
        EXPECT_EQ(cyclotomic_polynomial(4 * p), got);
    }
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
    std::mt19937 rng(7);
    for (int p = 2; p <= 6; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        for (int trial = 0; trial < 10; ++trial) {
            const CycloNum a = random_num(ring, rng), b = random_num(ring, rng), c = random_num(ring, rng);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * b, b * a);
            EXPECT_TRUE((a - a).is_zero());
            if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
        }
    }
}

TEST(Cyclotomic, ZetaHasExactOrder) {
    for (int p = 2; p <= 7; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        const CycloNum z = zeta_pow(ring, 1);
        EXPECT_TRUE(z.pow(4 * p).is_one());
        EXPECT_FALSE(z.pow(2 * p).is_one());
        EXPECT_EQ(z.pow(2 * p), CycloNum(ring, -1));
        EXPECT_EQ(zeta_log(zeta_pow(ring, 5)), 5 % (4 * p));
        EXPECT_EQ(zeta_log(CycloNum(ring, 2)), -1);
    }
}

TEST(Cyclotomic, InverseOfOnePlusQMatchesExtendedGcd) {
    for (int p = 2; p <= 7; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        const QPoly inv = inverse_mod(QPoly{1, 0, 1}, phi_oracle(4 * p));
        const CycloNum got = (CycloNum(ring, 1) + q_pow(ring, 1)).inverse();
        for (int k = 0; k < ring.dim(); ++k) {
            const mpq_class want = k < static_cast<int>(inv.size()) ? inv[k] : mpq_class(0);
            EXPECT_EQ(got.coords()[k], want) << "p=" << p << " k=" << k;
        }
    }
}

TEST(Cyclotomic, QuantumIntegersAgreeWithFloatingPoint) {
    for (int p = 2; p <= 6; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        for (int n = 0; n <= 2 * p; ++n) {
            const double want = std::sin(M_PI * n / p) / std::sin(M_PI / p);
            const std::complex<double> got = quantum_int(ring, n).approx();
            EXPECT_NEAR(got.real(), want, 1e-12);
            EXPECT_NEAR(got.imag(), 0.0, 1e-12);
        }
        EXPECT_TRUE(quantum_int(ring, p).is_zero());
        EXPECT_TRUE(quantum_factorial(ring, p).is_zero());
        EXPECT_FALSE(quantum_factorial(ring, p - 1).is_zero());
    }
    EXPECT_NEAR(quantum_int(RingCtx::get(4), 2).approx().real(), std::sqrt(2.0), 1e-12);
}

TEST(Cyclotomic, SubringZq2) {
    const RingCtx& ring = RingCtx::get(4);
    EXPECT_TRUE(in_Zq2(q_pow(ring, 2) * CycloNum(ring, 3) + CycloNum(ring, -1)));
    EXPECT_TRUE(in_Zq2(q_pow(ring, -2)));
    EXPECT_FALSE(in_Zq2(q_pow(ring, 1)));
    EXPECT_FALSE(in_Zq2(CycloNum(ring, 1) * mpq_class(1, 2)));
}

TEST(Cyclotomic, DivisionByZeroThrows) {
    const RingCtx& ring = RingCtx::get(3);
    try {
        (void)CycloNum(ring).inverse();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
}

TEST(Laurent, EvaluationIsARingHomomorphism) {
    std::mt19937 rng(11);
    for (int p = 2; p <= 5; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        for (int trial = 0; trial < 5; ++trial) {
            LaurentA a(ring), b(ring);
            for (int e = -3; e <= 3; ++e) {
                a.add_term(e, random_num(ring, rng));
                b.add_term(2 * e + 1, random_num(ring, rng));
            }
            for (long lam : {-3L, 0L, 1L, 7L}) {
                EXPECT_EQ((a * b).eval_at_integer_lambda(lam), a.eval_at_integer_lambda(lam) * b.eval_at_integer_lambda(lam));
                EXPECT_EQ((a + b).eval_at_integer_lambda(lam), a.eval_at_integer_lambda(lam) + b.eval_at_integer_lambda(lam));
            }
        }
    }
}

TEST(Laurent, BracketShiftIsAQuantumInteger) {
    // [lambda - c] at lambda = n equals [n - c]
    for (int p = 2; p <= 5; ++p) {
        const RingCtx& ring = RingCtx::get(p);
        for (int c = 0; c < p; ++c)
            for (long n = -2; n <= 6; ++n)
                EXPECT_EQ(LaurentA::bracket_shift(ring, c).eval_at_integer_lambda(n), quantum_int(ring, n - c));
    }
}

TEST(Laurent, MonomialInverseAndPowers) {
    const RingCtx& ring = RingCtx::get(3);
    const LaurentA m = LaurentA::monomial(q_pow(ring, 1), 2);
    EXPECT_EQ(m * m.monomial_inverse(), LaurentA::one(ring));
    EXPECT_EQ(m.pow(3), m * m * m);
    EXPECT_EQ(m.pow(-1), m.monomial_inverse());
    EXPECT_THROW((void)(m + LaurentA::one(ring)).monomial_inverse(), Error);
}
