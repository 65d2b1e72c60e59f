#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "sqcycles/errors.hpp"
#include "sqcycles/num_core.hpp"

using namespace sqcycles;

namespace {
constexpr u64 kF4Squared = 4295098369;  // 65537^2
}

TEST(ModMul, Examples) {
    EXPECT_EQ(mod_mul(65536, 65536, kF4Squared), 4294967296u);
    EXPECT_EQ(mod_mul(4294967296, 4294967296, kF4Squared), 4294836222u);
    EXPECT_EQ(mod_mul(7, 8, 11), 1u);
}

TEST(ModMul, NoOverflowNearTop) {
    const u64 m = ~u64{0};  // 2^64 - 1
    // (m-1)^2 = (-1)^2 = 1 mod m
    EXPECT_EQ(mod_mul(m - 1, m - 1, m), 1u);
    EXPECT_THROW(mod_mul(1, 1, 0), InvalidArgument);
}

TEST(ModPow, Examples) {
    EXPECT_EQ(mod_pow(2, 256, 17), 1u);
    EXPECT_EQ(oracle::pow_by_iteration(2, 256, 17), 1u);
    for (u64 x = 0; x < 7; ++x) EXPECT_EQ(mod_pow(x, 0, 7), 1u);
    EXPECT_EQ(mod_pow(454, 2, 999), 322u);
    EXPECT_EQ(mod_pow(5, 0, 1), 0u);
    EXPECT_THROW(mod_pow(2, 3, 0), InvalidArgument);
}

TEST(ModPow, AgreesWithIteration) {
    for (u64 m = 1; m < 60; ++m)
        for (u64 a = 0; a < m; ++a)
            for (u64 e = 0; e < 40; ++e) ASSERT_EQ(mod_pow(a, e, m), oracle::pow_by_iteration(a, e, m));
}

TEST(GcdLcm, Examples) {
    EXPECT_EQ(lcm(6, 4), 12u);
    for (unsigned m = 1; m < 40; ++m) EXPECT_EQ(gcd((u64{1} << m) - 1, u64{1} << 4), 1u);
    const u64 one[] = {1};
    EXPECT_EQ(lcm_all(one), 1u);
    EXPECT_EQ(lcm_all({}), 1u);
    EXPECT_EQ(gcd(0, 0), 0u);
}

TEST(GcdLcm, OverflowIsReported) {
    const u64 big_primes[] = {4294967291, 4294967279, 4294967231};
    EXPECT_THROW(lcm_all(big_primes), OverflowError);
    const u64 with_zero[] = {3, 0};
    EXPECT_THROW(lcm_all(with_zero), InvalidArgument);
}

TEST(IsPrime, Examples) {
    EXPECT_TRUE(is_prime(65537));
    EXPECT_FALSE(is_prime(4294967297));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(0));
    EXPECT_TRUE(is_prime(2));
}

TEST(IsPrime, AgreesWithTrialDivision) {
    for (u64 n = 0; n < 200000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
}

TEST(IsPrime, StrongPseudoprimesAndLargeValues) {
    // Strong pseudoprimes to several small bases.
    EXPECT_FALSE(is_prime(3215031751));
    EXPECT_FALSE(is_prime(2152302898747));
    EXPECT_FALSE(is_prime(3474749660383));
    EXPECT_FALSE(is_prime(341550071728321));
    EXPECT_FALSE(is_prime(3825123056546413051));
    EXPECT_TRUE(is_prime(18446744073709551557u));  // largest 64-bit prime
    EXPECT_FALSE(is_prime(18446744073709551615u));
    EXPECT_TRUE(is_prime(6700417));
}

TEST(Factorize, Examples) {
    EXPECT_EQ(factorize(999), Factorization({{3, 3}, {37, 1}}));
    EXPECT_EQ(factorize(kF4Squared), Factorization({{65537, 2}}));
    EXPECT_TRUE(factorize(1).empty());
    EXPECT_EQ(factorize(4294967297), Factorization({{641, 1}, {6700417, 1}}));
    EXPECT_THROW(factorize(0), InvalidArgument);
}

TEST(Factorize, LargeSemiprimesUseRho) {
    const u64 p = 4294967291, q = 4294967279;
    EXPECT_EQ(factorize(p * q), Factorization({{q, 1}, {p, 1}}));
    const u64 r = 1000003;
    EXPECT_EQ(factorize(r * r * 1000033), Factorization({{r, 2}, {1000033, 1}}));
    EXPECT_EQ(factorize(18446744073709551615u),
              Factorization({{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1}, {6700417, 1}}));
}

TEST(Factorize, ReconstructsAndMatchesTrialDivision) {
    for (u64 n = 1; n <= 100000; ++n) {
        const auto f = factorize(n);
        ASSERT_EQ(f.value(), n);
        const auto expected = oracle::trial_factor(n);
        ASSERT_EQ(f.size(), expected.size()) << n;
        u64 prev = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto& pp = f.factors()[i];
            ASSERT_GT(pp.prime, prev);
            ASSERT_TRUE(is_prime(pp.prime));
            ASSERT_EQ(pp.prime, expected[i].first);
            ASSERT_EQ(pp.exponent, expected[i].second);
            prev = pp.prime;
        }
    }
}

TEST(EulerPhi, Examples) {
    EXPECT_EQ(euler_phi(289), 272u);
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_EQ(euler_phi(999), 648u);
    EXPECT_EQ(oracle::phi_by_count(999), 648u);
}

TEST(EulerPhi, AgreesWithCountAndSieve) {
    for (u64 n = 1; n <= 3000; ++n) ASSERT_EQ(euler_phi(n), oracle::phi_by_count(n)) << n;
    // The gcd count is quadratic; the sieve covers the rest of the range.
    const auto phi = oracle::phi_sieve(100000);
    for (u64 n = 1; n <= 100000; ++n) ASSERT_EQ(euler_phi(n), phi[n]) << n;
}

TEST(EulerPhi, FactorizationOfPhi) {
    for (u64 n = 1; n < 5000; ++n) ASSERT_EQ(euler_phi_factorization(factorize(n)).value(), euler_phi(n));
}

TEST(OddPart, Examples) {
    EXPECT_EQ(odd_part(22), 11u);
    for (unsigned k = 0; k <= 5; ++k) EXPECT_EQ(odd_part(u64{1} << (u64{1} << k)), 1u);
    EXPECT_EQ(odd_part(1), 1u);
    EXPECT_THROW(odd_part(0), InvalidArgument);
}

TEST(OddPart, Decomposition) {
    for (u64 n = 1; n < 100000; ++n) {
        const u64 odd = odd_part(n);
        ASSERT_EQ(odd % 2, 1u);
        ASSERT_EQ(odd << two_adic_valuation(n), n);
    }
}

TEST(MultiplicativeOrder, Examples) {
    EXPECT_EQ(multiplicative_order(2, 11), 10u);
    EXPECT_EQ(oracle::order_by_iteration(2, 11), 10u);
    EXPECT_EQ(multiplicative_order(2, 1), 1u);
    EXPECT_EQ(multiplicative_order(2, 17), 8u);
    EXPECT_THROW(multiplicative_order(3, 999), InvalidArgument);
}

TEST(MultiplicativeOrder, AgreesWithIterationBelow500) {
    for (u64 m = 1; m <= 500; ++m)
        for (u64 a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            ASSERT_EQ(multiplicative_order(a, m), oracle::order_by_iteration(a, m)) << a << " mod " << m;
        }
}

TEST(MultiplicativeOrder, MinimalAndDividesPhiBelow10000) {
    for (u64 m = 2; m <= 10000; ++m) {
        const auto phi_f = euler_phi_factorization(factorize(m));
        const u64 phi = phi_f.value();
        for (u64 a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            const u64 e = multiplicative_order(a, m, phi_f);
            ASSERT_EQ(phi % e, 0u);
            ASSERT_EQ(mod_pow(a, e, m), 1u);
            // No proper divisor of e works iff e/q fails for every prime q | e.
            for (const auto& [q, k] : factorize(e)) ASSERT_NE(mod_pow(a, e / q, m), 1u) << a << " mod " << m;
        }
    }
}

TEST(MultiplicativeOrder, NearTwoToThe32IsFast) {
    EXPECT_EQ(multiplicative_order(2, 4295098369), 32u * 65537u);
    EXPECT_EQ(multiplicative_order(2, 65537), 32u);
}

TEST(QuadraticResidue, Examples) {
    EXPECT_TRUE(is_quadratic_residue(4, 7));
    EXPECT_FALSE(is_quadratic_residue(3, 17));
    EXPECT_FALSE(oracle::squares_mod(17).contains(3));
    for (u64 p : {5u, 17u, 257u, 65537u}) EXPECT_TRUE(is_quadratic_residue(p - 1, p));
    EXPECT_THROW(is_quadratic_residue(3, 8), InvalidArgument);
    EXPECT_THROW(is_quadratic_residue(14, 7), InvalidArgument);
}

TEST(QuadraticResidue, EulerCriterionMatchesSquares) {
    for (u64 p = 3; p < 400; ++p) {
        if (!oracle::is_prime(p)) continue;
        const auto squares = oracle::squares_mod(p);
        for (u64 a = 1; a < p; ++a) ASSERT_EQ(is_quadratic_residue(a, p), squares.contains(a)) << a << " mod " << p;
    }
}

TEST(PrimitiveRoot, Examples) {
    EXPECT_TRUE(is_primitive_root(2, 11));
    for (u64 m = 3; m < 50; ++m) EXPECT_FALSE(is_primitive_root(1, m));
    EXPECT_THROW(is_primitive_root(6, 9), InvalidArgument);
}

TEST(PrimitiveRoot, FermatNonresiduesAreExactlyPrimitiveRoots) {
    for (u64 p : {17u, 257u}) {
        const auto squares = oracle::squares_mod(p);
        for (u64 a = 1; a < p; ++a) {
            const bool nonresidue = !squares.contains(a);
            ASSERT_EQ(nonresidue, is_primitive_root(a, p)) << a << " mod " << p;
            ASSERT_EQ(nonresidue, !is_quadratic_residue(a, p));
        }
    }
}

TEST(FermatIndex, Examples) {
    EXPECT_EQ(fermat_index(65537), 4u);
    EXPECT_FALSE(fermat_index(7));
    EXPECT_FALSE(fermat_index(4294967297));
    unsigned found = 0;
    for (u64 n = 0; n < 70000; ++n) found += fermat_index(n).has_value();
    EXPECT_EQ(found, 5u);
    EXPECT_EQ(fermat_index(3), 0u);
}

TEST(PrimitiveRootExistence, MatchesSearch) {
    for (u64 m = 1; m <= 400; ++m) {
        bool found = false;
        const u64 phi = oracle::phi_by_count(m);
        for (u64 a = 0; a < m && !found; ++a)
            found = std::gcd(a, m) == 1 && oracle::order_by_iteration(a, m) == phi;
        if (m == 1) found = true;
        ASSERT_EQ(has_primitive_root(m), found) << m;
    }
}

TEST(DthRoots, Examples) {
    for (u64 p : {3u, 5u, 7u, 11u, 13u, 1093u}) {
        const u64 d = gcd(mod_pow(2, p - 1, (p - 1) * p) + (p - 1) * p - 1, (p - 1) * p);
        u64 count = 0;
        for (u64 x = 1; x < p * p; ++x) count += mod_pow(x, d, p * p) == 1;
        EXPECT_EQ(count_dth_roots_of_unity(d, p * p), d);
        EXPECT_EQ(count, d) << p;
    }
    for (u64 m : {1u, 2u, 4u, 9u, 18u}) EXPECT_EQ(count_dth_roots_of_unity(1, m), 1u);
    for (unsigned m = 1; m < 30; ++m) EXPECT_EQ(count_dth_roots_of_unity((u64{1} << m) - 1, 65537), 1u);
    EXPECT_THROW(count_dth_roots_of_unity(2, 8), InvalidArgument);
    EXPECT_THROW(count_dth_roots_of_unity(2, 15), InvalidArgument);
}

TEST(DthRoots, CountMatchesEnumerationUpTo2000) {
    for (u64 m = 1; m <= 2000; ++m) {
        if (!has_primitive_root(m)) continue;
        const u64 phi = euler_phi(m);
        for (u64 d : divisors(factorize(phi))) {
            u64 count = 0;
            for (u64 x = 0; x < m; ++x) count += std::gcd(x, m) == 1 && mod_pow(x, d, m) == 1 % m;
            ASSERT_EQ(count_dth_roots_of_unity(d, m), count) << "d=" << d << " m=" << m;
            ASSERT_EQ(count, d);
        }
    }
}

TEST(DthPowerResidue, Examples) {
    for (u64 p : {5u, 17u, 257u}) {
        for (u64 a = 1; a < p; ++a) {
            if (!is_primitive_root(a, p)) EXPECT_TRUE(is_dth_power_residue(a, 2, p));
        }
    }
    EXPECT_TRUE(is_dth_power_residue(1, 7, 49));
    EXPECT_FALSE(is_dth_power_residue(3, 2, 17));
    EXPECT_THROW(is_dth_power_residue(3, 2, 15), InvalidArgument);
    EXPECT_THROW(is_dth_power_residue(7, 2, 49), InvalidArgument);
}

TEST(DthPowerResidue, MatchesImageOfPowerMap) {
    for (u64 m : {7u, 9u, 25u, 27u, 50u, 121u, 169u, 243u}) {
        for (u64 d = 1; d <= 12; ++d) {
            std::set<u64> image;
            for (u64 x = 1; x < m; ++x) {
                if (std::gcd(x, m) == 1) image.insert(oracle::pow_by_iteration(x, d, m));
            }
            for (u64 a = 1; a < m; ++a) {
                if (std::gcd(a, m) != 1) continue;
                ASSERT_EQ(is_dth_power_residue(a, d, m), image.contains(a)) << a << " d=" << d << " m=" << m;
            }
        }
    }
}

TEST(Divisors, Basic) {
    EXPECT_EQ(divisors(factorize(12)), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(factorize(1)), (std::vector<u64>{1}));
}
