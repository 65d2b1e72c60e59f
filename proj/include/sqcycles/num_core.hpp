#pragma once

/**
 * @file num_core.hpp
 * @brief Exact 64-bit modular arithmetic and multiplicative number theory.
 *
 * Every modulus up to 2^64 - 1 is handled exactly: products are formed in
 * 128-bit registers before reduction. Primality is deterministic over the
 * whole 64-bit range (Miller-Rabin with the first twelve prime bases), and
 * factorization combines trial division with Brent's variant of Pollard rho.
 *
 * All functions are pure and may be called concurrently.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sqcycles {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty for 1.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> factors);

    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    bool empty() const noexcept { return factors_.empty(); }
    auto begin() const noexcept { return factors_.begin(); }
    auto end() const noexcept { return factors_.end(); }

    /// Multiplies the factors back together; throws OverflowError past 2^64.
    u64 value() const;

    /// Adds `exponent` copies of `prime`, keeping primes sorted and merged.
    void multiply_by(u64 prime, unsigned exponent = 1);

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

u64 mod_mul(u64 a, u64 b, u64 m);
u64 mod_pow(u64 base, u64 exp, u64 m);

u64 gcd(u64 a, u64 b) noexcept;
/// lcm(a, b); lcm(0, x) = 0. Throws OverflowError instead of wrapping.
u64 lcm(u64 a, u64 b);
/// lcm over a list; an empty list gives 1, any zero entry is rejected.
u64 lcm_all(std::span<const u64> values);

/// a * b, throwing OverflowError instead of wrapping.
u64 checked_mul(u64 a, u64 b);
/// base^exp over the integers, throwing OverflowError instead of wrapping.
u64 checked_pow(u64 base, unsigned exp);

bool is_prime(u64 n) noexcept;
Factorization factorize(u64 n);

u64 euler_phi(u64 n);
/// Factorization of euler_phi(n), assembled from the factors of n.
Factorization euler_phi_factorization(const Factorization& n_factors);

/// Largest odd divisor of n.
u64 odd_part(u64 n);
/// Exponent of 2 in n.
unsigned two_adic_valuation(u64 n);

/**
 * Least e >= 1 with a^e = 1 (mod m). Starts from euler_phi(m) and strips
 * prime factors while the power stays 1, so the cost is polylogarithmic.
 * By convention the order modulo 1 is 1. Throws InvalidArgument unless
 * gcd(a, m) = 1.
 */
u64 multiplicative_order(u64 a, u64 m);
/// Same, with the factorization of euler_phi(m) precomputed by the caller.
u64 multiplicative_order(u64 a, u64 m, const Factorization& phi_factors);

/// Euler's criterion. Requires p an odd prime not dividing a.
bool is_quadratic_residue(u64 a, u64 p);

bool is_primitive_root(u64 a, u64 m);

/// True for m in {1, 2, 4, p^k, 2p^k} with p an odd prime.
bool has_primitive_root(u64 m);

/// k with p = 2^(2^k) + 1 prime; only 3, 5, 17, 257, 65537 qualify in 64 bits.
std::optional<unsigned> fermat_index(u64 p) noexcept;

/// Number of solutions of x^d = 1 (mod m); m must have a primitive root.
u64 count_dth_roots_of_unity(u64 d, u64 m);

/// Whether x^d = a (mod m) is solvable; m must have a primitive root.
bool is_dth_power_residue(u64 a, u64 d, u64 m);

/// Divisors of the number with the given factorization, ascending.
std::vector<u64> divisors(const Factorization& f);

}  // namespace sqcycles
