#pragma once

/**
 * @file l_formulas.hpp
 * @brief Closed forms for L(m), the longest cycle of x -> x^2 mod m.
 *
 * For an odd prime p with n the odd part of p - 1:
 *
 *     L(p)   = ord_n(2)
 *     L(p^2) = lcm(L(p), ord_p(2))
 *     L(p^k) = p^(k-2) L(p^2)          for k >= 3
 *
 * and L(m) is the lcm of L over the prime-power factors of m. Powers of two
 * give L = 1. The ladder rule for k >= 3 needs 2^(p-1) != 1 (mod p^2); for
 * the Wieferich primes (1093, 3511) l_prime_power falls back to
 * lcm(L(p), ord_{p^(k-1)}(2)), which is what the census reports.
 */

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "sqcycles/num_core.hpp"

namespace sqcycles {

enum class Route {
    prime,
    prime_square,
    prime_power,
    composite_lcm,
    fermat_special,
    brute_force,
};

std::string_view to_string(Route route) noexcept;
std::optional<Route> route_from_string(std::string_view name) noexcept;

struct LValue {
    u64 modulus = 0;
    u64 value = 0;
    Route route = Route::composite_lcm;

    friend bool operator==(const LValue&, const LValue&) = default;
};

struct PrimeClassRecord {
    u64 p = 0;
    u64 l_p = 0;
    u64 l_p2 = 0;
    u64 k = 0;  // k * l_p2 == (p - 1) * l_p
};

LValue l_prime(u64 p);
LValue l_prime_square(u64 p);
LValue l_prime_power(u64 p, unsigned n);
LValue l_of(u64 m);

/// L(F_k) = 1 for the Fermat prime F_k; k must be 0..4.
LValue fermat_l(unsigned k);
/// L(F_k^2) = 2^(k+1); k must be 0..4.
LValue fermat_l_square(unsigned k);

/// True iff 2^(p-1) = 1 (mod p^2).
bool is_wieferich_prime(u64 p);

/// Both sides of the equivalence
///   L(p) = (p - 3) / 2  <=>  q = (p - 1) / 2 is prime and 2 generates (Z/qZ)*
/// for a non-Fermat odd prime p.
struct HalfOrderCriterion {
    bool attains_bound = false;       // L(p) == (p - 3) / 2
    bool half_is_prime_with_generator_two = false;
};

HalfOrderCriterion half_order_criterion(u64 p);

/// L(p^2) <= (p - 1) L(p).
bool square_bound_holds(u64 p);

/// k with L(p^2) = (p - 1) L(p) / k. Throws InternalError if inexact.
PrimeClassRecord classify_ratio(u64 p);

/// max over odd divisors d of base of ord_d(2); used to cross-check the
/// collapsed form ord_{odd_part(base)}(2).
u64 max_order_over_odd_divisors(u64 base);

}  // namespace sqcycles
