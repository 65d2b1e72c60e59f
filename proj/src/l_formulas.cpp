#include "sqcycles/l_formulas.hpp"

#include <array>
#include <string>

#include "sqcycles/errors.hpp"

namespace sqcycles {

namespace {

constexpr std::array<std::pair<Route, std::string_view>, 6> kRouteNames{{
    {Route::prime, "prime"},
    {Route::prime_square, "prime-square"},
    {Route::prime_power, "prime-power"},
    {Route::composite_lcm, "composite-lcm"},
    {Route::fermat_special, "fermat-special"},
    {Route::brute_force, "brute-force"},
}};

constexpr std::array<u64, 5> kFermatPrimes{3, 5, 17, 257, 65537};

void require_prime(u64 p, const char* who) {
    if (!is_prime(p))
        throw InvalidArgument(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

// Order of 2 modulo an odd d, with ord mod 1 = 1.
u64 order_of_two(u64 odd_modulus) { return multiplicative_order(2, odd_modulus); }

u64 l_prime_value(u64 p) { return p == 2 ? 1 : order_of_two(odd_part(p - 1)); }

u64 l_prime_square_value(u64 p) {
    if (p == 2) return 1;
    return lcm(l_prime_value(p), order_of_two(p));
}

void require_fermat_index(unsigned k, const char* who) {
    if (k >= kFermatPrimes.size())
        throw InvalidArgument(std::string(who) + ": k = " + std::to_string(k) +
                              " is not a known Fermat prime index (0..4)");
}

}  // namespace

std::string_view to_string(Route route) noexcept {
    for (const auto& [r, name] : kRouteNames) {
        if (r == route) return name;
    }
    return "unknown";
}

std::optional<Route> route_from_string(std::string_view name) noexcept {
    for (const auto& [r, n] : kRouteNames) {
        if (n == name) return r;
    }
    return std::nullopt;
}

LValue l_prime(u64 p) {
    require_prime(p, "l_prime");
    return {p, l_prime_value(p), Route::prime};
}

LValue l_prime_square(u64 p) {
    require_prime(p, "l_prime_square");
    return {checked_mul(p, p), l_prime_square_value(p), Route::prime_square};
}

bool is_wieferich_prime(u64 p) {
    require_prime(p, "is_wieferich_prime");
    if (p == 2) return false;
    return mod_pow(2, p - 1, checked_mul(p, p)) == 1;
}

LValue l_prime_power(u64 p, unsigned n) {
    require_prime(p, "l_prime_power");
    if (n == 0) throw InvalidArgument("l_prime_power: exponent must be at least 1");
    const u64 modulus = checked_pow(p, n);
    if (n == 1) return l_prime(p);
    if (n == 2) return l_prime_square(p);
    if (p == 2) return {modulus, 1, Route::prime_power};
    u64 value;
    if (!is_wieferich_prime(p)) {
        value = checked_mul(checked_pow(p, n - 2), l_prime_square_value(p));
    } else {
        // ord_p(2) does not grow when lifted to p^2, so the ladder overcounts.
        value = lcm(l_prime_value(p), order_of_two(checked_pow(p, n - 1)));
    }
    return {modulus, value, Route::prime_power};
}

LValue l_of(u64 m) {
    if (m == 0) throw InvalidArgument("l_of: modulus must be positive");
    const auto factors = factorize(m);
    if (factors.size() == 1) {
        const auto& [p, e] = factors.factors().front();
        return l_prime_power(p, e);
    }
    u64 value = 1;
    for (const auto& [p, e] : factors) value = lcm(value, l_prime_power(p, e).value);
    return {m, value, Route::composite_lcm};
}

LValue fermat_l(unsigned k) {
    require_fermat_index(k, "fermat_l");
    return {kFermatPrimes[k], 1, Route::fermat_special};
}

LValue fermat_l_square(unsigned k) {
    require_fermat_index(k, "fermat_l_square");
    const u64 p = kFermatPrimes[k];
    return {p * p, u64{2} << k, Route::fermat_special};
}

HalfOrderCriterion half_order_criterion(u64 p) {
    require_prime(p, "half_order_criterion");
    if (p == 2) throw InvalidArgument("half_order_criterion: p must be odd");
    if (fermat_index(p))
        throw InvalidArgument("half_order_criterion: " + std::to_string(p) +
                              " is a Fermat prime");
    HalfOrderCriterion out;
    out.attains_bound = l_prime_value(p) == (p - 3) / 2;
    const u64 q = (p - 1) / 2;
    out.half_is_prime_with_generator_two = is_prime(q) && q % 2 == 1 && is_primitive_root(2, q);
    return out;
}

bool square_bound_holds(u64 p) {
    require_prime(p, "square_bound_holds");
    return l_prime_square_value(p) <= checked_mul(p - 1, l_prime_value(p));
}

PrimeClassRecord classify_ratio(u64 p) {
    require_prime(p, "classify_ratio");
    PrimeClassRecord rec;
    rec.p = p;
    rec.l_p = l_prime_value(p);
    rec.l_p2 = l_prime_square_value(p);
    const u64 scaled = checked_mul(p - 1, rec.l_p);
    if (scaled % rec.l_p2 != 0)
        throw InternalError("classify_ratio: L(p^2) = " + std::to_string(rec.l_p2) +
                            " does not divide (p-1)L(p) = " + std::to_string(scaled) +
                            " for p = " + std::to_string(p));
    rec.k = scaled / rec.l_p2;
    return rec;
}

u64 max_order_over_odd_divisors(u64 base) {
    u64 best = 1;
    for (u64 d : divisors(factorize(odd_part(base)))) best = std::max(best, order_of_two(d));
    return best;
}

}  // namespace sqcycles
