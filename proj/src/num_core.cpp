#include "sqcycles/num_core.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "sqcycles/errors.hpp"

namespace sqcycles {

namespace {

using u128 = unsigned __int128;

constexpr u64 kTrialDivisionLimit = 1'000'000;

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<bool> composite(kTrialDivisionLimit + 1, false);
        std::vector<u64> out;
        for (u64 i = 2; i <= kTrialDivisionLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (u64 j = i * i; j <= kTrialDivisionLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

void require_modulus(u64 m, const char* who) {
    if (m == 0) throw InvalidArgument(std::string(who) + ": modulus must be positive");
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mod_mul(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

// Brent's cycle-finding variant of Pollard rho. Returns a non-trivial
// divisor of the odd composite n, or n itself if this constant fails.
u64 pollard_brent(u64 n, u64 c) {
    auto f = [n, c](u64 x) { return (mod_mul(x, x, n) + c) % n; };
    constexpr u64 batch = 128;
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        for (u64 k = 0; k < r && g == 1; k += batch) {
            ys = y;
            for (u64 i = 0; i < std::min(batch, r - k); ++i) {
                y = f(y);
                q = mod_mul(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void split_into(u64 n, Factorization& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.multiply_by(n);
        return;
    }
    for (u64 c = 1;; ++c) {
        u64 d = pollard_brent(n, c);
        if (d != n && d != 1) {
            split_into(d, out);
            split_into(n / d, out);
            return;
        }
    }
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) {
    for (const auto& f : factors) multiply_by(f.prime, f.exponent);
}

u64 Factorization::value() const {
    u64 v = 1;
    for (const auto& f : factors_) v = checked_mul(v, checked_pow(f.prime, f.exponent));
    return v;
}

void Factorization::multiply_by(u64 prime, unsigned exponent) {
    if (exponent == 0) return;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                               [](const PrimePower& f, u64 p) { return f.prime < p; });
    if (it != factors_.end() && it->prime == prime)
        it->exponent += exponent;
    else
        factors_.insert(it, PrimePower{prime, exponent});
}

u64 mod_mul(u64 a, u64 b, u64 m) {
    require_modulus(m, "mod_mul");
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 mod_pow(u64 base, u64 exp, u64 m) {
    require_modulus(m, "mod_pow");
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = static_cast<u64>(static_cast<u128>(result) * base % m);
        exp >>= 1;
        if (exp) base = static_cast<u64>(static_cast<u128>(base) * base % m);
    }
    return result;
}

u64 gcd(u64 a, u64 b) noexcept { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

u64 lcm_all(std::span<const u64> values) {
    u64 acc = 1;
    for (u64 v : values) {
        if (v == 0) throw InvalidArgument("lcm_all: zero entry");
        acc = lcm(acc, v);
    }
    return acc;
}

u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError(std::to_string(a) + " * " + std::to_string(b) + " exceeds 64 bits");
    return r;
}

u64 checked_pow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    static constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : bases) {
        if (n % p == 0) return n == p;
    }
    if (n < 37 * 37) return true;
    u64 d = n - 1;
    unsigned s = static_cast<unsigned>(std::countr_zero(d));
    d >>= s;
    // These twelve bases are a proven deterministic set below 3.3e24.
    for (u64 a : bases) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw InvalidArgument("factorize: n must be positive");
    Factorization out;
    for (u64 p : small_primes()) {
        if (p * p > n) break;
        if (n % p != 0) continue;
        unsigned e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        out.multiply_by(p, e);
    }
    split_into(n, out);
    return out;
}

Factorization euler_phi_factorization(const Factorization& n_factors) {
    Factorization phi;
    for (const auto& [p, e] : n_factors) {
        phi.multiply_by(p, e - 1);
        for (const auto& q : factorize(p - 1)) phi.multiply_by(q.prime, q.exponent);
    }
    return phi;
}

u64 euler_phi(u64 n) {
    u64 phi = 1;
    for (const auto& [p, e] : factorize(n)) phi *= (p - 1) * checked_pow(p, e - 1);
    return phi;
}

u64 odd_part(u64 n) {
    if (n == 0) throw InvalidArgument("odd_part: n must be positive");
    return n >> std::countr_zero(n);
}

unsigned two_adic_valuation(u64 n) {
    if (n == 0) throw InvalidArgument("two_adic_valuation: n must be positive");
    return static_cast<unsigned>(std::countr_zero(n));
}

u64 multiplicative_order(u64 a, u64 m) {
    require_modulus(m, "multiplicative_order");
    if (m == 1) return 1;
    return multiplicative_order(a, m, euler_phi_factorization(factorize(m)));
}

u64 multiplicative_order(u64 a, u64 m, const Factorization& phi_factors) {
    require_modulus(m, "multiplicative_order");
    if (m == 1) return 1;
    a %= m;
    if (std::gcd(a, m) != 1)
        throw InvalidArgument("multiplicative_order: " + std::to_string(a) +
                              " is not a unit modulo " + std::to_string(m));
    u64 order = phi_factors.value();
    for (const auto& [q, e] : phi_factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (mod_pow(a, order / q, m) != 1) break;
            order /= q;
        }
    }
    return order;
}

bool is_quadratic_residue(u64 a, u64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw InvalidArgument("is_quadratic_residue: modulus must be an odd prime");
    if (a % p == 0) throw InvalidArgument("is_quadratic_residue: p divides a");
    return mod_pow(a, (p - 1) / 2, p) == 1;
}

bool is_primitive_root(u64 a, u64 m) {
    require_modulus(m, "is_primitive_root");
    if (std::gcd(a % m, m) != 1)
        throw InvalidArgument("is_primitive_root: " + std::to_string(a) +
                              " is not a unit modulo " + std::to_string(m));
    if (m == 1) return true;
    const auto phi = euler_phi_factorization(factorize(m));
    const u64 phi_value = phi.value();
    a %= m;
    for (const auto& f : phi) {
        if (mod_pow(a, phi_value / f.prime, m) == 1) return false;
    }
    return true;
}

bool has_primitive_root(u64 m) {
    if (m == 0) return false;
    if (m <= 4) return true;
    if (m % 4 == 0) return false;
    if (m % 2 == 0) m /= 2;
    return factorize(m).size() == 1 && m % 2 == 1;
}

std::optional<unsigned> fermat_index(u64 p) noexcept {
    for (unsigned k = 0; k <= 5; ++k) {
        const u64 candidate = (u64{1} << (u64{1} << k)) + 1;
        if (candidate == p) return is_prime(p) ? std::optional<unsigned>(k) : std::nullopt;
    }
    return std::nullopt;
}

u64 count_dth_roots_of_unity(u64 d, u64 m) {
    if (d == 0) throw InvalidArgument("count_dth_roots_of_unity: d must be positive");
    if (!has_primitive_root(m))
        throw InvalidArgument("count_dth_roots_of_unity: " + std::to_string(m) +
                              " has no primitive root");
    return std::gcd(d, euler_phi(m));
}

bool is_dth_power_residue(u64 a, u64 d, u64 m) {
    if (d == 0) throw InvalidArgument("is_dth_power_residue: d must be positive");
    if (!has_primitive_root(m))
        throw InvalidArgument("is_dth_power_residue: " + std::to_string(m) +
                              " has no primitive root");
    if (std::gcd(a % m, m) != 1)
        throw InvalidArgument("is_dth_power_residue: " + std::to_string(a) +
                              " is not a unit modulo " + std::to_string(m));
    const u64 phi = euler_phi(m);
    return mod_pow(a, phi / std::gcd(d, phi), m) == 1 % m;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t n = out.size();
        u64 pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < n; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sqcycles
