#pragma once

/**
 * @file verify.hpp
 * @brief Cross-validation of the closed forms against fixtures, the census
 *        oracle and external b-files.
 */

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sqcycles/fixtures.hpp"
#include "sqcycles/squaring_graph.hpp"

namespace sqcycles {

struct Mismatch {
    std::string input;
    std::string expected;
    std::string got;
    std::string detail;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct MismatchReport {
    std::string subject;
    std::size_t checked = 0;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> notes;

    bool passed() const noexcept { return mismatches.empty(); }
};

struct CheckOptions {
    /// Rows with a modulus at or below this are also checked by the census.
    u64 oracle_cap = kDefaultOracleCap;
};

/// Replays a fixture. l-value rows are checked against l_of, the census
/// (when under the cap), the Fermat closed forms (when they apply) and the
/// row's witness period; cycle rows are replayed element by element;
/// ratio-class rows are compared with classify_sweep over @limit.
MismatchReport check_fixture(const TableFixture& fixture, const CheckOptions& options = {});
MismatchReport check_fixture(std::string_view name, const CheckOptions& options = {});

struct SweepOptions {
    /// Compare with the census. When false, compare with the independent
    /// Carmichael-exponent route instead, which has no size cap.
    bool use_oracle = true;
    unsigned jobs = 1;
    u64 oracle_cap = kDefaultOracleCap;
};

/// Compares l_of(m) for every m in [lo, hi]. The report is independent of
/// `jobs`: mismatches are listed in increasing m.
MismatchReport sweep(u64 lo, u64 hi, const SweepOptions& options = {});

/// L(m) as ord_n(2) where n is the odd part of the Carmichael exponent of m.
u64 l_via_carmichael(u64 m);

/// Carmichael exponent lambda(m) of the unit group modulo m.
u64 carmichael_lambda(u64 m);

using RatioClasses = std::map<u64, std::vector<u64>>;

struct ClassificationResult {
    RatioClasses groups;         // k -> primes p <= limit, ascending
    MismatchReport report;       // against the ratio-classes fixture
    std::vector<u64> unlisted;   // computed k values the fixture does not list
};

inline constexpr u64 kClassifyMaxLimit = 100'000;

/// Groups the primes p <= limit by classify_ratio(p).k and compares each
/// listed prefix and the adjacent-difference divisibility against the
/// ratio-classes fixture. Listed primes above `limit` are not compared.
ClassificationResult classify_sweep(u64 limit);

/// n-th prime, 1-based (nth_prime(1) == 2).
u64 nth_prime(u64 n);

/// Compares a b-file of L(p) values. Index `first_index` maps to the
/// prime 2, the next index to 3, and so on. Throws ParseError on malformed
/// lines and InvalidArgument when the file cannot be opened.
MismatchReport oeis_compare(const std::filesystem::path& path, u64 first_index = 1);
MismatchReport oeis_compare(std::istream& in, std::string_view source, u64 first_index = 1);

}  // namespace sqcycles
