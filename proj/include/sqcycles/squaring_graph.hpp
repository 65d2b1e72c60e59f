#pragma once

/**
 * @file squaring_graph.hpp
 * @brief Brute-force cycle census of the squaring map x -> x^2 mod m.
 *
 * The functional graph has one outgoing edge per residue, so every
 * component is a single cycle with trees hanging off it. The census walks
 * each residue exactly once with a one-byte-per-residue state array, which
 * bounds memory by the configured cap (2^26 residues unless overridden).
 *
 * Fixed points such as 0 and 1 count as cycles of length 1.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "sqcycles/num_core.hpp"

namespace sqcycles {

inline constexpr u64 kDefaultOracleCap = u64{1} << 26;

/// Environment variable that overrides kDefaultOracleCap for the CLI.
inline constexpr const char* kOracleCapEnv = "SQCYCLES_ORACLE_CAP";

struct CycleRecord {
    u64 representative = 0;  // smallest residue on the cycle
    u64 length = 0;
    // Orbit starting at the representative; empty unless requested.
    std::vector<u64> elements;

    friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

struct GraphSummary {
    u64 modulus = 0;
    std::vector<CycleRecord> cycles;  // sorted by representative
    u64 max_length = 0;
    u64 on_cycle_count = 0;
};

struct EnumerateOptions {
    u64 cap = kDefaultOracleCap;
    bool with_elements = false;
};

u64 step(u64 x, u64 m);

/// [x, x^2, x^4, ...] of length max_steps + 1.
std::vector<u64> trajectory(u64 x, u64 m, std::size_t max_steps);

/// Length of the cycle eventually reached from x (Brent's algorithm).
u64 cycle_period(u64 x, u64 m);

/// Number of steps from x before it first lands on its cycle.
u64 tail_length(u64 x, u64 m);

/// True iff x lies on a cycle of the squaring map.
bool on_cycle(u64 x, u64 m);

/// Full census; throws LimitExceeded when m > options.cap.
GraphSummary enumerate_cycles(u64 m, const EnumerateOptions& options = {});

/// Maximum cycle length from the census, without materialising cycles.
u64 l_bruteforce(u64 m, u64 cap = kDefaultOracleCap);

/// Every cycle of maximum length, elements populated.
std::vector<CycleRecord> largest_cycles(u64 m, u64 cap = kDefaultOracleCap);

/// Orbit of x rotated so it starts at its minimum. x must be on a cycle.
CycleRecord cycle_through(u64 x, u64 m);

/// Reads kOracleCapEnv; falls back to kDefaultOracleCap when unset.
/// Throws InvalidArgument for a malformed value.
u64 oracle_cap_from_env();

}  // namespace sqcycles
