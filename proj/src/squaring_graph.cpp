#include "sqcycles/squaring_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "sqcycles/errors.hpp"

namespace sqcycles {

namespace {

constexpr u64 kNarrowLimit = u64{1} << 32;

inline u64 square_mod(u64 x, u64 m) {
    if (m <= kNarrowLimit) return x * x % m;
    return mod_mul(x, x, m);
}

void require_residue(u64 x, u64 m, const char* who) {
    if (m == 0) throw InvalidArgument(std::string(who) + ": modulus must be positive");
    if (x >= m)
        throw InvalidArgument(std::string(who) + ": residue " + std::to_string(x) +
                              " is not below modulus " + std::to_string(m));
}

void require_cap(u64 m, u64 cap) {
    if (m == 0) throw InvalidArgument("modulus must be positive");
    if (m > cap)
        throw LimitExceeded("modulus " + std::to_string(m) + " exceeds the oracle cap of " +
                            std::to_string(cap) + " residues (set " + kOracleCapEnv +
                            " to raise it)");
}

// Visits every residue once. For each cycle, calls on_cycle(x) with some
// element x of that cycle, exactly once per cycle.
template <typename OnCycle>
void walk_graph(u64 m, OnCycle&& on_cycle) {
    enum : std::uint8_t { kUnseen = 0, kOnPath = 1, kDone = 2 };
    std::vector<std::uint8_t> state(m, kUnseen);
    for (u64 start = 0; start < m; ++start) {
        if (state[start] != kUnseen) continue;
        u64 x = start;
        while (state[x] == kUnseen) {
            state[x] = kOnPath;
            x = square_mod(x, m);
        }
        if (state[x] == kOnPath) on_cycle(x);
        for (x = start; state[x] == kOnPath; x = square_mod(x, m)) state[x] = kDone;
    }
}

}  // namespace

u64 step(u64 x, u64 m) {
    require_residue(x, m, "step");
    return square_mod(x, m);
}

std::vector<u64> trajectory(u64 x, u64 m, std::size_t max_steps) {
    require_residue(x, m, "trajectory");
    std::vector<u64> out;
    out.reserve(max_steps + 1);
    out.push_back(x);
    for (std::size_t i = 0; i < max_steps; ++i) {
        x = square_mod(x, m);
        out.push_back(x);
    }
    return out;
}

u64 cycle_period(u64 x, u64 m) {
    require_residue(x, m, "cycle_period");
    u64 power = 1, period = 1;
    u64 tortoise = x;
    u64 hare = square_mod(x, m);
    while (tortoise != hare) {
        if (power == period) {
            tortoise = hare;
            power <<= 1;
            period = 0;
        }
        hare = square_mod(hare, m);
        ++period;
    }
    return period;
}

u64 tail_length(u64 x, u64 m) {
    const u64 period = cycle_period(x, m);
    u64 lead = x;
    for (u64 i = 0; i < period; ++i) lead = square_mod(lead, m);
    u64 tail = 0;
    for (u64 trail = x; trail != lead; ++tail) {
        trail = square_mod(trail, m);
        lead = square_mod(lead, m);
    }
    return tail;
}

bool on_cycle(u64 x, u64 m) {
    const u64 period = cycle_period(x, m);
    u64 y = x;
    for (u64 i = 0; i < period; ++i) y = square_mod(y, m);
    return y == x;
}

CycleRecord cycle_through(u64 x, u64 m) {
    require_residue(x, m, "cycle_through");
    CycleRecord rec;
    u64 y = x;
    u64 lowest = x;
    do {
        lowest = std::min(lowest, y);
        ++rec.length;
        y = square_mod(y, m);
        if (rec.length > m) throw InvalidArgument("cycle_through: residue is not on a cycle");
    } while (y != x);
    rec.representative = lowest;
    rec.elements.reserve(rec.length);
    y = lowest;
    for (u64 i = 0; i < rec.length; ++i) {
        rec.elements.push_back(y);
        y = square_mod(y, m);
    }
    return rec;
}

GraphSummary enumerate_cycles(u64 m, const EnumerateOptions& options) {
    require_cap(m, options.cap);
    GraphSummary summary;
    summary.modulus = m;
    walk_graph(m, [&](u64 x) {
        CycleRecord rec;
        if (options.with_elements) {
            rec = cycle_through(x, m);
        } else {
            u64 y = x;
            rec.representative = x;
            do {
                rec.representative = std::min(rec.representative, y);
                ++rec.length;
                y = square_mod(y, m);
            } while (y != x);
        }
        summary.max_length = std::max(summary.max_length, rec.length);
        summary.on_cycle_count += rec.length;
        summary.cycles.push_back(std::move(rec));
    });
    std::sort(summary.cycles.begin(), summary.cycles.end(),
              [](const CycleRecord& a, const CycleRecord& b) {
                  return a.representative < b.representative;
              });
    return summary;
}

u64 l_bruteforce(u64 m, u64 cap) {
    require_cap(m, cap);
    u64 best = 0;
    walk_graph(m, [&](u64 x) {
        u64 len = 0;
        u64 y = x;
        do {
            ++len;
            y = square_mod(y, m);
        } while (y != x);
        best = std::max(best, len);
    });
    return best;
}

std::vector<CycleRecord> largest_cycles(u64 m, u64 cap) {
    auto summary = enumerate_cycles(m, {.cap = cap, .with_elements = false});
    std::vector<CycleRecord> out;
    for (const auto& c : summary.cycles) {
        if (c.length == summary.max_length) out.push_back(cycle_through(c.representative, m));
    }
    return out;
}

u64 oracle_cap_from_env() {
    const char* raw = std::getenv(kOracleCapEnv);
    if (raw == nullptr || *raw == '\0') return kDefaultOracleCap;
    std::string_view text(raw);
    u64 value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
        throw InvalidArgument(std::string(kOracleCapEnv) + " must be a positive integer, got '" +
                              std::string(text) + "'");
    return value;
}

}  // namespace sqcycles
