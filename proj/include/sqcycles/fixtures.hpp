#pragma once

// Reference tables shipped with the library. Each lives in
// data/fixtures/<name>.txt and is compiled into the binary at build time.
//
// File format, one row per line:
//
//     @name <identifier>
//     @kind l-value | cycle | ratio-class
//     @limit <n>                        (optional)
//     input | expected | provenance [| witness <residue>]
//
// Lines starting with '#' are comments. For l-value rows `expected` is a
// product such as "20*11", kept as printed; for cycle and ratio-class rows
// it is a whitespace-separated list.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqcycles/num_core.hpp"

namespace sqcycles {

enum class FixtureKind { l_value, cycle, ratio_class };

std::string_view to_string(FixtureKind kind) noexcept;

struct FixtureRow {
    u64 input = 0;
    std::string expected_text;
    std::vector<u64> expected_terms;
    std::string provenance;
    std::optional<u64> witness;
    std::size_t line = 0;

    /// Product of the terms; meaningful for l-value rows.
    u64 expected_value() const;
};

struct TableFixture {
    std::string name;
    FixtureKind kind = FixtureKind::l_value;
    std::optional<u64> limit;
    std::vector<FixtureRow> rows;
};

/// Parses one fixture document; throws ParseError with the line number.
TableFixture parse_fixture(std::string_view text, std::string_view source);

/// Names of the embedded fixtures, in a stable order.
std::vector<std::string> fixture_names();

/// Embedded fixture by name; throws InvalidArgument for an unknown name.
const TableFixture& fixture(std::string_view name);

}  // namespace sqcycles
