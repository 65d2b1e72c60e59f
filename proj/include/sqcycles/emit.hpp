#pragma once

// Text, CSV and JSON renderings of the library's results.
//
// CSV and JSON layouts are stable. JSON documents use sorted keys, integer
// values only and two-space indentation, so parsing and re-dumping any
// emitted document reproduces it byte for byte.

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sqcycles/l_formulas.hpp"
#include "sqcycles/squaring_graph.hpp"
#include "sqcycles/verify.hpp"

namespace sqcycles {

enum class OutputFormat { text, csv, json };

std::optional<OutputFormat> output_format_from_string(std::string_view name) noexcept;

nlohmann::json to_json(const LValue& value);
nlohmann::json to_json(const CycleRecord& cycle);
nlohmann::json to_json(const MismatchReport& report);
nlohmann::json to_json(const ClassificationResult& result);

/// Canonical serialisation used by every JSON emitter.
std::string dump_json(const nlohmann::json& doc);

void emit(std::ostream& out, const LValue& value, OutputFormat format);

struct CycleListing {
    u64 modulus = 0;
    u64 max_length = 0;
    std::size_t total_cycles = 0;
    std::vector<CycleRecord> cycles;
    bool with_elements = false;
};

void emit(std::ostream& out, const CycleListing& listing, OutputFormat format);
void emit(std::ostream& out, const MismatchReport& report, OutputFormat format);
void emit(std::ostream& out, const ClassificationResult& result, OutputFormat format);
/// Several reports as one document (a JSON array, one CSV table, or text blocks).
void emit(std::ostream& out, const std::vector<MismatchReport>& reports, OutputFormat format);

}  // namespace sqcycles
