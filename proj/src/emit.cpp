#include "sqcycles/emit.hpp"

#include <ostream>
#include <string>

namespace sqcycles {

namespace {

using nlohmann::json;

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string joined(const std::vector<u64>& values, char sep) {
    std::string out;
    for (u64 v : values) {
        if (!out.empty()) out += sep;
        out += std::to_string(v);
    }
    return out;
}

void report_csv_rows(std::ostream& out, const MismatchReport& r) {
    for (const auto& m : r.mismatches)
        out << csv_field(r.subject) << ',' << csv_field(m.input) << ',' << csv_field(m.expected)
            << ',' << csv_field(m.got) << ',' << csv_field(m.detail) << '\n';
}

void report_text(std::ostream& out, const MismatchReport& r) {
    out << r.subject << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checked << " checked, "
        << r.mismatches.size() << " mismatches)\n";
    for (const auto& m : r.mismatches)
        out << "  " << m.input << ": expected " << m.expected << ", got " << m.got << "  [" << m.detail
            << "]\n";
    for (const auto& n : r.notes) out << "  note: " << n << '\n';
}

constexpr const char* kReportCsvHeader = "subject,input,expected,got,detail\n";

}  // namespace

std::optional<OutputFormat> output_format_from_string(std::string_view name) noexcept {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

json to_json(const LValue& v) {
    return json{{"modulus", v.modulus}, {"value", v.value}, {"route", std::string(to_string(v.route))}};
}

json to_json(const CycleRecord& c) {
    json doc{{"representative", c.representative}, {"length", c.length}};
    if (!c.elements.empty()) doc["elements"] = c.elements;
    return doc;
}

json to_json(const MismatchReport& r) {
    json mismatches = json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back({{"input", m.input}, {"expected", m.expected}, {"got", m.got}, {"detail", m.detail}});
    return json{{"subject", r.subject},
                {"checked", r.checked},
                {"passed", r.passed()},
                {"mismatches", std::move(mismatches)},
                {"notes", r.notes}};
}

json to_json(const ClassificationResult& result) {
    json groups = json::array();
    for (const auto& [k, primes] : result.groups) groups.push_back({{"k", k}, {"primes", primes}});
    return json{{"groups", std::move(groups)}, {"unlisted", result.unlisted}, {"report", to_json(result.report)}};
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

void emit(std::ostream& out, const LValue& v, OutputFormat format) {
    switch (format) {
        case OutputFormat::text:
            out << "L(" << v.modulus << ") = " << v.value << "  [route: " << to_string(v.route) << "]\n";
            break;
        case OutputFormat::csv:
            out << "modulus,L,route\n" << v.modulus << ',' << v.value << ',' << to_string(v.route) << '\n';
            break;
        case OutputFormat::json: out << dump_json(to_json(v)); break;
    }
}

void emit(std::ostream& out, const CycleListing& listing, OutputFormat format) {
    switch (format) {
        case OutputFormat::text:
            out << "modulus " << listing.modulus << ": " << listing.total_cycles << " cycles, max length "
                << listing.max_length << '\n';
            for (const auto& c : listing.cycles) {
                out << "  cycle at " << c.representative << ", length " << c.length;
                if (listing.with_elements) out << ": " << joined(c.elements, ' ');
                out << '\n';
            }
            break;
        case OutputFormat::csv:
            out << "representative,length,elements\n";
            for (const auto& c : listing.cycles)
                out << c.representative << ',' << c.length << ',' << joined(c.elements, ';') << '\n';
            break;
        case OutputFormat::json: {
            json cycles = json::array();
            for (const auto& c : listing.cycles) cycles.push_back(to_json(c));
            out << dump_json(json{{"modulus", listing.modulus},
                                  {"max_length", listing.max_length},
                                  {"total_cycles", listing.total_cycles},
                                  {"cycles", std::move(cycles)}});
            break;
        }
    }
}

void emit(std::ostream& out, const MismatchReport& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: report_text(out, r); break;
        case OutputFormat::csv:
            out << kReportCsvHeader;
            report_csv_rows(out, r);
            break;
        case OutputFormat::json: out << dump_json(to_json(r)); break;
    }
}

void emit(std::ostream& out, const std::vector<MismatchReport>& reports, OutputFormat format) {
    switch (format) {
        case OutputFormat::text:
            for (const auto& r : reports) report_text(out, r);
            break;
        case OutputFormat::csv:
            out << kReportCsvHeader;
            for (const auto& r : reports) report_csv_rows(out, r);
            break;
        case OutputFormat::json: {
            json doc = json::array();
            for (const auto& r : reports) doc.push_back(to_json(r));
            out << dump_json(doc);
            break;
        }
    }
}

void emit(std::ostream& out, const ClassificationResult& result, OutputFormat format) {
    switch (format) {
        case OutputFormat::text:
            for (const auto& [k, primes] : result.groups)
                out << "k=" << k << ": " << joined(primes, ' ') << '\n';
            report_text(out, result.report);
            break;
        case OutputFormat::csv:
            out << "k,primes\n";
            for (const auto& [k, primes] : result.groups) out << k << ',' << joined(primes, ';') << '\n';
            break;
        case OutputFormat::json: out << dump_json(to_json(result)); break;
    }
}

}  // namespace sqcycles
