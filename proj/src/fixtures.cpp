#include "sqcycles/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "sqcycles/errors.hpp"

namespace sqcycles {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixture_texts();
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

std::optional<u64> parse_u64(std::string_view s) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::vector<u64> parse_terms(std::string_view text, FixtureKind kind, std::string_view source,
                             std::size_t line) {
    std::vector<u64> out;
    if (kind == FixtureKind::l_value) {
        for (auto part : split(text, '*')) {
            auto v = parse_u64(part);
            if (!v) throw ParseError(std::string(source), line, "bad factor '" + std::string(part) + "'");
            out.push_back(*v);
        }
        return out;
    }
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        auto v = parse_u64(token);
        if (!v) throw ParseError(std::string(source), line, "bad list entry '" + token + "'");
        out.push_back(*v);
    }
    if (out.empty()) throw ParseError(std::string(source), line, "empty expected list");
    return out;
}

std::optional<FixtureKind> kind_from_string(std::string_view s) {
    if (s == "l-value") return FixtureKind::l_value;
    if (s == "cycle") return FixtureKind::cycle;
    if (s == "ratio-class") return FixtureKind::ratio_class;
    return std::nullopt;
}

}  // namespace

std::string_view to_string(FixtureKind kind) noexcept {
    switch (kind) {
        case FixtureKind::l_value: return "l-value";
        case FixtureKind::cycle: return "cycle";
        case FixtureKind::ratio_class: return "ratio-class";
    }
    return "unknown";
}

u64 FixtureRow::expected_value() const {
    u64 v = 1;
    for (u64 t : expected_terms) v = checked_mul(v, t);
    return v;
}

TableFixture parse_fixture(std::string_view text, std::string_view source) {
    TableFixture fx;
    bool have_kind = false;
    // Row identity: input, plus the first listed element for cycle rows
    // (one modulus may carry several printed cycles).
    std::set<std::pair<u64, u64>> seen;
    std::size_t line_no = 0;
    const std::string src(source);
    for (auto raw : split(text, '\n')) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '@') {
            const auto space = line.find(' ');
            const auto key = line.substr(1, space == std::string_view::npos ? line.size() : space - 1);
            const auto value = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
            if (key == "name") {
                fx.name = std::string(value);
            } else if (key == "kind") {
                auto k = kind_from_string(value);
                if (!k) throw ParseError(src, line_no, "unknown kind '" + std::string(value) + "'");
                fx.kind = *k;
                have_kind = true;
            } else if (key == "limit") {
                auto v = parse_u64(value);
                if (!v) throw ParseError(src, line_no, "bad limit");
                fx.limit = *v;
            } else {
                throw ParseError(src, line_no, "unknown directive '@" + std::string(key) + "'");
            }
            continue;
        }
        if (!have_kind) throw ParseError(src, line_no, "row before @kind");
        const auto fields = split(line, '|');
        if (fields.size() < 3 || fields.size() > 4)
            throw ParseError(src, line_no, "expected 3 or 4 '|'-separated fields");
        FixtureRow row;
        row.line = line_no;
        auto input = parse_u64(fields[0]);
        if (!input) throw ParseError(src, line_no, "bad input '" + std::string(fields[0]) + "'");
        row.input = *input;
        row.expected_text = std::string(fields[1]);
        row.expected_terms = parse_terms(fields[1], fx.kind, source, line_no);
        row.provenance = std::string(fields[2]);
        if (row.provenance.empty()) throw ParseError(src, line_no, "missing provenance");
        if (fields.size() == 4) {
            constexpr std::string_view prefix = "witness ";
            if (!fields[3].starts_with(prefix)) throw ParseError(src, line_no, "expected 'witness <residue>'");
            auto w = parse_u64(trim(fields[3].substr(prefix.size())));
            if (!w) throw ParseError(src, line_no, "bad witness");
            row.witness = *w;
        }
        const u64 second_key = fx.kind == FixtureKind::cycle ? row.expected_terms.front() : 0;
        if (!seen.emplace(row.input, second_key).second)
            throw ParseError(src, line_no, "duplicate input " + std::to_string(row.input));
        fx.rows.push_back(std::move(row));
    }
    if (fx.name.empty()) throw ParseError(src, line_no, "missing @name");
    if (!have_kind) throw ParseError(src, line_no, "missing @kind");
    return fx;
}

namespace {

const std::map<std::string, TableFixture, std::less<>>& registry() {
    static const auto fixtures = [] {
        std::map<std::string, TableFixture, std::less<>> out;
        for (const auto& [file, text] : detail::embedded_fixture_texts()) {
            auto fx = parse_fixture(text, file);
            auto name = fx.name;
            out.emplace(std::move(name), std::move(fx));
        }
        return out;
    }();
    return fixtures;
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [name, fx] : registry()) out.push_back(name);
    return out;
}

const TableFixture& fixture(std::string_view name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        std::string known;
        for (const auto& [n, fx] : reg) known += (known.empty() ? "" : ", ") + n;
        throw InvalidArgument("unknown fixture '" + std::string(name) + "' (known: " + known + ")");
    }
    return it->second;
}

}  // namespace sqcycles
