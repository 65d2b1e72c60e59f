#include "sqcycles/verify.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <thread>

#include "sqcycles/errors.hpp"
#include "sqcycles/l_formulas.hpp"

namespace sqcycles {

namespace {

std::string str(u64 v) { return std::to_string(v); }

std::string join(const std::vector<u64>& values) {
    std::string out;
    for (u64 v : values) {
        if (!out.empty()) out += ' ';
        out += str(v);
    }
    return out;
}

// Fermat closed form for m = F_k or F_k^2, if m is one of those.
std::optional<LValue> fermat_closed_form(u64 m) {
    for (unsigned k = 0; k <= 4; ++k) {
        const auto single = fermat_l(k);
        if (single.modulus == m) return single;
        const auto square = fermat_l_square(k);
        if (square.modulus == m) return square;
    }
    return std::nullopt;
}

void check_l_row(const FixtureRow& row, const CheckOptions& options, MismatchReport& report) {
    const u64 m = row.input;
    const u64 expected = row.expected_value();
    const std::string input = str(m);
    const std::string want = row.expected_text == str(expected)
                                 ? row.expected_text
                                 : row.expected_text + " = " + str(expected);

    const auto formula = l_of(m);
    if (formula.value != expected)
        report.mismatches.push_back({input, want, str(formula.value),
                                     "formula (" + std::string(to_string(formula.route)) + "), " +
                                         row.provenance});

    if (m <= options.oracle_cap) {
        const u64 brute = l_bruteforce(m, options.oracle_cap);
        if (brute != expected)
            report.mismatches.push_back({input, want, str(brute), "census, " + row.provenance});
    } else if (!row.witness) {
        report.notes.push_back(input + ": above the oracle cap, formula only");
    }

    if (auto closed = fermat_closed_form(m); closed && closed->value != expected)
        report.mismatches.push_back({input, want, str(closed->value), "Fermat closed form, " + row.provenance});

    if (row.witness) {
        const u64 w = *row.witness;
        const u64 period = w < m ? cycle_period(w, m) : 0;
        if (w >= m || period != expected)
            report.mismatches.push_back({input, want, str(period),
                                         "period of witness " + str(w) + ", " + row.provenance});
    }
}

void check_cycle_row(const FixtureRow& row, MismatchReport& report) {
    const u64 m = row.input;
    const auto& printed = row.expected_terms;
    const std::string input = str(m) + ":" + str(printed.front());
    if (printed.front() >= m) {
        report.mismatches.push_back({input, row.expected_text, "residue out of range", row.provenance});
        return;
    }
    auto replay = trajectory(printed.front(), m, printed.size());
    const bool closes = replay.back() == printed.front();
    replay.pop_back();
    if (replay != printed || !closes) {
        std::string got = join(replay) + (closes ? "" : " (does not close)");
        report.mismatches.push_back({input, row.expected_text, std::move(got), row.provenance});
        return;
    }
    const u64 period = cycle_period(printed.front(), m);
    if (period != printed.size())
        report.mismatches.push_back({input, str(printed.size()), str(period),
                                     "cycle period, " + row.provenance});
}

std::string group_label(u64 k) { return "k=" + str(k); }

ClassificationResult classify_against(u64 limit, const TableFixture& fx) {
    ClassificationResult result;
    auto& report = result.report;
    report.subject = "classify --limit " + str(limit);
    for (u64 p = 2; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        result.groups[classify_ratio(p).k].push_back(p);
    }
    for (const auto& row : fx.rows) {
        const u64 k = row.input;
        std::vector<u64> listed;
        for (u64 p : row.expected_terms) {
            if (p <= limit) listed.push_back(p);
        }
        ++report.checked;
        if (listed.size() < row.expected_terms.size())
            report.notes.push_back(group_label(k) + ": " +
                                   str(row.expected_terms.size() - listed.size()) +
                                   " listed primes above the limit not compared");
        auto it = result.groups.find(k);
        std::vector<u64> computed = it == result.groups.end() ? std::vector<u64>{} : it->second;
        std::vector<u64> prefix(computed.begin(),
                                computed.begin() + std::min(computed.size(), listed.size()));
        if (prefix != listed)
            report.mismatches.push_back({group_label(k), join(listed), join(prefix),
                                         "listed prefix, " + row.provenance});
        for (std::size_t i = 1; i < listed.size(); ++i) {
            if ((listed[i] - listed[i - 1]) % k != 0)
                report.mismatches.push_back({group_label(k),
                                             "difference divisible by " + str(k),
                                             str(listed[i - 1]) + " -> " + str(listed[i]),
                                             "adjacent difference, " + row.provenance});
        }
    }
    for (const auto& [k, primes] : result.groups) {
        const bool listed = std::any_of(fx.rows.begin(), fx.rows.end(),
                                        [k = k](const FixtureRow& r) { return r.input == k; });
        if (!listed) {
            result.unlisted.push_back(k);
            report.notes.push_back(group_label(k) + " not in the fixture: " + join(primes));
        }
    }
    return result;
}

}  // namespace

MismatchReport check_fixture(const TableFixture& fx, const CheckOptions& options) {
    if (fx.kind == FixtureKind::ratio_class) {
        auto result = classify_against(fx.limit.value_or(kClassifyMaxLimit), fx);
        result.report.subject = fx.name;
        return std::move(result.report);
    }
    MismatchReport report;
    report.subject = fx.name;
    for (const auto& row : fx.rows) {
        ++report.checked;
        if (fx.kind == FixtureKind::l_value)
            check_l_row(row, options, report);
        else
            check_cycle_row(row, report);
    }
    return report;
}

MismatchReport check_fixture(std::string_view name, const CheckOptions& options) {
    return check_fixture(fixture(name), options);
}

u64 carmichael_lambda(u64 m) {
    u64 lambda = 1;
    for (const auto& [p, e] : factorize(m)) {
        u64 part;
        if (p == 2)
            part = e == 1 ? 1 : e == 2 ? 2 : u64{1} << (e - 2);
        else
            part = (p - 1) * checked_pow(p, e - 1);
        lambda = lcm(lambda, part);
    }
    return lambda;
}

u64 l_via_carmichael(u64 m) {
    if (m == 0) throw InvalidArgument("l_via_carmichael: modulus must be positive");
    return multiplicative_order(2, odd_part(carmichael_lambda(m)));
}

MismatchReport sweep(u64 lo, u64 hi, const SweepOptions& options) {
    if (lo == 0 || lo > hi) throw InvalidArgument("sweep: need 1 <= lo <= hi");
    if (options.use_oracle && hi > options.oracle_cap)
        throw LimitExceeded("sweep: upper bound " + str(hi) + " exceeds the oracle cap of " +
                            str(options.oracle_cap) + " residues");
    const u64 count = hi - lo + 1;
    std::vector<std::optional<Mismatch>> slots(count);

    auto check_one = [&](u64 m) -> std::optional<Mismatch> {
        const u64 formula = l_of(m).value;
        const u64 other = options.use_oracle ? l_bruteforce(m, options.oracle_cap) : l_via_carmichael(m);
        if (formula == other) return std::nullopt;
        return Mismatch{str(m), str(other), str(formula),
                        options.use_oracle ? "formula vs census" : "formula vs Carmichael route"};
    };

    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1 || count < 2) {
        for (u64 i = 0; i < count; ++i) slots[i] = check_one(lo + i);
    } else {
        // Interleave so large moduli are spread across workers.
        std::vector<std::jthread> workers;
        std::vector<std::exception_ptr> errors(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (u64 i = w; i < count; i += jobs) slots[i] = check_one(lo + i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        workers.clear();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    MismatchReport report;
    report.subject = "sweep " + str(lo) + ".." + str(hi) +
                     (options.use_oracle ? " (census)" : " (Carmichael route)");
    report.checked = count;
    for (auto& s : slots) {
        if (s) report.mismatches.push_back(std::move(*s));
    }
    return report;
}

ClassificationResult classify_sweep(u64 limit) {
    if (limit > kClassifyMaxLimit)
        throw LimitExceeded("classify: limit " + str(limit) + " exceeds " + str(kClassifyMaxLimit));
    return classify_against(limit, fixture("ratio-classes"));
}

u64 nth_prime(u64 n) {
    if (n == 0) throw InvalidArgument("nth_prime: n must be at least 1");
    u64 p = 1;
    for (u64 seen = 0; seen < n;) {
        if (is_prime(++p)) ++seen;
    }
    return p;
}

MismatchReport oeis_compare(std::istream& in, std::string_view source, u64 first_index) {
    MismatchReport report;
    report.subject = "b-file " + std::string(source);
    const std::string src(source);
    std::vector<u64> primes;  // primes[i] is the (i+1)-th prime
    auto prime_at = [&](u64 position) {
        u64 p = primes.empty() ? 1 : primes.back();
        while (primes.size() < position) {
            while (!is_prime(++p)) {
            }
            primes.push_back(p);
        }
        return primes[position - 1];
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        if (!(fields >> index_text) || index_text.front() == '#') continue;
        if (!(fields >> value_text) || (fields >> extra))
            throw ParseError(src, line_no, "expected '<index> <value>'");
        u64 index = 0, value = 0;
        auto parse = [](const std::string& t, u64& out) {
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
            return ec == std::errc() && ptr == t.data() + t.size();
        };
        if (!parse(index_text, index) || !parse(value_text, value))
            throw ParseError(src, line_no, "non-integer field in '" + line + "'");
        if (index < first_index)
            throw ParseError(src, line_no,
                             "index " + str(index) + " precedes first index " + str(first_index));
        const u64 p = prime_at(index - first_index + 1);
        ++report.checked;
        const u64 got = l_prime(p).value;
        if (got != value) {
            if (report.mismatches.empty())
                report.notes.push_back("first divergence at index " + str(index) + " (p = " + str(p) + ")");
            report.mismatches.push_back({str(index), str(value), str(got),
                                         "L(" + str(p) + "), line " + str(line_no)});
        }
    }
    return report;
}

MismatchReport oeis_compare(const std::filesystem::path& path, u64 first_index) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open b-file '" + path.string() + "'");
    return oeis_compare(in, path.string(), first_index);
}

}  // namespace sqcycles
