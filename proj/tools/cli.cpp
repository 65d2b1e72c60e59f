#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "sqcycles/emit.hpp"
#include "sqcycles/errors.hpp"
#include "sqcycles/l_formulas.hpp"
#include "sqcycles/squaring_graph.hpp"
#include "sqcycles/verify.hpp"

namespace sqcycles::cli {

namespace {

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::text}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

struct Settings {
    OutputFormat format = OutputFormat::text;
};

void add_format(CLI::App* cmd, Settings& s) {
    cmd->add_option("--format", s.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

int exit_for(const MismatchReport& r) { return r.passed() ? kSuccess : kMismatch; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Longest cycles of the squaring map x -> x^2 mod m", "sqcycles"};
    app.require_subcommand(1);
    Settings settings;
    std::function<int()> action;

    // l
    u64 l_modulus = 0;
    std::string l_route = "auto";
    auto* l_cmd = app.add_subcommand("l", "Compute L(m), the longest cycle length");
    l_cmd->add_option("m", l_modulus, "Modulus")->required();
    l_cmd->add_option("--route", l_route, "auto | formula | oracle")
        ->check(CLI::IsMember({"auto", "formula", "oracle"}));
    add_format(l_cmd, settings);
    l_cmd->callback([&] {
        action = [&] {
            if (l_modulus == 0) throw InvalidArgument("modulus must be positive");
            LValue v;
            if (l_route == "oracle")
                v = {l_modulus, l_bruteforce(l_modulus, oracle_cap_from_env()), Route::brute_force};
            else
                v = l_of(l_modulus);
            emit(out, v, settings.format);
            return int{kSuccess};
        };
    });

    // cycles
    u64 c_modulus = 0;
    bool c_all = false, c_largest = false, c_elements = false;
    auto* c_cmd = app.add_subcommand("cycles", "List cycles of the squaring map");
    c_cmd->add_option("m", c_modulus, "Modulus")->required();
    auto* all_flag = c_cmd->add_flag("--all", c_all, "List every cycle");
    c_cmd->add_flag("--largest", c_largest, "List only cycles of maximum length (default)")->excludes(all_flag);
    c_cmd->add_flag("--elements", c_elements, "Print each orbit from its smallest element");
    add_format(c_cmd, settings);
    c_cmd->callback([&] {
        action = [&] {
            if (c_modulus == 0) throw InvalidArgument("modulus must be positive");
            const u64 cap = oracle_cap_from_env();
            auto summary = enumerate_cycles(c_modulus, {.cap = cap, .with_elements = c_elements});
            CycleListing listing{c_modulus, summary.max_length, summary.cycles.size(), {}, c_elements};
            for (auto& c : summary.cycles) {
                if (c_all || c.length == summary.max_length) listing.cycles.push_back(std::move(c));
            }
            emit(out, listing, settings.format);
            return int{kSuccess};
        };
    });

    // table
    std::string t_name;
    bool t_list = false;
    auto* t_cmd = app.add_subcommand("table", "Check an embedded reference table (all tables if no name)");
    t_cmd->add_option("name", t_name, "Fixture name");
    t_cmd->add_flag("--list", t_list, "List fixture names");
    add_format(t_cmd, settings);
    t_cmd->callback([&] {
        action = [&] {
            if (t_list) {
                for (const auto& n : fixture_names()) out << n << '\n';
                return int{kSuccess};
            }
            const CheckOptions opts{.oracle_cap = oracle_cap_from_env()};
            if (!t_name.empty()) {
                auto report = check_fixture(t_name, opts);
                emit(out, report, settings.format);
                return exit_for(report);
            }
            std::vector<MismatchReport> reports;
            for (const auto& n : fixture_names()) reports.push_back(check_fixture(n, opts));
            emit(out, reports, settings.format);
            return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); })
                       ? int{kSuccess}
                       : int{kMismatch};
        };
    });

    // classify
    u64 k_limit = 360;
    auto* k_cmd = app.add_subcommand("classify", "Group primes by the ratio (p-1)L(p)/L(p^2)");
    k_cmd->add_option("--limit", k_limit, "Largest prime to classify")->check(CLI::Range(u64{2}, kClassifyMaxLimit));
    add_format(k_cmd, settings);
    k_cmd->callback([&] {
        action = [&] {
            auto result = classify_sweep(k_limit);
            emit(out, result, settings.format);
            return exit_for(result.report);
        };
    });

    // verify
    u64 v_min = 1, v_max = 20000;
    bool v_oracle = false;
    unsigned v_jobs = 1;
    auto* v_cmd = app.add_subcommand("verify", "Sweep a range comparing the closed form with another route");
    v_cmd->add_option("--min", v_min, "First modulus")->check(CLI::PositiveNumber);
    v_cmd->add_option("--max", v_max, "Last modulus")->check(CLI::PositiveNumber);
    v_cmd->add_flag("--oracle", v_oracle, "Compare with the brute-force census");
    v_cmd->add_option("--jobs", v_jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    add_format(v_cmd, settings);
    v_cmd->callback([&] {
        action = [&] {
            auto report = sweep(v_min, v_max,
                                {.use_oracle = v_oracle, .jobs = v_jobs, .oracle_cap = oracle_cap_from_env()});
            emit(out, report, settings.format);
            return exit_for(report);
        };
    });

    // oeis
    std::string o_path;
    u64 o_first = 1;
    auto* o_cmd = app.add_subcommand("oeis", "Compare a b-file of L(p) values");
    o_cmd->add_option("path", o_path, "b-file path")->required();
    o_cmd->add_option("--offset-rule", o_first, "Index that corresponds to the prime 2");
    add_format(o_cmd, settings);
    o_cmd->callback([&] {
        action = [&] {
            auto report = oeis_compare(o_path, o_first);
            emit(out, report, settings.format);
            return exit_for(report);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? int{kSuccess} : int{kUsage};
    }

    try {
        return action();
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return kMismatch;
    }
}

}  // namespace sqcycles::cli
