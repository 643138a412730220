#pragma once

// Command-line surface: `poset` renders a single weight poset, `report`
// prints the full JSON report for one instance, and `verify` runs the check
// registry.  Exit codes: 0 on success, 1 on a failed check or resource
// limit, 2 on a usage error.  All reports go to stdout; progress goes to
// stderr; identical invocations produce byte-identical stdout.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gradpos/common.hpp"
#include "gradpos/gradings.hpp"
#include "gradpos/report.hpp"
#include "gradpos/root_system.hpp"
#include "gradpos/verify.hpp"

namespace gradpos::cli {

inline std::string lower_copy(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

inline int cmd_poset(const std::string& type, const std::string& grading,
                     const std::string& format) {
    auto [family, rank] = parse_type_name(type);
    RootSystem rs(family, rank);
    GradingSpec g = GradingSpec::parse(grading);
    WeightPoset wp = delta1_of(rs, g);
    if (format == "text") {
        std::cout << poset_text(rs, g, wp);
    } else if (format == "dot") {
        std::cout << poset_dot(rs, g, wp);
    } else {
        std::cout << poset_json(rs, g, wp).dump(2) << "\n";
    }
    return 0;
}

inline int cmd_report(const std::string& type, const std::string& grading) {
    auto [family, rank] = parse_type_name(type);
    RootSystem rs(family, rank);
    GradingSpec g = GradingSpec::parse(grading);
    std::cout << full_report(rs, g).dump(2) << "\n";
    return 0;
}

inline int cmd_verify(const std::string& theorem, int max_rank) {
    std::string group_filter;
    if (!theorem.empty()) {
        for (const auto& name : verify::group_names())
            if (lower_copy(name) == lower_copy(theorem)) group_filter = name;
        if (group_filter.empty()) {
            std::cerr << "error: unknown theorem selector '" << theorem << "'; valid selectors:";
            for (const auto& name : verify::group_names()) std::cerr << " " << name;
            std::cerr << "\n";
            return 2;
        }
    }
    std::vector<verify::CheckResult> results =
        verify::run_checks(group_filter, "", max_rank, &std::cerr);

    json out;
    out["selector"] = group_filter.empty() ? "all" : group_filter;
    out["max_rank"] = max_rank;
    json checks = json::array();
    long long failed = 0;
    for (const auto& res : results) {
        json jc;
        jc["name"] = res.name;
        jc["group"] = res.group;
        jc["description"] = res.description;
        jc["pass"] = res.pass;
        jc["failures"] = res.failures;
        jc["notes"] = res.notes;
        checks.push_back(std::move(jc));
        if (!res.pass) ++failed;
    }
    out["checks"] = std::move(checks);
    out["total"] = static_cast<long long>(results.size());
    out["failed"] = failed;
    out["ok"] = (failed == 0 && !results.empty());
    std::cout << out.dump(2) << "\n";
    return (failed == 0 && !results.empty()) ? 0 : 1;
}

inline int run(int argc, const char* const* argv) {
    CLI::App app{"graded weight posets of Z-graded simple Lie algebras"};
    app.require_subcommand(1);

    auto* poset_cmd = app.add_subcommand("poset", "render one weight poset");
    std::string poset_type, poset_grading = "standard:1", poset_format = "text";
    poset_cmd->add_option("--type", poset_type, "simple type, e.g. A3, D5, E8")->required();
    poset_cmd->add_option("--grading", poset_grading, "standard:<i> or extra-special");
    poset_cmd->add_option("--format", poset_format, "text, dot, or json")
        ->check(CLI::IsMember({"text", "dot", "json"}));

    auto* report_cmd = app.add_subcommand("report", "print the full JSON report of one instance");
    std::string report_type, report_grading = "standard:1";
    report_cmd->add_option("--type", report_type, "simple type, e.g. A3, D5, E8")->required();
    report_cmd->add_option("--grading", report_grading, "standard:<i> or extra-special");

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    bool verify_all = false;
    std::string theorem;
    int max_rank = 8;
    auto* all_opt = verify_cmd->add_flag("--all", verify_all, "run every check (the default)");
    auto* theorem_opt =
        verify_cmd->add_option("--theorem", theorem, "restrict to one check group");
    verify_cmd->add_option("--max-rank", max_rank, "largest rank to enumerate (1..8)")
        ->check(CLI::Range(1, 8));
    theorem_opt->excludes(all_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (poset_cmd->parsed()) return cmd_poset(poset_type, poset_grading, poset_format);
        if (report_cmd->parsed()) return cmd_report(report_type, report_grading);
        return cmd_verify(theorem, max_rank);
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace gradpos::cli
