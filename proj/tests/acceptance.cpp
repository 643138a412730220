// Acceptance gate: runs the full check registry at the maximum rank bound and
// prints one PASS/FAIL line per acceptance criterion.  Exits nonzero if any
// criterion fails.

#include <iostream>
#include <map>
#include <string>

#include "gradpos/verify.hpp"

int main() {
    using namespace gradpos::verify;

    std::map<std::string, const CheckDef*> by_name;
    for (const auto& def : registry()) by_name[def.name] = &def;

    std::map<std::string, CheckResult> results;
    auto get = [&](const char* name) -> const CheckResult& {
        auto it = results.find(name);
        if (it != results.end()) return it->second;
        const CheckDef& def = *by_name.at(name);
        std::cerr << "running " << name << " ..." << std::flush;
        CheckResult r = run_check(def, 8);
        std::cerr << (r.pass ? " ok" : " FAIL") << " ("
                  << static_cast<long long>(r.seconds * 1000.0) << " ms)\n";
        for (const auto& f : r.failures) std::cerr << "    " << f << "\n";
        return results.emplace(name, std::move(r)).first->second;
    };

    bool all_pass = true;
    for (const auto& crit : acceptance_criteria()) {
        bool pass = true;
        for (const char* name : crit.checks)
            if (!get(name).pass) pass = false;
        std::cout << "CRITERION " << crit.number << ": " << (pass ? "PASS" : "FAIL") << " - "
                  << crit.description << std::endl;
        if (!pass) all_pass = false;
    }
    if (!all_pass) std::cerr << "acceptance: at least one criterion failed\n";
    return all_pass ? 0 : 1;
}
