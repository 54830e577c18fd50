#pragma once

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "hodgeint/suites.hpp"

namespace hodgeint {

inline std::string format_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << ms;
    return os.str();
}

inline std::string render_text(const std::vector<SuiteReport>& reports, bool timing) {
    std::ostringstream os;
    size_t total = 0, failed = 0;
    for (const auto& report : reports) {
        os << "suite " << report.suite << " (" << report.checks.size() << " checks)\n";
        for (const auto& c : report.checks) {
            os << "  [" << (c.pass ? " ok " : "FAIL") << "] " << c.id << ": " << c.lhs.str()
               << (c.pass ? " == " : " != ") << c.rhs.str() << "\n";
            ++total;
            if (!c.pass) ++failed;
        }
        os << "suite " << report.suite << ": " << (report.all_pass() ? "PASS" : "FAIL");
        if (timing) os << " (" << format_ms(report.elapsed_ms) << " ms)";
        os << "\n";
    }
    os << "verify: " << (failed == 0 ? "PASS" : "FAIL") << " (" << (total - failed) << "/" << total
       << " checks)\n";
    return os.str();
}

inline std::string render_json(const std::vector<SuiteReport>& reports, bool timing) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& report : reports) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"id", c.id}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"pass", c.pass}});
        nlohmann::json jr{{"suite", report.suite}, {"pass", report.all_pass()}, {"checks", std::move(checks)}};
        if (timing) jr["elapsed_ms"] = report.elapsed_ms;
        out.push_back(std::move(jr));
    }
    return out.dump(2) + "\n";
}

inline std::string render_csv(const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    os << "suite,check_id,lhs,rhs,pass\n";
    for (const auto& report : reports)
        for (const auto& c : report.checks)
            os << report.suite << ",\"" << c.id << "\"," << c.lhs.str() << "," << c.rhs.str() << ","
               << (c.pass ? "true" : "false") << "\n";
    return os.str();
}

} // namespace hodgeint
