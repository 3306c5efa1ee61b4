#ifndef HMSING_VERIFY_HPP
#define HMSING_VERIFY_HPP

#include <string>
#include <vector>

#include "report.hpp"

namespace hmsing {

struct VerificationFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    long cases = 0;
    std::vector<VerificationFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Registered identity suites, in execution order.
std::vector<std::string> verify_suite_names();

// Run one suite.  Recognized params: "m_max" and "order" for the
// geometric-series identity suite.
VerificationReport run_suite(const std::string& name, const json& params = json::object());

std::vector<VerificationReport> run_all_suites();

json report_to_json(const VerificationReport& r);

}  // namespace hmsing

#endif
