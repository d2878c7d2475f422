// hfr/reproduce.hpp — the acceptance checks, one line each
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hfr {

struct CheckResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

struct Check {
    int id;
    std::string title;
    std::function<CheckResult()> run;
};

const std::vector<Check>& acceptance_checks();
CheckResult run_check(const Check& c);  // exceptions become failures
std::string format_result(const CheckResult& r);

}  // namespace hfr
