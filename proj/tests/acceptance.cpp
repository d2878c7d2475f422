// acceptance.cpp — one line per acceptance criterion
#include <iostream>

#include "hfr/reproduce.hpp"

int main() {
    bool ok = true;
    for (const auto& c : hfr::acceptance_checks()) {
        auto r = hfr::run_check(c);
        ok = ok && r.pass;
        std::cout << hfr::format_result(r) << "\n" << std::flush;
    }
    return ok ? 0 : 1;
}
