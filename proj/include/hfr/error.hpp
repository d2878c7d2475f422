// hfr/error.hpp — one exception type carrying a stable error name
#pragma once

#include <stdexcept>
#include <string>

namespace hfr {

struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& detail)
        : std::runtime_error(detail.empty() ? c : c + ": " + detail), code(std::move(c)) {}
};

}  // namespace hfr
