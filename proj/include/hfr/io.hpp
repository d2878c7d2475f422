// hfr/io.hpp — "hfr-interchange/1" JSON documents
#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "hfr/astruct.hpp"
#include "hfr/complex.hpp"
#include "hfr/dstruct.hpp"

namespace hfr::io {

inline constexpr const char* kFormat = "hfr-interchange/1";

struct AlgebraElement {
    Algebra alg;
    Element value;
};

using Document = std::variant<Pmc, AlgebraElement, TypeD, TypeA, TypeDA, TypeDD, ChainComplex>;

const char* kind_of(const Document& d);

// canonical text: sorted keys, sorted arrow lists, trailing newline
std::string dump(const Document& d);
void save(const Document& d, std::ostream& sink);     // SinkFailure
void save_file(const Document& d, const std::string& path);

// every invariant a constructor would enforce is re-checked;
// ParseError for malformed text, ValidationError naming the broken invariant
Document load(const std::string& text);
Document load_file(const std::string& path);

}  // namespace hfr::io
