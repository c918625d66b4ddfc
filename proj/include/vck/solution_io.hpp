#pragma once

#include <optional>
#include <string>
#include <utility>

#include "vck/algebra.hpp"

namespace vck {

// Text format: header "n=<N> base=<0|1>", then N rows of N cells "z,w"
// separated by spaces; a blank line and a second block for beta when present.
struct SolutionFile {
    SolutionTable S;
    std::optional<SolutionTable> beta;
};

SolutionFile parse_solution_file(const std::string& text);
std::string format_solution_file(const SolutionTable& S,
                                 const SolutionTable* beta = nullptr, int base = 1);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace vck
