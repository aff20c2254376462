#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "pw1/edit_ops.hpp"

namespace pw1 {

// Malformed instance or witness text; `line` is 1-based (0 when not tied to a line).
struct ParseError : InputError {
    ParseError(std::size_t line_number, const std::string& what)
        : InputError(line_number ? "line " + std::to_string(line_number) + ": " + what : what), line(line_number) {}
    std::size_t line;
};

// Grammar, one directive per line:
//   c <comment>
//   p <pove|povs|tovs> <n> <m> <k>
//   s <count> <id>...        optional, at most once, before any edge
//   e <u> <v>                exactly m lines, 1 <= u, v <= n
// Vertices are 1..n; S defaults to all vertices.
Instance parse_instance(std::string_view text);

// Canonical text: header, the s line only when S is not all of V, edges sorted with u < v.
// Ids must already be 1..n (see relabel_compact).
std::string format_instance(const Instance& inst);

// Renumbers the live vertices 1..n in ascending order of their current ids.
Instance relabel_compact(const Instance& inst);

// Witness lines: "w explode <v>" and "w split <v> <d> <u1> ... <ud>". Lines starting with
// "c", "r" or "min" are skipped so solver output can be fed back directly.
Witness parse_witness(std::string_view text, Problem problem);
std::string format_witness(const Witness& w);

}  // namespace pw1
