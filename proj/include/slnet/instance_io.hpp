#pragma once

#include <string>
#include <string_view>

#include "slnet/instance.hpp"

namespace slnet {

// Text format (1-based node ids, whitespace separated, `c` starts a comment line):
//
//   p ndbd <n> <m> <L>
//   p spanner <n> <m> <num>/<den>
//   p slst <n> <m> <root> <|R|>     followed by |R| lines  t <terminal> <bound>
//   a <tail> <head> <cost> <length>   (m lines)

/// Throws ParseError carrying the offending 1-based line number.
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);

/// Canonical serialization: terminals by id, edges in id order, no comments.
std::string write_instance(const Instance& inst);

}  // namespace slnet
