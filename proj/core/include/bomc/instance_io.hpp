#pragma once

#include "bomc/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bomc {

/// Text format, one record per line, `#` starts a comment, blank lines are
/// ignored:
///   n m k          vertex count, edge count, |T|
///   t_1 ... t_k    terminal vertices (omitted when k = 0)
///   u v w          m edge lines; w is an integer, decimal, or p/q
/// Edge ids follow line order. Throws ParseError (with the physical line) on
/// malformed or inconsistent text, InvalidInput if the graph is disconnected.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance; weights in shortest exact form.
std::string format_instance(const Instance& inst);

/// FIX-EDGE, FIX-TRI-TOUR, FIX-TRI-PATH, FIX-C4 (unit weights).
const std::vector<std::string>& builtin_fixture_names();

/// Throws InvalidInput for an unknown name.
Instance builtin_fixture(std::string_view name);

}  // namespace bomc
