#pragma once

#include "wmscss/digraph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace wmscss {

// Text format, one graph per file:
//   n m
//   tail head weight     (m lines, 0-based ids, weight "p/q" or decimal)
// Lines whose first non-blank character is '#' are ignored. Writing always
// emits weights in canonical "p/q" form, so rational literals round-trip
// bit-exactly.
Digraph read_graph(std::istream& in);
Digraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Digraph& g);
void write_graph_file(const std::string& path, const Digraph& g);

// Sidecar solution format: one "arc-id p/q" pair per line, missing arcs are
// zero. Same '#' comment rule.
std::vector<Rational> read_solution(std::istream& in, int arc_count);
std::vector<Rational> read_solution_file(const std::string& path, int arc_count);
void write_solution(std::ostream& out, const std::vector<Rational>& values);
void write_solution_file(const std::string& path, const std::vector<Rational>& values);

}  // namespace wmscss
