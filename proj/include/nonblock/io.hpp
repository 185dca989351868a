#pragma once

#include <string>

#include "nonblock/automaton.hpp"
#include "nonblock/reduce.hpp"

namespace nonblock {

// Line-based ".aut" text format (UTF-8):
//
//   # comment
//   states N
//   alphabet e1 e2 ...
//   initial i1 i2 ...
//   marked m1 m2 ...
//   trans s e t
//
// Parsing accepts the sections in any order, blank lines, and comments;
// serialization always emits them in the order above with ids ascending.
// Parse errors carry "source:line:" diagnostics.
AutomatonData parse_aut(const std::string& text,
                        const std::string& source = "<string>");
AutomatonData load_aut(const std::string& path);
std::string serialize_aut(const Automaton& a);

// Graphviz rendering: marked states as double circles, one arrow per
// transition, entry arrows into initial states.
std::string to_dot(const Automaton& a, const std::string& name = "automaton");

// Edge-list graph text: `n <count>`, `e <u> <v>` per edge, `s <id>`,
// `t <id>`; comments and blank lines as in .aut.
Graph parse_graph(const std::string& text,
                  const std::string& source = "<string>");
Graph load_graph(const std::string& path);

// DIMACS-cnf subset: `c` comments, one `p cnf <vars> <clauses>` line, then
// 0-terminated clauses of exactly three literals each.
Cnf3 parse_cnf3(const std::string& text,
                const std::string& source = "<string>");
Cnf3 load_cnf3(const std::string& path);

}  // namespace nonblock
