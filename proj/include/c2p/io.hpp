#pragma once

// Line-based text formats. Parsing is strict: unknown directives, missing or
// extra fields and bad counts raise Error(Parse). '#' starts a comment in
// every format; formula files also accept DIMACS-style 'c' comment lines.
//
// Instance:
//   c2p 1
//   n <count>
//   part <v1> <v2> ...          clique edges are implied
//   link <u> <v>
//   cross <u1> <v1> <u2> <v2>   two edges named by their endpoints
// Edge ids follow the canonical order of canonical_edges(): clique edges by
// part, then links in file order.
//
// Solution:
//   sol 1
//   path <part-index> <v1> <v2> ...
//
// Formula:
//   p pp13 <nvars> <nclauses>
//   <x> <y> <z> 0
//
// Witness (all indices 1-based, edge and part ids as in the instance):
//   witness 1
//   wit formula <nvars> <nclauses> <chain-length>
//   wit ring <var> <i> <part> <base> <left> <right>
//   wit tau <var> <j> <part> <base> <left> <right>
//   wit clause <c> <part> <v> <vx> <vy> <vz> <spoke x y z> <outer xy yz zx>
//   wit input <c> <pos> <var> <occurrence> <part> <base> <left> <right>
//   wit chain <c> <pos> <k> <part> <base> <left> <right>
//
// Assignment (DIMACS model line): v 1 -2 -3 0

#include <iosfwd>
#include <string>

#include "c2p/model.hpp"
#include "c2p/reduction.hpp"

namespace c2p {

Instance parse_instance(std::istream& in);
void write_instance(std::ostream& out, const Instance& inst);

Solution parse_solution(std::istream& in);
void write_solution(std::ostream& out, const Solution& sol);

Formula parse_formula(std::istream& in);
void write_formula(std::ostream& out, const Formula& f);

ReductionWitness parse_witness(std::istream& in);
void write_witness(std::ostream& out, const ReductionWitness& w);

Assignment parse_assignment(std::istream& in, std::size_t nvars);
void write_assignment(std::ostream& out, const Assignment& a);

// String conveniences for tests and the CLI.
Instance instance_from_string(const std::string& text);
std::string to_string(const Instance& inst);
std::string to_string(const Solution& sol);
std::string to_string(const Formula& f);
std::string to_string(const ReductionWitness& w);

}  // namespace c2p
