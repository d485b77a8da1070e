#ifndef SEMICAT_IO_HPP_
#define SEMICAT_IO_HPP_

#include <string>

#include "semicat/category.hpp"
#include "semicat/esn.hpp"
#include "semicat/rees.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

// Cayley table text format: line 1 is the order, the next n lines are rows
// of 0-based indices, then optional "labels: ..." and "zero: k" lines.
FiniteSemigroup parse_cayley(std::string const& text);
std::string serialize_cayley(FiniteSemigroup const& s);

// Abstract category format:
//   socat
//   objects <n>
//   mor <name> <dom> <cod>
//   id <obj> <name>
//   incl <dom> <cod> <name>
//   compose <f> <g> <h>       (f then g equals h; every composable pair)
// Category axioms are validated on load.
SOCategory parse_socat(std::string const& text);
std::string serialize_socat(SOCategory const& C);

// Rees spec format: a Cayley table block for the group, then "I: n",
// "L: m" and m matrix lines of n tokens, each a group label or "0".
ReesSpec parse_rees_spec(std::string const& text);
std::string serialize_rees_spec(ReesSpec const& spec);

// Groupoid export: object semilattice table, arrows with domain, codomain
// and inverse, and the order pairs.
std::string serialize_groupoid(InductiveGroupoid const& G);

std::string read_file(std::string const& path);
std::string fnv1a_digest(std::string const& data);

}  // namespace semicat

#endif  // SEMICAT_IO_HPP_
