#pragma once

#include <string>
#include <string_view>

#include "feasflow/network.hpp"

namespace feasflow {

// Line-based network document:
//
//   c <comment>            anywhere, ignored
//   p feas <n> <m>         exactly once, before import and arc lines
//   n <v> <b>              import of vertex v (default 0; duplicates rejected)
//   a <tail> <head> <cap>  one per arc, in arc-index order
//
// Tokens are whitespace-separated decimal integers; the final newline is
// optional. Throws SyntaxError (with the 1-based line number), RangeError
// (ids outside 1..n, negative capacities, magnitudes above 2^62) or
// DuplicateImport.
Network parse_network(std::string_view text);

// Canonical form: the problem line, then `n` lines for the nonzero imports
// in ascending vertex order, then the arcs in order. parse_network of the
// result reproduces the network exactly, and re-serializing is
// byte-identical.
std::string serialize_network(const Network& net);

// Flow document for a given network:
//
//   s feasible|infeasible
//   f <arc-index> <tail> <head> <value>   one per arc, 1-based, in order
//
// The status token is whatever the writer claimed; parsing checks arc order
// and endpoints against `net` but re-verifies nothing. Negative values are
// accepted so the verifier can report them.
Flow parse_flow(std::string_view text, const Network& net);

// Emits the document above with the status decided by verify_flow;
// deterministic, byte-exact output for a given pair. Throws LengthMismatch.
std::string serialize_flow(const Network& net, const Flow& flow);

}  // namespace feasflow
