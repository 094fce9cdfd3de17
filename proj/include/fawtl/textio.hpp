// textio.hpp -- line-oriented automaton files and DOT export
//
//   alphabet: a b c d
//   states: q0 q qa qb qc qd
//   initial: q0
//   final: q
//   translucent q0: b c d
//   trans q0 a -> qa
//
// `#` starts a comment; blank lines are ignored. Repeated `trans` lines for
// one (state, letter) accumulate targets. A state without a `translucent`
// line has τ(q) = ∅.

#ifndef FAWTL_TEXTIO_HPP
#define FAWTL_TEXTIO_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "fawtl/core.hpp"

namespace fawtl {

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Throws SyntaxError or ValidationFailure.
Automaton parse_automaton(std::string_view text);

/// Canonical text; parse_automaton(serialize_automaton(a)) == a.
std::string serialize_automaton(const Automaton& a);

/// Graphviz digraph: final states doubled, τ(q) shown under the state name,
/// one edge per (q, a, p), initial states entered from point nodes.
std::string export_dot(const Automaton& a);

/// Read a whole file. Throws Error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace fawtl

#endif  // FAWTL_TEXTIO_HPP
