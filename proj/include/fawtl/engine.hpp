// engine.hpp -- operational semantics of automata with (nondeterministically)
// translucent letters

#ifndef FAWTL_ENGINE_HPP
#define FAWTL_ENGINE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fawtl/core.hpp"

namespace fawtl {

/// (current state, remaining word). The endmarker is implicit.
struct Configuration {
    StateId state = 0;
    Word remaining;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// One erase step. `position` is 1-based into the remaining word before erasure.
struct Step {
    StateId from = 0;
    std::size_t position = 0;
    SymbolId letter = 0;
    StateId to = 0;

    friend bool operator==(const Step&, const Step&) = default;
};

struct Trace {
    StateId initial = 0;
    std::vector<Step> steps;
    bool accepted = false;

    friend bool operator==(const Trace&, const Trace&) = default;
};

struct EligiblePosition {
    std::size_t position = 0;  // 1-based
    SymbolId letter = 0;

    friend bool operator==(const EligiblePosition&, const EligiblePosition&) = default;
};

/// Positions i such that every letter before i is translucent for the
/// current state and δ(state, remaining[i]) is defined; ascending. Under
/// disjoint translucency there is at most one: the first visible letter.
std::vector<EligiblePosition> eligible_positions(const Automaton& a, const Configuration& c);

/// c.state ∈ F and every remaining letter is translucent for c.state.
bool is_accepting_config(const Automaton& a, const Configuration& c);

struct Successor {
    Step step;
    Configuration next;
};

/// All one-step successors, ordered by (position, target state ordinal).
std::vector<Successor> successors(const Automaton& a, const Configuration& c);

/// Membership by depth-first search over configurations, with memoized
/// failing configurations. Accepting configurations are terminal.
bool accepts(const Automaton& a, const Word& w);

/// The first accepting trace in search order (initial states in declaration
/// order, then successor order), or nullopt when w is rejected.
std::optional<Trace> first_trace(const Automaton& a, const Word& w);

inline constexpr std::size_t kDefaultNaiveBound = 10;

/// Reference membership test: plain recursion over the step rules with no
/// memoization and no code shared with accepts(). Throws BoundExceeded when
/// |w| > max_len.
bool naive_accepts(const Automaton& a, const Word& w, std::size_t max_len = kDefaultNaiveBound);

}  // namespace fawtl

#endif  // FAWTL_ENGINE_HPP
