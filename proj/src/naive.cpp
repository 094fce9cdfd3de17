// Reference semantics for differential testing of engine.cpp: plain
// recursion over the step rules, no memoization.

#include <string>

#include "fawtl/engine.hpp"

namespace fawtl {

namespace {

bool naive_run(const Automaton& a, StateId q, const Word& tape) {
    // Halting with acceptance: every letter left is translucent in a final state.
    bool all_translucent = true;
    for (SymbolId x : tape) {
        if (!a.translucent(q).contains(x)) {
            all_translucent = false;
        }
    }
    if (all_translucent && a.is_final(q)) {
        return true;
    }

    for (std::size_t i = 0; i < tape.size(); ++i) {
        bool prefix_translucent = true;
        for (std::size_t j = 0; j < i; ++j) {
            if (!a.translucent(q).contains(tape[j])) {
                prefix_translucent = false;
            }
        }
        if (!prefix_translucent) {
            break;
        }
        for (StateId p : a.targets(q, tape[i])) {
            Word rest;
            for (std::size_t j = 0; j < tape.size(); ++j) {
                if (j != i) {
                    rest.push_back(tape[j]);
                }
            }
            if (naive_run(a, p, rest)) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

bool naive_accepts(const Automaton& a, const Word& w, std::size_t max_len) {
    if (w.size() > max_len) {
        throw BoundExceeded("naive_accepts: word length " + std::to_string(w.size()) + " exceeds bound " +
                            std::to_string(max_len));
    }
    for (StateId q0 : a.initial()) {
        if (naive_run(a, q0, w)) {
            return true;
        }
    }
    return false;
}

}  // namespace fawtl
