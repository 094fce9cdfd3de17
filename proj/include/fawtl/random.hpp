// random.hpp -- seeded random automata for property and differential tests

#ifndef FAWTL_RANDOM_HPP
#define FAWTL_RANDOM_HPP

#include <cstddef>
#include <random>

#include "fawtl/core.hpp"

namespace fawtl {

struct RandomSpec {
    std::size_t max_states = 4;   // |Q| drawn from [1, max_states]
    std::size_t max_symbols = 3;  // |Σ| drawn from [1, max_symbols]
    double transition_density = 0.3;
    double translucency_density = 0.4;
    double initial_density = 0.4;
    double final_density = 0.4;
    bool translucency = true;  // false: τ(q) = ∅ everywhere
    bool disjoint = false;     // drop translucent letters that have transitions
};

/// A random automaton; states are named q0.., letters a, b, c, ...
Automaton random_automaton(std::mt19937_64& rng, const RandomSpec& spec = {});

}  // namespace fawtl

#endif  // FAWTL_RANDOM_HPP
