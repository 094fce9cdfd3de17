#include "fawtl/random.hpp"

#include <string>
#include <vector>

namespace fawtl {

Automaton random_automaton(std::mt19937_64& rng, const RandomSpec& spec) {
    std::uniform_int_distribution<std::size_t> num_states(1, spec.max_states);
    std::uniform_int_distribution<std::size_t> num_symbols(1, spec.max_symbols);
    std::bernoulli_distribution transition(spec.transition_density);
    std::bernoulli_distribution translucent(spec.translucency_density);
    std::bernoulli_distribution initial(spec.initial_density);
    std::bernoulli_distribution final(spec.final_density);

    const std::size_t n = num_states(rng);
    const std::size_t k = num_symbols(rng);
    std::vector<std::string> letters;
    for (std::size_t i = 0; i < k; ++i) {
        letters.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    AutomatonBuilder b{Alphabet(letters)};
    for (std::size_t i = 0; i < n; ++i) {
        b.add_state("q" + std::to_string(i));
    }

    bool any_initial = false;
    for (StateId q = 0; q < n; ++q) {
        if (initial(rng)) {
            b.add_initial(q);
            any_initial = true;
        }
        b.set_final(q, final(rng));
        SymbolSet tau;
        SymbolSet enabled;
        for (SymbolId s = 0; s < k; ++s) {
            if (spec.translucency && translucent(rng)) tau.insert(s);
            for (StateId p = 0; p < n; ++p) {
                if (transition(rng)) {
                    b.add_transition(q, s, p);
                    enabled.insert(s);
                }
            }
        }
        b.set_translucent(q, spec.disjoint ? tau - enabled : tau);
    }
    if (!any_initial) {
        b.add_initial(static_cast<StateId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)));
    }
    return b.build();
}

}  // namespace fawtl
