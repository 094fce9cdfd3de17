#include "fawtl/constructions.hpp"

#include <set>

#include "fawtl/engine.hpp"

namespace fawtl {

namespace {

// Copy every state of `part` into `b` under "prefix.name"; returns the id offset.
StateId embed(AutomatonBuilder& b, const Automaton& part, const std::string& prefix, bool keep_initial) {
    const auto offset = static_cast<StateId>(b.num_states());
    for (StateId q = 0; q < part.num_states(); ++q) {
        b.add_state(prefix + "." + part.state_name(q));
    }
    for (StateId q = 0; q < part.num_states(); ++q) {
        if (keep_initial && part.is_initial(q)) b.add_initial(offset + q);
        b.set_final(offset + q, part.is_final(q));
        b.set_translucent(offset + q, part.translucent(q));
        for (SymbolId s = 0; s < part.alphabet().size(); ++s) {
            for (StateId p : part.targets(q, s)) {
                b.add_transition(offset + q, s, offset + p);
            }
        }
    }
    return offset;
}

}  // namespace

Automaton union_of(const Automaton& a1, const Automaton& a2) {
    if (!(a1.alphabet() == a2.alphabet())) {
        throw AlphabetMismatch("union: automata have different alphabets");
    }
    AutomatonBuilder b(a1.alphabet());
    embed(b, a1, "1", true);
    embed(b, a2, "2", true);
    return b.build();
}

Automaton build_guarded_union(const std::vector<GuardedPart>& parts) {
    if (parts.empty()) {
        throw Error("guarded union: no parts");
    }
    const Alphabet& sigma = parts.front().automaton.alphabet();
    std::set<std::string> triggers;
    for (const auto& part : parts) {
        if (!(part.automaton.alphabet() == sigma)) {
            throw AlphabetMismatch("guarded union: parts have different alphabets");
        }
        if (!sigma.find(part.trigger)) {
            throw Error("guarded union: unknown trigger '" + part.trigger + "'");
        }
        if (!triggers.insert(part.trigger).second) {
            throw DuplicateTrigger("guarded union: trigger '" + part.trigger + "' used twice");
        }
        if (!classify(part.automaton).has(Label::DFAwtl)) {
            throw PartNotDFAwtl("guarded union: part with trigger '" + part.trigger + "' is not a DFAwtl");
        }
        if (!part.automaton.find_state(part.entry)) {
            throw Error("guarded union: unknown entry state '" + part.entry + "'");
        }
    }

    AutomatonBuilder b(sigma);
    const StateId start = b.add_state("q0");
    b.add_initial(start).set_translucent(start, SymbolSet::all(sigma.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& part = parts[i];
        const std::string prefix = part.tag.empty() ? std::to_string(i + 1) : part.tag;
        const StateId offset = embed(b, part.automaton, prefix, false);
        b.add_transition(start, sigma.at(part.trigger), offset + *part.automaton.find_state(part.entry));
    }
    return b.build();
}

}  // namespace fawtl
