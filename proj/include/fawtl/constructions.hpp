// constructions.hpp -- union constructions and exhaustive search for small
// state-deterministic automata

#ifndef FAWTL_CONSTRUCTIONS_HPP
#define FAWTL_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fawtl/core.hpp"
#include "fawtl/langops.hpp"

namespace fawtl {

class DuplicateTrigger : public Error {
public:
    using Error::Error;
};

class PartNotDFAwtl : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Disjoint union: states renamed "1.q" / "2.q", I = I1 ∪ I2, F = F1 ∪ F2,
/// τ and δ inherited. Throws AlphabetMismatch.
Automaton union_of(const Automaton& a1, const Automaton& a2);

/// One branch of a guarded union: consuming `trigger` anywhere in the input
/// moves the fresh initial state to `entry` of `automaton`.
struct GuardedPart {
    std::string tag;  // state-name prefix; defaults to the 1-based part index
    std::string trigger;
    Automaton automaton;
    std::string entry;
};

/// Fresh initial state "q0" with every letter translucent and
/// δ(q0, trigger_i) = {entry_i}; parts embedded as "tag.q". The result has a
/// single initial state and deterministic transitions.
/// Throws DuplicateTrigger, PartNotDFAwtl, AlphabetMismatch, or Error for
/// unknown trigger or entry names.
Automaton build_guarded_union(const std::vector<GuardedPart>& parts);

/// Candidate space for search_sfawtl: states q0..q{k-1} (k <= max_states)
/// chained q_i -> q_{i+1}; the last state either has no transitions or,
/// when allow_back_edge is set, one edge back to any state.
struct SearchSpaceSpec {
    Alphabet alphabet;
    std::size_t max_states = 1;
    bool allow_back_edge = true;
    std::size_t test_len = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

struct SearchOptions {
    /// Upper bound on candidates x test words.
    std::uint64_t budget = kDefaultSearchBudget;
    unsigned workers = 1;
};

struct SearchOutcome {
    /// First candidate (in enumeration order) agreeing with the target on
    /// every word up to test_len; nullopt when the space is exhausted.
    std::optional<Automaton> machine;
    std::uint64_t candidates_total = 0;
    std::uint64_t found_index = 0;
    /// Post-hoc re-check of `machine` against the target by enumeration.
    bool verified = false;
};

/// Number of candidates in the space (saturating).
std::uint64_t sfawtl_candidate_count(const SearchSpaceSpec& spec);

/// Candidate number `index` in enumeration order.
Automaton sfawtl_candidate(const SearchSpaceSpec& spec, std::uint64_t index);

/// Exhaustive search for a state-deterministic automaton with disjoint
/// translucency matching `target` up to spec.test_len. A miss is evidence
/// only: it is bounded in word length and restricted to line-graph shapes.
/// Throws BudgetExceeded.
SearchOutcome search_sfawtl(const Membership& target, const SearchSpaceSpec& spec,
                            const SearchOptions& options = {});

}  // namespace fawtl

#endif  // FAWTL_CONSTRUCTIONS_HPP
