// corpus.hpp -- named example automata, each paired with an independent
// membership oracle

#ifndef FAWTL_CORPUS_HPP
#define FAWTL_CORPUS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fawtl/core.hpp"
#include "fawtl/langops.hpp"

namespace fawtl {

class NotFound : public Error {
public:
    using Error::Error;
};

struct CorpusEntry {
    std::string name;
    Automaton automaton;
    /// Membership predicate written independently of the engine. When
    /// `differential_oracle` is set it is naive_accepts on the same machine
    /// instead, and `extra_checks` carries the known language properties.
    Membership oracle;
    bool differential_oracle = false;
    std::string description;
    std::vector<Label> expected_labels;
    std::vector<Label> excluded_labels;
    std::size_t verified_bound = 8;
    /// Additional facts about the bounded language; returns failure messages.
    std::function<std::vector<std::string>(const Automaton&, std::size_t max_len)> extra_checks;
};

/// Registered names, in registration order.
const std::vector<std::string>& list_entries();

/// Throws NotFound.
const CorpusEntry& get_entry(std::string_view name);

struct VerifyReport {
    std::string name;
    std::size_t max_len = 0;
    std::optional<Counterexample> counterexample;  // A = automaton, B = oracle
    std::vector<std::string> findings;

    bool pass() const { return !counterexample && findings.empty(); }
};

/// Bounded equivalence of the entry against its oracle, the label check and
/// the entry's extra checks. Throws NotFound, BoundExceeded.
VerifyReport verify_entry(std::string_view name, std::size_t max_len);

/// A membership predicate usable as a search target.
struct SearchTarget {
    std::string name;
    Alphabet alphabet;
    Membership member;
};

/// Corpus oracle names plus "a*+b*" and "ab+aaab-concat". Throws NotFound.
SearchTarget named_target(std::string_view name);

}  // namespace fawtl

#endif  // FAWTL_CORPUS_HPP
