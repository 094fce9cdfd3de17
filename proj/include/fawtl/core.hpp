// core.hpp -- automata with translucent letters: domain types and classification

#ifndef FAWTL_CORE_HPP
#define FAWTL_CORE_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace fawtl {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

/// A word is a sequence of symbol ordinals of one alphabet.
using Word = std::vector<SymbolId>;

/// Alphabets are capped so that letter sets fit a machine word.
inline constexpr std::size_t kMaxSymbols = 64;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A word or language bound exceeded its configured limit.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// Two automata (or an automaton and a target) do not share an alphabet.
class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// Set of symbols of one alphabet, stored as a bit mask.
class SymbolSet {
public:
    constexpr SymbolSet() = default;
    constexpr explicit SymbolSet(std::uint64_t mask) : mask_(mask) {}

    static constexpr SymbolSet all(std::size_t alphabet_size) {
        return SymbolSet(alphabet_size >= 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << alphabet_size) - 1);
    }

    constexpr bool contains(SymbolId s) const { return (mask_ >> s) & 1U; }
    constexpr void insert(SymbolId s) { mask_ |= std::uint64_t{1} << s; }
    constexpr void erase(SymbolId s) { mask_ &= ~(std::uint64_t{1} << s); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr std::uint64_t mask() const { return mask_; }

    /// Members in ascending ordinal order.
    std::vector<SymbolId> members() const;

    friend constexpr SymbolSet operator|(SymbolSet a, SymbolSet b) { return SymbolSet(a.mask_ | b.mask_); }
    friend constexpr SymbolSet operator&(SymbolSet a, SymbolSet b) { return SymbolSet(a.mask_ & b.mask_); }
    /// Set difference.
    friend constexpr SymbolSet operator-(SymbolSet a, SymbolSet b) { return SymbolSet(a.mask_ & ~b.mask_); }
    friend constexpr bool operator==(SymbolSet, SymbolSet) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Ordered, duplicate-free list of symbol tokens. Declaration order is the
/// canonical order everywhere (tie-breaks, enumeration, output).
class Alphabet {
public:
    Alphabet() = default;
    /// Throws ValidationFailure on invalid or duplicate tokens.
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }
    const std::string& token(SymbolId s) const { return tokens_.at(s); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    std::optional<SymbolId> find(std::string_view token) const;
    /// Like find, but throws Error for unknown tokens.
    SymbolId at(std::string_view token) const;

    /// True when every token is a single character, so words can be written unseparated.
    bool single_char_tokens() const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, SymbolId> index_;
};

/// Render a word: tokens concatenated when all are single characters, comma
/// separated otherwise; the empty word is rendered as `""`.
std::string format_word(const Alphabet& alphabet, std::span<const SymbolId> word);

/// Inverse of format_word. Throws Error on unknown tokens.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Number of occurrences of each symbol in a word.
std::vector<std::uint32_t> letter_counts(std::size_t alphabet_size, std::span<const SymbolId> word);

// ---------------------------------------------------------------------------
// Validation

enum class ErrorKind {
    UnknownState,
    UnknownSymbol,
    EmptyInitialSet,
    DuplicateSymbol,
    DuplicateState,
    DuplicateDeclaration,
    InvalidToken,
    AlphabetTooLarge,
};

std::string_view to_string(ErrorKind kind);

/// One violated invariant, naming the offending token.
struct Diagnostic {
    ErrorKind kind;
    std::string token;

    std::string message() const;
    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

class ValidationFailure : public Error {
public:
    explicit ValidationFailure(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// True when the token is usable as a state or symbol name. Tokens are
/// non-empty, contain no whitespace, none of `#`, `,`, `:`, and are not `$`
/// or `->`.
bool is_valid_token(std::string_view token);

/// Name-based automaton description, as read from a file or written by hand.
struct RawAutomaton {
    struct Transition {
        std::string from;
        std::string letter;
        std::string to;
    };
    struct Translucency {
        std::string state;
        std::vector<std::string> letters;
    };

    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    std::vector<std::string> initial;
    std::vector<std::string> finals;
    std::vector<Translucency> translucent;
    std::vector<Transition> transitions;
};

// ---------------------------------------------------------------------------
// Automaton

/// The septuple (Q, Σ, $, τ, I, F, δ). The endmarker is implicit. δ is total
/// with the empty set standing for "undefined"; target lists are ascending.
/// Immutable once built.
class Automaton {
public:
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return names_.size(); }
    const std::string& state_name(StateId q) const { return names_.at(q); }
    const std::vector<std::string>& state_names() const { return names_; }
    std::optional<StateId> find_state(std::string_view name) const;

    std::span<const StateId> initial() const { return initial_; }
    bool is_initial(StateId q) const { return initial_mask_[q]; }
    bool is_final(StateId q) const { return final_mask_[q]; }
    std::vector<StateId> finals() const;

    SymbolSet translucent(StateId q) const { return translucent_[q]; }
    /// Letters with a defined transition in q.
    SymbolSet enabled(StateId q) const { return enabled_[q]; }
    std::span<const StateId> targets(StateId q, SymbolId a) const {
        return delta_[static_cast<std::size_t>(q) * alphabet_.size() + a];
    }

    friend bool operator==(const Automaton&, const Automaton&) = default;

private:
    friend class AutomatonBuilder;

    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::vector<StateId> initial_;
    std::vector<bool> initial_mask_;
    std::vector<bool> final_mask_;
    std::vector<SymbolSet> translucent_;
    std::vector<SymbolSet> enabled_;
    std::vector<std::vector<StateId>> delta_;
};

/// Incremental, id-based construction of an Automaton.
class AutomatonBuilder {
public:
    explicit AutomatonBuilder(Alphabet alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    /// Throws ValidationFailure on an invalid or duplicate name.
    StateId add_state(std::string name);
    std::size_t num_states() const { return names_.size(); }

    AutomatonBuilder& add_initial(StateId q);
    AutomatonBuilder& set_final(StateId q, bool final = true);
    AutomatonBuilder& set_translucent(StateId q, SymbolSet letters);
    AutomatonBuilder& add_transition(StateId from, SymbolId letter, StateId to);

    /// Throws ValidationFailure when I is empty.
    Automaton build() const;

private:
    void check_state(StateId q) const;

    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, StateId> index_;
    std::vector<bool> initial_;
    std::vector<bool> final_;
    std::vector<SymbolSet> translucent_;
    std::vector<std::vector<std::vector<StateId>>> delta_;
};

using ValidationResult = std::variant<Automaton, std::vector<Diagnostic>>;

/// Check every invariant of a raw description and collect all violations.
ValidationResult validate(const RawAutomaton& raw);

/// validate(), throwing ValidationFailure instead of returning diagnostics.
Automaton build_automaton(const RawAutomaton& raw);

/// Name-based view of an automaton; build_automaton(to_raw(a)) == a.
RawAutomaton to_raw(const Automaton& a);

// ---------------------------------------------------------------------------
// Classification

enum class Label {
    NfaCompatible,  // τ(q) = ∅ everywhere: a classical NFA
    NFAwtl,
    DFAwtl,
    SFAwtl,
    NFAwntl,
    DFAwntl,
};

inline constexpr Label kAllLabels[] = {Label::NfaCompatible, Label::NFAwtl, Label::DFAwtl,
                                       Label::SFAwtl,        Label::NFAwntl, Label::DFAwntl};

std::string_view to_string(Label label);

struct VariantProfile {
    bool single_initial = false;
    bool deterministic_transitions = false;
    bool disjoint_translucency = false;
    bool state_deterministic = false;
    std::vector<Label> labels;  // in kAllLabels order

    bool has(Label label) const;
    friend bool operator==(const VariantProfile&, const VariantProfile&) = default;
};

VariantProfile classify(const Automaton& a);

}  // namespace fawtl

#endif  // FAWTL_CORE_HPP
