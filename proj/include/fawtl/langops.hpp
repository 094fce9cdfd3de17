// langops.hpp -- bounded language views, Parikh images and the
// letter-equivalent sublanguage constructions

#ifndef FAWTL_LANGOPS_HPP
#define FAWTL_LANGOPS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fawtl/core.hpp"

namespace fawtl {

/// Letter counts of a word, indexed by symbol ordinal.
struct ParikhVector {
    std::vector<std::uint32_t> counts;

    std::size_t length() const;
    friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

using ParikhSet = std::set<ParikhVector>;

ParikhVector parikh(std::size_t alphabet_size, std::span<const SymbolId> word);

/// `a:2 b:2`, in alphabet order.
std::string format_parikh(const Alphabet& alphabet, const ParikhVector& v);

/// Length first, then lexicographic by symbol ordinal.
bool shortlex_less(const Word& x, const Word& y);

/// Words of length <= max_len accepted by something, in shortlex order.
struct BoundedLanguage {
    std::size_t max_len = 0;
    std::vector<Word> words;

    bool contains(const Word& w) const;
    friend bool operator==(const BoundedLanguage&, const BoundedLanguage&) = default;
};

using Membership = std::function<bool(const Word&)>;

inline constexpr std::uint64_t kDefaultWordBudget = 10'000'000;

struct EnumerateOptions {
    /// Maximum number of candidate words examined.
    std::uint64_t budget = kDefaultWordBudget;
    /// Worker threads; the result does not depend on this.
    unsigned workers = 1;
};

/// Number of words of length <= max_len (saturating at UINT64_MAX).
std::uint64_t word_count(std::size_t alphabet_size, std::size_t max_len);

/// Every word of length <= max_len in shortlex order. Throws BoundExceeded
/// when there are more than `budget` of them.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_len,
                            std::uint64_t budget = kDefaultWordBudget);

/// { w : |w| <= max_len, member(w) }. `member` must be safe to call
/// concurrently when workers > 1.
BoundedLanguage enumerate_language(const Membership& member, std::size_t alphabet_size, std::size_t max_len,
                                   const EnumerateOptions& options = {});

BoundedLanguage enumerate_language(const Automaton& a, std::size_t max_len, const EnumerateOptions& options = {});

ParikhSet parikh_image(const BoundedLanguage& language, std::size_t alphabet_size);

ParikhSet parikh_up_to(const Automaton& a, std::size_t max_len, const EnumerateOptions& options = {});

enum class Side { A, B };

/// A word accepted by exactly one side.
struct Counterexample {
    Word word;
    Side accepted_by = Side::A;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// The shortlex-least word of length <= max_len on which the two
/// memberships disagree, or nullopt when they agree up to the bound.
std::optional<Counterexample> bounded_equivalent(const Membership& a, const Membership& b, std::size_t alphabet_size,
                                                 std::size_t max_len, std::uint64_t budget = kDefaultWordBudget);

/// Throws AlphabetMismatch unless both automata have the same alphabet.
std::optional<Counterexample> bounded_equivalent(const Automaton& a, const Automaton& b, std::size_t max_len,
                                                 std::uint64_t budget = kDefaultWordBudget);

/// τ'(q) = τ(q) minus the letters with a transition in q. The result has
/// disjoint translucency and accepts a sublanguage of L(a).
Automaton remove_overlap_translucency(const Automaton& a);

/// τ'(q) = ∅ everywhere: the underlying classical NFA.
Automaton drop_translucency(const Automaton& a);

struct LemmaViolation {
    enum class Check {
        OverlapFree,  // Parikh(a) vs Parikh(remove_overlap_translucency(a))
        Regular,      // Parikh(a) vs Parikh(drop_translucency(a))
    };
    Check check = Check::OverlapFree;
    /// True: the vector is reachable by a but not by the construction.
    /// False: the construction reaches a vector a does not.
    bool missing = true;
    ParikhVector vector;
};

std::string_view to_string(LemmaViolation::Check check);

struct LemmaReport {
    std::size_t max_len = 0;
    std::optional<LemmaViolation> violation;

    bool pass() const { return !violation.has_value(); }
};

/// Compares the bounded Parikh image of `a` with those of its overlap-free
/// and translucency-free restrictions. Reports the first differing vector.
LemmaReport check_letter_equivalence_lemma(const Automaton& a, std::size_t max_len,
                                           const EnumerateOptions& options = {});

}  // namespace fawtl

#endif  // FAWTL_LANGOPS_HPP
