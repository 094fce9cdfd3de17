#include "fawtl/langops.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "fawtl/engine.hpp"

namespace fawtl {

std::size_t ParikhVector::length() const {
    std::size_t n = 0;
    for (auto c : counts) {
        n += c;
    }
    return n;
}

ParikhVector parikh(std::size_t alphabet_size, std::span<const SymbolId> word) {
    return {letter_counts(alphabet_size, word)};
}

std::string format_parikh(const Alphabet& alphabet, const ParikhVector& v) {
    std::string out;
    for (SymbolId s = 0; s < v.counts.size(); ++s) {
        if (s > 0) {
            out += ' ';
        }
        out += alphabet.token(s) + ":" + std::to_string(v.counts[s]);
    }
    return out;
}

bool shortlex_less(const Word& x, const Word& y) {
    if (x.size() != y.size()) {
        return x.size() < y.size();
    }
    return x < y;
}

bool BoundedLanguage::contains(const Word& w) const {
    return std::binary_search(words.begin(), words.end(), w, shortlex_less);
}

std::uint64_t word_count(std::size_t alphabet_size, std::size_t max_len) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    std::uint64_t layer = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
        if (alphabet_size != 0 && layer > kMax / alphabet_size) {
            return kMax;
        }
        layer *= alphabet_size;
        if (total > kMax - layer) {
            return kMax;
        }
        total += layer;
    }
    return total;
}

namespace {

void check_budget(std::size_t alphabet_size, std::size_t max_len, std::uint64_t budget) {
    const std::uint64_t n = word_count(alphabet_size, max_len);
    if (n > budget) {
        throw BoundExceeded(std::to_string(alphabet_size) + " letters up to length " + std::to_string(max_len) +
                            " gives more than " + std::to_string(budget) + " candidate words");
    }
}

// Word number `index` among the words of length `len`, lexicographic order.
Word word_at(std::size_t alphabet_size, std::size_t len, std::uint64_t index) {
    Word w(len);
    for (std::size_t i = len; i-- > 0;) {
        w[i] = static_cast<SymbolId>(index % alphabet_size);
        index /= alphabet_size;
    }
    return w;
}

// Advance to the lexicographic successor of the same length; false on wrap.
bool next_word(Word& w, std::size_t alphabet_size) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (++w[i] < alphabet_size) {
            return true;
        }
        w[i] = 0;
    }
    return false;
}

std::uint64_t layer_size(std::size_t alphabet_size, std::size_t len) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < len; ++i) {
        n *= alphabet_size;
    }
    return n;
}

}  // namespace

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_len, std::uint64_t budget) {
    check_budget(alphabet_size, max_len, budget);
    std::vector<Word> out{Word{}};
    if (alphabet_size == 0) {
        return out;
    }
    for (std::size_t len = 1; len <= max_len; ++len) {
        Word w(len, 0);
        do {
            out.push_back(w);
        } while (next_word(w, alphabet_size));
    }
    return out;
}

BoundedLanguage enumerate_language(const Membership& member, std::size_t alphabet_size, std::size_t max_len,
                                   const EnumerateOptions& options) {
    check_budget(alphabet_size, max_len, options.budget);
    BoundedLanguage out{max_len, {}};
    if (member(Word{})) {
        out.words.emplace_back();
    }
    if (alphabet_size == 0) {
        return out;
    }
    const unsigned workers = std::max(1U, options.workers);
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::uint64_t n = layer_size(alphabet_size, len);
        std::vector<char> hit(n, 0);
        auto scan = [&](std::uint64_t begin, std::uint64_t end) {
            if (begin >= end) {
                return;
            }
            Word w = word_at(alphabet_size, len, begin);
            for (std::uint64_t i = begin; i < end; ++i) {
                hit[i] = member(w) ? 1 : 0;
                next_word(w, alphabet_size);
            }
        };
        if (workers == 1 || n < 1024) {
            scan(0, n);
        } else {
            std::vector<std::thread> pool;
            const std::uint64_t chunk = (n + workers - 1) / workers;
            for (unsigned t = 0; t < workers; ++t) {
                pool.emplace_back(scan, std::min(n, t * chunk), std::min(n, (t + 1) * chunk));
            }
            for (auto& th : pool) {
                th.join();
            }
        }
        for (std::uint64_t i = 0; i < n; ++i) {
            if (hit[i]) {
                out.words.push_back(word_at(alphabet_size, len, i));
            }
        }
    }
    return out;
}

BoundedLanguage enumerate_language(const Automaton& a, std::size_t max_len, const EnumerateOptions& options) {
    return enumerate_language([&a](const Word& w) { return accepts(a, w); }, a.alphabet().size(), max_len, options);
}

ParikhSet parikh_image(const BoundedLanguage& language, std::size_t alphabet_size) {
    ParikhSet out;
    for (const auto& w : language.words) {
        out.insert(parikh(alphabet_size, w));
    }
    return out;
}

ParikhSet parikh_up_to(const Automaton& a, std::size_t max_len, const EnumerateOptions& options) {
    return parikh_image(enumerate_language(a, max_len, options), a.alphabet().size());
}

std::optional<Counterexample> bounded_equivalent(const Membership& a, const Membership& b, std::size_t alphabet_size,
                                                 std::size_t max_len, std::uint64_t budget) {
    check_budget(alphabet_size, max_len, budget);
    auto differ = [&](const Word& w) -> std::optional<Counterexample> {
        const bool in_a = a(w);
        if (in_a != b(w)) {
            return Counterexample{w, in_a ? Side::A : Side::B};
        }
        return std::nullopt;
    };
    if (auto c = differ(Word{})) {
        return c;
    }
    if (alphabet_size == 0) {
        return std::nullopt;
    }
    for (std::size_t len = 1; len <= max_len; ++len) {
        Word w(len, 0);
        do {
            if (auto c = differ(w)) {
                return c;
            }
        } while (next_word(w, alphabet_size));
    }
    return std::nullopt;
}

std::optional<Counterexample> bounded_equivalent(const Automaton& a, const Automaton& b, std::size_t max_len,
                                                 std::uint64_t budget) {
    if (!(a.alphabet() == b.alphabet())) {
        throw AlphabetMismatch("bounded_equivalent: automata have different alphabets");
    }
    return bounded_equivalent([&a](const Word& w) { return accepts(a, w); },
                              [&b](const Word& w) { return accepts(b, w); }, a.alphabet().size(), max_len, budget);
}

namespace {

template <typename TauFn>
Automaton with_translucency(const Automaton& a, TauFn tau) {
    AutomatonBuilder b(a.alphabet());
    for (StateId q = 0; q < a.num_states(); ++q) {
        b.add_state(a.state_name(q));
    }
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (a.is_initial(q)) b.add_initial(q);
        b.set_final(q, a.is_final(q));
        b.set_translucent(q, tau(q));
        for (SymbolId s = 0; s < a.alphabet().size(); ++s) {
            for (StateId p : a.targets(q, s)) {
                b.add_transition(q, s, p);
            }
        }
    }
    return b.build();
}

}  // namespace

Automaton remove_overlap_translucency(const Automaton& a) {
    return with_translucency(a, [&a](StateId q) { return a.translucent(q) - a.enabled(q); });
}

Automaton drop_translucency(const Automaton& a) {
    return with_translucency(a, [](StateId) { return SymbolSet{}; });
}

std::string_view to_string(LemmaViolation::Check check) {
    switch (check) {
        case LemmaViolation::Check::OverlapFree: return "overlap-free";
        case LemmaViolation::Check::Regular: return "regular";
    }
    return "?";
}

namespace {

std::optional<LemmaViolation> first_difference(LemmaViolation::Check check, const ParikhSet& original,
                                               const ParikhSet& restricted) {
    std::optional<LemmaViolation> found;
    auto consider = [&](const ParikhVector& v, bool missing) {
        if (!found || v < found->vector) {
            found = LemmaViolation{check, missing, v};
        }
    };
    for (const auto& v : original) {
        if (!restricted.contains(v)) {
            consider(v, true);
            break;
        }
    }
    for (const auto& v : restricted) {
        if (!original.contains(v)) {
            consider(v, false);
            break;
        }
    }
    return found;
}

}  // namespace

LemmaReport check_letter_equivalence_lemma(const Automaton& a, std::size_t max_len, const EnumerateOptions& options) {
    LemmaReport report{max_len, std::nullopt};
    const ParikhSet original = parikh_up_to(a, max_len, options);
    report.violation = first_difference(LemmaViolation::Check::OverlapFree, original,
                                        parikh_up_to(remove_overlap_translucency(a), max_len, options));
    if (!report.violation) {
        report.violation = first_difference(LemmaViolation::Check::Regular, original,
                                            parikh_up_to(drop_translucency(a), max_len, options));
    }
    return report;
}

}  // namespace fawtl
