#include <atomic>
#include <limits>
#include <thread>

#include "fawtl/constructions.hpp"
#include "fawtl/engine.hpp"

namespace fawtl {

namespace {

constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kMaxSearchSymbols = 8;

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

struct StateChoice {
    SymbolSet translucent;
    SymbolSet letters;  // letters with a transition; disjoint from translucent
    bool final = false;
    std::size_t back_edge = 0;  // target of the last state's edge, if letters != ∅
};

// Options for one state, in enumeration order: translucent set ascending,
// then transition letters ascending, then final flag, then back-edge target.
std::vector<StateChoice> choices(std::size_t alphabet_size, bool last, std::size_t num_states, bool back_edge) {
    std::vector<StateChoice> out;
    const std::uint64_t full = SymbolSet::all(alphabet_size).mask();
    for (std::uint64_t tau = 0; tau <= full; ++tau) {
        const std::uint64_t free = full & ~tau;
        for (std::uint64_t letters = 0; letters <= free; ++letters) {
            if ((letters & ~free) != 0) continue;
            const bool moves = letters != 0;
            if (!last && !moves) continue;       // a dead end before the last state cuts off the rest
            if (last && moves && !back_edge) continue;
            for (bool fin : {false, true}) {
                const std::size_t targets = last && moves ? num_states : 1;
                for (std::size_t t = 0; t < targets; ++t) {
                    out.push_back({SymbolSet(tau), SymbolSet(letters), fin, t});
                }
            }
        }
    }
    return out;
}

void check_space(const SearchSpaceSpec& spec) {
    if (spec.max_states == 0) {
        throw Error("search: max_states must be at least 1");
    }
    if (spec.alphabet.size() > kMaxSearchSymbols) {
        throw BudgetExceeded("search: alphabet too large for exhaustive search");
    }
}

// Per-size choice tables for the whole candidate space.
class CandidateSpace {
public:
    explicit CandidateSpace(const SearchSpaceSpec& spec) : spec_(spec) {
        check_space(spec);
        const auto n = spec.alphabet.size();
        for (std::size_t k = 1; k <= spec.max_states; ++k) {
            Layer layer{choices(n, false, k, spec.allow_back_edge), choices(n, true, k, spec.allow_back_edge), 0};
            layer.count = layer.last.size();
            for (std::size_t i = 0; i + 1 < k; ++i) {
                layer.count = mul_sat(layer.count, layer.inner.size());
            }
            total_ = add_sat(total_, layer.count);
            layers_.push_back(std::move(layer));
        }
    }

    std::uint64_t total() const { return total_; }

    Automaton decode(std::uint64_t index) const {
        std::size_t k = 1;
        for (;; ++k) {
            if (k > layers_.size()) {
                throw Error("search: candidate index out of range");
            }
            if (index < layers_[k - 1].count) break;
            index -= layers_[k - 1].count;
        }
        const Layer& layer = layers_[k - 1];

        // Mixed radix, state q0 most significant.
        std::vector<StateChoice> picked(k);
        picked[k - 1] = layer.last[index % layer.last.size()];
        index /= layer.last.size();
        for (std::size_t i = k - 1; i-- > 0;) {
            picked[i] = layer.inner[index % layer.inner.size()];
            index /= layer.inner.size();
        }

        AutomatonBuilder b(spec_.alphabet);
        for (std::size_t i = 0; i < k; ++i) {
            b.add_state("q" + std::to_string(i));
        }
        b.add_initial(0);
        for (std::size_t i = 0; i < k; ++i) {
            const auto q = static_cast<StateId>(i);
            const auto& c = picked[i];
            b.set_final(q, c.final).set_translucent(q, c.translucent);
            const auto next = static_cast<StateId>(i + 1 < k ? i + 1 : c.back_edge);
            for (SymbolId s : c.letters.members()) {
                b.add_transition(q, s, next);
            }
        }
        return b.build();
    }

private:
    struct Layer {
        std::vector<StateChoice> inner;
        std::vector<StateChoice> last;
        std::uint64_t count;
    };

    const SearchSpaceSpec& spec_;
    std::vector<Layer> layers_;
    std::uint64_t total_ = 0;
};

}  // namespace

std::uint64_t sfawtl_candidate_count(const SearchSpaceSpec& spec) {
    return CandidateSpace(spec).total();
}

Automaton sfawtl_candidate(const SearchSpaceSpec& spec, std::uint64_t index) {
    return CandidateSpace(spec).decode(index);
}

SearchOutcome search_sfawtl(const Membership& target, const SearchSpaceSpec& spec, const SearchOptions& options) {
    const CandidateSpace space(spec);
    SearchOutcome outcome;
    outcome.candidates_total = space.total();
    const std::uint64_t num_words = word_count(spec.alphabet.size(), spec.test_len);
    if (mul_sat(outcome.candidates_total, num_words) > options.budget) {
        throw BudgetExceeded("search: " + std::to_string(outcome.candidates_total) + " candidates x " +
                             std::to_string(num_words) + " words exceeds budget " + std::to_string(options.budget));
    }

    const std::vector<Word> words = all_words(spec.alphabet.size(), spec.test_len, kSaturated);
    std::vector<char> expected;
    expected.reserve(words.size());
    for (const auto& w : words) {
        expected.push_back(target(w) ? 1 : 0);
    }

    auto matches = [&](const Automaton& candidate) {
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (accepts(candidate, words[i]) != static_cast<bool>(expected[i])) {
                return false;
            }
        }
        return true;
    };

    // Workers take strided indices; the smallest matching index wins.
    std::atomic<std::uint64_t> best{kSaturated};
    auto work = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t i = first; i < outcome.candidates_total && i < best.load(); i += stride) {
            if (matches(space.decode(i))) {
                std::uint64_t seen = best.load();
                while (i < seen && !best.compare_exchange_weak(seen, i)) {
                }
                return;
            }
        }
    };
    const unsigned workers = std::max(1U, options.workers);
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back(work, t, workers);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    if (best.load() != kSaturated) {
        outcome.found_index = best.load();
        outcome.machine = space.decode(outcome.found_index);
        const Automaton& m = *outcome.machine;
        outcome.verified = !bounded_equivalent([&m](const Word& w) { return accepts(m, w); }, target,
                                               spec.alphabet.size(), spec.test_len, kSaturated);
    }
    return outcome;
}

}  // namespace fawtl
