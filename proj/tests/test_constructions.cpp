#include <doctest.h>

#include <random>

#include "fawtl/constructions.hpp"
#include "fawtl/corpus.hpp"
#include "fawtl/engine.hpp"
#include "fawtl/langops.hpp"
#include "fawtl/random.hpp"
#include "support/machines.hpp"
#include "support/oracles.hpp"

using namespace fawtl;

namespace {

Automaton empty_language(const Alphabet& sigma) {
    AutomatonBuilder b{sigma};
    b.add_initial(b.add_state("dead"));
    return b.build();
}

Membership spelled(const Alphabet& sigma, bool (*pred)(const std::string&)) {
    return [sigma, pred](const Word& w) { return pred(oracle::spell(sigma, w)); };
}

bool a_star_or_b_star(const std::string& s) {
    return s.find('a') == std::string::npos || s.find('b') == std::string::npos;
}

bool ab_or_ba(const std::string& s) { return s == "ab" || s == "ba"; }

}  // namespace

TEST_CASE("union of two pair machines") {
    const Automaton lab = machines::load(machines::kLab);
    const Automaton& lac = get_entry("ex1-Lac").automaton;
    const Automaton u = union_of(lab, lac);
    CHECK(u.num_states() == 12);
    CHECK(u.state_name(0) == "1.q0");
    CHECK(u.state_name(6) == "2.q0");
    CHECK(u.initial().size() == 2);
    for (const Word& w : all_words(4, 6)) {
        const std::string s = oracle::spell(lab.alphabet(), w);
        REQUIRE(accepts(u, w) == (oracle::lab(s) || oracle::lac(s)));
    }
}

TEST_CASE("union identities") {
    const Automaton dyck = machines::load(machines::kDyck);
    CHECK_FALSE(bounded_equivalent(union_of(dyck, dyck), dyck, 8));
    CHECK_FALSE(bounded_equivalent(union_of(dyck, empty_language(dyck.alphabet())), dyck, 8));
    CHECK_THROWS_AS(union_of(dyck, machines::load(machines::kLab)), AlphabetMismatch);
}

TEST_CASE("union is sound on random machines") {
    std::mt19937_64 rng(31);
    RandomSpec spec;
    spec.max_symbols = 2;
    for (int i = 0; i < 40; ++i) {
        Automaton a = random_automaton(rng, spec);
        Automaton b = random_automaton(rng, spec);
        if (!(a.alphabet() == b.alphabet())) continue;
        const Automaton u = union_of(a, b);
        for (const Word& w : all_words(a.alphabet().size(), 6)) {
            REQUIRE(accepts(u, w) == (accepts(a, w) || accepts(b, w)));
        }
    }
}

TEST_CASE("guarded union of the three pair machines") {
    const Automaton lab = machines::load(machines::kLab);
    const Automaton& lac = get_entry("ex1-Lac").automaton;
    const Automaton& lad = get_entry("ex1-Lad").automaton;
    const Automaton g =
        build_guarded_union({{"ab", "b", lab, "qb"}, {"ac", "c", lac, "qc"}, {"ad", "d", lad, "qd"}});
    CHECK(g.num_states() == 19);
    const VariantProfile p = classify(g);
    CHECK(p.single_initial);
    CHECK(p.deterministic_transitions);
    CHECK(p.has(Label::DFAwntl));
    CHECK_FALSE(p.has(Label::NFAwtl));
    CHECK(g.translucent(0) == SymbolSet::all(4));
    for (const Word& w : all_words(4, 7)) {
        const std::string s = oracle::spell(lab.alphabet(), w);
        REQUIRE(accepts(g, w) == (oracle::lab(s) || oracle::lac(s) || oracle::lad(s)));
    }
}

TEST_CASE("guarded union with one part") {
    const Automaton lab = machines::load(machines::kLab);
    const Automaton g = build_guarded_union({{"ab", "b", lab, "qb"}});
    for (const Word& w : all_words(4, 6)) {
        const std::string s = oracle::spell(lab.alphabet(), w);
        REQUIRE(accepts(g, w) == (oracle::lab(s) && s.find('b') != std::string::npos));
    }
}

TEST_CASE("guarded union errors") {
    const Automaton lab = machines::load(machines::kLab);
    const Automaton& lac = get_entry("ex1-Lac").automaton;
    CHECK_THROWS_AS(build_guarded_union({{"x", "b", lab, "qb"}, {"y", "b", lac, "qc"}}), DuplicateTrigger);
    CHECK_THROWS_AS(build_guarded_union({{"x", "c", machines::load(machines::kCross), "qc"}}), PartNotDFAwtl);
    CHECK_THROWS_AS(build_guarded_union({{"x", "z", lab, "qb"}}), Error);
    CHECK_THROWS_AS(build_guarded_union({{"x", "b", lab, "nowhere"}}), Error);
}

TEST_CASE("candidate space") {
    const Alphabet ab(std::vector<std::string>{"a", "b"});
    const SearchSpaceSpec one{ab, 1, true, 3};
    // per τ: no edges, or a self loop on a non-empty subset of Σ \ τ;
    // τ = ∅: 1 + 3, {a}: 1 + 1, {b}: 1 + 1, {a, b}: 1; times the final flag
    CHECK(sfawtl_candidate_count(one) == 2 * 9);
    const SearchSpaceSpec three{ab, 3, true, 3};
    const std::uint64_t total = sfawtl_candidate_count(three);
    for (std::uint64_t i = 0; i < total; i += 97) {
        const Automaton c = sfawtl_candidate(three, i);
        const VariantProfile p = classify(c);
        CHECK(p.state_deterministic);
        CHECK(p.disjoint_translucency);
        CHECK(p.single_initial);
    }
    CHECK_THROWS(sfawtl_candidate(three, total));
}

TEST_CASE("search finds a Dyck machine") {
    const Alphabet bits(std::vector<std::string>{"0", "1"});
    const SearchOutcome r = search_sfawtl(spelled(bits, oracle::dyck), {bits, 2, true, 6});
    REQUIRE(r.machine);
    CHECK(r.verified);
    CHECK(r.machine->num_states() == 2);
    CHECK_FALSE(bounded_equivalent(*r.machine, machines::load(machines::kDyck), 8));
}

TEST_CASE("search finds a three-state machine for ab + ba") {
    const Alphabet ab(std::vector<std::string>{"a", "b"});
    const SearchOutcome r = search_sfawtl(spelled(ab, ab_or_ba), {ab, 3, true, 3});
    REQUIRE(r.machine);
    CHECK(r.machine->num_states() == 3);
    CHECK(r.verified);
    const SearchOutcome two = search_sfawtl(spelled(ab, ab_or_ba), {ab, 2, true, 3});
    CHECK_FALSE(two.machine);
}

TEST_CASE("search result does not depend on worker count") {
    const Alphabet ab(std::vector<std::string>{"a", "b"});
    const SearchSpaceSpec spec{ab, 3, true, 5};
    const SearchOutcome one = search_sfawtl(spelled(ab, ab_or_ba), spec, {kDefaultSearchBudget, 1});
    const SearchOutcome many = search_sfawtl(spelled(ab, ab_or_ba), spec, {kDefaultSearchBudget, 6});
    REQUIRE(one.machine);
    REQUIRE(many.machine);
    CHECK(one.found_index == many.found_index);
    CHECK(*one.machine == *many.machine);
}

TEST_CASE("search budget") {
    const Alphabet ab(std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(search_sfawtl(spelled(ab, ab_or_ba), {ab, 3, true, 6}, {1000, 1}), BudgetExceeded);
}

// Two states suffice for a* + b*: q0 is final and sees a as translucent,
// so it accepts a^n on the spot; reading a b moves to q1, which is final
// and sees b as translucent.
TEST_CASE("a* + b* has a two-state line-graph machine") {
    const Automaton m = parse_automaton(R"(alphabet: a b
states: q0 q1
initial: q0
final: q0 q1
translucent q0: a
translucent q1: b
trans q0 b -> q1
)");
    CHECK(classify(m).has(Label::SFAwtl));
    for (const Word& w : all_words(2, 10)) {
        REQUIRE(accepts(m, w) == a_star_or_b_star(oracle::spell(m.alphabet(), w)));
    }
    const SearchOutcome r = search_sfawtl(spelled(m.alphabet(), a_star_or_b_star), {m.alphabet(), 3, true, 6});
    REQUIRE(r.machine);
    CHECK(r.machine->num_states() == 2);
}
