#include "fawtl/corpus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fawtl/constructions.hpp"
#include "fawtl/engine.hpp"

namespace fawtl {

namespace {

// Letter counts by token for predicates written against token names.
struct Counts {
    const Alphabet& sigma;
    std::vector<std::uint32_t> n;

    Counts(const Alphabet& alphabet, const Word& w) : sigma(alphabet), n(letter_counts(alphabet.size(), w)) {}
    std::uint32_t operator[](std::string_view token) const { return n[sigma.at(token)]; }
};

std::string spell(const Alphabet& sigma, const Word& w) {
    std::string s;
    for (SymbolId x : w) {
        s += sigma.token(x);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Oracles

Membership pair_language(const Alphabet& sigma, std::string x, std::string y, std::string u, std::string v) {
    return [&sigma, x, y, u, v](const Word& w) {
        Counts c(sigma, w);
        return c[x] == c[y] && c[x] > 0 && c[u] == c[v];
    };
}

bool dyck(const std::string& w) {
    int depth = 0;
    for (char ch : w) {
        depth += ch == '0' ? 1 : -1;
        if (depth < 0) return false;
    }
    return depth == 0;
}

// Repeatedly: the word must start with a; drop it, then the first b, the
// first c and the first d.
bool cycle_abcd(std::string w) {
    while (!w.empty()) {
        if (w.front() != 'a') return false;
        w.erase(0, 1);
        for (char ch : {'b', 'c', 'd'}) {
            const auto at = w.find(ch);
            if (at == std::string::npos) return false;
            w.erase(at, 1);
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Machines

RawAutomaton pair_machine_ab() {
    RawAutomaton r;
    r.alphabet = {"a", "b", "c", "d"};
    r.states = {"q0", "q", "qa", "qb", "qc", "qd"};
    r.initial = {"q0"};
    r.finals = {"q"};
    r.translucent = {
        {"q0", {"b", "c", "d"}},
        {"qa", {"a", "c", "d"}},
        {"qb", {"b", "c", "d"}},
        {"qc", {"a", "b", "c"}},
        {"qd", {"a", "b", "d"}},
    };
    r.transitions = {
        {"q0", "a", "qa"}, {"q", "a", "qa"}, {"q", "b", "qb"}, {"q", "c", "qc"}, {"q", "d", "qd"},
        {"qa", "b", "q"},  {"qb", "a", "q"}, {"qc", "d", "q"}, {"qd", "c", "q"},
    };
    return r;
}

// Apply a letter permutation to the tables; states named "q<letter>" follow
// their letter.
RawAutomaton permute_letters(const RawAutomaton& r, const std::map<std::string, std::string>& sigma) {
    auto letter = [&](const std::string& x) {
        auto it = sigma.find(x);
        return it == sigma.end() ? x : it->second;
    };
    auto state = [&](const std::string& q) {
        if (q.size() == 2 && q[0] == 'q' && sigma.contains(q.substr(1))) {
            return "q" + letter(q.substr(1));
        }
        return q;
    };
    RawAutomaton out = r;
    for (auto& t : out.translucent) {
        t.state = state(t.state);
        for (auto& x : t.letters) x = letter(x);
        std::sort(t.letters.begin(), t.letters.end());
    }
    for (auto& tr : out.transitions) {
        tr = {state(tr.from), letter(tr.letter), state(tr.to)};
    }
    return out;
}

RawAutomaton dyck_machine() {
    RawAutomaton r;
    r.alphabet = {"0", "1"};
    r.states = {"q0", "q1"};
    r.initial = {"q0"};
    r.finals = {"q0"};
    r.translucent = {{"q1", {"0"}}};
    r.transitions = {{"q0", "0", "q1"}, {"q1", "1", "q0"}};
    return r;
}

RawAutomaton cycle_machine() {
    RawAutomaton r;
    r.alphabet = {"a", "b", "c", "d"};
    r.states = {"q0", "q1", "q2", "q3"};
    r.initial = {"q0"};
    r.finals = {"q0"};
    r.translucent = {{"q1", {"a", "c", "d"}}, {"q2", {"a", "b", "d"}}, {"q3", {"a", "b", "c"}}};
    r.transitions = {{"q0", "a", "q1"}, {"q1", "b", "q2"}, {"q2", "c", "q3"}, {"q3", "d", "q0"}};
    return r;
}

RawAutomaton star_machine(const std::string& x) {
    RawAutomaton r;
    r.alphabet = {"a", "b"};
    r.states = {"q0"};
    r.initial = {"q0"};
    r.finals = {"q0"};
    r.transitions = {{"q0", x, "q0"}};
    return r;
}

RawAutomaton a_or_aaa_machine() {
    RawAutomaton r;
    r.alphabet = {"a", "b"};
    r.states = {"q0", "q1", "q2", "q3"};
    r.initial = {"q0"};
    r.finals = {"q1", "q3"};
    r.transitions = {{"q0", "a", "q1"}, {"q1", "a", "q2"}, {"q2", "a", "q3"}};
    return r;
}

RawAutomaton ab_or_ba_machine() {
    RawAutomaton r;
    r.alphabet = {"a", "b"};
    r.states = {"q0", "q1", "q2"};
    r.initial = {"q0"};
    r.finals = {"q2"};
    r.translucent = {{"q0", {"a"}}};
    r.transitions = {{"q0", "b", "q1"}, {"q1", "a", "q2"}};
    return r;
}

RawAutomaton cross_machine() {
    RawAutomaton r;
    r.alphabet = {"a", "b", "c"};
    r.states = {"q0", "qa", "qb", "qc"};
    r.initial = {"q0"};
    r.finals = {"qc"};
    r.translucent = {{"qa", {"a", "b", "c"}}, {"qb", {"a", "b", "c"}}};
    r.transitions = {
        {"q0", "a", "qa"}, {"q0", "b", "qb"}, {"q0", "c", "qc"}, {"qa", "b", "q0"}, {"qb", "a", "q0"},
    };
    return r;
}

// {w ∈ {a,b}* : |w|_a = |w|_b or 2|w|_a = |w|_b}.
//
// q0 (final) reads the first letter. The guard states a1 / b1 see every
// letter and pick a branch by which letter they erase next: p is the
// balanced-count machine, r the one-a-per-two-b machine. x, z1..z3, w1, w2
// and n bridge the counts already erased into p or r.
RawAutomaton ratio_machine() {
    RawAutomaton r;
    r.alphabet = {"a", "b"};
    r.states = {"q0", "a1", "b1", "x", "z1", "z2", "z3", "w1", "w2", "n",
                "p",  "pa", "pb", "r", "s1", "s2", "t1", "t2"};
    r.initial = {"q0"};
    r.finals = {"q0", "x", "p", "r"};
    r.translucent = {
        {"a1", {"a", "b"}}, {"b1", {"a", "b"}}, {"z1", {"a"}}, {"z2", {"a"}}, {"z3", {"a"}},
        {"w1", {"a"}},      {"w2", {"a"}},      {"n", {"b"}},  {"pa", {"a"}}, {"pb", {"b"}},
        {"s1", {"a"}},      {"s2", {"a"}},      {"t1", {"b"}}, {"t2", {"a"}},
    };
    r.transitions = {
        {"q0", "a", "a1"}, {"q0", "b", "b1"},                      // first letter
        {"a1", "a", "w1"}, {"a1", "b", "x"},                       // after a: guess
        {"w1", "b", "w2"}, {"w2", "b", "p"},                       // 2a erased: two b to balance
        {"x", "a", "z1"},  {"x", "b", "r"},                        // ab erased: λ, or the 1:2 branch
        {"z1", "b", "z2"}, {"z2", "b", "z3"}, {"z3", "b", "r"},    // 2a 1b erased: three more b
        {"b1", "a", "p"},  {"b1", "b", "n"},                       // after b: guess
        {"n", "a", "r"},                                           // 2b erased: one a
        {"p", "a", "pa"},  {"p", "b", "pb"},  {"pa", "b", "p"}, {"pb", "a", "p"},
        {"r", "a", "s1"},  {"s1", "b", "s2"}, {"s2", "b", "r"},
        {"r", "b", "t1"},  {"t1", "a", "t2"}, {"t2", "b", "r"},
    };
    return r;
}

// ---------------------------------------------------------------------------
// Extra checks

std::vector<std::string> cycle_intersection_check(const Automaton& a, std::size_t max_len) {
    const Alphabet& sigma = a.alphabet();
    std::vector<std::string> got;
    for (const auto& w : enumerate_language(a, max_len).words) {
        const std::string s = spell(sigma, w);
        // membership in a*d*c*b*
        std::string order = "adcb";
        std::size_t stage = 0;
        bool in_regular = true;
        for (char ch : s) {
            while (stage < order.size() && order[stage] != ch) ++stage;
            if (stage == order.size()) {
                in_regular = false;
                break;
            }
        }
        if (in_regular) got.push_back(s);
    }
    std::vector<std::string> want;
    for (std::size_t n = 0; 4 * n <= max_len; ++n) {
        want.push_back(std::string(n, 'a') + std::string(n, 'd') + std::string(n, 'c') + std::string(n, 'b'));
    }
    if (got != want) {
        return {"intersection with a*d*c*b* is not {a^n d^n c^n b^n}"};
    }
    return {};
}

std::vector<std::string> cross_property_check(const Automaton& a, std::size_t max_len) {
    const Alphabet& sigma = a.alphabet();
    std::vector<std::string> findings;
    for (const auto& w : all_words(sigma.size(), max_len)) {
        const std::string s = spell(sigma, w);
        const bool accepted = accepts(a, w);
        const auto c_at = s.find('c');
        const bool one_c = c_at != std::string::npos && s.find('c', c_at + 1) == std::string::npos;
        if (accepted) {
            Counts n(sigma, w);
            if (n["a"] != n["b"]) findings.push_back("accepted word with |w|_a != |w|_b: " + s);
            if (!one_c) {
                findings.push_back("accepted word without exactly one c: " + s);
                continue;
            }
            if (c_at < s.size() - c_at - 1) findings.push_back("accepted word with |v| < |u|: " + s);
        }
        if (one_c && c_at == s.size() - c_at - 1) {
            const std::string v = s.substr(0, c_at);
            const std::string u = s.substr(c_at + 1);
            auto count = [](const std::string& t, char ch) { return std::count(t.begin(), t.end(), ch); };
            const bool cross = count(v, 'a') == count(u, 'b') && count(v, 'b') == count(u, 'a');
            if (accepted != cross) findings.push_back("|v| = |u| membership differs from cross counts: " + s);
        }
    }
    return findings;
}

// ---------------------------------------------------------------------------

struct Registry {
    std::vector<CorpusEntry> entries;
    std::vector<std::string> names;
};

Registry make_registry() {
    Registry reg;
    auto add = [&reg](CorpusEntry e) {
        reg.names.push_back(e.name);
        reg.entries.push_back(std::move(e));
    };

    const Automaton lab = build_automaton(pair_machine_ab());
    const Automaton lac = build_automaton(permute_letters(pair_machine_ab(), {{"b", "c"}, {"c", "b"}}));
    const Automaton lad = build_automaton(permute_letters(pair_machine_ab(), {{"b", "d"}, {"d", "b"}}));
    const Alphabet& abcd = lab.alphabet();
    const std::vector<Label> dfawtl_not_sfawtl = {Label::NFAwtl, Label::DFAwtl, Label::NFAwntl, Label::DFAwntl};

    // Oracles capture the alphabet by reference; keep a stable copy.
    static const Alphabet kAbcd = abcd;
    static const Alphabet kAb(std::vector<std::string>{"a", "b"});
    static const Alphabet kBinary(std::vector<std::string>{"0", "1"});

    add({"ex1-Lab", lab, pair_language(kAbcd, "a", "b", "c", "d"), false,
         "DFAwtl accepting |w|_a = |w|_b > 0 and |w|_c = |w|_d", dfawtl_not_sfawtl, {Label::SFAwtl}, 8,
         {}});
    add({"ex1-Lac", lac, pair_language(kAbcd, "a", "c", "b", "d"), false,
         "ex1-Lab with b and c exchanged: |w|_a = |w|_c > 0 and |w|_b = |w|_d", dfawtl_not_sfawtl,
         {Label::SFAwtl}, 8, {}});
    add({"ex1-Lad", lad, pair_language(kAbcd, "a", "d", "b", "c"), false,
         "ex1-Lab with b and d exchanged: |w|_a = |w|_d > 0 and |w|_b = |w|_c", dfawtl_not_sfawtl,
         {Label::SFAwtl}, 8, {}});

    const std::vector<Label> sfawtl = {Label::NFAwtl, Label::DFAwtl, Label::SFAwtl, Label::NFAwntl, Label::DFAwntl};
    add({"sfawtl-dyck", build_automaton(dyck_machine()),
         [](const Word& w) { return dyck(spell(kBinary, w)); }, false,
         "state-deterministic two-state machine for the Dyck language (0 opens, 1 closes)", sfawtl, {}, 8, {}});
    add({"sfawtl-cycle-abcd", build_automaton(cycle_machine()),
         [](const Word& w) { return cycle_abcd(spell(kAbcd, w)); }, false,
         "state-deterministic a/b/c/d cycle; meets a*d*c*b* in {a^n d^n c^n b^n}", sfawtl, {}, 8,
         cycle_intersection_check});
    add({"sfawtl-astar", build_automaton(star_machine("a")),
         [](const Word& w) { return std::all_of(w.begin(), w.end(), [](SymbolId x) { return x == 0; }); }, false,
         "one-state SFAwtl for a*", sfawtl, {}, 8, {}});
    add({"sfawtl-bstar", build_automaton(star_machine("b")),
         [](const Word& w) { return std::all_of(w.begin(), w.end(), [](SymbolId x) { return x == 1; }); }, false,
         "one-state SFAwtl for b*", sfawtl, {}, 8, {}});
    add({"sfawtl-a-aaa", build_automaton(a_or_aaa_machine()),
         [](const Word& w) {
             const auto s = spell(kAb, w);
             return s == "a" || s == "aaa";
         },
         false, "four-state SFAwtl for a + aaa", sfawtl, {}, 8, {}});
    add({"sfawtl-ab-ba", build_automaton(ab_or_ba_machine()),
         [](const Word& w) {
             const auto s = spell(kAb, w);
             return s == "ab" || s == "ba";
         },
         false, "three-state SFAwtl for ab + ba using translucency in the initial state", sfawtl, {}, 8, {}});

    const std::vector<Label> dfawntl_only = {Label::NFAwntl, Label::DFAwntl};
    const std::vector<Label> not_wtl = {Label::NFAwtl, Label::DFAwtl, Label::SFAwtl};
    static const Automaton kCross = build_automaton(cross_machine());
    add({"ex4-dfawntl", kCross, [](const Word& w) { return naive_accepts(kCross, w); }, true,
         "DFAwntl over {a,b,c} with overlapping translucency; accepted words have |w|_a = |w|_b and one c", dfawntl_only, not_wtl, 9,
         cross_property_check});

    const Membership in_lab = pair_language(kAbcd, "a", "b", "c", "d");
    const Membership in_lac = pair_language(kAbcd, "a", "c", "b", "d");
    const Membership in_lad = pair_language(kAbcd, "a", "d", "b", "c");
    add({"ex6-triple-union",
         build_guarded_union({{"ab", "b", lab, "qb"}, {"ac", "c", lac, "qc"}, {"ad", "d", lad, "qd"}}),
         [=](const Word& w) { return in_lab(w) || in_lac(w) || in_lad(w); }, false,
         "guarded-union DFAwntl for ex1-Lab + ex1-Lac + ex1-Lad", dfawntl_only, not_wtl, 8, {}});

    const Membership ratio = [](const Word& w) {
        Counts c(kAb, w);
        return c["a"] == c["b"] || 2 * c["a"] == c["b"];
    };
    const Automaton fig1 = build_automaton(ratio_machine());
    if (auto bad = bounded_equivalent([&fig1](const Word& w) { return accepts(fig1, w); }, ratio, 2, 10)) {
        throw std::logic_error("fig1-ratio does not match its language on " + spell(kAb, bad->word));
    }
    add({"fig1-ratio", fig1, ratio, false,
         "reconstructed DFAwntl for |w|_a = |w|_b or 2|w|_a = |w|_b", dfawntl_only, not_wtl, 10,
         {}});
    return reg;
}

const Registry& registry() {
    static const Registry reg = make_registry();
    return reg;
}

}  // namespace

const std::vector<std::string>& list_entries() {
    return registry().names;
}

const CorpusEntry& get_entry(std::string_view name) {
    for (const auto& e : registry().entries) {
        if (e.name == name) {
            return e;
        }
    }
    throw NotFound("no corpus entry named '" + std::string(name) + "'");
}

VerifyReport verify_entry(std::string_view name, std::size_t max_len) {
    const CorpusEntry& e = get_entry(name);
    if (e.differential_oracle && max_len > kDefaultNaiveBound) {
        throw BoundExceeded("verify: " + e.name + " uses the naive oracle, bound " +
                            std::to_string(kDefaultNaiveBound));
    }
    VerifyReport report{e.name, max_len, std::nullopt, {}};
    const Automaton& a = e.automaton;
    report.counterexample = bounded_equivalent([&a](const Word& w) { return accepts(a, w); }, e.oracle,
                                               a.alphabet().size(), max_len);
    const VariantProfile profile = classify(a);
    for (Label l : e.expected_labels) {
        if (!profile.has(l)) report.findings.push_back("missing label " + std::string(to_string(l)));
    }
    for (Label l : e.excluded_labels) {
        if (profile.has(l)) report.findings.push_back("unexpected label " + std::string(to_string(l)));
    }
    if (e.extra_checks) {
        for (auto& f : e.extra_checks(a, max_len)) {
            report.findings.push_back(std::move(f));
        }
    }
    return report;
}

SearchTarget named_target(std::string_view name) {
    static const Alphabet kAb(std::vector<std::string>{"a", "b"});
    if (name == "a*+b*") {
        return {std::string(name), kAb, [](const Word& w) {
                    return std::all_of(w.begin(), w.end(), [&w](SymbolId x) { return x == w.front(); });
                }};
    }
    if (name == "ab+aaab-concat") {
        return {std::string(name), kAb, [](const Word& w) {
                    return w == Word{0, 1} || w == Word{0, 0, 0, 1};
                }};
    }
    const CorpusEntry& e = get_entry(name);
    return {e.name, e.automaton.alphabet(), e.oracle};
}

}  // namespace fawtl
