// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact (zero tolerance); the bounds and sample sizes below are the pinned
// parameters.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fawtl/constructions.hpp"
#include "fawtl/corpus.hpp"
#include "fawtl/engine.hpp"
#include "fawtl/langops.hpp"
#include "fawtl/random.hpp"
#include "fawtl/textio.hpp"
#include "support/oracles.hpp"

#ifndef FAWTL_CLI_PATH
#error "FAWTL_CLI_PATH must name the fawtl executable"
#endif

using namespace fawtl;

namespace {

constexpr std::size_t kCorpusBound = 8;
constexpr std::size_t kCycleBound = 8;
constexpr std::size_t kCrossBound = 9;
constexpr std::size_t kLemmaCorpusBound = 8;
constexpr int kLemmaRandomMachines = 200;
constexpr std::size_t kLemmaRandomBound = 6;
constexpr std::size_t kUnionBound = 6;
constexpr std::size_t kNaiveBound = 6;
constexpr int kNaiveRandomMachines = 500;
constexpr int kNfaRandomMachines = 100;
constexpr std::size_t kNfaBound = 8;
constexpr std::size_t kSearchTestLen = 6;
constexpr std::uint64_t kSeed = 20240611;

struct Result {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(const std::string& id, const std::string& title, const Result& r) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << id << ' ' << title;
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << std::endl;
    if (!r.pass) ++failures;
}

std::string spell(const Alphabet& sigma, const Word& w) { return format_word(sigma, w); }

Result corpus_fidelity() {
    Result r;
    std::size_t n = 0;
    for (const auto& name : list_entries()) {
        const VerifyReport v = verify_entry(name, kCorpusBound);
        ++n;
        if (!v.pass()) {
            r.pass = false;
            r.detail += name + " ";
        }
    }
    if (r.pass) r.detail = std::to_string(n) + " entries at bound " + std::to_string(kCorpusBound);
    return r;
}

Result cycle_witness() {
    const Automaton& a = get_entry("sfawtl-cycle-abcd").automaton;
    std::vector<std::string> hits;
    for (const Word& w : enumerate_language(a, kCycleBound).words) {
        const std::string s = oracle::spell(a.alphabet(), w);
        if (oracle::in_adcb_shape(s)) hits.push_back(s);
    }
    const std::vector<std::string> expected = {"", "adcb", "aaddccbb"};
    Result r{hits == expected, {}};
    for (const auto& h : hits) r.detail += (h.empty() ? std::string("λ") : h) + " ";
    return r;
}

Result cross_properties() {
    const Automaton& a = get_entry("ex4-dfawntl").automaton;
    const BoundedLanguage lang = enumerate_language(a, kCrossBound);
    Result r;
    auto fail = [&r](const std::string& why) {
        if (r.pass) r.detail = why;
        r.pass = false;
    };
    for (const Word& w : lang.words) {
        const std::string s = oracle::spell(a.alphabet(), w);
        if (oracle::count(s, 'a') != oracle::count(s, 'b')) fail("unequal a/b in " + s);
        if (oracle::count(s, 'c') != 1) {
            fail("c count in " + s);
            continue;
        }
        const auto c = s.find('c');
        if (c < s.size() - c - 1) fail("|v| < |u| in " + s);
    }
    std::size_t balanced = 0;
    for (const Word& w : all_words(3, kCrossBound)) {
        const std::string s = oracle::spell(a.alphabet(), w);
        if (oracle::count(s, 'c') != 1) continue;
        const auto c = s.find('c');
        const std::string v = s.substr(0, c);
        const std::string u = s.substr(c + 1);
        if (v.size() != u.size()) continue;
        ++balanced;
        const bool cross =
            oracle::count(v, 'a') == oracle::count(u, 'b') && oracle::count(v, 'b') == oracle::count(u, 'a');
        if (lang.contains(w) != cross) fail("cross condition on " + s);
    }
    if (r.pass) {
        r.detail = std::to_string(lang.words.size()) + " accepted words, " + std::to_string(balanced) +
                   " |v| = |u| words checked";
    }
    return r;
}

Result strictness() {
    const Automaton& a = get_entry("ex4-dfawntl").automaton;
    const BoundedLanguage full = enumerate_language(a, kCrossBound);
    const BoundedLanguage restricted = enumerate_language(remove_overlap_translucency(a), kCrossBound);
    Result r{true, {}};
    for (const Word& w : restricted.words) {
        if (!full.contains(w)) return {false, "restriction accepts " + spell(a.alphabet(), w)};
    }
    for (const Word& w : full.words) {
        if (!restricted.contains(w)) {
            r.detail = "witness " + spell(a.alphabet(), w) + "; " + std::to_string(full.words.size()) + " vs " +
                       std::to_string(restricted.words.size()) + " words";
            return r;
        }
    }
    return {false, "no witness at bound " + std::to_string(kCrossBound)};
}

std::string describe(const Automaton& a, const LemmaReport& rep) {
    const auto& v = *rep.violation;
    return std::string(to_string(v.check)) + (v.missing ? " missing " : " extra ") +
           format_parikh(a.alphabet(), v.vector);
}

Result letter_equivalence() {
    Result r;
    std::string corpus_fail;
    for (const auto& name : list_entries()) {
        const Automaton& a = get_entry(name).automaton;
        const LemmaReport rep = check_letter_equivalence_lemma(a, kLemmaCorpusBound);
        if (!rep.pass()) corpus_fail += name + " (" + describe(a, rep) + ") ";
    }
    std::mt19937_64 rng(kSeed);
    int random_fail = 0;
    std::string first;
    for (int i = 0; i < kLemmaRandomMachines; ++i) {
        const Automaton a = random_automaton(rng);
        const LemmaReport rep = check_letter_equivalence_lemma(a, kLemmaRandomBound);
        if (!rep.pass()) {
            if (random_fail == 0) {
                first = "machine " + std::to_string(i) + ": " + describe(a, rep) + " [" + serialize_automaton(a) + "]";
                for (auto& ch : first) {
                    if (ch == '\n') ch = ';';
                }
            }
            ++random_fail;
        }
    }
    r.pass = corpus_fail.empty() && random_fail == 0;
    r.detail = "corpus " + (corpus_fail.empty() ? std::string("ok") : corpus_fail) + "; random " +
               std::to_string(kLemmaRandomMachines - random_fail) + "/" + std::to_string(kLemmaRandomMachines) +
               " pass";
    if (!first.empty()) r.detail += "; first violation " + first;
    return r;
}

Result union_closure() {
    const std::pair<const char*, const char*> pairs[] = {{"ex1-Lab", "ex1-Lac"},
                                                        {"ex1-Lac", "ex1-Lad"},
                                                        {"sfawtl-dyck", "sfawtl-dyck"},
                                                        {"sfawtl-astar", "sfawtl-ab-ba"},
                                                        {"fig1-ratio", "sfawtl-a-aaa"}};
    Result r;
    for (const auto& [x, y] : pairs) {
        const Automaton& a = get_entry(x).automaton;
        const Automaton& b = get_entry(y).automaton;
        const Automaton u = union_of(a, b);
        const BoundedLanguage la = enumerate_language(a, kUnionBound);
        const BoundedLanguage lb = enumerate_language(b, kUnionBound);
        std::vector<Word> expected;
        for (const Word& w : all_words(a.alphabet().size(), kUnionBound)) {
            if (la.contains(w) || lb.contains(w)) expected.push_back(w);
        }
        if (enumerate_language(u, kUnionBound).words != expected) {
            r.pass = false;
            r.detail += std::string(x) + "+" + y + " ";
        }
    }
    if (r.pass) r.detail = "5 pairs at bound " + std::to_string(kUnionBound);
    return r;
}

Result engine_soundness() {
    std::uint64_t compared = 0;
    std::uint64_t mismatches = 0;
    auto differential = [&](const Automaton& a) {
        for (const Word& w : all_words(a.alphabet().size(), kNaiveBound)) {
            ++compared;
            if (accepts(a, w) != naive_accepts(a, w)) ++mismatches;
        }
    };
    for (const auto& name : list_entries()) differential(get_entry(name).automaton);
    std::mt19937_64 rng(kSeed + 1);
    for (int i = 0; i < kNaiveRandomMachines; ++i) differential(random_automaton(rng));

    RandomSpec plain;
    plain.translucency = false;
    std::uint64_t nfa_compared = 0;
    for (int i = 0; i < kNfaRandomMachines; ++i) {
        const Automaton a = random_automaton(rng, plain);
        for (const Word& w : all_words(a.alphabet().size(), kNfaBound)) {
            ++nfa_compared;
            if (accepts(a, w) != oracle::nfa_accepts(a, w)) ++mismatches;
        }
    }
    return {mismatches == 0, std::to_string(compared) + " naive and " + std::to_string(nfa_compared) +
                                 " NFA comparisons, " + std::to_string(mismatches) + " mismatches"};
}

Result search_exhausts(const std::string& target_name, std::size_t max_states) {
    const SearchTarget t = named_target(target_name);
    const SearchOutcome o = search_sfawtl(t.member, {t.alphabet, max_states, true, kSearchTestLen}, {kDefaultSearchBudget, 4});
    if (!o.machine) {
        return {true, "exhausted " + std::to_string(o.candidates_total) + " line-graph candidates"};
    }
    std::string m = serialize_automaton(*o.machine);
    for (auto& ch : m) {
        if (ch == '\n') ch = ';';
    }
    return {false, "found candidate " + std::to_string(o.found_index) + " (re-verified: " +
                       (o.verified ? "yes" : "no") + "): " + m};
}

Result search_finds(const std::string& target_name, std::size_t max_states) {
    const SearchTarget t = named_target(target_name);
    const SearchOutcome o = search_sfawtl(t.member, {t.alphabet, max_states, true, kSearchTestLen}, {kDefaultSearchBudget, 4});
    if (!o.machine) return {false, "exhausted"};
    const VariantProfile p = classify(*o.machine);
    const bool shape = p.state_deterministic && p.disjoint_translucency && p.single_initial;
    return {o.verified && shape, std::to_string(o.machine->num_states()) + "-state machine, candidate " +
                                      std::to_string(o.found_index) + ", re-verified " +
                                      (o.verified ? "yes" : "no")};
}

std::string run(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    status = pclose(pipe);
    return out;
}

Result cli_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("fawtl-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string cli = FAWTL_CLI_PATH;
    auto file = [&](const std::string& name) { return (dir / (name + ".txt")).string(); };
    for (const auto& name : list_entries()) {
        std::ofstream(file(name)) << serialize_automaton(get_entry(name).automaton);
    }

    const std::vector<std::string> commands = {
        "corpus list",
        "corpus show ex1-Lab",
        "corpus verify sfawtl-dyck --max-len 8",
        "corpus verify nope --max-len 3",
        "check " + file("ex4-dfawntl") + " abc --trace",
        "check " + file("ex4-dfawntl") + " cab",
        "check " + file("sfawtl-dyck") + " '\"\"'",
        "enum " + file("sfawtl-dyck") + " --max-len 6",
        "enum " + file("ex1-Lab") + " --max-len 4 --parikh",
        "classify " + file("ex4-dfawntl"),
        "equiv " + file("ex1-Lab") + " " + file("ex1-Lac") + " --max-len 4",
        "equiv " + file("sfawtl-dyck") + " " + file("sfawtl-dyck") + " --max-len 6",
        "union " + file("ex1-Lab") + " " + file("ex1-Lac") + " -o " + file("union-out") + " && cat " +
            file("union-out"),
        "lemma-check " + file("ex4-dfawntl") + " --max-len 6",
        "search-sfawtl --target sfawtl-dyck --max-states 2 --test-len 6",
        "search-sfawtl --target ab+aaab-concat --max-states 3 --test-len 5 --workers 3",
        "dot " + file("ex6-triple-union"),
        "--seed 7 fuzz --count 20 --max-len 5",
        "--seed 8 fuzz --count 20 --max-len 5",
        "check /nonexistent abc",
    };
    Result r;
    for (const auto& c : commands) {
        int s1 = 0;
        int s2 = 0;
        const std::string cmd = cli + " " + c;
        const std::string first = run(cmd, s1);
        const std::string second = run(cmd, s2);
        if (first != second || s1 != s2) {
            r.pass = false;
            r.detail += "[" + c + "] ";
        }
    }
    fs::remove_all(dir);
    if (r.pass) r.detail = std::to_string(commands.size()) + " commands byte-identical across two runs";
    return r;
}

}  // namespace

int main() {
    report("1", "corpus fidelity", corpus_fidelity());
    report("2", "cycle machine meets a*d*c*b* in {λ, adcb, aaddccbb}", cycle_witness());
    report("3", "cross machine properties at bound 9", cross_properties());
    report("4", "overlap removal loses words of the cross machine", strictness());
    report("5", "letter-equivalence check (corpus bound 8, 200 random bound 6)", letter_equivalence());
    report("6", "union closure on 5 pairs", union_closure());
    report("7", "engine agrees with naive and NFA oracles", engine_soundness());
    report("8a", "no 3-state line-graph SFAwtl for a*+b* (test length 6)", search_exhausts("a*+b*", 3));
    report("8b", "Dyck SFAwtl found with 2 states and re-verified", search_finds("sfawtl-dyck", 2));
    report("9", "CLI output deterministic", cli_determinism());
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
