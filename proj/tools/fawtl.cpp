// fawtl -- command-line front end.
//
// Exit codes: 0 success / ACCEPT / EQUAL / PASS, 1 REJECT / counterexample /
// failed check / EXHAUSTED, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "fawtl/constructions.hpp"
#include "fawtl/core.hpp"
#include "fawtl/corpus.hpp"
#include "fawtl/engine.hpp"
#include "fawtl/langops.hpp"
#include "fawtl/random.hpp"
#include "fawtl/textio.hpp"

namespace {

using namespace fawtl;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

Automaton load(const std::string& path) {
    return parse_automaton(read_file(path));
}

int cmd_check(const std::string& file, const std::string& word_text, bool trace) {
    const Automaton a = load(file);
    const Word w = parse_word(a.alphabet(), word_text);
    const auto t = first_trace(a, w);
    std::cout << (t ? "ACCEPT" : "REJECT") << '\n';
    if (t && trace) {
        for (const Step& s : t->steps) {
            std::cout << a.state_name(s.from) << ' ' << s.position << ' ' << a.alphabet().token(s.letter) << " -> "
                      << a.state_name(s.to) << '\n';
        }
    }
    return t ? kOk : kNegative;
}

int cmd_enum(const std::string& file, std::size_t max_len, bool as_parikh) {
    const Automaton a = load(file);
    const BoundedLanguage lang = enumerate_language(a, max_len);
    if (as_parikh) {
        for (const auto& v : parikh_image(lang, a.alphabet().size())) {
            std::cout << format_parikh(a.alphabet(), v) << '\n';
        }
    } else {
        for (const auto& w : lang.words) {
            std::cout << format_word(a.alphabet(), w) << '\n';
        }
    }
    return kOk;
}

int cmd_classify(const std::string& file) {
    const VariantProfile p = classify(load(file));
    auto flag = [](std::string_view name, bool v) { std::cout << name << '=' << (v ? "true" : "false") << '\n'; };
    flag("single_initial", p.single_initial);
    flag("deterministic_transitions", p.deterministic_transitions);
    flag("disjoint_translucency", p.disjoint_translucency);
    flag("state_deterministic", p.state_deterministic);
    for (Label l : kAllLabels) {
        flag(to_string(l), p.has(l));
    }
    return kOk;
}

int cmd_equiv(const std::string& file_a, const std::string& file_b, std::size_t max_len) {
    const Automaton a = load(file_a);
    const Automaton b = load(file_b);
    const auto diff = bounded_equivalent(a, b, max_len);
    if (!diff) {
        std::cout << "EQUAL\n";
        return kOk;
    }
    std::cout << "COUNTEREXAMPLE " << format_word(a.alphabet(), diff->word)
              << " in=" << (diff->accepted_by == Side::A ? "A" : "B") << '\n';
    return kNegative;
}

int cmd_union(const std::string& file_a, const std::string& file_b, const std::string& out_path) {
    const Automaton u = union_of(load(file_a), load(file_b));
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + out_path + "'");
    }
    out << serialize_automaton(u);
    return kOk;
}

int cmd_lemma(const std::string& file, std::size_t max_len) {
    const Automaton a = load(file);
    const LemmaReport r = check_letter_equivalence_lemma(a, max_len);
    if (r.pass()) {
        std::cout << "PASS (bound " << max_len << ")\n";
        return kOk;
    }
    const auto& v = *r.violation;
    std::cout << "FAIL " << to_string(v.check) << ' ' << (v.missing ? "missing" : "extra") << ' '
              << format_parikh(a.alphabet(), v.vector) << " (bound " << max_len << ")\n";
    return kNegative;
}

int cmd_search(const std::string& target_name, std::size_t max_states, std::size_t test_len, bool back_edge,
               unsigned workers) {
    const SearchTarget target = named_target(target_name);
    const SearchSpaceSpec spec{target.alphabet, max_states, back_edge, test_len};
    const SearchOutcome r = search_sfawtl(target.member, spec, {kDefaultSearchBudget, workers});
    const std::string structure = back_edge ? "line-graph" : "line-graph-no-back-edge";
    if (!r.machine) {
        std::cout << "EXHAUSTED (bound " << test_len << ", structure " << structure << ")\n";
        return kNegative;
    }
    std::cout << "# candidate " << r.found_index << " of " << r.candidates_total << "; matches " << target.name
              << " on all words up to length " << test_len << (r.verified ? " (re-verified)" : " (NOT re-verified)")
              << '\n';
    std::cout << serialize_automaton(*r.machine);
    return kOk;
}

int cmd_corpus_show(const std::string& name) {
    const CorpusEntry& e = get_entry(name);
    std::cout << "# " << e.name << ": " << e.description << '\n' << serialize_automaton(e.automaton);
    return kOk;
}

int cmd_corpus_verify(const std::string& name, std::size_t max_len) {
    const VerifyReport r = verify_entry(name, max_len);
    if (r.pass()) {
        std::cout << "PASS " << r.name << " (bound " << max_len << ")\n";
        return kOk;
    }
    const Alphabet& sigma = get_entry(name).automaton.alphabet();
    std::cout << "FAIL " << r.name << " (bound " << max_len << ")\n";
    if (r.counterexample) {
        std::cout << "counterexample " << format_word(sigma, r.counterexample->word) << " accepted by "
                  << (r.counterexample->accepted_by == Side::A ? "automaton" : "oracle") << '\n';
    }
    for (const auto& f : r.findings) {
        std::cout << f << '\n';
    }
    return kNegative;
}

int cmd_fuzz(std::uint64_t seed, std::size_t count, std::size_t max_len) {
    std::mt19937_64 rng(seed);
    std::size_t words = 0;
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const Automaton a = random_automaton(rng);
        for (const Word& w : all_words(a.alphabet().size(), max_len)) {
            ++words;
            if (accepts(a, w) != naive_accepts(a, w, max_len)) {
                ++mismatches;
                std::cout << "MISMATCH machine " << i << " word " << format_word(a.alphabet(), w) << '\n'
                          << serialize_automaton(a);
            }
        }
    }
    std::cout << "machines=" << count << " words=" << words << " mismatches=" << mismatches << " seed=" << seed
              << '\n';
    return mismatches == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automata with translucent letters: simulate, classify, verify."};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for randomized commands");

    std::string file, file_b, word, out_path, target, name;
    std::size_t max_len = 0, max_states = 0, test_len = 0, count = 100;
    bool trace = false, as_parikh = false, no_back_edge = false;
    unsigned workers = 1;

    auto* check = app.add_subcommand("check", "Decide membership of a word");
    check->add_option("file", file)->required();
    check->add_option("word", word, "Word; \"\" for the empty word")->required();
    check->add_flag("--trace", trace, "Print the accepting steps");

    auto* enumerate = app.add_subcommand("enum", "List accepted words up to a length");
    enumerate->add_option("file", file)->required();
    enumerate->add_option("--max-len", max_len)->required();
    enumerate->add_flag("--parikh", as_parikh, "Print Parikh vectors instead of words");

    auto* cls = app.add_subcommand("classify", "Structural flags and class labels");
    cls->add_option("file", file)->required();

    auto* equiv = app.add_subcommand("equiv", "Bounded language equivalence");
    equiv->add_option("fileA", file)->required();
    equiv->add_option("fileB", file_b)->required();
    equiv->add_option("--max-len", max_len)->required();

    auto* uni = app.add_subcommand("union", "Union construction");
    uni->add_option("fileA", file)->required();
    uni->add_option("fileB", file_b)->required();
    uni->add_option("-o,--output", out_path)->required();

    auto* lemma = app.add_subcommand("lemma-check", "Letter-equivalent sublanguage check");
    lemma->add_option("file", file)->required();
    lemma->add_option("--max-len", max_len)->required();

    auto* search = app.add_subcommand("search-sfawtl", "Exhaustive search for a state-deterministic automaton");
    search->add_option("--target", target, "Corpus entry name, a*+b* or ab+aaab-concat")->required();
    search->add_option("--max-states", max_states)->required();
    search->add_option("--test-len", test_len)->required();
    search->add_flag("--no-back-edge", no_back_edge, "Only pure line graphs");
    search->add_option("--workers", workers, "Worker threads");

    auto* corpus = app.add_subcommand("corpus", "Built-in example automata");
    corpus->require_subcommand(1);
    auto* corpus_list = corpus->add_subcommand("list", "List entry names");
    auto* corpus_show = corpus->add_subcommand("show", "Print an entry in file format");
    corpus_show->add_option("name", name)->required();
    auto* corpus_verify = corpus->add_subcommand("verify", "Check an entry against its oracle");
    corpus_verify->add_option("name", name)->required();
    corpus_verify->add_option("--max-len", max_len)->required();

    auto* dot = app.add_subcommand("dot", "Graphviz export");
    dot->add_option("file", file)->required();

    auto* fuzz = app.add_subcommand("fuzz", "Differential test of the engine on random automata (uses --seed)");
    fuzz->add_option("--count", count, "Number of random automata");
    fuzz->add_option("--max-len", max_len, "Longest word tried")->default_val(6);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*check) return cmd_check(file, word, trace);
        if (*enumerate) return cmd_enum(file, max_len, as_parikh);
        if (*cls) return cmd_classify(file);
        if (*equiv) return cmd_equiv(file, file_b, max_len);
        if (*uni) return cmd_union(file, file_b, out_path);
        if (*lemma) return cmd_lemma(file, max_len);
        if (*search) return cmd_search(target, max_states, test_len, !no_back_edge, workers);
        if (*corpus_list) {
            for (const auto& n : list_entries()) std::cout << n << '\n';
            return kOk;
        }
        if (*corpus_show) return cmd_corpus_show(name);
        if (*corpus_verify) return cmd_corpus_verify(name, max_len);
        if (*dot) {
            std::cout << export_dot(load(file));
            return kOk;
        }
        if (*fuzz) return cmd_fuzz(seed, count, max_len);
    } catch (const fawtl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
