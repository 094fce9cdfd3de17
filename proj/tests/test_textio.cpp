#include <doctest.h>

#include <sstream>

#include "fawtl/corpus.hpp"
#include "fawtl/textio.hpp"
#include "support/machines.hpp"

using namespace fawtl;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("parse the pair machine file") {
    const Automaton a = parse_automaton(machines::kLab);
    CHECK(a.num_states() == 6);
    CHECK(a.alphabet().tokens() == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(a == get_entry("ex1-Lab").automaton);
}

TEST_CASE("syntax errors carry line numbers") {
    try {
        parse_automaton("alphabet: a\nstates: q\nfinal: q\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("initial") != std::string::npos);
    }
    try {
        parse_automaton("alphabet: a\nstates: q\n\ninitial: q\nbogus line\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 5);
    }
    CHECK_THROWS_AS(parse_automaton("alphabet: a\nalphabet: b\nstates: q\ninitial: q\n"), SyntaxError);
    CHECK_THROWS_AS(parse_automaton("alphabet: a\nstates: q\ninitial: q\ntrans q a q\n"), SyntaxError);
    CHECK_THROWS_AS(parse_automaton("alphabet: a\nstates: q\ninitial: q\ntranslucent q a\n"), SyntaxError);
}

TEST_CASE("validation errors surface from parse") {
    try {
        parse_automaton("alphabet: a\nstates: q\ninitial: q\ntranslucent q: z\n");
        FAIL("expected ValidationFailure");
    } catch (const ValidationFailure& e) {
        REQUIRE(e.diagnostics().size() == 1);
        CHECK(e.diagnostics()[0].kind == ErrorKind::UnknownSymbol);
        CHECK(e.diagnostics()[0].token == "z");
    }
}

TEST_CASE("comments, blank lines and accumulated targets") {
    const Automaton a = parse_automaton(R"(
# comment line
alphabet: a   # trailing comment
states: p r
initial: p

trans p a -> r
trans p a -> p
)");
    CHECK(a.targets(0, 0).size() == 2);
    CHECK(a.finals().empty());
}

TEST_CASE("round trip over the corpus") {
    for (const auto& name : list_entries()) {
        CAPTURE(name);
        const Automaton& a = get_entry(name).automaton;
        const std::string text = serialize_automaton(a);
        const Automaton b = parse_automaton(text);
        CHECK(b == a);
        CHECK(serialize_automaton(b) == text);
    }
}

TEST_CASE("canonical serialization") {
    const std::string text = serialize_automaton(machines::load(machines::kDyck));
    CHECK(text == "alphabet: 0 1\nstates: q0 q1\ninitial: q0\nfinal: q0\ntranslucent q1: 0\n"
                  "trans q0 0 -> q1\ntrans q1 1 -> q0\n");
}

TEST_CASE("dot export") {
    const std::string dyck = export_dot(machines::load(machines::kDyck));
    CHECK(dyck.starts_with("digraph"));
    CHECK(dyck.find("\"q1\" [label=\"q1\\n{0}\"]") != std::string::npos);
    CHECK(dyck.find("\"q0\" [label=\"q0\", shape=doublecircle]") != std::string::npos);
    CHECK(dyck.find("\"__init_q0\" [shape=point]") != std::string::npos);
    CHECK(occurrences(dyck, "[label=\"0\"]") == 1);
    CHECK(occurrences(dyck, "[label=\"1\"]") == 1);

    const std::string plain = export_dot(get_entry("sfawtl-astar").automaton);
    CHECK(plain.find("\\n{") == std::string::npos);

    const std::string six = export_dot(get_entry("ex6-triple-union").automaton);
    std::size_t nodes = 0;
    std::istringstream lines(six);
    for (std::string line; std::getline(lines, line);) {
        if (line.find("[label=") != std::string::npos && line.find("->") == std::string::npos) ++nodes;
    }
    CHECK(nodes == 19);
}
