#include "fawtl/textio.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace fawtl {

SyntaxError::SyntaxError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string token;
    while (in >> token) {
        out.push_back(token);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
    RawAutomaton raw;
    std::optional<std::size_t> alphabet_line, states_line, initial_line, final_line;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        auto header = [&](std::string_view key, std::optional<std::size_t>& seen, std::vector<std::string>& dest) {
            if (seen) {
                throw SyntaxError(line_no, "duplicate '" + std::string(key) + ":' line (first on line " +
                                               std::to_string(*seen) + ")");
            }
            seen = line_no;
            dest = split_ws(line.substr(key.size() + 1));
        };

        if (line.starts_with("alphabet:")) {
            header("alphabet", alphabet_line, raw.alphabet);
        } else if (line.starts_with("states:")) {
            header("states", states_line, raw.states);
        } else if (line.starts_with("initial:")) {
            header("initial", initial_line, raw.initial);
        } else if (line.starts_with("final:")) {
            header("final", final_line, raw.finals);
        } else if (line.starts_with("translucent ")) {
            const auto colon = line.find(':');
            if (colon == std::string_view::npos) {
                throw SyntaxError(line_no, "expected 'translucent <state>: <letters>'");
            }
            const auto head = split_ws(line.substr(0, colon));
            if (head.size() != 2) {
                throw SyntaxError(line_no, "expected exactly one state before ':'");
            }
            raw.translucent.push_back({head[1], split_ws(line.substr(colon + 1))});
        } else if (line.starts_with("trans ")) {
            const auto t = split_ws(line);
            if (t.size() != 5 || t[3] != "->") {
                throw SyntaxError(line_no, "expected 'trans <state> <letter> -> <state>'");
            }
            raw.transitions.push_back({t[1], t[2], t[4]});
        } else {
            throw SyntaxError(line_no, "unrecognized line '" + std::string(line) + "'");
        }
    }

    const std::size_t eof = line_no;
    if (!alphabet_line) throw SyntaxError(eof, "missing 'alphabet:' line");
    if (!states_line) throw SyntaxError(eof, "missing 'states:' line");
    if (!initial_line) throw SyntaxError(eof, "missing 'initial:' line");
    return build_automaton(raw);
}

std::string serialize_automaton(const Automaton& a) {
    const RawAutomaton raw = to_raw(a);
    std::string out;
    auto list = [&out](std::string_view key, const std::vector<std::string>& items) {
        out += key;
        out += ':';
        for (const auto& s : items) {
            out += ' ';
            out += s;
        }
        out += '\n';
    };
    list("alphabet", raw.alphabet);
    list("states", raw.states);
    list("initial", raw.initial);
    list("final", raw.finals);
    for (const auto& t : raw.translucent) {
        list("translucent " + t.state, t.letters);
    }
    for (const auto& tr : raw.transitions) {
        out += "trans " + tr.from + " " + tr.letter + " -> " + tr.to + "\n";
    }
    return out;
}

namespace {

std::string quoted(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string export_dot(const Automaton& a) {
    const Alphabet& sigma = a.alphabet();
    std::string out = "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (StateId q : a.initial()) {
        out += "  " + quoted("__init_" + a.state_name(q)) + " [shape=point];\n";
    }
    for (StateId q = 0; q < a.num_states(); ++q) {
        std::string label = a.state_name(q);
        if (!a.translucent(q).empty()) {
            label += "\n{";
            bool first = true;
            for (SymbolId s : a.translucent(q).members()) {
                if (!first) label += ", ";
                label += sigma.token(s);
                first = false;
            }
            label += "}";
        }
        std::string escaped;
        for (char ch : label) {
            if (ch == '\n') {
                escaped += "\\n";
            } else {
                if (ch == '"' || ch == '\\') escaped += '\\';
                escaped += ch;
            }
        }
        out += "  " + quoted(a.state_name(q)) + " [label=\"" + escaped + "\"";
        if (a.is_final(q)) out += ", shape=doublecircle";
        out += "];\n";
    }
    for (StateId q : a.initial()) {
        out += "  " + quoted("__init_" + a.state_name(q)) + " -> " + quoted(a.state_name(q)) + ";\n";
    }
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (SymbolId s = 0; s < sigma.size(); ++s) {
            for (StateId p : a.targets(q, s)) {
                out += "  " + quoted(a.state_name(q)) + " -> " + quoted(a.state_name(p)) + " [label=" +
                       quoted(sigma.token(s)) + "];\n";
            }
        }
    }
    return out + "}\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace fawtl
