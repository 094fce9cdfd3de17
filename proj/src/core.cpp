#include "fawtl/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace fawtl {

std::vector<SymbolId> SymbolSet::members() const {
    std::vector<SymbolId> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
        out.push_back(static_cast<SymbolId>(std::countr_zero(m)));
    }
    return out;
}

bool is_valid_token(std::string_view token) {
    if (token.empty() || token == "$" || token == "->") {
        return false;
    }
    return std::none_of(token.begin(), token.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ',' || c == ':';
    });
}

// ---------------------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    std::vector<Diagnostic> problems;
    if (tokens_.size() > kMaxSymbols) {
        problems.push_back({ErrorKind::AlphabetTooLarge, std::to_string(tokens_.size())});
    }
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (!is_valid_token(tokens_[i])) {
            problems.push_back({ErrorKind::InvalidToken, tokens_[i]});
        } else if (!index_.emplace(tokens_[i], static_cast<SymbolId>(i)).second) {
            problems.push_back({ErrorKind::DuplicateSymbol, tokens_[i]});
        }
    }
    if (!problems.empty()) {
        throw ValidationFailure(std::move(problems));
    }
}

std::optional<SymbolId> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

SymbolId Alphabet::at(std::string_view token) const {
    if (auto s = find(token)) {
        return *s;
    }
    throw Error("unknown symbol '" + std::string(token) + "'");
}

bool Alphabet::single_char_tokens() const {
    return std::all_of(tokens_.begin(), tokens_.end(), [](const auto& t) { return t.size() == 1; });
}

std::string format_word(const Alphabet& alphabet, std::span<const SymbolId> word) {
    if (word.empty()) {
        return "\"\"";
    }
    const bool compact = alphabet.single_char_tokens();
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!compact && i > 0) {
            out += ',';
        }
        out += alphabet.token(word[i]);
    }
    return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word word;
    if (text.empty() || text == "\"\"") {
        return word;
    }
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = text.find(',', start);
            word.push_back(alphabet.at(text.substr(start, comma - start)));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        return word;
    }
    if (auto whole = alphabet.find(text)) {
        word.push_back(*whole);
        return word;
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        word.push_back(alphabet.at(text.substr(i, 1)));
    }
    return word;
}

std::vector<std::uint32_t> letter_counts(std::size_t alphabet_size, std::span<const SymbolId> word) {
    std::vector<std::uint32_t> counts(alphabet_size, 0);
    for (SymbolId s : word) {
        ++counts.at(s);
    }
    return counts;
}

// ---------------------------------------------------------------------------

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownState: return "UnknownState";
        case ErrorKind::UnknownSymbol: return "UnknownSymbol";
        case ErrorKind::EmptyInitialSet: return "EmptyInitialSet";
        case ErrorKind::DuplicateSymbol: return "DuplicateSymbol";
        case ErrorKind::DuplicateState: return "DuplicateState";
        case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
        case ErrorKind::InvalidToken: return "InvalidToken";
        case ErrorKind::AlphabetTooLarge: return "AlphabetTooLarge";
    }
    return "?";
}

std::string Diagnostic::message() const {
    std::string out(to_string(kind));
    if (!token.empty()) {
        out += "(" + token + ")";
    }
    return out;
}

namespace {

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
    std::string out = "invalid automaton:";
    for (const auto& d : diagnostics) {
        out += ' ';
        out += d.message();
    }
    return out;
}

}  // namespace

ValidationFailure::ValidationFailure(std::vector<Diagnostic> diagnostics)
    : Error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

// ---------------------------------------------------------------------------

std::optional<StateId> Automaton::find_state(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<StateId> Automaton::finals() const {
    std::vector<StateId> out;
    for (StateId q = 0; q < num_states(); ++q) {
        if (final_mask_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

AutomatonBuilder::AutomatonBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

StateId AutomatonBuilder::add_state(std::string name) {
    if (!is_valid_token(name)) {
        throw ValidationFailure({{ErrorKind::InvalidToken, name}});
    }
    const auto id = static_cast<StateId>(names_.size());
    if (!index_.emplace(name, id).second) {
        throw ValidationFailure({{ErrorKind::DuplicateState, name}});
    }
    names_.push_back(std::move(name));
    initial_.push_back(false);
    final_.push_back(false);
    translucent_.emplace_back();
    delta_.emplace_back(alphabet_.size());
    return id;
}

void AutomatonBuilder::check_state(StateId q) const {
    if (q >= names_.size()) {
        throw ValidationFailure({{ErrorKind::UnknownState, "#" + std::to_string(q)}});
    }
}

AutomatonBuilder& AutomatonBuilder::add_initial(StateId q) {
    check_state(q);
    initial_[q] = true;
    return *this;
}

AutomatonBuilder& AutomatonBuilder::set_final(StateId q, bool final) {
    check_state(q);
    final_[q] = final;
    return *this;
}

AutomatonBuilder& AutomatonBuilder::set_translucent(StateId q, SymbolSet letters) {
    check_state(q);
    if ((letters - SymbolSet::all(alphabet_.size())) != SymbolSet{}) {
        throw ValidationFailure({{ErrorKind::UnknownSymbol, "#" + std::to_string(letters.mask())}});
    }
    translucent_[q] = letters;
    return *this;
}

AutomatonBuilder& AutomatonBuilder::add_transition(StateId from, SymbolId letter, StateId to) {
    check_state(from);
    check_state(to);
    if (letter >= alphabet_.size()) {
        throw ValidationFailure({{ErrorKind::UnknownSymbol, "#" + std::to_string(letter)}});
    }
    auto& targets = delta_[from][letter];
    auto pos = std::lower_bound(targets.begin(), targets.end(), to);
    if (pos == targets.end() || *pos != to) {
        targets.insert(pos, to);
    }
    return *this;
}

Automaton AutomatonBuilder::build() const {
    Automaton a;
    a.alphabet_ = alphabet_;
    a.names_ = names_;
    a.state_index_ = index_;
    a.initial_mask_ = initial_;
    a.final_mask_ = final_;
    a.translucent_ = translucent_;
    for (StateId q = 0; q < names_.size(); ++q) {
        if (initial_[q]) {
            a.initial_.push_back(q);
        }
        SymbolSet enabled;
        for (SymbolId s = 0; s < alphabet_.size(); ++s) {
            a.delta_.push_back(delta_[q][s]);
            if (!delta_[q][s].empty()) {
                enabled.insert(s);
            }
        }
        a.enabled_.push_back(enabled);
    }
    if (a.initial_.empty()) {
        throw ValidationFailure({{ErrorKind::EmptyInitialSet, ""}});
    }
    return a;
}

// ---------------------------------------------------------------------------

ValidationResult validate(const RawAutomaton& raw) {
    std::vector<Diagnostic> problems;

    if (raw.alphabet.size() > kMaxSymbols) {
        problems.push_back({ErrorKind::AlphabetTooLarge, std::to_string(raw.alphabet.size())});
    }
    std::vector<std::string> symbols;
    std::set<std::string> seen_symbols;
    for (const auto& token : raw.alphabet) {
        if (!is_valid_token(token)) {
            problems.push_back({ErrorKind::InvalidToken, token});
        } else if (!seen_symbols.insert(token).second) {
            problems.push_back({ErrorKind::DuplicateSymbol, token});
        } else {
            symbols.push_back(token);
        }
    }

    std::set<std::string> seen_states;
    for (const auto& name : raw.states) {
        if (!is_valid_token(name)) {
            problems.push_back({ErrorKind::InvalidToken, name});
        } else if (!seen_states.insert(name).second) {
            problems.push_back({ErrorKind::DuplicateState, name});
        }
    }

    auto check_state = [&](const std::string& name) {
        if (!seen_states.contains(name)) {
            problems.push_back({ErrorKind::UnknownState, name});
            return false;
        }
        return true;
    };
    auto check_symbol = [&](const std::string& token) {
        if (!seen_symbols.contains(token)) {
            problems.push_back({ErrorKind::UnknownSymbol, token});
            return false;
        }
        return true;
    };

    if (raw.initial.empty()) {
        problems.push_back({ErrorKind::EmptyInitialSet, ""});
    }
    for (const auto& q : raw.initial) {
        check_state(q);
    }
    for (const auto& q : raw.finals) {
        check_state(q);
    }
    std::set<std::string> declared_translucency;
    for (const auto& t : raw.translucent) {
        if (check_state(t.state) && !declared_translucency.insert(t.state).second) {
            problems.push_back({ErrorKind::DuplicateDeclaration, "translucent " + t.state});
        }
        for (const auto& letter : t.letters) {
            check_symbol(letter);
        }
    }
    for (const auto& tr : raw.transitions) {
        check_state(tr.from);
        check_symbol(tr.letter);
        check_state(tr.to);
    }

    if (!problems.empty()) {
        return problems;
    }

    AutomatonBuilder builder{Alphabet(symbols)};
    std::unordered_map<std::string, StateId> ids;
    for (const auto& name : raw.states) {
        ids.emplace(name, builder.add_state(name));
    }
    auto state_of = [&](const std::string& name) { return ids.at(name); };
    for (const auto& q : raw.initial) {
        builder.add_initial(state_of(q));
    }
    for (const auto& q : raw.finals) {
        builder.set_final(state_of(q));
    }
    for (const auto& t : raw.translucent) {
        SymbolSet letters;
        for (const auto& letter : t.letters) {
            letters.insert(builder.alphabet().at(letter));
        }
        builder.set_translucent(state_of(t.state), letters);
    }
    for (const auto& tr : raw.transitions) {
        builder.add_transition(state_of(tr.from), builder.alphabet().at(tr.letter), state_of(tr.to));
    }
    return builder.build();
}

Automaton build_automaton(const RawAutomaton& raw) {
    auto result = validate(raw);
    if (auto* problems = std::get_if<std::vector<Diagnostic>>(&result)) {
        throw ValidationFailure(std::move(*problems));
    }
    return std::get<Automaton>(std::move(result));
}

RawAutomaton to_raw(const Automaton& a) {
    RawAutomaton raw;
    const auto& sigma = a.alphabet();
    raw.alphabet = sigma.tokens();
    raw.states = a.state_names();
    for (StateId q : a.initial()) {
        raw.initial.push_back(a.state_name(q));
    }
    for (StateId q : a.finals()) {
        raw.finals.push_back(a.state_name(q));
    }
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (!a.translucent(q).empty()) {
            RawAutomaton::Translucency t{a.state_name(q), {}};
            for (SymbolId s : a.translucent(q).members()) {
                t.letters.push_back(sigma.token(s));
            }
            raw.translucent.push_back(std::move(t));
        }
        for (SymbolId s = 0; s < sigma.size(); ++s) {
            for (StateId p : a.targets(q, s)) {
                raw.transitions.push_back({a.state_name(q), sigma.token(s), a.state_name(p)});
            }
        }
    }
    return raw;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Label label) {
    switch (label) {
        case Label::NfaCompatible: return "NFA-compatible";
        case Label::NFAwtl: return "NFAwtl";
        case Label::DFAwtl: return "DFAwtl";
        case Label::SFAwtl: return "SFAwtl";
        case Label::NFAwntl: return "NFAwntl";
        case Label::DFAwntl: return "DFAwntl";
    }
    return "?";
}

bool VariantProfile::has(Label label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

VariantProfile classify(const Automaton& a) {
    VariantProfile p;
    p.single_initial = a.initial().size() == 1;
    p.deterministic_transitions = true;
    p.disjoint_translucency = true;
    p.state_deterministic = true;
    bool no_translucency = true;

    for (StateId q = 0; q < a.num_states(); ++q) {
        if (!(a.translucent(q) & a.enabled(q)).empty()) {
            p.disjoint_translucency = false;
        }
        if (!a.translucent(q).empty()) {
            no_translucency = false;
        }
        std::optional<StateId> successor;
        for (SymbolId s = 0; s < a.alphabet().size(); ++s) {
            auto targets = a.targets(q, s);
            if (targets.size() > 1) {
                p.deterministic_transitions = false;
            }
            for (StateId t : targets) {
                if (successor && *successor != t) {
                    p.state_deterministic = false;
                }
                successor = t;
            }
        }
    }

    if (no_translucency) p.labels.push_back(Label::NfaCompatible);
    if (p.disjoint_translucency) p.labels.push_back(Label::NFAwtl);
    if (p.disjoint_translucency && p.single_initial && p.deterministic_transitions) {
        p.labels.push_back(Label::DFAwtl);
    }
    if (p.disjoint_translucency && p.state_deterministic && p.single_initial) {
        p.labels.push_back(Label::SFAwtl);
    }
    p.labels.push_back(Label::NFAwntl);
    if (p.single_initial && p.deterministic_transitions) p.labels.push_back(Label::DFAwntl);
    return p;
}

}  // namespace fawtl
