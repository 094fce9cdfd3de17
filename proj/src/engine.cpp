#include "fawtl/engine.hpp"

#include <string>
#include <unordered_set>

namespace fawtl {

std::vector<EligiblePosition> eligible_positions(const Automaton& a, const Configuration& c) {
    std::vector<EligiblePosition> out;
    const SymbolSet tau = a.translucent(c.state);
    const SymbolSet enabled = a.enabled(c.state);
    for (std::size_t i = 0; i < c.remaining.size(); ++i) {
        const SymbolId x = c.remaining[i];
        if (enabled.contains(x)) {
            out.push_back({i + 1, x});
        }
        // Positions further right are reachable only through translucent letters.
        if (!tau.contains(x)) {
            break;
        }
    }
    return out;
}

bool is_accepting_config(const Automaton& a, const Configuration& c) {
    if (!a.is_final(c.state)) {
        return false;
    }
    const SymbolSet tau = a.translucent(c.state);
    for (SymbolId x : c.remaining) {
        if (!tau.contains(x)) {
            return false;
        }
    }
    return true;
}

std::vector<Successor> successors(const Automaton& a, const Configuration& c) {
    std::vector<Successor> out;
    for (const auto& [position, letter] : eligible_positions(a, c)) {
        Word rest;
        rest.reserve(c.remaining.size() - 1);
        rest.insert(rest.end(), c.remaining.begin(), c.remaining.begin() + static_cast<std::ptrdiff_t>(position - 1));
        rest.insert(rest.end(), c.remaining.begin() + static_cast<std::ptrdiff_t>(position), c.remaining.end());
        for (StateId p : a.targets(c.state, letter)) {
            out.push_back({{c.state, position, letter, p}, {p, rest}});
        }
    }
    return out;
}

namespace {

class Search {
public:
    explicit Search(const Automaton& a) : a_(a) {}

    // Appends the accepting path to `path` on success.
    bool run(const Configuration& c, std::vector<Step>* path) {
        if (is_accepting_config(a_, c)) {
            return true;
        }
        if (c.remaining.empty()) {
            return false;
        }
        std::string k = key(c);
        if (failed_.contains(k)) {
            return false;
        }
        for (auto& [step, next] : successors(a_, c)) {
            if (path) {
                path->push_back(step);
            }
            if (run(next, path)) {
                return true;
            }
            if (path) {
                path->pop_back();
            }
        }
        failed_.insert(std::move(k));
        return false;
    }

private:
    static std::string key(const Configuration& c) {
        std::string k(sizeof(StateId) + c.remaining.size(), '\0');
        for (std::size_t i = 0; i < sizeof(StateId); ++i) {
            k[i] = static_cast<char>((c.state >> (8 * i)) & 0xFF);
        }
        for (std::size_t i = 0; i < c.remaining.size(); ++i) {
            k[sizeof(StateId) + i] = static_cast<char>(c.remaining[i]);
        }
        return k;
    }

    const Automaton& a_;
    std::unordered_set<std::string> failed_;
};

}  // namespace

bool accepts(const Automaton& a, const Word& w) {
    Search search(a);
    for (StateId q0 : a.initial()) {
        if (search.run({q0, w}, nullptr)) {
            return true;
        }
    }
    return false;
}

std::optional<Trace> first_trace(const Automaton& a, const Word& w) {
    Search search(a);
    for (StateId q0 : a.initial()) {
        Trace trace{q0, {}, false};
        if (search.run({q0, w}, &trace.steps)) {
            trace.accepted = true;
            return trace;
        }
    }
    return std::nullopt;
}

}  // namespace fawtl
