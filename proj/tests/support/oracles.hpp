// Reference predicates and simulators used by the tests. Nothing here calls
// into the engine; each oracle works on plain strings or on the raw
// transition table.

#ifndef FAWTL_TESTS_ORACLES_HPP
#define FAWTL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "fawtl/core.hpp"

namespace oracle {

inline std::string spell(const fawtl::Alphabet& sigma, const fawtl::Word& w) {
    std::string s;
    for (auto x : w) s += sigma.token(x);
    return s;
}

inline std::size_t count(const std::string& s, char c) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), c));
}

// |w|_x = |w|_y > 0 and |w|_u = |w|_v
inline bool pair_language(const std::string& s, char x, char y, char u, char v) {
    return count(s, x) == count(s, y) && count(s, x) > 0 && count(s, u) == count(s, v);
}

inline bool lab(const std::string& s) { return pair_language(s, 'a', 'b', 'c', 'd'); }
inline bool lac(const std::string& s) { return pair_language(s, 'a', 'c', 'b', 'd'); }
inline bool lad(const std::string& s) { return pair_language(s, 'a', 'd', 'b', 'c'); }

inline bool dyck(const std::string& s) {
    long depth = 0;
    for (char c : s) {
        depth += c == '0' ? 1 : -1;
        if (depth < 0) return false;
    }
    return depth == 0;
}

inline bool ratio(const std::string& s) {
    return count(s, 'a') == count(s, 'b') || 2 * count(s, 'a') == count(s, 'b');
}

inline bool in_adcb_shape(const std::string& s) {
    static const std::string order = "adcb";
    std::size_t k = 0;
    for (char c : s) {
        while (k < order.size() && order[k] != c) ++k;
        if (k == order.size()) return false;
    }
    return true;
}

// Classical subset simulation over δ, ignoring τ entirely.
inline bool nfa_accepts(const fawtl::Automaton& a, const fawtl::Word& w) {
    std::set<fawtl::StateId> current(a.initial().begin(), a.initial().end());
    for (auto x : w) {
        std::set<fawtl::StateId> next;
        for (auto q : current) {
            for (auto p : a.targets(q, x)) next.insert(p);
        }
        current = std::move(next);
    }
    return std::any_of(current.begin(), current.end(), [&](fawtl::StateId q) { return a.is_final(q); });
}

// Positions (1-based) tried one by one against the definition.
inline std::vector<std::size_t> brute_eligible(const fawtl::Automaton& a, fawtl::StateId q, const fawtl::Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool hidden = true;
        for (std::size_t j = 0; j < i; ++j) {
            if (!a.translucent(q).contains(w[j])) hidden = false;
        }
        if (hidden && !a.targets(q, w[i]).empty()) out.push_back(i + 1);
    }
    return out;
}

}  // namespace oracle

#endif  // FAWTL_TESTS_ORACLES_HPP
