// Python bindings. Words cross the boundary as strings in the CLI notation
// ("abba", "x1,y", or "" for the empty word).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fawtl/constructions.hpp"
#include "fawtl/corpus.hpp"
#include "fawtl/engine.hpp"
#include "fawtl/langops.hpp"
#include "fawtl/textio.hpp"

namespace py = pybind11;
using namespace fawtl;

namespace {

Word to_word(const Automaton& a, const std::string& s) { return parse_word(a.alphabet(), s); }

std::string from_word(const Automaton& a, const Word& w) {
    return w.empty() ? std::string() : format_word(a.alphabet(), w);
}

py::dict profile_dict(const VariantProfile& p) {
    py::dict d;
    d["single_initial"] = p.single_initial;
    d["deterministic_transitions"] = p.deterministic_transitions;
    d["disjoint_translucency"] = p.disjoint_translucency;
    d["state_deterministic"] = p.state_deterministic;
    py::list labels;
    for (Label l : p.labels) labels.append(std::string(to_string(l)));
    d["labels"] = labels;
    return d;
}

py::dict parikh_dict(const Alphabet& sigma, const ParikhVector& v) {
    py::dict d;
    for (SymbolId s = 0; s < sigma.size(); ++s) d[py::str(sigma.token(s))] = v.counts[s];
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite automata with translucent letters";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<BoundExceeded>(m, "BoundExceeded", error.ptr());
    py::register_exception<AlphabetMismatch>(m, "AlphabetMismatch", error.ptr());
    py::register_exception<ValidationFailure>(m, "ValidationFailure", error.ptr());
    py::register_exception<SyntaxError>(m, "SyntaxError", error.ptr());
    py::register_exception<NotFound>(m, "NotFound", error.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
    py::register_exception<DuplicateTrigger>(m, "DuplicateTrigger", error.ptr());
    py::register_exception<PartNotDFAwtl>(m, "PartNotDFAwtl", error.ptr());

    py::class_<Automaton>(m, "Automaton")
        .def_property_readonly("alphabet", [](const Automaton& a) { return a.alphabet().tokens(); })
        .def_property_readonly("states", &Automaton::state_names)
        .def_property_readonly("initial",
                               [](const Automaton& a) {
                                   std::vector<std::string> out;
                                   for (StateId q : a.initial()) out.push_back(a.state_name(q));
                                   return out;
                               })
        .def_property_readonly("final",
                               [](const Automaton& a) {
                                   std::vector<std::string> out;
                                   for (StateId q : a.finals()) out.push_back(a.state_name(q));
                                   return out;
                               })
        .def("translucent",
             [](const Automaton& a, const std::string& state) {
                 const auto q = a.find_state(state);
                 if (!q) throw Error("unknown state '" + state + "'");
                 std::vector<std::string> out;
                 for (SymbolId s : a.translucent(*q).members()) out.push_back(a.alphabet().token(s));
                 return out;
             })
        .def("__len__", &Automaton::num_states)
        .def("__eq__", [](const Automaton& a, const Automaton& b) { return a == b; })
        .def("__str__", &serialize_automaton)
        .def("__repr__", [](const Automaton& a) {
            return "<Automaton states=" + std::to_string(a.num_states()) +
                   " symbols=" + std::to_string(a.alphabet().size()) + ">";
        });

    m.def("parse", &parse_automaton, py::arg("text"));
    m.def("load", [](const std::string& path) { return parse_automaton(read_file(path)); }, py::arg("path"));
    m.def("serialize", &serialize_automaton, py::arg("automaton"));
    m.def("export_dot", &export_dot, py::arg("automaton"));
    m.def("classify", [](const Automaton& a) { return profile_dict(classify(a)); }, py::arg("automaton"));

    m.def("accepts", [](const Automaton& a, const std::string& w) { return accepts(a, to_word(a, w)); },
          py::arg("automaton"), py::arg("word"));
    m.def(
        "naive_accepts",
        [](const Automaton& a, const std::string& w, std::size_t bound) { return naive_accepts(a, to_word(a, w), bound); },
        py::arg("automaton"), py::arg("word"), py::arg("max_len") = kDefaultNaiveBound);
    m.def(
        "first_trace",
        [](const Automaton& a, const std::string& w) -> py::object {
            const auto t = first_trace(a, to_word(a, w));
            if (!t) return py::none();
            py::list steps;
            for (const Step& s : t->steps) {
                steps.append(py::make_tuple(a.state_name(s.from), s.position, a.alphabet().token(s.letter),
                                            a.state_name(s.to)));
            }
            return steps;
        },
        py::arg("automaton"), py::arg("word"));

    m.def(
        "enumerate",
        [](const Automaton& a, std::size_t max_len, unsigned workers) {
            std::vector<std::string> out;
            for (const Word& w : enumerate_language(a, max_len, {kDefaultWordBudget, workers}).words) {
                out.push_back(from_word(a, w));
            }
            return out;
        },
        py::arg("automaton"), py::arg("max_len"), py::arg("workers") = 1);
    m.def(
        "parikh_up_to",
        [](const Automaton& a, std::size_t max_len) {
            py::list out;
            for (const auto& v : parikh_up_to(a, max_len)) out.append(parikh_dict(a.alphabet(), v));
            return out;
        },
        py::arg("automaton"), py::arg("max_len"));
    m.def(
        "bounded_equivalent",
        [](const Automaton& a, const Automaton& b, std::size_t max_len) -> py::object {
            const auto c = bounded_equivalent(a, b, max_len);
            if (!c) return py::none();
            return py::make_tuple(from_word(a, c->word), c->accepted_by == Side::A ? "A" : "B");
        },
        py::arg("a"), py::arg("b"), py::arg("max_len"));
    m.def("remove_overlap_translucency", &remove_overlap_translucency, py::arg("automaton"));
    m.def("drop_translucency", &drop_translucency, py::arg("automaton"));
    m.def(
        "check_letter_equivalence",
        [](const Automaton& a, std::size_t max_len) -> py::object {
            const LemmaReport r = check_letter_equivalence_lemma(a, max_len);
            if (r.pass()) return py::none();
            const auto& v = *r.violation;
            return py::make_tuple(std::string(to_string(v.check)), v.missing ? "missing" : "extra",
                                  parikh_dict(a.alphabet(), v.vector));
        },
        py::arg("automaton"), py::arg("max_len"));

    m.def("union", &union_of, py::arg("a"), py::arg("b"));
    m.def(
        "guarded_union",
        [](const std::vector<std::tuple<std::string, std::string, Automaton, std::string>>& parts) {
            std::vector<GuardedPart> gp;
            for (const auto& [tag, trigger, a, entry] : parts) gp.push_back({tag, trigger, a, entry});
            return build_guarded_union(gp);
        },
        py::arg("parts"), "parts: list of (tag, trigger, automaton, entry)");
    m.def(
        "search_sfawtl",
        [](const std::string& target, std::size_t max_states, std::size_t test_len, bool back_edge,
           unsigned workers) -> py::object {
            const SearchTarget t = named_target(target);
            SearchOutcome r;
            {
                py::gil_scoped_release release;
                r = search_sfawtl(t.member, {t.alphabet, max_states, back_edge, test_len},
                                  {kDefaultSearchBudget, workers});
            }
            if (!r.machine) return py::none();
            return py::cast(*r.machine);
        },
        py::arg("target"), py::arg("max_states"), py::arg("test_len"), py::arg("back_edge") = true,
        py::arg("workers") = 1);

    m.def("corpus_list", &list_entries);
    m.def("corpus_get", [](const std::string& name) { return get_entry(name).automaton; }, py::arg("name"));
    m.def("corpus_verify", [](const std::string& name, std::size_t max_len) { return verify_entry(name, max_len).pass(); },
          py::arg("name"), py::arg("max_len"));
}
