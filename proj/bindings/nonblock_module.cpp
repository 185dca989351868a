#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nonblock/cli.hpp"
#include "nonblock/compose.hpp"
#include "nonblock/determinize.hpp"
#include "nonblock/error.hpp"
#include "nonblock/io.hpp"
#include "nonblock/language.hpp"
#include "nonblock/reduce.hpp"
#include "nonblock/report.hpp"
#include "nonblock/unary.hpp"
#include "nonblock/verify.hpp"

namespace py = pybind11;
using namespace nonblock;

namespace {

// Arbitrary-precision bridging: BigUint <-> Python int, via decimal strings.
py::object to_py_int(const BigUint& value) {
  PyObject* obj = PyLong_FromString(value.to_decimal().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

BigUint from_py_int(const py::object& value) {
  std::string digits = py::cast<std::string>(py::str(py::int_(value)));
  if (!digits.empty() && digits[0] == '-') {
    throw py::value_error("certificate integers must be non-negative");
  }
  return BigUint::from_decimal(digits);
}

std::optional<py::object> cert_ell(const LassoCertificate& c) {
  if (!c.ell) return std::nullopt;
  return to_py_int(*c.ell);
}

}  // namespace

PYBIND11_MODULE(_nonblock, m) {
  m.doc() = "Nonblockingness verification for finite automata";

  // Translators run newest-first, so register the base before the derived
  // class: LimitError instances then map to the subclass exception.
  static py::exception<Error> error_type =
      py::register_exception<Error>(m, "VerifierError");
  py::register_exception<LimitError>(m, "LimitExceeded", error_type.ptr());

  py::class_<SearchLimits>(m, "SearchLimits")
      .def(py::init<>())
      .def(py::init([](uint64_t max_states, double max_seconds) {
             return SearchLimits{max_states, max_seconds};
           }),
           py::arg("max_states") = SearchLimits{}.max_states,
           py::arg("max_seconds") = SearchLimits{}.max_seconds)
      .def_readwrite("max_states", &SearchLimits::max_states)
      .def_readwrite("max_seconds", &SearchLimits::max_seconds);

  py::class_<SearchStats>(m, "SearchStats")
      .def_readonly("explored", &SearchStats::explored)
      .def_readonly("frontier_peak", &SearchStats::frontier_peak)
      .def_readonly("millis", &SearchStats::millis)
      .def_readonly("limit_hit", &SearchStats::limit_hit);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("nonblocking", &Verdict::nonblocking)
      .def_readonly("witness", &Verdict::witness)
      .def_readonly("stats", &Verdict::stats)
      .def("__repr__", [](const Verdict& v) {
        return std::string("<Verdict ") +
               (v.nonblocking ? "nonblocking" : "blocking") + ">";
      });

  py::class_<PrefixReport>(m, "PrefixReport")
      .def_readonly("prefix_closed", &PrefixReport::prefix_closed)
      .def_readonly("violation", &PrefixReport::violation)
      .def_readonly("stats", &PrefixReport::stats);

  py::class_<Automaton>(m, "Automaton")
      .def_property_readonly("num_states", &Automaton::num_states)
      .def_property_readonly(
          "alphabet",
          [](const Automaton& a) { return a.alphabet().labels(); })
      .def_property_readonly("initial", &Automaton::initial)
      .def_property_readonly("marked", &Automaton::marked)
      .def_property_readonly(
          "transitions",
          [](const Automaton& a) {
            std::vector<std::tuple<uint32_t, std::string, uint32_t>> out;
            for (const Transition& t : a.transitions()) {
              out.emplace_back(t.from, a.alphabet().label(t.event), t.to);
            }
            return out;
          })
      .def("state_name", &Automaton::state_name)
      .def("is_marked", &Automaton::is_marked)
      .def("__repr__", [](const Automaton& a) {
        std::ostringstream out;
        out << "<Automaton states=" << a.num_states()
            << " events=" << a.alphabet().size() << ">";
        return out.str();
      });

  py::class_<Dfa, Automaton>(m, "Dfa").def_property_readonly(
      "initial_state", &Dfa::initial_state);

  // The C++ side keeps the strings in std::set, but Python lists are not
  // hashable, so hand them over as sorted lists instead.
  auto string_list = [](const std::set<EventString>& strings) {
    return std::vector<EventString>(strings.begin(), strings.end());
  };
  py::class_<LanguageSample>(m, "LanguageSample")
      .def_property_readonly(
          "generated",
          [string_list](const LanguageSample& s) { return string_list(s.generated); })
      .def_property_readonly(
          "marked",
          [string_list](const LanguageSample& s) { return string_list(s.marked); })
      .def_readonly("bound", &LanguageSample::bound);

  py::class_<LassoCertificate>(m, "LassoCertificate")
      .def(py::init([](const py::object& k, const py::object& ell) {
             LassoCertificate c{from_py_int(k), std::nullopt};
             if (!ell.is_none()) c.ell = from_py_int(ell);
             return c;
           }),
           py::arg("k"), py::arg("ell") = py::none())
      .def_property_readonly(
          "k", [](const LassoCertificate& c) { return to_py_int(c.k); })
      .def_property_readonly("ell", &cert_ell);

  py::class_<UnarySystem>(m, "UnarySystem")
      .def_readonly("shared_event", &UnarySystem::shared_event)
      .def_property_readonly("num_components", [](const UnarySystem& s) {
        return s.components.size();
      });

  py::class_<UnaryDecision>(m, "UnaryDecision")
      .def_readonly("verdict", &UnaryDecision::verdict)
      .def_readonly("certificate", &UnaryDecision::certificate);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](uint32_t nodes,
                       std::vector<std::pair<uint32_t, uint32_t>> edges,
                       uint32_t source, uint32_t target) {
             return Graph{nodes, std::move(edges), source, target};
           }),
           py::arg("nodes"), py::arg("edges"), py::arg("source"),
           py::arg("target"))
      .def_readwrite("nodes", &Graph::nodes)
      .def_readwrite("edges", &Graph::edges)
      .def_readwrite("source", &Graph::source)
      .def_readwrite("target", &Graph::target);

  py::class_<Literal>(m, "Literal")
      .def(py::init([](uint32_t var, bool negated) {
             return Literal{var, negated};
           }),
           py::arg("var"), py::arg("negated") = false)
      .def_readwrite("var", &Literal::var)
      .def_readwrite("negated", &Literal::negated);

  py::class_<Cnf3>(m, "Cnf3")
      .def(py::init([](uint32_t num_vars, std::vector<Clause> clauses) {
             return Cnf3{num_vars, std::move(clauses)};
           }),
           py::arg("num_vars"), py::arg("clauses"))
      .def_readwrite("num_vars", &Cnf3::num_vars)
      .def_readwrite("clauses", &Cnf3::clauses);

  // Parsing and serialization
  m.def(
      "parse_aut",
      [](const std::string& text, const std::string& source) {
        return Automaton::validate(parse_aut(text, source));
      },
      py::arg("text"), py::arg("source") = "<string>");
  m.def(
      "parse_dfa",
      [](const std::string& text, const std::string& source) {
        return Dfa::validate(parse_aut(text, source));
      },
      py::arg("text"), py::arg("source") = "<string>");
  m.def("load_aut", [](const std::string& path) {
    return Automaton::validate(load_aut(path));
  });
  m.def("load_dfa",
        [](const std::string& path) { return Dfa::validate(load_aut(path)); });
  m.def("serialize_aut", &serialize_aut);
  m.def("to_dot", &to_dot, py::arg("a"), py::arg("name") = "automaton");
  m.def("parse_graph", &parse_graph, py::arg("text"),
        py::arg("source") = "<string>");
  m.def("parse_cnf3", &parse_cnf3, py::arg("text"),
        py::arg("source") = "<string>");

  // Core automaton operations
  m.def("parallel_compose",
        py::overload_cast<const std::vector<Dfa>&>(&parallel_compose));
  m.def("parallel_compose",
        py::overload_cast<const std::vector<Automaton>&>(&parallel_compose));
  m.def("determinize", &determinize, py::arg("a"),
        py::arg("max_subsets") = kDefaultSubsetBudget);
  m.def("project_onto", &project_onto);
  m.def("observer", &observer, py::arg("a"), py::arg("keep"),
        py::arg("max_subsets") = kDefaultSubsetBudget);
  m.def("is_deterministic", &is_deterministic);
  m.def("accessible_part", py::overload_cast<const Dfa&>(&accessible_part));
  m.def("accessible_part",
        py::overload_cast<const Automaton&>(&accessible_part));
  m.def("enumerate_strings", &enumerate_strings, py::arg("a"),
        py::arg("max_len"), py::arg("cap") = kDefaultEnumBound);
  m.def("project_string", &project_string);

  // Verifier entry points
  m.def("check_dfa_nonblocking", &check_dfa_nonblocking);
  m.def("check_nfa_nonblocking", &check_nfa_nonblocking, py::arg("a"),
        py::arg("limits") = SearchLimits{});
  m.def("check_modular_nonblocking", &check_modular_nonblocking,
        py::arg("components"), py::arg("limits") = SearchLimits{});
  m.def("check_prefix_closed", &check_prefix_closed, py::arg("a"),
        py::arg("limits") = SearchLimits{});

  // One-shared-event machinery
  m.def("unary_abstract", &unary_abstract, py::arg("components"),
        py::arg("shared_event") = std::nullopt);
  m.def(
      "tuple_state",
      [](const UnarySystem& sys, const py::object& k)
          -> std::optional<std::vector<std::vector<StateId>>> {
        auto tuple = tuple_state(sys, from_py_int(k));
        if (!tuple) return std::nullopt;
        return std::move(tuple->subsets);
      },
      py::arg("sys"), py::arg("k"));
  m.def("verify_certificate", &verify_certificate);
  m.def("decide_one_shared_event", &decide_one_shared_event,
        py::arg("components"), py::arg("shared_event") = std::nullopt,
        py::arg("limits") = SearchLimits{});

  // Reductions and oracles
  m.def("first_primes",
        [](uint32_t n) { return first_primes(n).primes; });
  m.def("lasso_dfa", &lasso_dfa, py::arg("tail"), py::arg("cycle"),
        py::arg("marked_offset"), py::arg("event") = "0");
  m.def("graph_to_dfa", &graph_to_dfa);
  m.def("universality_to_nonblocking", &universality_to_nonblocking);
  m.def("dfaint_to_modular", &dfaint_to_modular);
  m.def("cnf3_to_unary", &cnf3_to_unary);
  m.def("sat3_bruteforce", &sat3_bruteforce);
  m.def("graph_reachable", &graph_reachable);
  m.def("nfa_universal_small", &nfa_universal_small, py::arg("b"),
        py::arg("max_subsets") = kDefaultSubsetBudget);
  m.def("dfaint_empty_small", &dfaint_empty_small);

  // Reports and the CLI, for tooling round-trips
  m.def("verdict_to_json", &verdict_to_json);
  m.def("certificate_to_json", &certificate_to_json);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run the command-line tool in-process; returns (code, stdout, stderr)");
}
