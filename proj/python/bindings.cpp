#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freeid/analytic.hpp"
#include "freeid/chains.hpp"
#include "freeid/cli.hpp"
#include "freeid/cumulants.hpp"
#include "freeid/errors.hpp"
#include "freeid/fid.hpp"
#include "freeid/hopf.hpp"
#include "freeid/partitions.hpp"
#include "freeid/trees_dyck.hpp"

#include <sstream>

namespace py = pybind11;
using namespace freeid;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cumulant calculus and free infinite divisibility tests";

    py::register_exception<Error>(m, "FreeidError", PyExc_ValueError);

    m.def("count_connected_pairings", [](int two_n) { return to_string(count_connected_pairings(two_n)); }, py::arg("two_n"));
    m.def("s_via_trees", [](int n) { return to_string(s_via_trees(n)); }, py::arg("n"));
    m.def("free_cumulants_of_mu_c",
          [](const std::string& c, int N) { return to_strings(free_cumulants_of_mu_c(parse_rational(c), N).values); },
          py::arg("c"), py::arg("order"));
    m.def("dyck_factorial", [](const std::string& w) { return to_string(dyck_factorial(w)); }, py::arg("word"));
    m.def("stationary",
          [](const std::string& model, int n) {
              auto P = transition_matrix(parse_chain_model(model), n);
              auto pi = stationary(P);
              std::vector<std::pair<std::string, std::string>> out;
              for (std::size_t i = 0; i < P.size(); ++i) out.emplace_back(P.states[i], to_string(pi.weights[i]));
              return out;
          },
          py::arg("model"), py::arg("n"));
    m.def("lr_coproduct_json", [](const std::string& t) { return to_json(lr_coproduct(OrderedTree::parse_json(t))); }, py::arg("tree"));
    m.def("bf_coproduct_json", [](const std::string& t) { return to_json(bf_coproduct(OrderedTree::parse_json(t))); }, py::arg("tree"));
    m.def("fid_test_json", [](const std::string& c, int N) { return fid_test(parse_rational(c), N).to_json(); },
          py::arg("c"), py::arg("order"), py::call_guard<py::gil_scoped_release>());
    m.def("G", [](const std::string& c, Complex z) { return G_eval(parse_rational(c), z).value; }, py::arg("c"), py::arg("z"));
    m.def("density", [](const std::string& c, double u) { return density_eval(parse_rational(c), u); }, py::arg("c"), py::arg("u"));
    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              int status = run_cli(args, out, err);
              return py::make_tuple(status, out.str(), err.str());
          },
          py::arg("args"));
}
