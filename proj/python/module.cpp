#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "goursat/chain.hpp"
#include "goursat/classify.hpp"
#include "goursat/commands.hpp"
#include "goursat/expr.hpp"
#include "goursat/oracle.hpp"

namespace py = pybind11;
namespace cli = goursat::cli;

namespace {

// Commands return (exit_code, stdout, stderr) so callers can mirror the tool.
py::tuple to_tuple(const cli::Result& r) { return py::make_tuple(r.exit_code, r.output, r.error); }

cli::Options options(std::size_t max_order, bool verify) {
  cli::Options o;
  if (max_order != 0) o.max_order = max_order;
  o.verify = verify;
  return o;
}

goursat::DirectProduct product(const std::string& expr) {
  return goursat::build_product(goursat::parse_group_expr(expr));
}

std::vector<std::vector<std::string>> member_tuples(const goursat::DirectProduct& d,
                                                    const std::vector<goursat::Subgroup>& subs) {
  std::vector<std::vector<std::string>> out;
  for (const goursat::Subgroup& g : subs) {
    std::vector<std::string> names;
    for (goursat::Element x : g.members()) names.push_back(goursat::tuple_name(d, x));
    out.push_back(std::move(names));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subgroups of finite direct products";

  py::register_exception<goursat::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<goursat::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<goursat::TheoremViolation>(m, "TheoremViolation", PyExc_AssertionError);

  m.def("enumerate", [](const std::string& expr, std::size_t max_order, bool verify) {
    return to_tuple(cli::run_enumerate(expr, options(max_order, verify)));
  }, py::arg("expr"), py::arg("max_order") = 0, py::arg("verify") = false);

  m.def("decompose", [](const std::string& expr, const std::string& gens, std::size_t max_order) {
    return to_tuple(cli::run_decompose(expr, gens, options(max_order, false)));
  }, py::arg("expr"), py::arg("gens"), py::arg("max_order") = 0);

  m.def("classify", [](const std::string& expr, const std::string& gens, std::size_t max_order) {
    return to_tuple(cli::run_classify(expr, gens, options(max_order, false)));
  }, py::arg("expr"), py::arg("gens"), py::arg("max_order") = 0);

  m.def("lattice", [](const std::string& expr, bool dot, std::size_t max_order) {
    return to_tuple(cli::run_lattice(expr, dot, options(max_order, false)));
  }, py::arg("expr"), py::arg("dot") = false, py::arg("max_order") = 0);

  m.def("verify", [](const std::string& expr, std::size_t max_order) {
    return to_tuple(cli::run_verify(expr, options(max_order, false)));
  }, py::arg("expr"), py::arg("max_order") = 0);

  m.def("subgroups", [](const std::string& expr) {
    const goursat::DirectProduct d = product(expr);
    return member_tuples(d, goursat::enumerate_subgroups_n(d));
  }, py::arg("expr"), "Subgroups found through Goursat chains, as lists of member tuples.");

  m.def("subgroups_bruteforce", [](const std::string& expr) {
    const goursat::DirectProduct d = product(expr);
    return member_tuples(d, goursat::oracle::all_subgroups_bruteforce(d.group()));
  }, py::arg("expr"), "Subgroups found by exhaustive closure, independent of Goursat chains.");

  m.def("canonical", [](const std::string& expr) {
    return goursat::to_string(goursat::parse_group_expr(expr));
  }, py::arg("expr"));
}
