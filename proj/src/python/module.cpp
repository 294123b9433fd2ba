// Python bindings. Rationals cross the boundary as strings ("p/q"); reports
// cross as JSON text and are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "polystab/constructions.hpp"
#include "polystab/errors.hpp"
#include "polystab/io.hpp"
#include "polystab/oracle.hpp"
#include "polystab/poset.hpp"
#include "polystab/stochastic.hpp"

namespace py = pybind11;
using namespace polystab;

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::vector<Vector> to_vectors(const Rows& rows) {
  std::vector<Vector> out;
  for (const auto& row : rows) {
    Vector v;
    for (const auto& entry : row) v.push_back(parse_rational(entry));
    out.push_back(std::move(v));
  }
  return out;
}

MatrixSet to_matrix_set(const std::vector<Rows>& matrices, const std::vector<std::string>& names) {
  std::vector<Matrix> mats;
  for (const auto& rows : matrices) mats.push_back(Matrix::from_rows(to_vectors(rows)));
  return MatrixSet(std::move(mats), names);
}

SeminormBall to_ball(const std::optional<Rows>& normals, std::size_t dim) {
  if (!normals) return consensus_ball(dim);
  auto ball = SeminormBall::from_normals(to_vectors(*normals));
  if (ball.dim() != dim)
    throw InputError("ball dimension " + std::to_string(ball.dim()) + " does not match matrix dimension " +
                     std::to_string(dim));
  return ball;
}

SeminormBall standalone_ball(const std::optional<Rows>& normals, std::optional<std::size_t> n) {
  if (normals.has_value() == n.has_value()) throw InputError("give exactly one of normals or n");
  return normals ? SeminormBall::from_normals(to_vectors(*normals)) : consensus_ball(*n);
}

std::string decide_json(const std::vector<Rows>& matrices, const std::vector<std::string>& names,
                        const std::optional<Rows>& normals) {
  const auto sigma = to_matrix_set(matrices, names);
  if (!normals) return io::consensus_json(sigma, decide_consensus(sigma), false).dump();
  const auto ball = to_ball(normals, sigma.dim());
  return io::decision_json(ball, sigma, decide(ball, sigma), false).dump();
}

std::string oracle_json(const std::vector<Rows>& matrices, const std::vector<std::string>& names,
                        const std::optional<Rows>& normals, std::optional<std::size_t> max_period,
                        std::uint64_t budget, bool first) {
  const auto sigma = to_matrix_set(matrices, names);
  const auto ball = to_ball(normals, sigma.dim());
  const std::size_t period = max_period ? *max_period : width(build_poset(ball).order).size;
  const auto report = bruteforce_decide(ball, sigma, period, {.budget = budget, .stop_at_first = first});
  return io::oracle_json(sigma, report, budget).dump();
}

std::string invariance_json(const std::vector<Rows>& matrices, const std::vector<std::string>& names,
                            const std::optional<Rows>& normals) {
  const auto sigma = to_matrix_set(matrices, names);
  const auto ball = to_ball(normals, sigma.dim());
  io::Json out = io::Json::array();
  for (std::size_t k = 0; k < sigma.size(); ++k) out.push_back(check_invariance(ball, sigma[k]));
  return out.dump();
}

std::pair<std::string, std::string> construct(const std::optional<Rows>& normals, std::optional<std::size_t> n) {
  const auto ball = standalone_ball(normals, n);
  const auto c = normals ? construct_general(ball) : construct_stochastic(*n);
  return {io::format_matrix_set(c.sigma), io::construction_json(ball, c).dump()};
}

}  // namespace

PYBIND11_MODULE(_polystab, m) {
  m.doc() = "Exact contraction decisions for products of matrices with a polyhedral seminorm";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", input_error.ptr());
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("pstar", &pstar, py::arg("n"));
  m.def("paz_bound", &paz_bound, py::arg("n"));
  m.def("face_count", &face_count, py::arg("n"), py::arg("d"));
  m.def("dstar", &dstar, py::arg("n"));
  m.def("bounds_json", [](std::size_t n) { return io::bounds_json(consensus_bounds(n)).dump(); }, py::arg("n"));
  m.def(
      "lattice_json",
      [](const std::optional<Rows>& normals, std::optional<std::size_t> n) {
        const auto ball = standalone_ball(normals, n);
        return io::lattice_json(ball, build_poset(ball)).dump();
      },
      py::arg("normals"), py::arg("n"));
  m.def("decide_json", &decide_json, py::arg("matrices"), py::arg("names"), py::arg("normals"),
        py::call_guard<py::gil_scoped_release>());
  m.def("oracle_json", &oracle_json, py::arg("matrices"), py::arg("names"), py::arg("normals"),
        py::arg("max_period"), py::arg("budget"), py::arg("first"), py::call_guard<py::gil_scoped_release>());
  m.def("invariance_json", &invariance_json, py::arg("matrices"), py::arg("names"), py::arg("normals"));
  m.def("construct", &construct, py::arg("normals"), py::arg("n"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "parse_matrix_set",
      [](const std::string& text) { return io::format_matrix_set(io::parse_matrix_set(text)); }, py::arg("text"));
}
