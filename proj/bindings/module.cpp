// Python bindings for the core operations. Scalars cross the boundary as
// ints or "num/den" strings, matrices as nested lists, mirroring the JSON
// forms.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linsds/json_io.hpp"
#include "linsds/random_instances.hpp"
#include "linsds/selftest.hpp"
#include "linsds/word_sds.hpp"

namespace py = pybind11;
using namespace linsds;

namespace {

Scalar scalar_from_py(const FieldSpec& field, const py::handle& value) {
    if (py::isinstance<py::int_>(value)) {
        return field.parse(py::str(value).cast<std::string>());
    }
    if (py::isinstance<py::str>(value)) {
        return field.parse(value.cast<std::string>());
    }
    throw Error(errc::invalid_input, "matrix entries must be ints or scalar strings");
}

py::object scalar_to_py(const Scalar& s) {
    if (s.field().is_prime_field()) return py::int_(s.residue());
    const BigRational& q = s.rational_value();
    if (denominator(q) == 1) {
        return py::cast<py::object>(py::module_::import("builtins").attr("int")(numerator(q).str()));
    }
    return py::str(s.to_string());
}

Matrix matrix_from_py(const FieldSpec& field, const std::vector<std::vector<py::object>>& rows) {
    std::vector<std::vector<Scalar>> converted;
    converted.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Scalar> r;
        r.reserve(row.size());
        for (const auto& v : row) r.push_back(scalar_from_py(field, v));
        converted.push_back(std::move(r));
    }
    return Matrix::from_rows(field, converted);
}

py::list matrix_rows_to_py(const Matrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.ncols(); ++j) row.append(scalar_to_py(m.at(i, j)));
        rows.append(std::move(row));
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact linear sequential dynamical systems over finite fields and Q";

    py::register_exception<Error>(m, "LinsdsError");

    py::class_<FieldSpec>(m, "FieldSpec")
        .def_static("prime", &FieldSpec::prime, py::arg("p"))
        .def_static("rational", &FieldSpec::rational)
        .def_property_readonly("is_prime_field", &FieldSpec::is_prime_field)
        .def_property_readonly("is_rational", &FieldSpec::is_rational)
        .def_property_readonly("modulus", &FieldSpec::modulus)
        .def(py::self == py::self)
        .def("__repr__", [](const FieldSpec& f) { return "FieldSpec(" + f.to_string() + ")"; });

    py::class_<Matrix>(m, "Matrix")
        .def(py::init(&matrix_from_py), py::arg("field"), py::arg("rows"))
        .def_static("identity", &Matrix::identity, py::arg("field"), py::arg("n"))
        .def_static("zeros", [](const FieldSpec& f, std::size_t r, std::size_t c) {
            return Matrix(f, r, c);
        })
        .def_property_readonly("field", &Matrix::field)
        .def_property_readonly("nrows", &Matrix::nrows)
        .def_property_readonly("ncols", &Matrix::ncols)
        .def("rows", &matrix_rows_to_py)
        .def("is_zero", &Matrix::is_zero)
        .def("is_identity", &Matrix::is_identity)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("__matmul__", [](const Matrix& a, const Matrix& b) { return a * b; })
        .def("inv", &mat_inv)
        .def("__repr__", &Matrix::to_string);

    m.def("mat_mul", &mat_mul);
    m.def("mat_inv", &mat_inv);
    m.def("restrict_after", &restrict_after, py::arg("t"), py::arg("order"));
    m.def("nilpotent_inverse_series", &nilpotent_inverse_series);
    m.def("apply_row_perm", &apply_row_perm);

    py::class_<LUFactors>(m, "LUFactors")
        .def_readonly("lower", &LUFactors::lower)
        .def_readonly("upper", &LUFactors::upper)
        .def_readonly("row_perm", &LUFactors::row_perm);
    m.def("lu_decompose", [](const Matrix& t) -> std::optional<LUFactors> {
        return lu_decompose(t);
    });
    m.def("lup_decompose", &lup_decompose);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t, const std::vector<std::pair<std::size_t, std::size_t>>&>(),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbors)
        .def("is_connected", &Graph::is_connected)
        .def(py::self == py::self);
    m.def("circ", &circ, py::arg("n"));
    m.def("adjacency_matrix", &adjacency_matrix, py::arg("graph"), py::arg("field"));

    py::class_<MultiplicityVector>(m, "MultiplicityVector")
        .def(py::init<std::vector<std::size_t>>(), py::arg("counts"))
        .def_property_readonly("counts", &MultiplicityVector::counts)
        .def_property_readonly("total", &MultiplicityVector::total);

    py::class_<ExpandedGraph>(m, "ExpandedGraph")
        .def_readonly("base", &ExpandedGraph::base)
        .def_readonly("graph", &ExpandedGraph::graph)
        .def_readonly("phi", &ExpandedGraph::phi)
        .def_readonly("blocks", &ExpandedGraph::blocks);
    m.def("expand_graph", &expand_graph, py::arg("graph"), py::arg("mult"));

    py::class_<Schedule>(m, "Schedule")
        .def(py::init<std::size_t, std::vector<std::size_t>>(), py::arg("vertex_count"),
             py::arg("word"))
        .def_static("permutation", &Schedule::permutation, py::arg("order"))
        .def_property_readonly("word", &Schedule::word)
        .def_property_readonly("vertex_count", &Schedule::vertex_count)
        .def_property_readonly("is_permutation", &Schedule::is_permutation)
        .def("reversed", &Schedule::reversed)
        .def("multiplicities", &Schedule::multiplicities)
        .def(py::self == py::self);

    py::class_<Poset>(m, "Poset")
        .def_static("from_strict_pairs", &Poset::from_strict_pairs, py::arg("n"), py::arg("pairs"))
        .def_static("antichain", &Poset::antichain)
        .def_static("chain", &Poset::chain)
        .def_property_readonly("size", &Poset::size)
        .def("leq", &Poset::leq)
        .def("less", &Poset::less)
        .def("comparable", &Poset::comparable)
        .def("strict_pairs", &Poset::strict_pairs)
        .def("induced", &Poset::induced)
        .def("reordered", &Poset::reordered)
        .def(py::self == py::self);
    m.def("poset_from_acyclic_orientation", &poset_from_acyclic_orientation, py::arg("graph"),
          py::arg("pi"));
    m.def("linear_extensions", &linear_extensions, py::arg("poset"),
          py::arg("limit") = std::nullopt);

    py::class_<IncidenceElement>(m, "IncidenceElement")
        .def(py::init<Poset, Matrix>(), py::arg("poset"), py::arg("matrix"))
        .def_property_readonly("poset", &IncidenceElement::poset)
        .def_property_readonly("matrix", &IncidenceElement::matrix);
    m.def("zeta", &zeta, py::arg("poset"), py::arg("field"));
    m.def("moebius", &moebius, py::arg("poset"), py::arg("field"));
    m.def("incidence_mul", &incidence_mul);
    m.def("chain_power_oracle", &chain_power_oracle, py::arg("h"), py::arg("k"), py::arg("strict"));

    py::class_<LinearSDS>(m, "LinearSDS")
        .def(py::init<Graph, Matrix, Schedule>(), py::arg("graph"), py::arg("coefficients"),
             py::arg("schedule"))
        .def_property_readonly("graph", &LinearSDS::graph)
        .def_property_readonly("coefficients", &LinearSDS::coefficients)
        .def_property_readonly("schedule", &LinearSDS::schedule)
        .def_property_readonly("field", &LinearSDS::field);
    m.def("parity_coefficients", &parity_coefficients, py::arg("graph"), py::arg("field"));
    m.def("local_matrix", &local_matrix, py::arg("sds"), py::arg("vertex"));
    m.def("compose_oracle", &compose_oracle);
    m.def("system_matrix_perm", &system_matrix_perm);
    m.def("invert_sds", &invert_sds);
    m.def("lu_synthesize", [](const Matrix& t) -> std::optional<LinearSDS> {
        return lu_synthesize(t);
    });
    m.def("moebius_via_sds", &moebius_via_sds);

    py::class_<LiftedWord>(m, "LiftedWord")
        .def_readonly("bar_word", &LiftedWord::bar_word)
        .def_readonly("origin", &LiftedWord::origin);
    m.def("lift_word", &lift_word);
    m.def("block_expand",
          [](const Matrix& t, const std::vector<std::size_t>& sizes) {
              return block_expand(t, sizes);
          });
    m.def("block_compress",
          [](const Matrix& t, const std::vector<std::size_t>& sizes) {
              return block_compress(t, sizes);
          });
    m.def("system_matrix_word", &system_matrix_word);
    py::class_<WordSystemReport>(m, "WordSystemReport")
        .def_readonly("multiplicities", &WordSystemReport::multiplicities)
        .def_readonly("lifted", &WordSystemReport::lifted)
        .def_readonly("expanded", &WordSystemReport::expanded)
        .def_readonly("restricted", &WordSystemReport::restricted)
        .def_readonly("series_inverse", &WordSystemReport::series_inverse)
        .def_readonly("compressed", &WordSystemReport::compressed)
        .def_readonly("system", &WordSystemReport::system);
    m.def(
        "word_system_report",
        [](const LinearSDS& sds) { return word_system_report(sds); },
        py::arg("sds"));
    m.def("split_compose_check", &split_compose_check, py::arg("sds"), py::arg("cut_at"));

    py::class_<ChainPartition>(m, "ChainPartition")
        .def(py::init<Poset, std::vector<std::vector<std::size_t>>>(), py::arg("poset"),
             py::arg("chains"))
        .def_property_readonly("poset", &ChainPartition::poset)
        .def_property_readonly("chains", &ChainPartition::chains)
        .def("chains_comparable", &ChainPartition::chains_comparable);
    py::class_<Cut>(m, "Cut")
        .def(py::init<ChainPartition, std::vector<std::size_t>>(), py::arg("partition"),
             py::arg("positions"))
        .def_property_readonly("partition", &Cut::partition)
        .def_property_readonly("positions", &Cut::positions);
    py::enum_<CutSide>(m, "CutSide").value("LOW", CutSide::kLow).value("UP", CutSide::kUp);
    m.def("c_graph", &c_graph, py::arg("partition"), py::arg("field"));
    m.def("sub_poset_moebius", &sub_poset_moebius, py::arg("cut"), py::arg("side"),
          py::arg("field"));
    py::class_<CutReport>(m, "CutReport")
        .def_readonly("lhs", &CutReport::lhs)
        .def_readonly("rhs", &CutReport::rhs)
        .def_readonly("identity_holds", &CutReport::identity_holds)
        .def_readonly("j_invertible", &CutReport::j_invertible)
        .def_readonly("j_free_holds", &CutReport::j_free_holds)
        .def_readonly("via_sds_checked", &CutReport::via_sds_checked)
        .def_readonly("via_sds_agrees", &CutReport::via_sds_agrees);
    m.def("cut_identity_check", &cut_identity_check, py::arg("cut"), py::arg("field"),
          py::arg("via_sds") = false);
    m.def("random_cut_instance", &random_cut_instance, py::arg("seed"), py::arg("n_elems"),
          py::arg("n_chains"));

    py::class_<PhaseSpace>(m, "PhaseSpace")
        .def_readonly("field", &PhaseSpace::field)
        .def_readonly("dimension", &PhaseSpace::dimension)
        .def_readonly("state_count", &PhaseSpace::state_count)
        .def_readonly("successor", &PhaseSpace::successor)
        .def_readonly("cycles", &PhaseSpace::cycles)
        .def_readonly("fixed_points", &PhaseSpace::fixed_points)
        .def_readonly("tail_depth", &PhaseSpace::tail_depth);
    m.def("enumerate_phase_space", &enumerate_phase_space, py::arg("sds"),
          py::arg("max_states") = kDefaultMaxStates);
    m.def("fixed_points_algebraic", &fixed_points_algebraic, py::arg("sds"),
          py::arg("max_states") = kDefaultMaxStates);
    m.def("state_label", &state_label, py::arg("p"), py::arg("n"), py::arg("state"));
    m.def("phase_space_dot", &phase_space_dot);

    py::class_<SelftestReport::Suite>(m, "SelftestSuite")
        .def_readonly("name", &SelftestReport::Suite::name)
        .def_readonly("trials", &SelftestReport::Suite::trials)
        .def_readonly("failures", &SelftestReport::Suite::failures);
    py::class_<SelftestReport>(m, "SelftestReport")
        .def_readonly("suites", &SelftestReport::suites)
        .def("all_passed", &SelftestReport::all_passed);
    m.def("run_selftest", &run_selftest, py::arg("seed"), py::arg("trials") = 25);

    m.def("system_to_json", [](const LinearSDS& sds) { return system_to_json(sds).dump(); });
    m.def("system_from_json",
          [](const std::string& text) { return system_from_json(json::parse(text)); });
    m.def("matrix_to_json", [](const Matrix& mtx) { return matrix_to_json(mtx).dump(); });
    m.def("matrix_from_json",
          [](const std::string& text) { return matrix_from_json(json::parse(text)); });
    m.def("poset_to_json", [](const Poset& p) { return poset_to_json(p).dump(); });
    m.def("poset_from_json",
          [](const std::string& text) { return poset_from_json(json::parse(text)); });
}
