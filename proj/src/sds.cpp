#include "linsds/sds.hpp"

#include <numeric>
#include <string>

namespace linsds {

LinearSDS::LinearSDS(Graph graph, Matrix coefficients, Schedule schedule)
    : graph_(std::move(graph)),
      coefficients_(std::move(coefficients)),
      schedule_(std::move(schedule)) {
    std::size_t n = graph_.vertex_count();
    if (coefficients_.nrows() != n || coefficients_.ncols() != n) {
        throw Error(errc::dimension_mismatch,
                    "coefficient matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (schedule_.vertex_count() != n) {
        throw Error(errc::invalid_schedule, "schedule is over " +
                                                std::to_string(schedule_.vertex_count()) +
                                                " vertices, graph has " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && !graph_.adjacent(i, j) && !coefficients_.at(i, j).is_zero()) {
                throw Error(errc::support_violation,
                            "coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is nonzero but the vertices are not adjacent");
            }
        }
    }
}

Matrix local_matrix(const LinearSDS& sds, std::size_t vertex) {
    std::size_t n = sds.vertex_count();
    Matrix f = Matrix::identity(sds.field(), n);
    for (std::size_t j = 0; j < n; ++j) f.set(vertex, j, sds.coefficients().at(vertex, j));
    return f;
}

Matrix compose_sequence(const Matrix& coefficients, const std::vector<std::size_t>& word) {
    std::size_t n = coefficients.nrows();
    Matrix m = Matrix::identity(coefficients.field(), n);
    for (std::size_t v : word) {
        Matrix f = Matrix::identity(coefficients.field(), n);
        for (std::size_t j = 0; j < n; ++j) f.set(v, j, coefficients.at(v, j));
        m = f * m;
    }
    return m;
}

Matrix compose_oracle(const LinearSDS& sds) {
    return compose_sequence(sds.coefficients(), sds.schedule().word());
}

Matrix system_matrix_perm(const LinearSDS& sds) {
    if (!sds.schedule().is_permutation()) {
        throw Error(errc::not_a_permutation, "closed form requires a permutation schedule");
    }
    const Matrix& a = sds.coefficients();
    Matrix restricted = restrict_after(a, sds.schedule().word());
    Matrix series = nilpotent_inverse_series(restricted);
    return series * (a - restricted);
}

LinearSDS invert_sds(const LinearSDS& sds) {
    if (!sds.schedule().is_permutation()) {
        throw Error(errc::not_a_permutation, "inversion requires a permutation schedule");
    }
    const Matrix& a = sds.coefficients();
    std::size_t n = sds.vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.at(i, i).is_zero()) {
            throw Error(errc::not_invertible,
                        "diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                            ") is zero; the system is not invertible");
        }
    }
    Matrix b(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar d_inv = a.at(i, i).inv();
        b.set(i, i, d_inv);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            b.set(i, j, -(d_inv * a.at(i, j)));
        }
    }
    return LinearSDS(sds.graph(), std::move(b), sds.schedule().reversed());
}

std::optional<LinearSDS> lu_synthesize(const Matrix& t) {
    auto lu = lu_decompose(t);
    if (!lu) return std::nullopt;

    std::size_t n = t.nrows();
    Matrix strictly_lower = Matrix::identity(t.field(), n) - mat_inv(lu->lower);
    Matrix coefficients = lu->upper + strictly_lower;

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!coefficients.at(i, j).is_zero() || !coefficients.at(j, i).is_zero()) {
                edges.emplace_back(i, j);
            }
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return LinearSDS(Graph(n, edges), std::move(coefficients), Schedule::permutation(order));
}

Matrix moebius_via_sds(const IncidenceElement& h) {
    const Poset& p = h.poset();
    const Matrix& m = h.matrix();
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.at(i, i).is_one()) {
            throw Error(errc::bad_diagonal,
                        "diagonal entry " + std::to_string(i) + " must be 1, got " +
                            m.at(i, i).to_string());
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p.comparable(i, j)) edges.emplace_back(i, j);
        }
    }
    Matrix a = Matrix::identity(h.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (p.less(i, j)) a.set(i, j, -m.at(i, j));
        }
    }

    std::vector<std::size_t> extension = linear_extensions(p, 1).at(0);
    std::vector<std::size_t> order(extension.rbegin(), extension.rend());
    LinearSDS sds(Graph(n, edges), std::move(a), Schedule::permutation(order));
    return system_matrix_perm(sds);
}

Matrix parity_coefficients(const Graph& g, const FieldSpec& field) {
    Matrix a = adjacency_matrix(g, field);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) a.set(i, i, field.one());
    return a;
}

} // namespace linsds
