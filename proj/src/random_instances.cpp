#include "linsds/random_instances.hpp"

#include <numeric>

namespace linsds {

Graph random_graph(Rng& rng, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (rng.coin()) edges.emplace_back(a, b);
        }
    }
    return Graph(n, edges);
}

Scalar random_scalar(Rng& rng, const FieldSpec& field) {
    if (field.is_prime_field()) {
        return field.from_int(static_cast<std::int64_t>(rng.below(field.modulus())));
    }
    return field.from_int(rng.range(-3, 3));
}

Matrix random_matrix(Rng& rng, const FieldSpec& field, std::size_t nrows, std::size_t ncols) {
    Matrix m(field, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) m.set(i, j, random_scalar(rng, field));
    }
    return m;
}

Matrix random_supported_matrix(Rng& rng, const Graph& g, const FieldSpec& field) {
    std::size_t n = g.vertex_count();
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || g.adjacent(i, j)) m.set(i, j, random_scalar(rng, field));
        }
    }
    return m;
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    return order;
}

Schedule random_word_schedule(Rng& rng, std::size_t n, std::size_t length) {
    std::vector<std::size_t> word(n);
    std::iota(word.begin(), word.end(), 0);
    for (std::size_t t = n; t < length; ++t) word.push_back(rng.below(n));
    rng.shuffle(word);
    return Schedule(n, std::move(word));
}

LinearSDS random_sds(Rng& rng, const FieldSpec& field, std::size_t n, bool permutation,
                     std::size_t word_length) {
    Graph g = random_graph(rng, n);
    Matrix a = random_supported_matrix(rng, g, field);
    Schedule s = permutation ? Schedule::permutation(random_permutation(rng, n))
                             : random_word_schedule(rng, n, word_length ? word_length : n);
    return LinearSDS(std::move(g), std::move(a), std::move(s));
}

Matrix random_unit_lower(Rng& rng, const FieldSpec& field, std::size_t n) {
    Matrix m = Matrix::identity(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) m.set(i, j, random_scalar(rng, field));
    }
    return m;
}

Matrix random_invertible_upper(Rng& rng, const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, random_scalar(rng, field));
        Scalar d = random_scalar(rng, field);
        while (d.is_zero()) d = random_scalar(rng, field);
        m.set(i, i, d);
    }
    return m;
}

Poset random_poset(Rng& rng, std::size_t n) {
    std::vector<std::size_t> relabel = random_permutation(rng, n);
    std::vector<std::pair<std::size_t, std::size_t>> strict;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (rng.below(3) == 0) strict.emplace_back(relabel[a], relabel[b]);
        }
    }
    return Poset::from_strict_pairs(n, strict);
}

IncidenceElement random_incidence_element(Rng& rng, const Poset& p, const FieldSpec& field) {
    std::size_t n = p.size();
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.leq(i, j)) continue;
            if (i == j) {
                Scalar d = random_scalar(rng, field);
                while (d.is_zero()) d = random_scalar(rng, field);
                m.set(i, i, d);
            } else {
                m.set(i, j, random_scalar(rng, field));
            }
        }
    }
    return IncidenceElement(p, std::move(m));
}

} // namespace linsds
