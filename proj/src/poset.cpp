#include "linsds/poset.hpp"

#include <algorithm>

namespace linsds {

namespace {

// Warshall-style reflexive-transitive closure.
void close(std::size_t n, std::vector<char>& rel) {
    for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!rel[i * n + k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (rel[k * n + j]) rel[i * n + j] = 1;
            }
        }
    }
}

} // namespace

Poset::Poset(std::size_t n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {
    labels_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back("s" + std::to_string(i + 1));
}

Poset Poset::from_relation(std::size_t n, std::vector<char> leq) {
    if (leq.size() != n * n) {
        throw Error(errc::invalid_poset, "relation matrix has wrong size");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq[i * n + i]) {
            throw Error(errc::invalid_poset, "relation is not reflexive at element " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (leq[i * n + j] && leq[j * n + i]) {
                throw Error(errc::invalid_poset, "antisymmetry fails: both " + std::to_string(i) +
                                                     " <= " + std::to_string(j) + " and " +
                                                     std::to_string(j) + " <= " + std::to_string(i));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!leq[i * n + k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (leq[k * n + j] && !leq[i * n + j]) {
                    throw Error(errc::invalid_poset,
                                "transitivity fails through " + std::to_string(i) + " <= " +
                                    std::to_string(k) + " <= " + std::to_string(j));
                }
            }
        }
    }
    return Poset(n, std::move(leq));
}

Poset Poset::from_strict_pairs(std::size_t n,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<char> rel(n * n, 0);
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n) {
            throw Error(errc::invalid_poset, "strict pair (" + std::to_string(a) + "," +
                                                 std::to_string(b) + ") out of range");
        }
        if (a == b) {
            throw Error(errc::invalid_poset, "strict pair (" + std::to_string(a) + "," +
                                                 std::to_string(b) + ") relates an element to itself");
        }
        rel[a * n + b] = 1;
    }
    close(n, rel);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rel[i * n + j] && rel[j * n + i]) {
                throw Error(errc::invalid_poset,
                            "strict pairs contain a cycle through " + std::to_string(i) + " and " +
                                std::to_string(j) + "; antisymmetry fails");
            }
        }
    }
    return Poset(n, std::move(rel));
}

Poset Poset::antichain(std::size_t n) {
    std::vector<char> rel(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
    return Poset(n, std::move(rel));
}

Poset Poset::chain(std::size_t n) {
    std::vector<char> rel(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) rel[i * n + j] = 1;
    }
    return Poset(n, std::move(rel));
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (less(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

Poset Poset::induced(const std::vector<std::size_t>& elements) const {
    std::size_t k = elements.size();
    std::vector<char> rel(k * k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            rel[a * k + b] = leq(elements[a], elements[b]) ? 1 : 0;
        }
    }
    return Poset(k, std::move(rel));
}

Poset Poset::reordered(const std::vector<std::size_t>& order) const {
    if (!is_permutation_of_indices(order, n_)) {
        throw Error(errc::not_a_permutation, "reordering is not a permutation of the elements");
    }
    return induced(order);
}

void Poset::set_labels(std::vector<std::string> labels) {
    if (labels.size() != n_) {
        throw Error(errc::invalid_poset, "expected " + std::to_string(n_) + " labels");
    }
    labels_ = std::move(labels);
}

Poset poset_from_acyclic_orientation(const Graph& g, const std::vector<std::size_t>& pi) {
    std::size_t n = g.vertex_count();
    if (!is_permutation_of_indices(pi, n)) {
        throw Error(errc::not_a_permutation, "update order is not a permutation of the vertices");
    }
    std::vector<std::size_t> pos(n);
    for (std::size_t t = 0; t < n; ++t) pos[pi[t]] = t;

    std::vector<std::pair<std::size_t, std::size_t>> strict;
    for (auto [a, b] : g.edges()) {
        if (pos[a] > pos[b]) {
            strict.emplace_back(a, b); // a updated after b, so a < b
        } else {
            strict.emplace_back(b, a);
        }
    }
    return Poset::from_strict_pairs(n, strict);
}

std::vector<std::vector<std::size_t>> linear_extensions(const Poset& p,
                                                        std::optional<std::size_t> limit) {
    std::size_t n = p.size();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    std::vector<char> placed(n, 0);

    auto ready = [&](std::size_t v) {
        for (std::size_t u = 0; u < n; ++u) {
            if (p.less(u, v) && !placed[u]) return false;
        }
        return true;
    };

    // Smallest available index first, so results come out in lexicographic
    // order and the first extension is the lexicographically smallest.
    auto rec = [&](auto&& self) -> bool {
        if (limit && out.size() >= *limit) return true;
        if (current.size() == n) {
            out.push_back(current);
            return limit && out.size() >= *limit;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v] || !ready(v)) continue;
            placed[v] = 1;
            current.push_back(v);
            bool done = self(self);
            current.pop_back();
            placed[v] = 0;
            if (done) return true;
        }
        return false;
    };
    rec(rec);
    return out;
}

IncidenceElement::IncidenceElement(Poset poset, Matrix matrix)
    : poset_(std::move(poset)), matrix_(std::move(matrix)) {
    std::size_t n = poset_.size();
    if (matrix_.nrows() != n || matrix_.ncols() != n) {
        throw Error(errc::dimension_mismatch, "incidence matrix must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!poset_.leq(i, j) && !matrix_.at(i, j).is_zero()) {
                throw Error(errc::invalid_poset,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is nonzero outside the order relation");
            }
        }
    }
}

IncidenceElement zeta(const Poset& p, const FieldSpec& field) {
    std::size_t n = p.size();
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (p.leq(i, j)) m.set(i, j, field.one());
        }
    }
    return IncidenceElement(p, std::move(m));
}

IncidenceElement moebius(const Poset& p, const FieldSpec& field) {
    // zeta is unitriangular under any linear extension, hence invertible in
    // every field.
    return IncidenceElement(p, mat_inv(zeta(p, field).matrix()));
}

IncidenceElement identity_element(const Poset& p, const FieldSpec& field) {
    return IncidenceElement(p, Matrix::identity(field, p.size()));
}

IncidenceElement incidence_mul(const IncidenceElement& h, const IncidenceElement& r) {
    if (!(h.poset() == r.poset())) {
        throw Error(errc::poset_mismatch, "incidence elements live on different posets");
    }
    return IncidenceElement(h.poset(), h.matrix() * r.matrix());
}

Matrix chain_power_oracle(const IncidenceElement& h, std::size_t k, bool strict) {
    if (k == 0) {
        throw Error(errc::invalid_input, "chain_power_oracle needs k >= 1");
    }
    const Poset& p = h.poset();
    const Matrix& m = h.matrix();
    std::size_t n = p.size();
    Matrix out(h.field(), n, n);

    auto related = [&](std::size_t a, std::size_t b) {
        return strict ? p.less(a, b) : p.leq(a, b);
    };

    // Sum of h-products over all chains cur = l_0 R l_1 R ... R l_steps = j.
    auto rec = [&](auto&& self, std::size_t cur, std::size_t j, std::size_t steps) -> Scalar {
        if (steps == 1) {
            return related(cur, j) ? m.at(cur, j) : h.field().zero();
        }
        Scalar sum = h.field().zero();
        for (std::size_t z = 0; z < n; ++z) {
            if (!related(cur, z) || !p.leq(z, j)) continue;
            sum += m.at(cur, z) * self(self, z, j, steps - 1);
        }
        return sum;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.leq(i, j)) continue;
            out.set(i, j, rec(rec, i, j, k));
        }
    }
    return out;
}

} // namespace linsds
