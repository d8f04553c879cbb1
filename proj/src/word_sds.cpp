#include "linsds/word_sds.hpp"

#include <numeric>
#include <string>

namespace linsds {

namespace {

std::vector<std::size_t> block_offsets(const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> offsets(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) offsets[i + 1] = offsets[i] + sizes[i];
    return offsets;
}

} // namespace

LiftedWord lift_word(const Schedule& w) {
    MultiplicityVector s = w.multiplicities();
    std::vector<std::size_t> offsets = block_offsets(s.counts());
    std::vector<std::size_t> seen(w.vertex_count(), 0);
    std::vector<std::size_t> bar;
    bar.reserve(w.length());
    for (std::size_t v : w.word()) {
        bar.push_back(offsets[v] + seen[v]);
        ++seen[v];
    }
    return LiftedWord{std::move(bar), w};
}

Matrix block_expand(const Matrix& t, const std::vector<std::size_t>& sizes) {
    if (sizes.size() != t.nrows() || !t.is_square()) {
        throw Error(errc::dimension_mismatch,
                    "block_expand needs a square matrix with one size per row");
    }
    std::vector<std::size_t> offsets = block_offsets(sizes);
    Matrix out(t.field(), offsets.back(), offsets.back());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            for (std::size_t r = offsets[i]; r < offsets[i + 1]; ++r) {
                for (std::size_t c = offsets[j]; c < offsets[j + 1]; ++c) {
                    out.set(r, c, t.at(i, j));
                }
            }
        }
    }
    return out;
}

Matrix block_expand(const Matrix& t, const MultiplicityVector& s) {
    return block_expand(t, s.counts());
}

Matrix block_compress(const Matrix& t, const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> offsets = block_offsets(sizes);
    if (t.nrows() != offsets.back() || !t.is_square()) {
        throw Error(errc::dimension_mismatch, "block sizes sum to " + std::to_string(offsets.back()) +
                                                  " but the matrix is " + std::to_string(t.nrows()) +
                                                  "x" + std::to_string(t.ncols()));
    }
    Matrix out(t.field(), sizes.size(), sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            Scalar sum = t.field().zero();
            for (std::size_t r = offsets[i]; r < offsets[i + 1]; ++r) {
                for (std::size_t c = offsets[j]; c < offsets[j + 1]; ++c) {
                    sum += t.at(r, c);
                }
            }
            out.set(i, j, sum);
        }
    }
    return out;
}

Matrix block_compress(const Matrix& t, const MultiplicityVector& s) {
    return block_compress(t, s.counts());
}

WordSystemReport word_system_report(const LinearSDS& sds, ExpansionBase base) {
    const Matrix& a = sds.coefficients();
    std::size_t n = sds.vertex_count();
    Matrix identity = Matrix::identity(sds.field(), n);

    MultiplicityVector s = sds.schedule().multiplicities();
    LiftedWord lifted = lift_word(sds.schedule());

    Matrix expanded =
        block_expand(base == ExpansionBase::kCoefficientsMinusI ? a - identity : a, s);
    Matrix restricted = restrict_after(expanded, lifted.bar_word);
    Matrix series_inverse = nilpotent_inverse_series(restricted);
    Matrix compressed = block_compress(series_inverse, s);
    Matrix system = identity + compressed * (a - identity);

    return WordSystemReport{std::move(s),          std::move(lifted),         std::move(expanded),
                            std::move(restricted), std::move(series_inverse), std::move(compressed),
                            std::move(system)};
}

Matrix system_matrix_word(const LinearSDS& sds) {
    return word_system_report(sds).system;
}

bool split_compose_check(const LinearSDS& sds, std::size_t cut_at) {
    const std::vector<std::size_t>& word = sds.schedule().word();
    if (cut_at == 0 || cut_at >= word.size()) {
        throw Error(errc::bad_cut, "cut position must split the word into two nonempty halves");
    }
    std::size_t n = sds.vertex_count();
    std::vector<std::size_t> first(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(cut_at));
    std::vector<std::size_t> second(word.begin() + static_cast<std::ptrdiff_t>(cut_at), word.end());
    for (const auto* half : {&first, &second}) {
        std::vector<char> seen(n, 0);
        for (std::size_t v : *half) seen[v] = 1;
        for (std::size_t v = 0; v < n; ++v) {
            if (!seen[v]) {
                throw Error(errc::bad_cut, "vertex " + std::to_string(v) + " is missing from the " +
                                               (half == &first ? "first" : "second") + " half");
            }
        }
    }

    Matrix whole = system_matrix_word(sds);
    Matrix m1 = system_matrix_word(LinearSDS(sds.graph(), sds.coefficients(), Schedule(n, first)));
    Matrix m2 = system_matrix_word(LinearSDS(sds.graph(), sds.coefficients(), Schedule(n, second)));
    return whole == m2 * m1;
}

} // namespace linsds
