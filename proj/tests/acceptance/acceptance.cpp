// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every comparison is exact; tolerances do not exist in this code base.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "linsds/cut.hpp"
#include "linsds/phase.hpp"
#include "linsds/random_instances.hpp"
#include "linsds/word_sds.hpp"

using namespace linsds;

namespace {

const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);
const FieldSpec kF5 = FieldSpec::prime(5);
const FieldSpec kQ = FieldSpec::rational();

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<bool()> body;
};

LinearSDS circ4_parity(Schedule schedule) {
    Graph g = circ(4);
    return LinearSDS(g, parity_coefficients(g, kF2), std::move(schedule));
}

bool criterion_restriction_goldens() {
    Matrix a = parity_coefficients(circ(4), kF2);
    Matrix lower = restrict_after(a, {0, 1, 2, 3});
    Matrix upper = restrict_after(a, {3, 2, 1, 0});
    return lower == Matrix::from_ints(kF2, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}}) &&
           upper == Matrix::from_ints(kF2, {{0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
}

bool criterion_perm_closed_form_equivalence() {
    Rng rng(101);
    std::vector<FieldSpec> fields{kF2, kF3, kF5, kQ};
    for (int trial = 0; trial < 1000; ++trial) {
        const FieldSpec& field = fields[trial % fields.size()];
        LinearSDS sds = random_sds(rng, field, 2 + rng.below(5), /*permutation=*/true);
        if (system_matrix_perm(sds) != compose_oracle(sds)) return false;
    }
    return true;
}

bool criterion_word_closed_form_equivalence() {
    Rng rng(102);
    std::vector<FieldSpec> fields{kF2, kF3, kF5, kQ};
    for (int trial = 0; trial < 1000; ++trial) {
        const FieldSpec& field = fields[trial % fields.size()];
        std::size_t n = 2 + rng.below(4);                       // n <= 5
        std::size_t length = n + rng.below(13 - n);             // m <= 12
        LinearSDS sds = random_sds(rng, field, n, /*permutation=*/false, length);
        if (system_matrix_word(sds) != compose_oracle(sds)) return false;
        // degenerate permutation-word check
        LinearSDS perm = random_sds(rng, field, n, /*permutation=*/true);
        if (system_matrix_word(perm) != system_matrix_perm(perm)) return false;
    }
    return true;
}

bool criterion_word_example() {
    LinearSDS sds = circ4_parity(Schedule(4, {0, 1, 3, 1, 2, 0, 3, 2, 1}));
    WordSystemReport report = word_system_report(sds);
    if (report.lifted.bar_word != std::vector<std::size_t>{0, 2, 7, 3, 5, 1, 8, 6, 4}) return false;
    if (report.multiplicities.counts() != std::vector<std::size_t>{2, 3, 2, 2}) return false;

    Matrix expected =
        Matrix::from_ints(kF2, {{0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}, {0, 0, 0, 1}});
    if (report.system != expected || report.system != compose_oracle(sds)) return false;

    // The published worked example's matrices follow the ^e(A,s) convention
    // (a documented erratum): compressing its printed 9x9 inverse reproduces
    // its printed 4x4, while the map that convention yields is refuted by the
    // sequential composition above.
    Matrix printed_inverse = Matrix::from_ints(kF2, {
        {1, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 1, 0, 1, 0, 0, 0, 1, 0},
        {1, 0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 1, 1, 1, 1},
        {0, 0, 0, 1, 0, 1, 0, 1, 0},
        {1, 1, 0, 0, 0, 0, 1, 1, 1},
        {1, 0, 0, 0, 0, 0, 0, 1, 0},
        {1, 1, 0, 0, 0, 1, 0, 1, 1},
    });
    Matrix printed_compressed =
        Matrix::from_ints(kF2, {{1, 1, 0, 1}, {1, 1, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 1}});
    if (block_compress(printed_inverse, report.multiplicities) != printed_compressed) return false;

    WordSystemReport erratum = word_system_report(sds, ExpansionBase::kCoefficients);
    return erratum.series_inverse == printed_inverse && erratum.compressed == printed_compressed &&
           erratum.system != report.system;
}

bool criterion_lu_synthesis() {
    Rng rng(105);
    for (int trial = 0; trial < 200; ++trial) {
        const FieldSpec& field = trial % 2 ? kF5 : kQ;
        std::size_t n = 2 + rng.below(5);
        Matrix t = random_unit_lower(rng, field, n) * random_invertible_upper(rng, field, n);
        auto sds = lu_synthesize(t);
        if (!sds || system_matrix_perm(*sds) != t) return false;
    }
    for (int trial = 0; trial < 50; ++trial) {
        const FieldSpec& field = trial % 2 ? kF5 : kQ;
        std::size_t n = 2 + rng.below(4);
        Matrix t = random_matrix(rng, field, n, n);
        t.set(0, 0, field.zero());
        // force a nonzero entry under the zero leading pivot
        Scalar v = random_scalar(rng, field);
        while (v.is_zero()) v = random_scalar(rng, field);
        t.set(1 + rng.below(n - 1), 0, v);
        if (lu_synthesize(t).has_value()) return false;
        LUFactors f = lup_decompose(t);
        if (apply_row_perm(t, f.row_perm) != f.lower * f.upper) return false;
    }
    return true;
}

bool criterion_inversion() {
    Rng rng(106);
    std::vector<FieldSpec> fields{kF3, kF5, kQ};
    for (int trial = 0; trial < 200; ++trial) {
        const FieldSpec& field = fields[trial % fields.size()];
        std::size_t n = 2 + rng.below(5);
        Graph g = random_graph(rng, n);
        Matrix a = random_supported_matrix(rng, g, field);
        for (std::size_t i = 0; i < n; ++i) {
            Scalar d = random_scalar(rng, field);
            while (d.is_zero()) d = random_scalar(rng, field);
            a.set(i, i, d);
        }
        LinearSDS sds(g, a, Schedule::permutation(random_permutation(rng, n)));
        LinearSDS inverse = invert_sds(sds);
        if (!(system_matrix_perm(inverse) * system_matrix_perm(sds)).is_identity()) return false;
        if (!(system_matrix_perm(sds) * system_matrix_perm(inverse)).is_identity()) return false;
    }
    LinearSDS sds = circ4_parity(Schedule::permutation({0, 1, 2, 3}));
    LinearSDS inverse = invert_sds(sds);
    return inverse.schedule().word() == std::vector<std::size_t>{3, 2, 1, 0} &&
           inverse.coefficients() == sds.coefficients() &&
           (system_matrix_perm(inverse) * system_matrix_perm(sds)).is_identity();
}

bool criterion_moebius_and_chain_powers() {
    Rng rng(107);
    std::vector<FieldSpec> fields{kQ, kF2, kF3, kF5};
    for (int trial = 0; trial < 200; ++trial) {
        const FieldSpec& field = fields[trial % fields.size()];
        Poset p = random_poset(rng, 2 + rng.below(7)); // n <= 8
        if (moebius_via_sds(zeta(p, field)) != moebius(p, field).matrix()) return false;
    }
    for (int trial = 0; trial < 100; ++trial) {
        const FieldSpec& field = fields[trial % fields.size()];
        std::size_t n = 2 + rng.below(5); // n <= 6
        Poset p = random_poset(rng, n);
        IncidenceElement h = random_incidence_element(rng, p, field);
        Matrix diag(field, n, n);
        for (std::size_t i = 0; i < n; ++i) diag.set(i, i, h.matrix().at(i, i));
        Matrix weak_power = Matrix::identity(field, n);
        Matrix strict_power = Matrix::identity(field, n);
        Matrix strict = h.matrix() - diag;
        for (std::size_t k = 1; k <= n; ++k) {
            weak_power = weak_power * h.matrix();
            strict_power = strict_power * strict;
            if (chain_power_oracle(h, k, false) != weak_power) return false;
            if (chain_power_oracle(h, k, true) != strict_power) return false;
        }
        if (!chain_power_oracle(h, n, true).is_zero()) return false;
        if (!chain_power_oracle(h, n + 1, true).is_zero()) return false;
    }
    return true;
}

bool criterion_cut_identity() {
    Rng rng(108);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng.below(9); // n <= 10
        std::size_t k = 1 + rng.below(n);
        Cut cut = random_cut_instance(rng.next(), n, k);
        for (const FieldSpec& field : {kQ, kF5}) {
            CutReport report = cut_identity_check(cut, field, /*via_sds=*/true);
            if (!report.identity_holds || !report.via_sds_agrees) return false;
            if (report.j_invertible && !report.j_free_holds) return false;
        }
    }
    return true;
}

bool criterion_phase_space() {
    LinearSDS sds = circ4_parity(Schedule::permutation({0, 1, 2, 3}));
    PhaseSpace ps = enumerate_phase_space(sds);
    if (ps.state_count != 16 || ps.tail_depth != 0) return false;
    std::vector<std::size_t> in_degree(ps.state_count, 0);
    for (std::uint64_t s = 0; s < ps.state_count; ++s) ++in_degree[ps.successor[s]];
    for (std::size_t d : in_degree) {
        if (d != 1) return false;
    }
    if (ps.fixed_points != std::vector<std::uint64_t>{0, 5, 10, 15}) return false;
    if (fixed_points_algebraic(sds) != ps.fixed_points) return false;

    Rng rng(109);
    std::uint64_t primes[] = {2, 3, 5};
    for (int trial = 0; trial < 40; ++trial) {
        FieldSpec field = FieldSpec::prime(primes[rng.below(3)]);
        std::size_t n = 2 + rng.below(2);
        bool perm = rng.coin();
        LinearSDS random = random_sds(rng, field, n, perm, perm ? 0 : n + rng.below(4));
        if (fixed_points_algebraic(random) != enumerate_phase_space(random).fixed_points) {
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1. printed 4-cycle schedule restrictions reproduced bit-exactly", 1.0,
         criterion_restriction_goldens},
        {"2. permutation closed form == sequential composition, 1000 seeded instances", 60.0,
         criterion_perm_closed_form_equivalence},
        {"3. word closed form == sequential composition (incl. permutation degeneration), "
         "1000 seeded instances",
         120.0, criterion_word_closed_form_equivalence},
        {"4. word example 013120321: lift/multiplicities/corrected map + published worked-example "
         "erratum (^e(A,s) convention) documented",
         10.0, criterion_word_example},
        {"5. LU synthesis reproduces 200 factorable maps; 50 zero-pivot maps refused with "
         "LUP fallback intact",
         60.0, criterion_lu_synthesis},
        {"6. inversion round-trips on 200 nonzero-diagonal systems + parity 4-cycle special case",
         60.0, criterion_inversion},
        {"7. Moebius via system map == direct inversion (200 posets); chain-power oracle == "
         "matrix powers (100 elements)",
         60.0, criterion_moebius_and_chain_powers},
        {"8. cut identity (J-multiplied, J-free, constructive route) on 300 seeded instances "
         "over Q and F_5",
         120.0, criterion_cut_identity},
        {"9. parity 4-cycle phase space golden + algebraic fixed points == enumeration", 30.0,
         criterion_phase_space},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.body();
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.limit_seconds) {
            ok = false;
            note += " (over the " + std::to_string(c.limit_seconds) + "s budget)";
        }
        std::printf("[%s] %s [%.2fs]%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), seconds,
                    note.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
