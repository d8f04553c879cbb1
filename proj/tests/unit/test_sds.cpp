#include <doctest.h>

#include "linsds/random_instances.hpp"
#include "linsds/sds.hpp"

using namespace linsds;

namespace {

const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF5 = FieldSpec::prime(5);
const FieldSpec kQ = FieldSpec::rational();

LinearSDS circ4_parity_sds(std::vector<std::size_t> order) {
    Graph g = circ(4);
    return LinearSDS(g, parity_coefficients(g, kF2), Schedule::permutation(std::move(order)));
}

} // namespace

TEST_CASE("coefficient support must match adjacency") {
    Graph g(3, {{0, 1}});
    Matrix a = Matrix::from_ints(kQ, {{1, 0, 5}, {0, 2, 0}, {0, 0, 3}});
    CHECK_THROWS_WITH_AS(LinearSDS(g, a, Schedule::permutation({0, 1, 2})),
                         "coefficient (0,2) is nonzero but the vertices are not adjacent", Error);
    // free diagonal, zero off-diagonals anywhere
    Matrix ok = Matrix::from_ints(kQ, {{7, 1, 0}, {2, 0, 0}, {0, 0, 3}});
    CHECK_NOTHROW(LinearSDS(g, ok, Schedule::permutation({0, 1, 2})));
}

TEST_CASE("local matrices replace exactly one row") {
    LinearSDS sds = circ4_parity_sds({0, 1, 2, 3});
    Matrix f0 = local_matrix(sds, 0);
    CHECK(f0 == Matrix::from_ints(kF2, {{1, 1, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    for (std::size_t j = 1; j < 4; ++j) {
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(f0.at(j, c) == (j == c ? kF2.one() : kF2.zero()));
        }
    }
    Graph g(2, {{0, 1}});
    LinearSDS id_sds(g, Matrix::identity(kQ, 2), Schedule::permutation({0, 1}));
    CHECK(local_matrix(id_sds, 0) == Matrix::identity(kQ, 2));
}

TEST_CASE("sequential composition of the parity 4-cycle") {
    Matrix expected =
        Matrix::from_ints(kF2, {{1, 1, 0, 1}, {1, 0, 1, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(compose_oracle(circ4_parity_sds({0, 1, 2, 3})) == expected);

    Graph g = circ(4);
    LinearSDS word_sds(g, parity_coefficients(g, kF2),
                       Schedule(4, {0, 1, 3, 1, 2, 0, 3, 2, 1}));
    CHECK(compose_oracle(word_sds) ==
          Matrix::from_ints(kF2, {{0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}, {0, 0, 0, 1}}));

    LinearSDS identity_sds(g, Matrix::identity(kF2, 4), Schedule::permutation({2, 0, 3, 1}));
    CHECK(compose_oracle(identity_sds).is_identity());
}

TEST_CASE("closed form equals composition on the printed example") {
    LinearSDS sds = circ4_parity_sds({0, 1, 2, 3});
    Matrix expected =
        Matrix::from_ints(kF2, {{1, 1, 0, 1}, {1, 0, 1, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(system_matrix_perm(sds) == expected);
    CHECK(system_matrix_perm(sds) == compose_oracle(sds));
}

TEST_CASE("diagonal systems and singletons degenerate") {
    Graph g(3, {});
    Matrix d = Matrix::from_ints(kF5, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}});
    LinearSDS sds(g, d, Schedule::permutation({2, 0, 1}));
    CHECK(system_matrix_perm(sds) == d);

    Graph single(1, {});
    Matrix a = Matrix::from_ints(kQ, {{7}});
    CHECK(system_matrix_perm(LinearSDS(single, a, Schedule::permutation({0}))) == a);
}

TEST_CASE("closed form requires a permutation schedule") {
    Graph g(2, {{0, 1}});
    LinearSDS sds(g, Matrix::identity(kQ, 2), Schedule(2, {0, 1, 0}));
    CHECK_THROWS_AS(system_matrix_perm(sds), Error);
}

TEST_CASE("closed form equals composition on random instances") {
    Rng rng(50);
    for (const FieldSpec& field :
         {kF2, FieldSpec::prime(3), kF5, kQ}) {
        for (int trial = 0; trial < 25; ++trial) {
            LinearSDS sds = random_sds(rng, field, 2 + rng.below(5), /*permutation=*/true);
            CHECK(system_matrix_perm(sds) == compose_oracle(sds));
        }
    }
}

TEST_CASE("schedule restrictions of supported matrices are nilpotent") {
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        LinearSDS sds = random_sds(rng, kF5, 2 + rng.below(5), /*permutation=*/true);
        Matrix restricted = restrict_after(sds.coefficients(), sds.schedule().word());
        CHECK_NOTHROW(nilpotent_inverse_series(restricted));
    }
}

TEST_CASE("schedules with equal orientations give equal systems") {
    Graph path(3, {{0, 1}, {1, 2}});
    Matrix a = parity_coefficients(path, kF2);
    // 0 and 2 are not adjacent, so swapping their consecutive updates keeps
    // the orientation.
    LinearSDS s1(path, a, Schedule::permutation({0, 2, 1}));
    LinearSDS s2(path, a, Schedule::permutation({2, 0, 1}));
    CHECK(poset_from_acyclic_orientation(path, {0, 2, 1}) ==
          poset_from_acyclic_orientation(path, {2, 0, 1}));
    CHECK(system_matrix_perm(s1) == system_matrix_perm(s2));
    CHECK(compose_oracle(s1) == compose_oracle(s2));
}

TEST_CASE("inverse of the parity 4-cycle is itself with the reversed schedule") {
    LinearSDS sds = circ4_parity_sds({0, 1, 2, 3});
    LinearSDS inverse = invert_sds(sds);
    CHECK(inverse.coefficients() == sds.coefficients()); // D = I and -1 = 1 in F_2
    CHECK(inverse.schedule().word() == std::vector<std::size_t>{3, 2, 1, 0});
    CHECK((system_matrix_perm(inverse) * system_matrix_perm(sds)).is_identity());
}

TEST_CASE("identity system inverts to itself") {
    Graph g(3, {});
    LinearSDS sds(g, Matrix::identity(kQ, 3), Schedule::permutation({0, 1, 2}));
    LinearSDS inverse = invert_sds(sds);
    CHECK(system_matrix_perm(inverse).is_identity());
}

TEST_CASE("inversion requires a nowhere-zero diagonal") {
    Graph g(2, {{0, 1}});
    Matrix a = Matrix::from_ints(kF5, {{0, 1}, {1, 1}});
    CHECK_THROWS_AS(invert_sds(LinearSDS(g, a, Schedule::permutation({0, 1}))), Error);
}

TEST_CASE("inverse round-trips on random systems") {
    Rng rng(52);
    for (const FieldSpec& field : {FieldSpec::prime(3), kF5, kQ}) {
        for (int trial = 0; trial < 15; ++trial) {
            std::size_t n = 2 + rng.below(4);
            Graph g = random_graph(rng, n);
            Matrix a = random_supported_matrix(rng, g, field);
            for (std::size_t i = 0; i < n; ++i) {
                Scalar d = random_scalar(rng, field);
                while (d.is_zero()) d = random_scalar(rng, field);
                a.set(i, i, d);
            }
            LinearSDS sds(g, a, Schedule::permutation(random_permutation(rng, n)));
            LinearSDS inverse = invert_sds(sds);
            CHECK((system_matrix_perm(inverse) * system_matrix_perm(sds)).is_identity());
            CHECK((system_matrix_perm(sds) * system_matrix_perm(inverse)).is_identity());
        }
    }
}

TEST_CASE("synthesis: identity, worked example, forced failure") {
    auto trivial = lu_synthesize(Matrix::identity(kQ, 3));
    REQUIRE(trivial.has_value());
    CHECK(system_matrix_perm(*trivial).is_identity());

    Matrix t = Matrix::from_ints(kQ, {{2, 1}, {4, 3}});
    auto sds = lu_synthesize(t);
    REQUIRE(sds.has_value());
    CHECK(sds->coefficients() == Matrix::from_ints(kQ, {{2, 1}, {2, 1}}));
    CHECK(sds->schedule().word() == std::vector<std::size_t>{0, 1});
    CHECK(system_matrix_perm(*sds) == t);

    CHECK_FALSE(lu_synthesize(Matrix::from_ints(kQ, {{0, 1}, {1, 0}})).has_value());
}

TEST_CASE("synthesis round-trips and keeps the restriction identity") {
    Rng rng(53);
    for (const FieldSpec& field : {kF5, kQ}) {
        for (int trial = 0; trial < 15; ++trial) {
            std::size_t n = 2 + rng.below(4);
            Matrix t = random_unit_lower(rng, field, n) * random_invertible_upper(rng, field, n);
            auto sds = lu_synthesize(t);
            REQUIRE(sds.has_value());
            CHECK(system_matrix_perm(*sds) == t);
            CHECK(compose_oracle(*sds) == t);

            // the scheduled restriction of the synthesized coefficients is
            // exactly their strictly-lower part
            Matrix restricted = restrict_after(sds->coefficients(), sds->schedule().word());
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    CHECK(restricted.at(i, j) ==
                          (i > j ? sds->coefficients().at(i, j) : field.zero()));
                }
            }
        }
    }
}

TEST_CASE("moebius via system map") {
    CHECK(moebius_via_sds(zeta(Poset::antichain(3), kQ)) == Matrix::identity(kQ, 3));
    CHECK(moebius_via_sds(zeta(Poset::chain(2), kQ)) == Matrix::from_ints(kQ, {{1, -1}, {0, 1}}));

    Rng rng(54);
    for (int trial = 0; trial < 10; ++trial) {
        Poset p = random_poset(rng, 7);
        CHECK(moebius_via_sds(zeta(p, kQ)) == moebius(p, kQ).matrix());
    }

    // unit-diagonal incidence elements beyond zeta invert too
    Poset p = random_poset(rng, 6);
    Matrix h = random_incidence_element(rng, p, kQ).matrix();
    for (std::size_t i = 0; i < 6; ++i) h.set(i, i, kQ.one());
    IncidenceElement elem(p, h);
    CHECK(moebius_via_sds(elem) == mat_inv(h));

    Matrix bad = zeta(Poset::chain(2), kQ).matrix();
    bad.set(0, 0, kQ.from_int(2));
    CHECK_THROWS_AS(moebius_via_sds(IncidenceElement(Poset::chain(2), bad)), Error);
}
