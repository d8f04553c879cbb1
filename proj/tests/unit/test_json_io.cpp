#include <doctest.h>

#include "linsds/json_io.hpp"
#include "linsds/random_instances.hpp"

using namespace linsds;

TEST_CASE("field and scalar forms") {
    CHECK(field_to_json(FieldSpec::prime(2)).dump() == R"({"field":{"prime":2}})");
    CHECK(field_to_json(FieldSpec::rational()).dump() == R"({"field":"rational"})");
    CHECK(field_from_json(json::parse(R"({"field":{"prime":7}})")) == FieldSpec::prime(7));

    FieldSpec q = FieldSpec::rational();
    CHECK(scalar_to_json(q.parse("1/2")) == json("1/2"));
    CHECK(scalar_to_json(q.from_int(-3)) == json(-3));
    CHECK(scalar_from_json(q, json("5/10")) == q.parse("1/2"));
}

TEST_CASE("parse errors carry JSON pointers") {
    try {
        field_from_json(json::parse(R"({"field":{"prime":6}})"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_input);
        CHECK(e.pointer() == "/field/prime");
    }
    try {
        matrix_from_json(json::parse(R"({"field":{"prime":5},"matrix":[[1,2],[3,"x"]]})"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.pointer() == "/matrix/1/1");
    }
    try {
        system_from_json(json::parse(
            R"({"field":{"prime":2},"graph":{"n":2,"edges":[]},"matrix":[[1,1],[0,1]],"schedule":[0,1]})"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_input);
        CHECK(e.what() == doctest::Contains("(0,1)"));
    }
}

TEST_CASE("emit-parse-emit is a fixed point") {
    Rng rng(80);
    for (const FieldSpec& field : {FieldSpec::prime(5), FieldSpec::rational()}) {
        Matrix m = random_matrix(rng, field, 3, 3);
        json j = matrix_to_json(m);
        CHECK(matrix_from_json(j) == m);
        CHECK(matrix_to_json(matrix_from_json(j)) == j);

        LinearSDS sds = random_sds(rng, field, 4, /*permutation=*/false, 6);
        json sj = system_to_json(sds);
        LinearSDS parsed = system_from_json(sj);
        CHECK(system_to_json(parsed) == sj);
        CHECK(parsed.coefficients() == sds.coefficients());
        CHECK(parsed.graph() == sds.graph());
        CHECK(parsed.schedule() == sds.schedule());
    }

    Poset p = random_poset(rng, 6);
    CHECK(poset_from_json(poset_to_json(p)) == p);
    CHECK(poset_to_json(poset_from_json(poset_to_json(p))) == poset_to_json(p));

    Cut cut = random_cut_instance(4242, 7, 3);
    json cj = cut_instance_to_json(cut, FieldSpec::prime(5));
    auto [parsed_cut, parsed_field] = cut_instance_from_json(cj);
    CHECK(cut_instance_to_json(parsed_cut, parsed_field) == cj);
}

TEST_CASE("schedules parse from digit strings and arrays") {
    Schedule s = schedule_from_json(4, json("013120321"));
    CHECK(s.word() == std::vector<std::size_t>{0, 1, 3, 1, 2, 0, 3, 2, 1});
    CHECK(schedule_from_json(4, json::array({0, 1, 2, 3})).is_permutation());
    CHECK_THROWS_AS(schedule_from_json(4, json("01x")), Error);
    CHECK_THROWS_AS(schedule_from_json(4, json::array({0, 1, 2})), Error); // vertex 3 missing
}

TEST_CASE("big rationals survive the string fallback") {
    FieldSpec q = FieldSpec::rational();
    Scalar huge = q.parse("123456789123456789123456789/2");
    json j = scalar_to_json(huge);
    CHECK(j.is_string());
    CHECK(scalar_from_json(q, j) == huge);
}
