#include "linsds/json_io.hpp"

#include <algorithm>
#include <map>

namespace linsds {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& message) {
    throw Error(errc::invalid_input, message + " (at '" + (pointer.empty() ? "/" : pointer) + "')",
                pointer);
}

const json& member(const json& j, const char* key, const std::string& pointer) {
    if (!j.is_object()) fail(pointer, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(pointer, std::string("missing key '") + key + "'");
    return *it;
}

std::size_t size_from(const json& j, const std::string& pointer) {
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
        return static_cast<std::size_t>(j.get<std::int64_t>());
    }
    fail(pointer, "expected a non-negative integer");
}

std::vector<std::size_t> index_array(const json& j, const std::string& pointer) {
    if (!j.is_array()) fail(pointer, "expected an array");
    std::vector<std::size_t> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        out.push_back(size_from(j[k], pointer + "/" + std::to_string(k)));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pair_array(const json& j,
                                                            const std::string& pointer) {
    if (!j.is_array()) fail(pointer, "expected an array of pairs");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        std::string p = pointer + "/" + std::to_string(k);
        if (!j[k].is_array() || j[k].size() != 2) fail(p, "expected a pair [a, b]");
        out.emplace_back(size_from(j[k][0], p + "/0"), size_from(j[k][1], p + "/1"));
    }
    return out;
}

// Largest integer magnitude emitted as a JSON number; beyond this rationals
// fall back to the string form so nothing is rounded by readers.
const BigInt kJsonIntLimit = BigInt(1) << 53;

} // namespace

json field_to_json(const FieldSpec& field) {
    json j;
    if (field.is_rational()) {
        j["field"] = "rational";
    } else {
        j["field"] = json{{"prime", field.modulus()}};
    }
    return j;
}

FieldSpec field_from_json(const json& j, const std::string& pointer) {
    const json& f = member(j, "field", pointer);
    std::string p = pointer + "/field";
    if (f.is_string()) {
        if (f.get<std::string>() != "rational") fail(p, "unknown field '" + f.get<std::string>() + "'");
        return FieldSpec::rational();
    }
    if (f.is_object()) {
        const json& prime = member(f, "prime", p);
        try {
            return FieldSpec::prime(size_from(prime, p + "/prime"));
        } catch (const Error& e) {
            fail(p + "/prime", e.what());
        }
    }
    fail(p, "expected \"rational\" or {\"prime\": p}");
}

json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return s.residue();
    const BigRational& q = s.rational_value();
    if (denominator(q) == 1 && numerator(q) < kJsonIntLimit && numerator(q) > -kJsonIntLimit) {
        return numerator(q).convert_to<std::int64_t>();
    }
    return s.to_string();
}

Scalar scalar_from_json(const FieldSpec& field, const json& j, const std::string& pointer) {
    try {
        if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
        if (j.is_string()) return field.parse(j.get<std::string>());
    } catch (const Error& e) {
        fail(pointer, e.what());
    }
    fail(pointer, "expected an integer or a scalar string");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.ncols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    json out = field_to_json(m.field());
    out["matrix"] = std::move(rows);
    return out;
}

Matrix matrix_from_json(const json& j, const std::string& pointer) {
    FieldSpec field = field_from_json(j, pointer);
    const json& rows = member(j, "matrix", pointer);
    std::string p = pointer + "/matrix";
    if (!rows.is_array()) fail(p, "expected an array of rows");
    std::vector<std::vector<Scalar>> data;
    data.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string rp = p + "/" + std::to_string(i);
        if (!rows[i].is_array()) fail(rp, "expected a row array");
        std::vector<Scalar> row;
        row.reserve(rows[i].size());
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            row.push_back(scalar_from_json(field, rows[i][c], rp + "/" + std::to_string(c)));
        }
        data.push_back(std::move(row));
    }
    try {
        return Matrix::from_rows(field, data);
    } catch (const Error& e) {
        fail(p, e.what());
    }
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j, const std::string& pointer) {
    std::size_t n = size_from(member(j, "n", pointer), pointer + "/n");
    auto edges = pair_array(member(j, "edges", pointer), pointer + "/edges");
    try {
        return Graph(n, edges);
    } catch (const Error& e) {
        fail(pointer + "/edges", e.what());
    }
}

json poset_to_json(const Poset& p) {
    json pairs = json::array();
    for (auto [a, b] : p.strict_pairs()) pairs.push_back(json::array({a, b}));
    return json{{"n", p.size()}, {"strict_pairs", std::move(pairs)}};
}

Poset poset_from_json(const json& j, const std::string& pointer) {
    std::size_t n = size_from(member(j, "n", pointer), pointer + "/n");
    auto pairs = pair_array(member(j, "strict_pairs", pointer), pointer + "/strict_pairs");
    try {
        return Poset::from_strict_pairs(n, pairs);
    } catch (const Error& e) {
        fail(pointer + "/strict_pairs", e.what());
    }
}

json schedule_to_json(const Schedule& s) {
    return json(s.word());
}

Schedule schedule_from_json(std::size_t vertex_count, const json& j, const std::string& pointer) {
    std::vector<std::size_t> word;
    if (j.is_string()) {
        for (char c : j.get<std::string>()) {
            if (c < '0' || c > '9') fail(pointer, "schedule digit strings may contain only 0-9");
            word.push_back(static_cast<std::size_t>(c - '0'));
        }
    } else {
        word = index_array(j, pointer);
    }
    try {
        return Schedule(vertex_count, std::move(word));
    } catch (const Error& e) {
        fail(pointer, e.what());
    }
}

json system_to_json(const LinearSDS& sds) {
    json out = field_to_json(sds.field());
    out["graph"] = graph_to_json(sds.graph());
    out["matrix"] = matrix_to_json(sds.coefficients())["matrix"];
    out["schedule"] = schedule_to_json(sds.schedule());
    return out;
}

LinearSDS system_from_json(const json& j, const std::string& pointer) {
    Graph g = graph_from_json(member(j, "graph", pointer), pointer + "/graph");
    json matrix_wrapper = {{"field", member(j, "field", pointer)},
                           {"matrix", member(j, "matrix", pointer)}};
    Matrix a = matrix_from_json(matrix_wrapper, pointer);
    Schedule s =
        schedule_from_json(g.vertex_count(), member(j, "schedule", pointer), pointer + "/schedule");
    try {
        return LinearSDS(std::move(g), std::move(a), std::move(s));
    } catch (const Error& e) {
        fail(pointer, e.what());
    }
}

json cut_instance_to_json(const Cut& cut, const FieldSpec& field) {
    json chains = json::array();
    for (const auto& chain : cut.partition().chains()) chains.push_back(json(chain));
    json out = field_to_json(field);
    out["poset"] = poset_to_json(cut.partition().poset());
    out["chains"] = std::move(chains);
    out["cut"] = json(cut.positions());
    return out;
}

std::pair<Cut, FieldSpec> cut_instance_from_json(const json& j, const std::string& pointer) {
    FieldSpec field = field_from_json(j, pointer);
    Poset p = poset_from_json(member(j, "poset", pointer), pointer + "/poset");
    const json& chains_json = member(j, "chains", pointer);
    if (!chains_json.is_array()) fail(pointer + "/chains", "expected an array of chains");
    std::vector<std::vector<std::size_t>> chains;
    for (std::size_t c = 0; c < chains_json.size(); ++c) {
        chains.push_back(index_array(chains_json[c], pointer + "/chains/" + std::to_string(c)));
    }
    std::vector<std::size_t> positions = index_array(member(j, "cut", pointer), pointer + "/cut");
    try {
        return {Cut(ChainPartition(std::move(p), std::move(chains)), std::move(positions)), field};
    } catch (const Error& e) {
        fail(pointer, e.what());
    }
}

json cut_report_to_json(const CutReport& report) {
    json out{
        {"lhs", matrix_to_json(report.lhs)["matrix"]},
        {"rhs", matrix_to_json(report.rhs)["matrix"]},
        {"identity_holds", report.identity_holds},
        {"j_invertible", report.j_invertible},
    };
    if (report.j_invertible) {
        out["lhs_j_free"] = matrix_to_json(*report.lhs_j_free)["matrix"];
        out["rhs_j_free"] = matrix_to_json(*report.rhs_j_free)["matrix"];
        out["j_free_holds"] = report.j_free_holds;
    }
    if (report.via_sds_checked) {
        out["via_sds_agrees"] = report.via_sds_agrees;
    }
    return out;
}

json phase_space_to_json(const PhaseSpace& ps) {
    std::map<std::size_t, std::size_t> length_counts;
    for (const auto& cycle : ps.cycles) ++length_counts[cycle.size()];
    json cycles = json::array();
    for (auto [length, count] : length_counts) {
        cycles.push_back(json{{"length", length}, {"count", count}});
    }
    std::uint64_t p = ps.field.modulus();
    json fixed = json::array();
    for (std::uint64_t s : ps.fixed_points) fixed.push_back(state_label(p, ps.dimension, s));
    return json{
        {"field", field_to_json(ps.field)["field"]},
        {"states", ps.state_count},
        {"cycles", std::move(cycles)},
        {"cycle_states", [&] {
             std::size_t total = 0;
             for (const auto& c : ps.cycles) total += c.size();
             return total;
         }()},
        {"fixed_points", std::move(fixed)},
        {"tail_depth", ps.tail_depth},
    };
}

json lu_factors_to_json(const LUFactors& lu) {
    return json{
        {"lower", matrix_to_json(lu.lower)["matrix"]},
        {"upper", matrix_to_json(lu.upper)["matrix"]},
        {"row_perm", lu.row_perm},
        {"field", field_to_json(lu.lower.field())["field"]},
    };
}

} // namespace linsds
