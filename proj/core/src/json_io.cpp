#include "ciax/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "json_detail.hpp"

namespace ciax {

namespace {

using detail::json;

json parse_text(const std::string& text, const char* what) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) {
        throw std::invalid_argument(std::string(what) + ": malformed JSON");
    }
    return parsed;
}

Int int_from_json(const json& value, const char* what) {
    if (value.is_number_integer()) return Int(value.get<long>());
    if (value.is_string()) return Int(value.get<std::string>());
    throw std::invalid_argument(std::string(what) + ": expected integer");
}

std::vector<Int> entries_from_json(const json& value, const char* what) {
    if (!value.is_array()) {
        throw std::invalid_argument(std::string(what) + ": expected array");
    }
    std::vector<Int> out;
    out.reserve(value.size());
    for (const json& e : value) out.push_back(int_from_json(e, what));
    return out;
}

Shape shape_from_json(const json& value, const char* what) {
    if (!value.is_array() || value.size() != 3) {
        throw std::invalid_argument(std::string(what) + ": shape must be [r1,r2,r3]");
    }
    return Shape(value[0].get<int>(), value[1].get<int>(), value[2].get<int>());
}

VarIndex var_from_json(const json& value, const char* what) {
    if (!value.is_array() || value.size() != 3) {
        throw std::invalid_argument(std::string(what) + ": variable must be [i,j,k]");
    }
    return VarIndex{value[0].get<int>(), value[1].get<int>(), value[2].get<int>()};
}

}  // namespace

std::string to_json(const ExponentTensor& u) { return detail::tensor_json(u).dump(); }

ExponentTensor tensor_from_json(const std::string& text) {
    const json parsed = parse_text(text, "tensor");
    const Shape shape = shape_from_json(parsed.at("shape"), "tensor");
    return ExponentTensor(shape, entries_from_json(parsed.at("entries"), "tensor"));
}

std::string to_json(const Multidegree& d) { return detail::multidegree_json(d).dump(); }

Multidegree multidegree_from_json(const std::string& text) {
    const json parsed = parse_text(text, "multidegree");
    const Shape shape = shape_from_json(parsed.at("shape"), "multidegree");
    std::vector<Int> rows = entries_from_json(parsed.at("rows"), "multidegree");
    const json& slice_rows = parsed.at("slices");
    if (!slice_rows.is_array() || slice_rows.size() != static_cast<std::size_t>(shape.r2)) {
        throw std::invalid_argument("multidegree: slices must have r2 rows");
    }
    std::vector<Int> slices;
    for (const json& row : slice_rows) {
        std::vector<Int> parsed_row = entries_from_json(row, "multidegree");
        if (parsed_row.size() != static_cast<std::size_t>(shape.r3)) {
            throw std::invalid_argument("multidegree: slice rows must have r3 entries");
        }
        slices.insert(slices.end(), parsed_row.begin(), parsed_row.end());
    }
    return Multidegree(shape, std::move(rows), std::move(slices));
}

std::string to_json(const BipartiteGraph& g) { return detail::graph_json(g).dump(); }

std::string to_json(const AdmissibleGraph& g) { return detail::admissible_json(g).dump(); }

BipartiteGraph graph_from_json(const std::string& text) {
    const json parsed = parse_text(text, "graph");
    const int left = parsed.at("left").get<int>();
    const int right = parsed.at("right").get<int>();
    std::vector<Edge> edges;
    for (const json& e : parsed.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("graph: edges must be [j,k] pairs");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return BipartiteGraph(left, right, std::move(edges));
}

AdmissibleGraph admissible_from_json(const std::string& text) {
    const json parsed = parse_text(text, "graph");
    const BipartiteGraph g = graph_from_json(text);
    const auto admissible = is_admissible(g);
    if (!admissible) {
        throw std::invalid_argument("graph: not admissible");
    }
    if (parsed.contains("components")) {
        std::vector<AdmissibleGraph::Block> blocks;
        for (const json& c : parsed.at("components")) {
            AdmissibleGraph::Block b;
            b.J = c.at("J").get<std::vector<int>>();
            b.K = c.at("K").get<std::vector<int>>();
            blocks.push_back(std::move(b));
        }
        const AdmissibleGraph declared(g.left_size(), g.right_size(), std::move(blocks));
        if (!(declared == *admissible)) {
            throw std::invalid_argument("graph: declared components do not match edges");
        }
    }
    return *admissible;
}

std::string to_json(const Point& p) { return detail::point_json(p).dump(); }

Point point_from_json(const std::string& text) {
    const json parsed = parse_text(text, "point");
    const Shape shape = shape_from_json(parsed.at("shape"), "point");
    const json& entries = parsed.at("entries");
    if (!entries.is_array() || entries.size() != shape.var_count()) {
        throw std::invalid_argument("point: wrong entry count for shape");
    }
    std::vector<Rat> values;
    values.reserve(entries.size());
    for (const json& e : entries) {
        if (e.is_number_integer()) {
            values.emplace_back(e.get<long>());
            continue;
        }
        if (!e.is_string()) {
            throw std::invalid_argument("point: entries must be \"a/b\" strings");
        }
        Rat value;
        try {
            value = Rat(e.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("point: malformed rational " +
                                        e.get<std::string>());
        }
        if (value.get_den() == 0) {
            throw std::invalid_argument("point: zero denominator");
        }
        value.canonicalize();
        values.push_back(std::move(value));
    }
    return Point(shape, std::move(values));
}

std::string to_json(const IdealPresentation& ideal) {
    return detail::ideal_json(ideal).dump();
}

IdealPresentation ideal_from_json(const std::string& text) {
    const json parsed = parse_text(text, "ideal");
    IdealPresentation out;
    out.shape = shape_from_json(parsed.at("shape"), "ideal");
    for (const json& v : parsed.at("monomials")) {
        const VarIndex var = var_from_json(v, "ideal");
        if (!in_bounds(out.shape, var)) {
            throw std::invalid_argument("ideal: monomial variable out of bounds");
        }
        out.monomials.push_back(var);
    }
    for (const json& b : parsed.at("binomials")) {
        ExponentTensor plus(out.shape, entries_from_json(b.at("plus"), "ideal"));
        ExponentTensor minus(out.shape, entries_from_json(b.at("minus"), "ideal"));
        out.binomials.emplace_back(std::move(plus), std::move(minus));
    }
    if (parsed.contains("components")) {
        for (const json& group : parsed.at("components")) {
            std::vector<std::size_t> indices;
            for (const json& idx : group) {
                const std::size_t value = idx.get<std::size_t>();
                if (value >= out.binomials.size()) {
                    throw std::invalid_argument("ideal: component index out of range");
                }
                indices.push_back(value);
            }
            out.component_groups.push_back(std::move(indices));
        }
    }
    for (std::size_t a = 0; a < out.binomials.size(); ++a) {
        for (std::size_t b = a + 1; b < out.binomials.size(); ++b) {
            if (out.binomials[a] == out.binomials[b]) {
                throw std::invalid_argument("ideal: duplicate binomial generator");
            }
        }
    }
    return out;
}

std::string to_json(const std::vector<MonomialPrime>& primes) {
    return detail::primes_json(primes).dump();
}

std::vector<MonomialPrime> primes_from_json(const std::string& text) {
    const json parsed = parse_text(text, "primes");
    if (!parsed.is_array()) {
        throw std::invalid_argument("primes: expected array of variable lists");
    }
    std::vector<MonomialPrime> out;
    for (const json& vars : parsed) {
        MonomialPrime prime;
        for (const json& v : vars) prime.variables.push_back(var_from_json(v, "primes"));
        std::sort(prime.variables.begin(), prime.variables.end());
        out.push_back(std::move(prime));
    }
    return out;
}

std::string to_json(const Fiber& fiber, const MoveGraphPartition& partition) {
    json points = json::array();
    for (const ExponentTensor& u : fiber.points) {
        points.push_back(detail::entries_to_json(u.entries()));
    }
    json absorbed = json::array();
    for (const bool flag : partition.absorbed) absorbed.push_back(flag);
    return json{{"degree", detail::multidegree_json(fiber.degree)},
                {"points", std::move(points)},
                {"component", partition.component},
                {"absorbed", std::move(absorbed)}}
        .dump();
}

std::string to_json(const VerificationReport& report) {
    json out = json::array();
    for (const CheckResult& check : report.checks) {
        json detail_rows = json::array();
        for (const DetailRow& row : check.detail) {
            detail_rows.push_back(
                json{{"degree", detail::multidegree_json(row.degree)},
                     {"fiber", row.fiber_size},
                     {"hilbert", json{{"model", row.hilbert_model},
                                      {"graph_of_degree", row.hilbert_gd}}},
                     {"initial", json{{"model", row.initial_model},
                                      {"graph_of_degree", row.initial_gd}}}});
        }
        out.push_back(json{
            {"check", check.check},
            {"shape", detail::shape_json(report.shape)},
            {"verdict", check.pass ? "pass" : "fail"},
            {"counterexample", check.counterexample_json.empty()
                                   ? json(nullptr)
                                   : json::parse(check.counterexample_json)},
            {"detail", std::move(detail_rows)}});
    }
    return out.dump(2);
}

}  // namespace ciax
