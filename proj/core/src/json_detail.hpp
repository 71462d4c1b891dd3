#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ciax/graph.hpp"
#include "ciax/ideal.hpp"
#include "ciax/point.hpp"
#include "ciax/staircase.hpp"
#include "ciax/tensor.hpp"

// Serializers shared between json_io.cpp and verify.cpp. Entries are plain
// JSON integers while they fit in 64 bits and decimal strings beyond that;
// counts are always decimal strings.

namespace ciax::detail {

using nlohmann::json;

inline json int_to_json(const Int& value) {
    if (value.fits_slong_p()) return json(value.get_si());
    return json(value.get_str());
}

inline json entries_to_json(const std::vector<Int>& entries) {
    json out = json::array();
    for (const Int& e : entries) out.push_back(int_to_json(e));
    return out;
}

inline json shape_json(const Shape& s) { return json::array({s.r1, s.r2, s.r3}); }

inline json tensor_json(const ExponentTensor& u) {
    return json{{"shape", shape_json(u.shape())},
                {"entries", entries_to_json(u.entries())}};
}

inline json multidegree_json(const Multidegree& d) {
    json slices = json::array();
    for (int j = 1; j <= d.shape().r2; ++j) {
        json row = json::array();
        for (int k = 1; k <= d.shape().r3; ++k) row.push_back(int_to_json(d.slice(j, k)));
        slices.push_back(std::move(row));
    }
    return json{{"shape", shape_json(d.shape())},
                {"rows", entries_to_json(d.rows())},
                {"slices", std::move(slices)}};
}

inline json graph_json(const BipartiteGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.first, e.second}));
    return json{{"left", g.left_size()}, {"right", g.right_size()},
                {"edges", std::move(edges)}};
}

inline json admissible_json(const AdmissibleGraph& g) {
    json out = graph_json(g.graph());
    json comps = json::array();
    for (const AdmissibleGraph::Block& b : g.components()) {
        comps.push_back(json{{"J", b.J}, {"K", b.K}});
    }
    out["components"] = std::move(comps);
    return out;
}

inline json var_json(const VarIndex& v) { return json::array({v.i, v.j, v.k}); }

inline json point_json(const Point& p) {
    json entries = json::array();
    for (const Rat& x : p.entries) entries.push_back(x.get_str());
    return json{{"shape", shape_json(p.shape)}, {"entries", std::move(entries)}};
}

inline json ideal_json(const IdealPresentation& ideal) {
    json monomials = json::array();
    for (const VarIndex& v : ideal.monomials) monomials.push_back(var_json(v));
    json binomials = json::array();
    for (const Binomial& b : ideal.binomials) {
        binomials.push_back(json{{"plus", entries_to_json(b.plus().entries())},
                                 {"minus", entries_to_json(b.minus().entries())}});
    }
    json groups = json::array();
    for (const auto& group : ideal.component_groups) groups.push_back(group);
    return json{{"shape", shape_json(ideal.shape)},
                {"monomials", std::move(monomials)},
                {"binomials", std::move(binomials)},
                {"components", std::move(groups)}};
}

inline json primes_json(const std::vector<MonomialPrime>& primes) {
    json out = json::array();
    for (const MonomialPrime& prime : primes) {
        json vars = json::array();
        for (const VarIndex& v : prime.variables) vars.push_back(var_json(v));
        out.push_back(std::move(vars));
    }
    return out;
}

}  // namespace ciax::detail
