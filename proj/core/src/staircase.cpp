#include "ciax/staircase.hpp"

#include <algorithm>
#include <stdexcept>

namespace ciax {

std::vector<StaircasePath> staircase_paths(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("staircase_paths: matrix sizes must be positive");
    }
    // Step strings over {down, right} with rows-1 downs and cols-1 rights,
    // enumerated with down < right.
    std::vector<StaircasePath> out;
    std::vector<int> steps;  // 0 = down, 1 = right
    steps.reserve(static_cast<std::size_t>(rows + cols - 2));
    auto rec = [&](auto&& self, int downs_left, int rights_left) -> void {
        if (downs_left == 0 && rights_left == 0) {
            StaircasePath path{rows, cols, {}};
            int r = 1, c = 1;
            path.cells.emplace_back(r, c);
            for (int step : steps) {
                if (step == 0) {
                    ++r;
                } else {
                    ++c;
                }
                path.cells.emplace_back(r, c);
            }
            out.push_back(std::move(path));
            return;
        }
        if (downs_left > 0) {
            steps.push_back(0);
            self(self, downs_left - 1, rights_left);
            steps.pop_back();
        }
        if (rights_left > 0) {
            steps.push_back(1);
            self(self, downs_left, rights_left - 1);
            steps.pop_back();
        }
    };
    rec(rec, rows - 1, cols - 1);
    return out;
}

bool MonomialPrime::contains_divisor_of(const ExponentTensor& u) const {
    return std::any_of(variables.begin(), variables.end(),
                       [&](const VarIndex& v) { return u.at(v) >= 1; });
}

namespace {

std::optional<ExponentTensor> witness_impl(int r1, int left, int right,
                                           const std::vector<Edge>& edges,
                                           const std::vector<std::vector<Edge>>& components,
                                           const ExponentTensor& u) {
    const Shape& shape = u.shape();
    require_same_shape(shape, Shape(r1, left, right), "initial-ideal rule");
    // A variable over a non-edge divides u.
    for (int j = 1; j <= shape.r2; ++j) {
        for (int k = 1; k <= shape.r3; ++k) {
            if (std::binary_search(edges.begin(), edges.end(), Edge{j, k})) continue;
            for (int i = 1; i <= r1; ++i) {
                if (u.at(i, j, k) >= 1) {
                    return ExponentTensor::unit(shape, {i, j, k});
                }
            }
        }
    }
    // Antidiagonal pair p_{i,high} p_{i',low} with i < i' and low < high lex,
    // both edges in one component.
    for (const std::vector<Edge>& cols : components) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (std::size_t c2 = c + 1; c2 < cols.size(); ++c2) {
                const Edge low = cols[c];
                const Edge high = cols[c2];
                for (int i = 1; i <= r1; ++i) {
                    if (u.at(i, high.first, high.second) < 1) continue;
                    for (int i2 = i + 1; i2 <= r1; ++i2) {
                        if (u.at(i2, low.first, low.second) >= 1) {
                            return ExponentTensor::unit(shape, {i, high.first, high.second}) +
                                   ExponentTensor::unit(shape, {i2, low.first, low.second});
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ExponentTensor> in_PG_witness(const AdmissibleGraph& g, int r1,
                                            const ExponentTensor& u) {
    std::vector<std::vector<Edge>> components;
    for (const AdmissibleGraph::Block& b : g.components()) {
        std::vector<Edge> cols;
        for (int j : b.J) {
            for (int k : b.K) cols.emplace_back(j, k);
        }
        std::sort(cols.begin(), cols.end());
        components.push_back(std::move(cols));
    }
    return witness_impl(r1, g.left_size(), g.right_size(), g.edge_list(), components, u);
}

bool in_PG_contains(const AdmissibleGraph& g, int r1, const ExponentTensor& u) {
    return in_PG_witness(g, r1, u).has_value();
}

std::optional<ExponentTensor> in_PG_witness_general(const BipartiteGraph& g, int r1,
                                                    const ExponentTensor& u) {
    const ComponentSplit split = connected_components(g);
    std::vector<std::vector<Edge>> components;
    for (const GraphComponent& c : split.components) components.push_back(c.edges);
    return witness_impl(r1, g.left_size(), g.right_size(), g.edges(), components, u);
}

bool in_PG_contains_general(const BipartiteGraph& g, int r1, const ExponentTensor& u) {
    return in_PG_witness_general(g, r1, u).has_value();
}

std::vector<MonomialPrime> sr_primary_decomposition(const AdmissibleGraph& g, int r1) {
    if (r1 < 1) {
        throw std::invalid_argument("sr_primary_decomposition: r1 must be positive");
    }
    const Shape shape(r1, g.left_size(), g.right_size());

    std::vector<VarIndex> off_edge_vars;
    for (int j = 1; j <= g.left_size(); ++j) {
        for (int k = 1; k <= g.right_size(); ++k) {
            if (g.has_edge(j, k)) continue;
            for (int i = 1; i <= r1; ++i) off_edge_vars.push_back({i, j, k});
        }
    }

    struct ComponentChoices {
        std::vector<Edge> cols;
        std::vector<StaircasePath> paths;
    };
    std::vector<ComponentChoices> per_component;
    for (const AdmissibleGraph::Block& b : g.components()) {
        ComponentChoices cc;
        for (int j : b.J) {
            for (int k : b.K) cc.cols.emplace_back(j, k);
        }
        std::sort(cc.cols.begin(), cc.cols.end());
        cc.paths = staircase_paths(r1, static_cast<int>(cc.cols.size()));
        per_component.push_back(std::move(cc));
    }

    // Odometer over one staircase path per component.
    std::vector<MonomialPrime> out;
    std::vector<std::size_t> choice(per_component.size(), 0);
    while (true) {
        MonomialPrime prime;
        prime.variables = off_edge_vars;
        for (std::size_t t = 0; t < per_component.size(); ++t) {
            const ComponentChoices& cc = per_component[t];
            const StaircasePath& path = cc.paths[choice[t]];
            std::vector<bool> on_path(static_cast<std::size_t>(r1) * cc.cols.size(), false);
            for (const auto& [row, col] : path.cells) {
                on_path[static_cast<std::size_t>(row - 1) * cc.cols.size() +
                        static_cast<std::size_t>(col - 1)] = true;
            }
            for (int i = 1; i <= r1; ++i) {
                for (std::size_t c = 0; c < cc.cols.size(); ++c) {
                    if (on_path[static_cast<std::size_t>(i - 1) * cc.cols.size() + c]) {
                        continue;
                    }
                    prime.variables.push_back({i, cc.cols[c].first, cc.cols[c].second});
                }
            }
        }
        std::sort(prime.variables.begin(), prime.variables.end());
        out.push_back(std::move(prime));

        std::size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < per_component[pos].paths.size()) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size()) break;
    }
    return out;
}

}  // namespace ciax
