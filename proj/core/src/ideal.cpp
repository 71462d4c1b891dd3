#include "ciax/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace ciax {

Binomial::Binomial(ExponentTensor a, ExponentTensor b)
    : plus_(std::move(a)), minus_(std::move(b)) {
    require_same_shape(plus_.shape(), minus_.shape(), "binomial");
    if (plus_ == minus_) {
        throw std::invalid_argument("binomial: the two monomials coincide");
    }
    if (!(phi(plus_) == phi(minus_))) {
        throw std::invalid_argument("binomial: monomials have different multidegrees");
    }
    if (term_cmp(plus_, minus_) == std::strong_ordering::less) {
        std::swap(plus_, minus_);
    }
}

namespace {

Binomial minor_binomial(const Shape& s, int i, int i2, Edge low, Edge high) {
    // Diagonal p_{i,low} p_{i2,high} minus antidiagonal p_{i,high} p_{i2,low};
    // the constructor puts the term-order leader (the antidiagonal) in plus.
    ExponentTensor diag = ExponentTensor::unit(s, {i, low.first, low.second}) +
                          ExponentTensor::unit(s, {i2, high.first, high.second});
    ExponentTensor anti = ExponentTensor::unit(s, {i, high.first, high.second}) +
                          ExponentTensor::unit(s, {i2, low.first, low.second});
    return Binomial(std::move(diag), std::move(anti));
}

}  // namespace

IdealPresentation generators_intersection_model(const Shape& shape) {
    IdealPresentation out;
    out.shape = shape;
    // X1 ⫫ X2 | X3: minors of each fixed-k slice.
    for (int k = 1; k <= shape.r3; ++k) {
        for (int i = 1; i <= shape.r1; ++i) {
            for (int i2 = i + 1; i2 <= shape.r1; ++i2) {
                for (int j = 1; j <= shape.r2; ++j) {
                    for (int j2 = j + 1; j2 <= shape.r2; ++j2) {
                        out.binomials.push_back(
                            minor_binomial(shape, i, i2, {j, k}, {j2, k}));
                    }
                }
            }
        }
    }
    // X1 ⫫ X3 | X2: minors of each fixed-j slice.
    for (int j = 1; j <= shape.r2; ++j) {
        for (int i = 1; i <= shape.r1; ++i) {
            for (int i2 = i + 1; i2 <= shape.r1; ++i2) {
                for (int k = 1; k <= shape.r3; ++k) {
                    for (int k2 = k + 1; k2 <= shape.r3; ++k2) {
                        out.binomials.push_back(
                            minor_binomial(shape, i, i2, {j, k}, {j, k2}));
                    }
                }
            }
        }
    }
    return out;
}

namespace {

IdealPresentation component_presentation(int left, int right,
                                         const std::vector<Edge>& edges,
                                         const std::vector<std::vector<Edge>>& component_edges,
                                         int r1) {
    if (r1 < 1) throw std::invalid_argument("component generators: r1 must be positive");
    const Shape shape(r1, left, right);
    IdealPresentation out;
    out.shape = shape;

    // P^(0): every variable over a non-edge.
    for (int j = 1; j <= left; ++j) {
        for (int k = 1; k <= right; ++k) {
            if (std::binary_search(edges.begin(), edges.end(), Edge{j, k})) continue;
            for (int i = 1; i <= r1; ++i) out.monomials.push_back({i, j, k});
        }
    }

    // P^(1): 2x2 minors of each component's r1 x |edges| matrix, columns the
    // component's edges in lex order.
    for (const std::vector<Edge>& cols : component_edges) {
        std::vector<std::size_t> group;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (std::size_t c2 = c + 1; c2 < cols.size(); ++c2) {
                for (int i = 1; i <= r1; ++i) {
                    for (int i2 = i + 1; i2 <= r1; ++i2) {
                        group.push_back(out.binomials.size());
                        out.binomials.push_back(
                            minor_binomial(shape, i, i2, cols[c], cols[c2]));
                    }
                }
            }
        }
        out.component_groups.push_back(std::move(group));
    }
    return out;
}

}  // namespace

IdealPresentation generators_component(const AdmissibleGraph& g, int r1) {
    std::vector<std::vector<Edge>> component_edges;
    for (const AdmissibleGraph::Block& b : g.components()) {
        std::vector<Edge> cols;
        for (int j : b.J) {
            for (int k : b.K) cols.emplace_back(j, k);
        }
        std::sort(cols.begin(), cols.end());
        component_edges.push_back(std::move(cols));
    }
    return component_presentation(g.left_size(), g.right_size(), g.edge_list(),
                                  component_edges, r1);
}

IdealPresentation generators_component_general(const BipartiteGraph& g, int r1) {
    const ComponentSplit split = connected_components(g);
    std::vector<std::vector<Edge>> component_edges;
    for (const GraphComponent& c : split.components) {
        component_edges.push_back(c.edges);  // already sorted lex
    }
    return component_presentation(g.left_size(), g.right_size(), g.edges(),
                                  component_edges, r1);
}

std::string to_string(const Binomial& b) {
    return to_string(b.plus()) + " - " + to_string(b.minus());
}

}  // namespace ciax
