#include "ciax/variety.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ciax/fiber.hpp"
#include "union_find.hpp"

namespace ciax {

namespace {

Rat pow_rat(const Rat& base, const Int& exponent) {
    if (exponent < 0) throw std::invalid_argument("pow_rat: negative exponent");
    if (!exponent.fits_ulong_p()) {
        throw std::invalid_argument("pow_rat: exponent too large to evaluate");
    }
    Rat out(1);
    for (unsigned long e = exponent.get_ui(); e > 0; --e) out *= base;
    return out;
}

Rat evaluate_monomial(const Point& p, const ExponentTensor& u) {
    Rat out(1);
    for (std::size_t t = 0; t < u.entries().size(); ++t) {
        const Int& e = u.entries()[t];
        if (e == 0) continue;
        out *= pow_rat(p.entries[t], e);
    }
    return out;
}

}  // namespace

Point sample_generic_point(const AdmissibleGraph& g, int r1, unsigned long seed) {
    if (r1 < 2) {
        throw std::invalid_argument("sample_generic_point: r1 must be at least 2");
    }
    std::mt19937_64 rng(seed);
    long range_max = 97;
    const std::size_t blocks = g.components().size();

    // Direction vectors, redrawn until pairwise non-proportional; the range
    // widens after every 100 failed rounds.
    std::vector<std::vector<Rat>> directions;
    int retries = 0;
    while (true) {
        std::uniform_int_distribution<long> coeff(1, range_max);
        directions.clear();
        for (std::size_t t = 0; t < blocks; ++t) {
            std::vector<Rat> v(static_cast<std::size_t>(r1));
            for (Rat& x : v) x = Rat(coeff(rng));
            directions.push_back(std::move(v));
        }
        bool ok = true;
        for (std::size_t s = 0; s < blocks && ok; ++s) {
            for (std::size_t t = s + 1; t < blocks && ok; ++t) {
                if (proportional(directions[s], directions[t])) ok = false;
            }
        }
        if (ok) break;
        if (++retries % 100 == 0) range_max *= 2;
    }

    std::uniform_int_distribution<long> coeff(1, range_max);
    const Shape shape(r1, g.left_size(), g.right_size());
    Point p(shape);
    for (std::size_t t = 0; t < blocks; ++t) {
        const AdmissibleGraph::Block& b = g.components()[t];
        for (int j : b.J) {
            for (int k : b.K) {
                const Rat lambda(coeff(rng));
                for (int i = 1; i <= r1; ++i) {
                    p.set({i, j, k}, lambda * directions[t][static_cast<std::size_t>(i - 1)]);
                }
            }
        }
    }

    // The sample must satisfy its own presentation exactly.
    for (const Rat& residual : evaluate_generators(p, generators_component(g, r1))) {
        if (residual != 0) {
            throw std::logic_error("sample_generic_point: generator residual nonzero");
        }
    }
    return p;
}

std::vector<Rat> evaluate_generators(const Point& p, const IdealPresentation& ideal) {
    require_same_shape(p.shape, ideal.shape, "evaluate_generators");
    std::vector<Rat> out;
    out.reserve(ideal.monomials.size() + ideal.binomials.size());
    for (const VarIndex& v : ideal.monomials) out.push_back(p.at(v));
    for (const Binomial& b : ideal.binomials) {
        out.push_back(evaluate_monomial(p, b.plus()) - evaluate_monomial(p, b.minus()));
    }
    return out;
}

namespace {

bool vanishes(const Point& p, const IdealPresentation& ideal) {
    const std::vector<Rat> residuals = evaluate_generators(p, ideal);
    return std::all_of(residuals.begin(), residuals.end(),
                       [](const Rat& r) { return r == 0; });
}

}  // namespace

LocateReport locate_point_report(const Point& p) {
    const Shape& shape = p.shape;
    LocateReport report;
    report.on_variety = vanishes(p, generators_intersection_model(shape));

    const std::vector<AdmissibleGraph> all = enumerate_admissible(shape.r2, shape.r3);

    // Direct rule: exact evaluation of every generator of P_G.
    for (const AdmissibleGraph& g : all) {
        if (vanishes(p, generators_component(g, shape.r1))) report.direct.push_back(g);
    }

    // Support-graph rule: G ⊇ G(p), and G unites two components of G(p) only
    // when all their column vectors are pairwise proportional.
    const BipartiteGraph support = graph_of_point(p);
    const ComponentSplit split = connected_components(support);
    std::vector<std::vector<Edge>> support_components;
    for (const GraphComponent& c : split.components) support_components.push_back(c.edges);

    auto support_component_map = [&](const AdmissibleGraph& g) {
        // Index of the g-block containing each support component (support
        // edges all lie in g when G ⊇ G(p)).
        std::vector<std::size_t> block_of(support_components.size());
        for (std::size_t c = 0; c < support_components.size(); ++c) {
            const Edge e = support_components[c].front();
            for (std::size_t t = 0; t < g.components().size(); ++t) {
                const auto& b = g.components()[t];
                if (std::binary_search(b.J.begin(), b.J.end(), e.first)) {
                    block_of[c] = t;
                    break;
                }
            }
        }
        return block_of;
    };

    auto cross_proportional = [&](const std::vector<Edge>& a, const std::vector<Edge>& b) {
        for (const Edge& ea : a) {
            const std::vector<Rat> va = column_vector(p, ea.first, ea.second);
            for (const Edge& eb : b) {
                if (!proportional(va, column_vector(p, eb.first, eb.second))) {
                    return false;
                }
            }
        }
        return true;
    };

    for (const AdmissibleGraph& g : all) {
        const bool contains_support =
            std::all_of(support.edges().begin(), support.edges().end(),
                        [&](const Edge& e) { return g.has_edge(e.first, e.second); });
        if (!contains_support) continue;
        const std::vector<std::size_t> block_of = support_component_map(g);

        bool closing_ok = true;
        bool refinement_ok = true;
        for (std::size_t c = 0; c < support_components.size(); ++c) {
            for (std::size_t c2 = c + 1; c2 < support_components.size(); ++c2) {
                if (block_of[c] != block_of[c2]) continue;
                refinement_ok = false;  // united two edge-bearing components
                if (closing_ok &&
                    !cross_proportional(support_components[c], support_components[c2])) {
                    closing_ok = false;
                }
            }
        }
        if (closing_ok) report.closing_rule.push_back(g);
        if (refinement_ok) report.refinement.push_back(g);
    }

    report.rules_agree = report.direct == report.closing_rule;
    return report;
}

std::vector<AdmissibleGraph> locate_point(const Point& p) {
    LocateReport report = locate_point_report(p);
    if (report.on_variety && !report.rules_agree) {
        throw std::logic_error(
            "locate_point: direct and support-graph rules disagree on a model point");
    }
    return std::move(report.direct);
}

IrredundanceWitness irredundance_witness(const AdmissibleGraph& g,
                                         const AdmissibleGraph& g2, int r1,
                                         unsigned long seed) {
    if (g == g2) {
        throw std::invalid_argument("irredundance_witness: graphs must differ");
    }
    const Point p = sample_generic_point(g, r1, seed);
    const std::vector<Rat> residuals =
        evaluate_generators(p, generators_component(g2, r1));
    for (std::size_t idx = 0; idx < residuals.size(); ++idx) {
        if (residuals[idx] != 0) return IrredundanceWitness{p, idx, residuals[idx]};
    }
    // A generic point of V(P_G) violates either a vanished-edge variable or a
    // cross-component minor of P_{G2}; reaching here means the sample was not
    // generic, which the sampler rules out.
    throw std::logic_error("irredundance_witness: no violated generator found");
}

}  // namespace ciax
