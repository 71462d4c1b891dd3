#pragma once

#include <cstddef>
#include <vector>

#include "ciax/graph.hpp"
#include "ciax/ideal.hpp"
#include "ciax/point.hpp"

namespace ciax {

/// Deterministic generic point of V(P_G): per component a nonzero direction
/// vector and a nonzero scalar per edge, directions pairwise non-proportional
/// across components. Requires r1 >= 2.
Point sample_generic_point(const AdmissibleGraph& g, int r1, unsigned long seed);

/// One exact residual per generator, monomials first then binomials; all-zero
/// iff the point lies on the variety of the presentation.
std::vector<Rat> evaluate_generators(const Point& p, const IdealPresentation& ideal);

struct LocateReport {
    /// Graphs G with p ∈ V(P_G), decided by exact generator evaluation.
    std::vector<AdmissibleGraph> direct;
    /// Graphs passing the support-graph rule: G ⊇ G(p) and G never unites two
    /// components of G(p) carrying non-proportional vectors.
    std::vector<AdmissibleGraph> closing_rule;
    /// The refinement claimed for p in U_{G(p)}: G adds only edges that do not
    /// unite two edge-bearing components of G(p). Tested empirically.
    std::vector<AdmissibleGraph> refinement;
    bool on_variety = false;   // every generator of the model ideal vanishes
    bool rules_agree = false;  // direct == closing_rule
};

LocateReport locate_point_report(const Point& p);

/// The components containing p. Throws std::logic_error if the direct rule
/// and the support-graph rule disagree on a point of the model variety.
std::vector<AdmissibleGraph> locate_point(const Point& p);

struct IrredundanceWitness {
    Point point;                      // a generic point of V(P_G)
    std::size_t generator_index;      // generator of P_{G2} with nonzero residual
    Rat residual;
};

/// Witness that V(P_G) is not contained in V(P_{G2}).
IrredundanceWitness irredundance_witness(const AdmissibleGraph& g,
                                         const AdmissibleGraph& g2, int r1,
                                         unsigned long seed);

}  // namespace ciax
