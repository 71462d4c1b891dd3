#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ciax/graph.hpp"
#include "ciax/tensor.hpp"

namespace ciax {

/// Pure difference p^plus - p^minus of two monomials with equal multidegree,
/// stored with the term-order-larger monomial in plus.
class Binomial {
  public:
    Binomial(ExponentTensor a, ExponentTensor b);

    const ExponentTensor& plus() const { return plus_; }
    const ExponentTensor& minus() const { return minus_; }

    friend bool operator==(const Binomial&, const Binomial&) = default;

  private:
    ExponentTensor plus_;
    ExponentTensor minus_;
};

/// Generators of a binomial ideal: pure-difference binomials plus degree-1
/// monomial generators (single variables). component_groups lists, per
/// connected component of the defining graph, the indices of the binomials
/// it contributes; it is empty for the ambient model ideal.
struct IdealPresentation {
    Shape shape;
    std::vector<Binomial> binomials;
    std::vector<VarIndex> monomials;
    std::vector<std::vector<std::size_t>> component_groups;
};

/// The two families of 2x2 minors cutting out the conditional independence
/// statements X1 ⫫ X2 | X3 and X1 ⫫ X3 | X2.
IdealPresentation generators_intersection_model(const Shape& shape);

/// P_G = (variables off the edge set) + (2x2 minors over edge pairs within
/// each connected component), for an admissible graph G.
IdealPresentation generators_component(const AdmissibleGraph& g, int r1);

/// Same construction for an arbitrary bipartite graph; used degreewise where
/// admissibility is not required.
IdealPresentation generators_component_general(const BipartiteGraph& g, int r1);

std::string to_string(const Binomial& b);

}  // namespace ciax
