#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ciax/graph.hpp"
#include "ciax/ideal.hpp"
#include "ciax/tensor.hpp"

namespace ciax {

/// Monotone lattice path through an r x s matrix from cell (1,1) to (r,s)
/// taking unit steps right or down; length r + s - 1.
struct StaircasePath {
    int rows = 1;
    int cols = 1;
    std::vector<std::pair<int, int>> cells;  // (row, col), 1-based, in path order

    friend bool operator==(const StaircasePath&, const StaircasePath&) = default;
};

/// All C(r+s-2, r-1) staircase paths, in a fixed order (step strings
/// enumerated with "down" before "right").
std::vector<StaircasePath> staircase_paths(int rows, int cols);

/// Ideal generated by a set of variables. The empty set stands for the zero
/// ideal (every monomial trivially meets it).
struct MonomialPrime {
    std::vector<VarIndex> variables;  // sorted

    bool contains_divisor_of(const ExponentTensor& u) const;

    friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
};

/// Membership of p^u in the initial ideal of P_G by the combinatorial rule:
/// divisible by a variable off the edge set, or by p_{ij'k'} p_{i'jk} with
/// i < i' and (j,k) < (j',k') lex, both edges in one component. Returns the
/// witnessing (squarefree) divisor.
std::optional<ExponentTensor> in_PG_witness(const AdmissibleGraph& g, int r1,
                                            const ExponentTensor& u);
bool in_PG_contains(const AdmissibleGraph& g, int r1, const ExponentTensor& u);

/// Same rule on an arbitrary bipartite graph (non-edges as variables, the
/// divisibility rule per connected component).
std::optional<ExponentTensor> in_PG_witness_general(const BipartiteGraph& g, int r1,
                                                    const ExponentTensor& u);
bool in_PG_contains_general(const BipartiteGraph& g, int r1,
                            const ExponentTensor& u);

/// Primary decomposition of the initial ideal of P_G: one prime per tuple of
/// staircase paths, one path through each component's r1 x |edges| matrix.
/// Each prime holds the off-edge variables plus the variables off its paths.
std::vector<MonomialPrime> sr_primary_decomposition(const AdmissibleGraph& g, int r1);

}  // namespace ciax
