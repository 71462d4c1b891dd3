#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ciax/ideal.hpp"
#include "ciax/tensor.hpp"

namespace ciax {

inline constexpr std::size_t kDefaultFiberCap = 5'000'000;

class FiberCapExceeded : public std::runtime_error {
  public:
    FiberCapExceeded(std::size_t cap, std::size_t partial);

    std::size_t cap() const { return cap_; }
    std::size_t partial_count() const { return partial_; }

  private:
    std::size_t cap_;
    std::size_t partial_;
};

/// All nonnegative integer tensors with the given multidegree, sorted
/// lexicographically by flattened entries.
struct Fiber {
    Multidegree degree;
    std::vector<ExponentTensor> points;

    std::optional<std::size_t> index_of(const ExponentTensor& u) const;
};

Fiber enumerate_fiber(const Shape& shape, const Multidegree& d,
                      std::size_t cap = kDefaultFiberCap);

/// Partition of a fiber under the moves of an ideal. component[i] labels the
/// connected component of point i in the move graph on all fiber points
/// (labels in first-occurrence order); absorbed[i] marks points divisible by
/// a monomial generator.
struct MoveGraphPartition {
    std::vector<int> component;
    std::vector<bool> absorbed;
    int component_count = 0;
};

MoveGraphPartition move_graph_components(const Fiber& fiber,
                                         const IdealPresentation& ideal);

/// Partition of the non-absorbed points only (moves with both endpoints
/// non-absorbed); absorbed points get label -1.
MoveGraphPartition reduced_move_graph_components(const Fiber& fiber,
                                                 const IdealPresentation& ideal);

/// Dimension of the multidegree-d piece of the quotient ring: components of
/// the move graph after deleting points divisible by a monomial generator.
std::size_t hilbert_value(const IdealPresentation& ideal, const Multidegree& d,
                          std::size_t cap = kDefaultFiberCap);

using PolyTerm = std::pair<Rat, ExponentTensor>;

/// Exact ideal membership for a polynomial given as coefficient/monomial
/// pairs: within every multidegree, coefficients must sum to zero on each
/// non-absorbed move-graph component (absorbed monomials lie in the ideal
/// outright).
bool contains_polynomial(const IdealPresentation& ideal,
                         const std::vector<PolyTerm>& terms,
                         std::size_t cap = kDefaultFiberCap);

/// Degree-d monomials of the initial ideal: points divisible by a monomial
/// generator, plus every point that is not the term-order minimum of its
/// component. The complement are the standard monomials.
std::vector<ExponentTensor> initial_piece(const IdealPresentation& ideal,
                                          const Multidegree& d,
                                          std::size_t cap = kDefaultFiberCap);

/// Same, as indices into a fiber already at hand.
std::vector<std::size_t> initial_piece_indices(const Fiber& fiber,
                                               const IdealPresentation& ideal);

}  // namespace ciax
