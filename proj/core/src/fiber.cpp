#include "ciax/fiber.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "union_find.hpp"

namespace ciax {

FiberCapExceeded::FiberCapExceeded(std::size_t cap, std::size_t partial)
    : std::runtime_error("fiber exceeds cap of " + std::to_string(cap) +
                         " points (partial count " + std::to_string(partial) + ")"),
      cap_(cap),
      partial_(partial) {}

std::optional<std::size_t> Fiber::index_of(const ExponentTensor& u) const {
    const auto it = std::lower_bound(points.begin(), points.end(), u, lex_less_entries);
    if (it == points.end() || !(*it == u)) return std::nullopt;
    return static_cast<std::size_t>(it - points.begin());
}

Fiber enumerate_fiber(const Shape& shape, const Multidegree& d, std::size_t cap) {
    require_same_shape(shape, d.shape(), "enumerate_fiber");
    Fiber out{d, {}};
    if (d.total_from_rows() != d.total_from_slices()) return out;

    const std::size_t slice_count = shape.slice_count();
    // Suffix totals of the slice targets, for the per-row budget prune.
    std::vector<Int> suffix(slice_count + 1, Int(0));
    for (std::size_t s = slice_count; s-- > 0;) {
        suffix[s] = suffix[s + 1] + d.slices()[s];
    }

    std::vector<Int> row_budget = d.rows();
    std::vector<Int> entries(shape.var_count(), Int(0));
    const std::size_t r1 = static_cast<std::size_t>(shape.r1);

    auto emit = [&]() {
        if (out.points.size() >= cap) {
            throw FiberCapExceeded(cap, out.points.size());
        }
        out.points.emplace_back(shape, entries);
    };

    // Walk slices (j,k) in row-major order, distributing d_jk over the rows
    // within their remaining budgets.
    auto place = [&](auto&& self, std::size_t slice, std::size_t row,
                     const Int& remaining) -> void {
        if (row + 1 == r1) {
            if (remaining > row_budget[row]) return;
            const std::size_t flat = row * slice_count + slice;
            entries[flat] = remaining;
            row_budget[row] -= remaining;
            self(self, slice + 1, std::size_t(-1), Int(0));
            row_budget[row] += remaining;
            entries[flat] = 0;
            return;
        }
        if (row == std::size_t(-1)) {  // slice finished, move on
            if (slice == slice_count) {
                emit();
                return;
            }
            for (std::size_t i = 0; i < r1; ++i) {
                if (row_budget[i] > suffix[slice]) return;  // budget unspendable
            }
            self(self, slice, 0, d.slices()[slice]);
            return;
        }
        const Int cap_here = std::min(row_budget[row], remaining);
        const std::size_t flat = row * slice_count + slice;
        for (Int a = 0; a <= cap_here; ++a) {
            entries[flat] = a;
            row_budget[row] -= a;
            self(self, slice, row + 1, remaining - a);
            row_budget[row] += a;
        }
        entries[flat] = 0;
    };

    place(place, 0, std::size_t(-1), Int(0));
    std::sort(out.points.begin(), out.points.end(), lex_less_entries);
    return out;
}

namespace {

// Canonical labels in first-occurrence order; skip[i] drops a point entirely
// (label -1).
MoveGraphPartition label_partition(const Fiber& fiber, detail::UnionFind& uf,
                                   const std::vector<bool>& absorbed, bool skip_absorbed) {
    MoveGraphPartition out;
    const std::size_t n = fiber.points.size();
    out.component.assign(n, -1);
    out.absorbed = absorbed;
    std::map<std::size_t, int> root_label;
    for (std::size_t idx = 0; idx < n; ++idx) {
        if (skip_absorbed && absorbed[idx]) continue;
        const std::size_t root = uf.find(idx);
        auto [it, fresh] = root_label.emplace(root, out.component_count);
        if (fresh) ++out.component_count;
        out.component[idx] = it->second;
    }
    return out;
}

std::vector<bool> absorbed_flags(const Fiber& fiber, const IdealPresentation& ideal) {
    const std::size_t n = fiber.points.size();
    std::vector<bool> absorbed(n, false);
    for (std::size_t idx = 0; idx < n; ++idx) {
        for (const VarIndex& v : ideal.monomials) {
            if (fiber.points[idx].at(v) >= 1) {
                absorbed[idx] = true;
                break;
            }
        }
    }
    return absorbed;
}

detail::UnionFind unite_moves(const Fiber& fiber, const IdealPresentation& ideal,
                              const std::vector<bool>& absorbed, bool skip_absorbed) {
    const std::size_t n = fiber.points.size();
    detail::UnionFind uf(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        if (skip_absorbed && absorbed[idx]) continue;
        const ExponentTensor& u = fiber.points[idx];
        for (const Binomial& b : ideal.binomials) {
            if (!divides(b.plus(), u)) continue;
            const ExponentTensor v = u.minus(b.plus()) + b.minus();
            const auto other = fiber.index_of(v);
            if (!other) continue;  // inhomogeneous generator, no move here
            if (skip_absorbed && absorbed[*other]) continue;
            uf.unite(idx, *other);
        }
    }
    return uf;
}

}  // namespace

MoveGraphPartition move_graph_components(const Fiber& fiber,
                                         const IdealPresentation& ideal) {
    require_same_shape(fiber.degree.shape(), ideal.shape, "move_graph_components");
    const std::vector<bool> absorbed = absorbed_flags(fiber, ideal);
    detail::UnionFind uf = unite_moves(fiber, ideal, absorbed, false);
    return label_partition(fiber, uf, absorbed, false);
}

MoveGraphPartition reduced_move_graph_components(const Fiber& fiber,
                                                 const IdealPresentation& ideal) {
    require_same_shape(fiber.degree.shape(), ideal.shape, "move_graph_components");
    const std::vector<bool> absorbed = absorbed_flags(fiber, ideal);
    detail::UnionFind uf = unite_moves(fiber, ideal, absorbed, true);
    return label_partition(fiber, uf, absorbed, true);
}

std::size_t hilbert_value(const IdealPresentation& ideal, const Multidegree& d,
                          std::size_t cap) {
    const Fiber fiber = enumerate_fiber(ideal.shape, d, cap);
    const MoveGraphPartition part = reduced_move_graph_components(fiber, ideal);
    return static_cast<std::size_t>(part.component_count);
}

bool contains_polynomial(const IdealPresentation& ideal,
                         const std::vector<PolyTerm>& terms, std::size_t cap) {
    // Collect per multidegree, merging repeated monomials.
    std::map<std::vector<Int>, std::map<std::vector<Int>, Rat>> groups;
    for (const PolyTerm& term : terms) {
        if (term.first == 0) continue;
        require_same_shape(ideal.shape, term.second.shape(), "contains_polynomial");
        const Multidegree d = phi(term.second);
        std::vector<Int> key = d.rows();
        key.insert(key.end(), d.slices().begin(), d.slices().end());
        groups[std::move(key)][term.second.entries()] += term.first;
    }

    for (const auto& [key, monomials] : groups) {
        std::vector<Int> rows(key.begin(), key.begin() + ideal.shape.r1);
        std::vector<Int> slices(key.begin() + ideal.shape.r1, key.end());
        const Multidegree d(ideal.shape, std::move(rows), std::move(slices));
        const Fiber fiber = enumerate_fiber(ideal.shape, d, cap);
        const MoveGraphPartition part = reduced_move_graph_components(fiber, ideal);

        std::map<int, Rat> component_sum;
        for (const auto& [entries, coeff] : monomials) {
            if (coeff == 0) continue;
            const auto idx = fiber.index_of(ExponentTensor(ideal.shape, entries));
            if (!idx) return false;  // unreachable for well-formed input
            if (part.absorbed[*idx]) continue;
            component_sum[part.component[*idx]] += coeff;
        }
        for (const auto& [label, sum] : component_sum) {
            if (sum != 0) return false;
        }
    }
    return true;
}

std::vector<std::size_t> initial_piece_indices(const Fiber& fiber,
                                               const IdealPresentation& ideal) {
    const MoveGraphPartition part = reduced_move_graph_components(fiber, ideal);
    // Term-order minimum per component; everything else is a leading term.
    std::map<int, std::size_t> minimum;
    for (std::size_t idx = 0; idx < fiber.points.size(); ++idx) {
        if (part.absorbed[idx]) continue;
        const int label = part.component[idx];
        auto [it, fresh] = minimum.emplace(label, idx);
        if (!fresh && term_cmp(fiber.points[idx], fiber.points[it->second]) ==
                          std::strong_ordering::less) {
            it->second = idx;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t idx = 0; idx < fiber.points.size(); ++idx) {
        if (part.absorbed[idx] || minimum.at(part.component[idx]) != idx) {
            out.push_back(idx);
        }
    }
    return out;
}

std::vector<ExponentTensor> initial_piece(const IdealPresentation& ideal,
                                          const Multidegree& d, std::size_t cap) {
    const Fiber fiber = enumerate_fiber(ideal.shape, d, cap);
    std::vector<ExponentTensor> out;
    for (std::size_t idx : initial_piece_indices(fiber, ideal)) {
        out.push_back(fiber.points[idx]);
    }
    return out;
}

}  // namespace ciax
