#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace ciax {

/// Level counts (r1, r2, r3) of the three random variables X1, X2, X3.
struct Shape {
    int r1 = 1;
    int r2 = 1;
    int r3 = 1;

    Shape() = default;
    Shape(int r1_, int r2_, int r3_);

    std::size_t var_count() const {
        return static_cast<std::size_t>(r1) * static_cast<std::size_t>(r2) *
               static_cast<std::size_t>(r3);
    }
    std::size_t slice_count() const {
        return static_cast<std::size_t>(r2) * static_cast<std::size_t>(r3);
    }

    friend bool operator==(const Shape&, const Shape&) = default;
};

/// 1-based index (i, j, k) of the indeterminate p_{ijk}.
struct VarIndex {
    int i = 1;
    int j = 1;
    int k = 1;

    friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

bool in_bounds(const Shape& s, const VarIndex& v);

// Flat position in row-major (i, then j, then k) order; this coincides with
// the lexicographic order on the triples (i, j, k).
std::size_t flat_index(const Shape& s, const VarIndex& v);
VarIndex var_at(const Shape& s, std::size_t flat);

/// "p_{123}" while every level count is a single digit, "p_{1,2,3}" otherwise.
std::string var_name(const Shape& s, const VarIndex& v);

void require_same_shape(const Shape& a, const Shape& b, const char* what);

}  // namespace ciax
