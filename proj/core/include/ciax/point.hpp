#pragma once

#include <vector>

#include "ciax/numeric.hpp"
#include "ciax/shape.hpp"

namespace ciax {

/// Rational tensor (p_ijk), flat row-major; exact arithmetic throughout.
struct Point {
    Shape shape;
    std::vector<Rat> entries;

    explicit Point(const Shape& s);
    Point(const Shape& s, std::vector<Rat> values);

    const Rat& at(const VarIndex& v) const;
    const Rat& at(int i, int j, int k) const { return at(VarIndex{i, j, k}); }
    void set(const VarIndex& v, Rat value);

    bool is_zero() const;

    friend bool operator==(const Point&, const Point&) = default;
};

/// The length-r1 column vector p_{.jk}.
std::vector<Rat> column_vector(const Point& p, int j, int k);

/// Exact proportionality: all 2x2 minors of the pair vanish (the zero vector
/// is proportional to everything).
bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b);

bool is_zero_vector(const std::vector<Rat>& v);

}  // namespace ciax
