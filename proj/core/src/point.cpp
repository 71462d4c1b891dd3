#include "ciax/point.hpp"

#include <algorithm>
#include <stdexcept>

namespace ciax {

Point::Point(const Shape& s) : shape(s), entries(s.var_count(), Rat(0)) {}

Point::Point(const Shape& s, std::vector<Rat> values)
    : shape(s), entries(std::move(values)) {
    if (entries.size() != shape.var_count()) {
        throw std::invalid_argument("point: wrong entry count for shape");
    }
}

const Rat& Point::at(const VarIndex& v) const {
    return entries[flat_index(shape, v)];
}

void Point::set(const VarIndex& v, Rat value) {
    entries[flat_index(shape, v)] = std::move(value);
}

bool Point::is_zero() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const Rat& x) { return x == 0; });
}

std::vector<Rat> column_vector(const Point& p, int j, int k) {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(p.shape.r1));
    for (int i = 1; i <= p.shape.r1; ++i) out.push_back(p.at(i, j, k));
    return out;
}

bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("proportional: length mismatch");
    }
    for (std::size_t s = 0; s < a.size(); ++s) {
        for (std::size_t t = s + 1; t < a.size(); ++t) {
            if (a[s] * b[t] - a[t] * b[s] != 0) return false;
        }
    }
    return true;
}

bool is_zero_vector(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace ciax
