#include "ciax/shape.hpp"

#include <stdexcept>

namespace ciax {

Shape::Shape(int r1_, int r2_, int r3_) : r1(r1_), r2(r2_), r3(r3_) {
    if (r1 < 1 || r2 < 1 || r3 < 1) {
        throw std::invalid_argument("shape: level counts must be positive");
    }
}

bool in_bounds(const Shape& s, const VarIndex& v) {
    return v.i >= 1 && v.i <= s.r1 && v.j >= 1 && v.j <= s.r2 && v.k >= 1 &&
           v.k <= s.r3;
}

std::size_t flat_index(const Shape& s, const VarIndex& v) {
    if (!in_bounds(s, v)) {
        throw std::out_of_range("variable index out of bounds for shape");
    }
    return (static_cast<std::size_t>(v.i - 1) * s.r2 +
            static_cast<std::size_t>(v.j - 1)) *
               s.r3 +
           static_cast<std::size_t>(v.k - 1);
}

VarIndex var_at(const Shape& s, std::size_t flat) {
    if (flat >= s.var_count()) {
        throw std::out_of_range("flat index out of bounds for shape");
    }
    const int k = static_cast<int>(flat % s.r3);
    const int j = static_cast<int>((flat / s.r3) % s.r2);
    const int i = static_cast<int>(flat / (static_cast<std::size_t>(s.r2) * s.r3));
    return VarIndex{i + 1, j + 1, k + 1};
}

std::string var_name(const Shape& s, const VarIndex& v) {
    const bool compact = s.r1 <= 9 && s.r2 <= 9 && s.r3 <= 9;
    const char* sep = compact ? "" : ",";
    return "p_{" + std::to_string(v.i) + sep + std::to_string(v.j) + sep +
           std::to_string(v.k) + "}";
}

void require_same_shape(const Shape& a, const Shape& b, const char* what) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
    }
}

}  // namespace ciax
