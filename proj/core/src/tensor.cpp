#include "ciax/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ciax {

ExponentTensor::ExponentTensor(const Shape& shape)
    : shape_(shape), entries_(shape.var_count(), Int(0)) {}

ExponentTensor::ExponentTensor(const Shape& shape, std::vector<Int> entries)
    : shape_(shape), entries_(std::move(entries)) {
    if (entries_.size() != shape_.var_count()) {
        throw std::invalid_argument("exponent tensor: wrong entry count for shape");
    }
    for (const Int& e : entries_) {
        if (e < 0) throw std::invalid_argument("exponent tensor: negative entry");
    }
}

ExponentTensor ExponentTensor::unit(const Shape& shape, const VarIndex& v) {
    ExponentTensor u(shape);
    u.entries_[flat_index(shape, v)] = 1;
    return u;
}

const Int& ExponentTensor::at(const VarIndex& v) const {
    return entries_[flat_index(shape_, v)];
}

void ExponentTensor::set(const VarIndex& v, Int value) {
    if (value < 0) throw std::invalid_argument("exponent tensor: negative entry");
    entries_[flat_index(shape_, v)] = std::move(value);
}

Int ExponentTensor::total_degree() const {
    Int sum = 0;
    for (const Int& e : entries_) sum += e;
    return sum;
}

bool ExponentTensor::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Int& e) { return e == 0; });
}

bool ExponentTensor::is_squarefree() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Int& e) { return e <= 1; });
}

ExponentTensor& ExponentTensor::operator+=(const ExponentTensor& rhs) {
    require_same_shape(shape_, rhs.shape_, "tensor sum");
    for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += rhs.entries_[t];
    return *this;
}

ExponentTensor ExponentTensor::minus(const ExponentTensor& rhs) const {
    require_same_shape(shape_, rhs.shape_, "tensor difference");
    ExponentTensor out(shape_);
    for (std::size_t t = 0; t < entries_.size(); ++t) {
        out.entries_[t] = entries_[t] - rhs.entries_[t];
        if (out.entries_[t] < 0) {
            throw std::invalid_argument("tensor difference: negative entry");
        }
    }
    return out;
}

bool divides(const ExponentTensor& divisor, const ExponentTensor& target) {
    require_same_shape(divisor.shape(), target.shape(), "divides");
    for (std::size_t t = 0; t < divisor.entries().size(); ++t) {
        if (divisor.entries()[t] > target.entries()[t]) return false;
    }
    return true;
}

bool lex_less_entries(const ExponentTensor& a, const ExponentTensor& b) {
    require_same_shape(a.shape(), b.shape(), "lex compare");
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
}

std::string to_string(const ExponentTensor& u) {
    if (u.is_zero()) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t t = 0; t < u.entries().size(); ++t) {
        const Int& e = u.entries()[t];
        if (e == 0) continue;
        if (!first) out << "*";
        first = false;
        out << var_name(u.shape(), var_at(u.shape(), t));
        if (e > 1) out << "^" << e.get_str();
    }
    return out.str();
}

Multidegree::Multidegree(const Shape& shape, std::vector<Int> rows,
                         std::vector<Int> slices)
    : shape_(shape), rows_(std::move(rows)), slices_(std::move(slices)) {
    if (rows_.size() != static_cast<std::size_t>(shape_.r1) ||
        slices_.size() != shape_.slice_count()) {
        throw std::invalid_argument("multidegree: wrong component count for shape");
    }
    for (const Int& e : rows_) {
        if (e < 0) throw std::invalid_argument("multidegree: negative row sum");
    }
    for (const Int& e : slices_) {
        if (e < 0) throw std::invalid_argument("multidegree: negative slice sum");
    }
}

Multidegree Multidegree::zero(const Shape& shape) {
    return Multidegree(shape, std::vector<Int>(shape.r1, Int(0)),
                       std::vector<Int>(shape.slice_count(), Int(0)));
}

const Int& Multidegree::row(int i) const {
    if (i < 1 || i > shape_.r1) throw std::out_of_range("multidegree row index");
    return rows_[static_cast<std::size_t>(i - 1)];
}

const Int& Multidegree::slice(int j, int k) const {
    if (j < 1 || j > shape_.r2 || k < 1 || k > shape_.r3) {
        throw std::out_of_range("multidegree slice index");
    }
    return slices_[static_cast<std::size_t>(j - 1) * shape_.r3 +
                   static_cast<std::size_t>(k - 1)];
}

Int Multidegree::total_from_rows() const {
    Int sum = 0;
    for (const Int& e : rows_) sum += e;
    return sum;
}

Int Multidegree::total_from_slices() const {
    Int sum = 0;
    for (const Int& e : slices_) sum += e;
    return sum;
}

Multidegree phi(const ExponentTensor& u) {
    const Shape& s = u.shape();
    std::vector<Int> rows(s.r1, Int(0));
    std::vector<Int> slices(s.slice_count(), Int(0));
    for (std::size_t t = 0; t < u.entries().size(); ++t) {
        const Int& e = u.entries()[t];
        if (e == 0) continue;
        const VarIndex v = var_at(s, t);
        rows[static_cast<std::size_t>(v.i - 1)] += e;
        slices[static_cast<std::size_t>(v.j - 1) * s.r3 +
               static_cast<std::size_t>(v.k - 1)] += e;
    }
    return Multidegree(s, std::move(rows), std::move(slices));
}

std::strong_ordering term_cmp(const ExponentTensor& u, const ExponentTensor& v) {
    require_same_shape(u.shape(), v.shape(), "term_cmp");
    const Int du = u.total_degree();
    const Int dv = v.total_degree();
    if (du != dv) return du < dv ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    // Degree-reverse-lex: scan from the smallest variable p_{111} upward; at
    // the first difference, the monomial with the smaller exponent is the
    // larger one. Flat storage order is the lex order on (i,j,k).
    for (std::size_t t = 0; t < u.entries().size(); ++t) {
        const Int& a = u.entries()[t];
        const Int& b = v.entries()[t];
        if (a != b) {
            return a > b ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace ciax
