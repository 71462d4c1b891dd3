#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ciax/numeric.hpp"
#include "ciax/shape.hpp"

namespace ciax {

/// Nonnegative integer exponent table u = (u_ijk) of a monomial p^u.
class ExponentTensor {
  public:
    explicit ExponentTensor(const Shape& shape);
    ExponentTensor(const Shape& shape, std::vector<Int> entries);

    static ExponentTensor unit(const Shape& shape, const VarIndex& v);

    const Shape& shape() const { return shape_; }
    const std::vector<Int>& entries() const { return entries_; }

    const Int& at(const VarIndex& v) const;
    const Int& at(int i, int j, int k) const { return at(VarIndex{i, j, k}); }
    void set(const VarIndex& v, Int value);

    Int total_degree() const;
    bool is_zero() const;
    bool is_squarefree() const;  // every entry <= 1

    ExponentTensor& operator+=(const ExponentTensor& rhs);
    friend ExponentTensor operator+(ExponentTensor lhs, const ExponentTensor& rhs) {
        lhs += rhs;
        return lhs;
    }
    /// Entrywise difference; throws if any entry would go negative.
    ExponentTensor minus(const ExponentTensor& rhs) const;

    friend bool operator==(const ExponentTensor&, const ExponentTensor&) = default;

  private:
    Shape shape_;
    std::vector<Int> entries_;
};

/// True when every entry of divisor is <= the matching entry of target,
/// i.e. p^divisor divides p^target.
bool divides(const ExponentTensor& divisor, const ExponentTensor& target);

/// Plain lexicographic order on the flattened entries (used for canonical
/// fiber listings, not a term order).
bool lex_less_entries(const ExponentTensor& a, const ExponentTensor& b);

std::string to_string(const ExponentTensor& u);  // "p_{111}^2*p_{222}" style

/// Minimal sufficient statistics of a monomial: r1 row sums d_i and
/// r2 x r3 slice sums d_jk.
class Multidegree {
  public:
    Multidegree() : rows_(1, Int(0)), slices_(1, Int(0)) {}
    Multidegree(const Shape& shape, std::vector<Int> rows, std::vector<Int> slices);

    static Multidegree zero(const Shape& shape);

    const Shape& shape() const { return shape_; }
    const std::vector<Int>& rows() const { return rows_; }
    const std::vector<Int>& slices() const { return slices_; }

    const Int& row(int i) const;
    const Int& slice(int j, int k) const;

    Int total_from_rows() const;
    Int total_from_slices() const;
    /// Row sums and slice sums add up to the same total degree.
    bool consistent() const { return total_from_rows() == total_from_slices(); }

    friend bool operator==(const Multidegree&, const Multidegree&) = default;

  private:
    Shape shape_;
    std::vector<Int> rows_;    // size r1
    std::vector<Int> slices_;  // size r2*r3, row-major (j, k)
};

/// The grading map: rows[i] = sum_{j,k} u_ijk, slices[j][k] = sum_i u_ijk.
Multidegree phi(const ExponentTensor& u);

/// The term order: total degree first, ties broken degree-reverse-
/// lexicographically with p_{ijk} of lexicographically larger (i,j,k) the
/// larger variable. Under this order the antidiagonal monomial of every
/// 2x2 minor compares Greater than the diagonal one.
std::strong_ordering term_cmp(const ExponentTensor& u, const ExponentTensor& v);

}  // namespace ciax
