#pragma once

#include "tlocus/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tlocus {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
    static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector column(std::size_t c) const;
    void append_row(const RationalVector& row);

    RationalMatrix transpose() const;
    RationalVector operator*(const RationalVector& x) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// A linear subspace of Q^ambient given by linearly independent basis vectors.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    /// Reduces `vectors` to an independent spanning set in canonical form.
    static Subspace span_of(std::size_t ambient, const std::vector<RationalVector>& vectors);
    /// Trusts that `basis` is already independent (used for orthogonalized bases).
    static Subspace from_independent(std::size_t ambient, std::vector<RationalVector> basis);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RationalVector>& basis() const { return basis_; }
    const RationalVector& operator[](std::size_t i) const { return basis_[i]; }

    bool contains(const RationalVector& v) const;
    bool contains(const Subspace& other) const;
    bool same_span(const Subspace& other) const { return dim() == other.dim() && contains(other); }

    /// Basis vectors as rows.
    RationalMatrix as_rows() const { return RationalMatrix::from_rows(basis_, ambient_); }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<RationalVector> basis_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct EchelonForm {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

EchelonForm rref(const RationalMatrix& m);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);
std::size_t rank_of_vectors(const std::vector<RationalVector>& vectors, std::size_t ambient);

/// Basis of {x : Mx = 0} in canonical reduced echelon form (leading entry 1).
Subspace kernel_basis(const RationalMatrix& m);

/// Row space of M, canonical.
Subspace row_space(const RationalMatrix& m);

/// The orthogonal complement of a subspace, canonical.
Subspace orthogonal_complement(const Subspace& s);

/// Some x with Mx = b (free variables set to zero), or nullopt when b is not
/// in the column space.
std::optional<RationalVector> solve_particular(const RationalMatrix& m, const RationalVector& b);

/// Gram-Schmidt without normalization; the result is pairwise orthogonal.
Subspace orthogonalize(const Subspace& s);

/// (<v,b_i>/<b_i,b_i>)_i for an orthogonal basis.
RationalVector coords_in_basis(const RationalVector& v, const Subspace& orthogonal_basis);

/// sum_i c_i b_i
RationalVector combine(const Subspace& basis, const RationalVector& coefficients);

/// Exact determinant (Bareiss on rationals).
Rational determinant(const RationalMatrix& m);

/// Rows scaled by their denominators' lcm and divided by their content:
/// an integer matrix with the same row space, zero rows dropped.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m);

} // namespace tlocus
