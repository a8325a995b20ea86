#include "tlocus/exactla.hpp"

#include "tlocus/detail/integer_kernels.hpp"

#include <stdexcept>
#include <utility>

namespace tlocus {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("from_columns: ragged columns");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void RationalMatrix::append_row(const RationalVector& row) {
    if (rows_ == 0 && cols_ == 0)
        cols_ = row.size();
    if (row.size() != cols_)
        throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RationalVector RationalMatrix::operator*(const RationalVector& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("matrix-vector product: length mismatch");
    RationalVector y = zeros(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0 && x[c] != 0)
                y[r] += (*this)(r, c) * x[c];
    return y;
}

std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        bool nonzero = false;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& x = m(r, c);
            if (x == 0)
                continue;
            nonzero = true;
            if (x.get_den() != 1)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        if (!nonzero)
            continue;
        std::vector<Integer> row(m.cols());
        Integer g = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& x = m(r, c);
            row[c] = x.get_num() * (l / x.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[c].get_mpz_t());
        }
        if (g > 1)
            for (auto& v : row)
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        out.push_back(std::move(row));
    }
    return out;
}

std::size_t rank(const RationalMatrix& m) {
    const auto rows = integer_rows(m);
    if (rows.empty())
        return 0;
    try {
        return detail::bareiss_rank(detail::convert<CheckedInt>(rows, m.cols()));
    } catch (const OverflowError&) {
        return detail::bareiss_rank(detail::convert<Integer>(rows, m.cols()));
    }
}

std::size_t rank_of_vectors(const std::vector<RationalVector>& vectors, std::size_t ambient) {
    return rank(RationalMatrix::from_rows(vectors, ambient));
}

EchelonForm rref(const RationalMatrix& m) {
    // Fraction-free Gauss-Jordan on integer rows; each row is kept primitive
    // (content divided out) and normalized to rationals at the end.
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    auto work = integer_rows(m);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < work.size(); ++c) {
        std::size_t p = r;
        while (p < work.size() && work[p][c] == 0)
            ++p;
        if (p == work.size())
            continue;
        std::swap(work[p], work[r]);
        const Integer pivot = work[r][c];
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == r || work[i][c] == 0)
                continue;
            const Integer factor = work[i][c];
            Integer g = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                work[i][j] = pivot * work[i][j] - factor * work[r][j];
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), work[i][j].get_mpz_t());
            }
            if (g > 1)
                for (auto& v : work[i])
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
        pivots.push_back(c);
        ++r;
    }
    EchelonForm out{RationalMatrix(rows, cols), pivots};
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Integer& lead = work[i][pivots[i]];
        for (std::size_t j = 0; j < cols; ++j) {
            if (work[i][j] == 0)
                continue;
            Rational v(work[i][j], lead);
            v.canonicalize();
            out.reduced(i, j) = v;
        }
    }
    return out;
}

Subspace Subspace::span_of(std::size_t ambient, const std::vector<RationalVector>& vectors) {
    Subspace s(ambient);
    if (vectors.empty())
        return s;
    const EchelonForm e = rref(RationalMatrix::from_rows(vectors, ambient));
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        s.basis_.push_back(e.reduced.row(i));
    return s;
}

Subspace Subspace::from_independent(std::size_t ambient, std::vector<RationalVector> basis) {
    Subspace s(ambient);
    for (const auto& v : basis)
        if (v.size() != ambient)
            throw std::invalid_argument("Subspace: basis vector has wrong length");
    s.basis_ = std::move(basis);
    return s;
}

bool Subspace::contains(const RationalVector& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("Subspace::contains: length mismatch");
    if (is_zero(v))
        return true;
    std::vector<RationalVector> stacked = basis_;
    stacked.push_back(v);
    return rank_of_vectors(stacked, ambient_) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("Subspace::contains: ambient mismatch");
    if (other.dim() == 0)
        return true;
    std::vector<RationalVector> stacked = basis_;
    stacked.insert(stacked.end(), other.basis_.begin(), other.basis_.end());
    return rank_of_vectors(stacked, ambient_) == dim();
}

Subspace kernel_basis(const RationalMatrix& m) {
    const std::size_t n = m.cols();
    const EchelonForm e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<RationalVector> vectors;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        RationalVector x = zeros(n);
        x[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (e.reduced(i, f) != 0)
                x[e.pivots[i]] = -e.reduced(i, f);
        vectors.push_back(std::move(x));
    }
    return Subspace::span_of(n, vectors);
}

Subspace row_space(const RationalMatrix& m) {
    Subspace s = Subspace::span_of(m.cols(), {});
    if (m.rows() == 0)
        return s;
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    return Subspace::span_of(m.cols(), rows);
}

Subspace orthogonal_complement(const Subspace& s) {
    if (s.dim() == 0) {
        std::vector<RationalVector> unit;
        for (std::size_t i = 0; i < s.ambient(); ++i) {
            RationalVector e = zeros(s.ambient());
            e[i] = 1;
            unit.push_back(std::move(e));
        }
        return Subspace::span_of(s.ambient(), unit);
    }
    return kernel_basis(s.as_rows());
}

std::optional<RationalVector> solve_particular(const RationalMatrix& m, const RationalVector& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve_particular: rhs length mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const EchelonForm e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    RationalVector x = zeros(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

Subspace orthogonalize(const Subspace& s) {
    std::vector<RationalVector> out;
    std::vector<Rational> norms;
    for (const auto& v : s.basis()) {
        RationalVector w = v;
        for (std::size_t i = 0; i < out.size(); ++i) {
            const Rational c = dot(v, out[i]) / norms[i];
            axpy(w, -c, out[i]);
        }
        if (is_zero(w))
            continue;
        norms.push_back(dot(w, w));
        out.push_back(std::move(w));
    }
    return Subspace::from_independent(s.ambient(), std::move(out));
}

RationalVector coords_in_basis(const RationalVector& v, const Subspace& orthogonal_basis) {
    RationalVector c(orthogonal_basis.dim());
    for (std::size_t i = 0; i < orthogonal_basis.dim(); ++i) {
        const RationalVector& b = orthogonal_basis[i];
        c[i] = dot(v, b) / dot(b, b);
    }
    return c;
}

RationalVector combine(const Subspace& basis, const RationalVector& coefficients) {
    if (coefficients.size() != basis.dim())
        throw std::invalid_argument("combine: coefficient count mismatch");
    RationalVector out = zeros(basis.ambient());
    for (std::size_t i = 0; i < basis.dim(); ++i)
        axpy(out, coefficients[i], basis[i]);
    return out;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return Rational(1);
    RationalMatrix a = m;
    Rational prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0)
            ++p;
        if (p == n)
            return Rational(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Rational det = a(n - 1, n - 1);
    if (sign < 0)
        det = -det;
    return det;
}

} // namespace tlocus
