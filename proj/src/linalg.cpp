#include "osculant/linalg.hpp"

#include <algorithm>
#include <string>

namespace osc {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    QMatrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void QMatrix::append_row(std::span<const Rational> values) {
    if (values.size() != cols_)
        throw DimensionMismatch("row of length " + std::to_string(values.size()) +
                                " appended to a matrix with " + std::to_string(cols_) + " columns");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void QMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::stacked(const QMatrix& below) const {
    if (below.cols_ != cols_) throw DimensionMismatch("stacking matrices with different column counts");
    QMatrix out = *this;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    out.rows_ += below.rows_;
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Vector operator*(const QMatrix& a, std::span<const Rational> x) {
    if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
}

namespace {

// Scale a row to a primitive integer vector (coprime integer entries).
void make_primitive(std::span<Rational> row) {
    mpz_class den_lcm = 1;
    for (const auto& x : row)
        if (sgn(x) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& x : row)
        if (sgn(x) != 0) {
            const mpz_class scaled = x.get_num() * (den_lcm / x.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
    if (num_gcd == 0) return;
    const Rational factor(den_lcm, num_gcd);
    for (auto& x : row) x *= factor;
}

// row -= factor * pivot_row
void axpy(std::span<Rational> row, const Rational& factor, std::span<const Rational> pivot_row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (sgn(pivot_row[j]) != 0) row[j] -= factor * pivot_row[j];
}

} // namespace

RrefResult rref(QMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) make_primitive(m.row(i));

    RrefResult result;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows && sgn(m(pivot, col)) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(lead, pivot);

        const Rational inv = 1 / m(lead, col);
        for (auto& x : m.row(lead)) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || sgn(m(i, col)) == 0) continue;
            const Rational factor = m(i, col);
            axpy(m.row(i), factor, m.row(lead));
        }
        result.pivot_columns.push_back(col);
        ++lead;
    }
    result.rank = lead;
    result.reduced = std::move(m);
    return result;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span_of(const QMatrix& generators) {
    Subspace s(generators.cols());
    const auto reduced = rref(generators);
    for (std::size_t i = 0; i < reduced.rank; ++i) s.basis_.append_row(reduced.reduced.row(i));
    s.pivots_ = reduced.pivot_columns;
    return s;
}

Vector quotient_residual(const Subspace& s, std::span<const Rational> v) {
    if (v.size() != s.ambient_dim())
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " against ambient dimension " +
                                std::to_string(s.ambient_dim()));
    Vector r(v.begin(), v.end());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Rational factor = r[s.pivots()[i]];
        if (sgn(factor) != 0) axpy(r, factor, s.basis().row(i));
    }
    return r;
}

bool Subspace::insert(std::span<const Rational> v) {
    Vector r = quotient_residual(*this, v);
    const auto lead_it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (lead_it == r.end()) return false;
    const std::size_t col = static_cast<std::size_t>(lead_it - r.begin());
    const Rational inv = 1 / r[col];
    for (auto& x : r) x *= inv;

    // Clear the new pivot column from the existing rows, then splice the
    // new row in pivot order.
    QMatrix next(0, ambient_);
    std::vector<std::size_t> next_pivots;
    bool placed = false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!placed && pivots_[i] > col) {
            next.append_row(r);
            next_pivots.push_back(col);
            placed = true;
        }
        Vector row(basis_.row(i).begin(), basis_.row(i).end());
        const Rational factor = row[col];
        if (sgn(factor) != 0) axpy(row, factor, r);
        next.append_row(row);
        next_pivots.push_back(pivots_[i]);
    }
    if (!placed) {
        next.append_row(r);
        next_pivots.push_back(col);
    }
    basis_ = std::move(next);
    pivots_ = std::move(next_pivots);
    return true;
}

bool span_contains(const Subspace& s, std::span<const Rational> v) { return is_zero(quotient_residual(s, v)); }

bool span_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces in different ambient spaces");
    return a == b;
}

} // namespace osc
