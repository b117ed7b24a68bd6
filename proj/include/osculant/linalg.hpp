#pragma once

#include "osculant/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace osc {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const Rational> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    [[nodiscard]] std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Rational> values);
    void swap_rows(std::size_t a, std::size_t b);

    [[nodiscard]] QMatrix transpose() const;
    [[nodiscard]] QMatrix stacked(const QMatrix& below) const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend Vector operator*(const QMatrix& a, std::span<const Rational> x);
    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    QMatrix reduced;  ///< Unique reduced row-echelon form, zero rows kept at the bottom.
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination. Each row is first scaled to a primitive
/// integer vector, which keeps intermediate fractions small for the
/// derivative matrices this library produces.
RrefResult rref(QMatrix m);

std::size_t rank(const QMatrix& m);

/// A linear subspace of Q^d (the affine cone over a projective span),
/// stored by its reduced row-echelon basis with no zero rows. Equal
/// subspaces have identical bases.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0);

    static Subspace span_of(const QMatrix& generators);

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
    /// dim - 1; the empty projective space has dimension -1.
    [[nodiscard]] long projective_dim() const noexcept { return static_cast<long>(dim()) - 1; }
    [[nodiscard]] const QMatrix& basis() const noexcept { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    [[nodiscard]] bool is_full() const noexcept { return dim() == ambient_; }

    /// Adds v to the span, keeping the basis reduced. Returns true if the
    /// dimension grew.
    bool insert(std::span<const Rational> v);

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_;
    QMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// v minus the combination of basis rows that clears every pivot column of
/// S. Zero exactly when v lies in S.
Vector quotient_residual(const Subspace& s, std::span<const Rational> v);

bool span_contains(const Subspace& s, std::span<const Rational> v);

bool span_equal(const Subspace& a, const Subspace& b);

} // namespace osc
