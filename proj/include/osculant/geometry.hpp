#pragma once

#include "osculant/linalg.hpp"
#include "osculant/multiindex.hpp"
#include "osculant/polynomial.hpp"
#include "osculant/sampling.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace osc {

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The lifting vanishes at the requested point; callers should resample.
class VanishingLift : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Every sampled point was rejected before the plan's retry budget ran out.
class RetryLimitExceeded : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// A polynomial lifting t -> p(t) in Q^{r+1} of a chart of X in P^r.
class Parametrization {
public:
    Parametrization(std::string name, std::vector<std::string> params, std::vector<Polynomial> coords);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<std::string>& params() const noexcept { return params_; }
    [[nodiscard]] const std::vector<Polynomial>& coords() const noexcept { return coords_; }
    /// Parameter count, dim X.
    [[nodiscard]] std::size_t n() const noexcept { return params_.size(); }
    /// Ambient projective dimension.
    [[nodiscard]] std::size_t r() const noexcept { return coords_.size() - 1; }

    [[nodiscard]] Vector evaluate(std::span<const Rational> t) const;

    /// A * p for an (r+1) x (r+1) matrix A.
    [[nodiscard]] Parametrization transformed(const QMatrix& a) const;
    /// p(C t + d).
    [[nodiscard]] Parametrization reparametrized(const QMatrix& c, std::span<const Rational> d) const;

private:
    std::string name_;
    std::vector<std::string> params_;
    std::vector<Polynomial> coords_;
};

/// All partial derivatives p_I with |I| <= max_order, in graded-lex order.
class DerivativeJet {
public:
    DerivativeJet(const Parametrization& p, unsigned max_order);

    [[nodiscard]] unsigned max_order() const noexcept { return max_order_; }
    [[nodiscard]] const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
    /// Number of multi-indices with |I| <= m.
    [[nodiscard]] std::size_t rows_for_order(unsigned m) const;
    [[nodiscard]] std::size_t position(const MultiIndex& index) const;

    [[nodiscard]] const std::vector<Polynomial>& polynomials(std::size_t position) const {
        return derivatives_.at(position);
    }
    /// p_I(t0) for the multi-index at `position`.
    [[nodiscard]] Vector row(std::size_t position, std::span<const Rational> t0) const;
    /// The count(n, m) x (r+1) matrix of the vectors p_I(t0), |I| <= m.
    [[nodiscard]] QMatrix matrix(unsigned m, std::span<const Rational> t0) const;

private:
    unsigned max_order_;
    std::size_t width_;
    std::vector<MultiIndex> indices_;
    std::vector<std::vector<Polynomial>> derivatives_;
};

struct Rejection {
    Vector point;
    std::string reason;
};

/// Draws parameter points for a plan and keeps only those where the lifting
/// is nonzero and immersive (order-1 osculating rank n + 1). Rejections are
/// recorded; more than 100 * samples of them raise RetryLimitExceeded.
class PointSampler {
public:
    PointSampler(const Parametrization& p, const SamplePlan& plan, Stream stream = Stream::points);

    Vector next();
    [[nodiscard]] const std::vector<Rejection>& rejections() const noexcept { return rejections_; }
    [[nodiscard]] std::size_t accepted() const noexcept { return accepted_; }

private:
    const Parametrization& p_;
    SamplePlan plan_;
    Stream stream_;
    DerivativeJet jet_;
    std::uint64_t attempt_ = 0;
    std::size_t accepted_ = 0;
    std::vector<Rejection> rejections_;
};

/// Empty string when t0 is an acceptable general-point candidate, otherwise
/// the rejection reason.
std::string rejection_reason(const DerivativeJet& order_one_jet, const Parametrization& p,
                             std::span<const Rational> t0);

QMatrix osculating_matrix(const Parametrization& p, unsigned m, std::span<const Rational> t0);

/// Projective dimension of T(m, p(t0), X).
long osculating_dim(const Parametrization& p, unsigned m, std::span<const Rational> t0);

struct GenericDim {
    long dim = -1;
    Vector witness;
    std::vector<Rejection> rejected;
};

GenericDim generic_osculating_dim(const Parametrization& p, unsigned m, const SamplePlan& plan);

struct OsculatingProfile {
    std::vector<long> dims;  ///< h_0, ..., h_{m_max}, all at `witness`
    Vector witness;
    std::vector<Rejection> rejected;
};

/// h_m for m = 0..m_max at the single sample point whose dimension vector is
/// lexicographically largest.
OsculatingProfile profile(const Parametrization& p, unsigned m_max, const SamplePlan& plan);

struct SpanDim {
    long dim = -1;
    std::size_t points_used = 0;
    std::vector<Rejection> rejected;
};

/// dim <X>: rank of stacked p(t_i), sampled until the rank has been stable
/// for r + 1 consecutive points (and at least plan.samples points are used).
SpanDim variety_span_dim(const Parametrization& p, const SamplePlan& plan);

/// Span of all order-m osculating spaces, same stabilization rule.
SpanDim joint_osculating_span_dim(const Parametrization& p, unsigned m, const SamplePlan& plan);

struct OsculatingVarietyDim {
    long dim = -1;
    Vector witness;
    Vector weights;  ///< alpha_I at the witness, graded-lex order
    std::vector<Rejection> rejected;
};

/// Dimension of T(m, X) from its tangent space at P = sum alpha_I p_I(t0):
/// rank of {p_I(t0)} together with {sum_I alpha_I d_j p_I(t0)}, minus one,
/// maximized over the plan's samples.
OsculatingVarietyDim osculating_variety_dim(const Parametrization& p, unsigned m, const SamplePlan& plan);

/// A family of subvarieties Y through the points of X, written in parameter
/// space: t = phi(t0, s), with phi(t0, 0) = t0. The coordinates are
/// polynomials in the base names followed by the fiber parameters.
class FiberMap {
public:
    FiberMap(std::vector<std::string> base_binding, std::vector<std::string> params, std::vector<Polynomial> coords);

    [[nodiscard]] const std::vector<std::string>& base_binding() const noexcept { return base_; }
    [[nodiscard]] const std::vector<std::string>& params() const noexcept { return params_; }
    [[nodiscard]] const std::vector<Polynomial>& coords() const noexcept { return coords_; }
    [[nodiscard]] std::size_t dim() const noexcept { return params_.size(); }

    /// phi(base, s)
    [[nodiscard]] Vector point(std::span<const Rational> base, std::span<const Rational> s) const;

    /// The fiber through `base` as its own parametrization s -> p(phi(base, s)).
    [[nodiscard]] Parametrization restrict(const Parametrization& x, std::span<const Rational> base) const;

private:
    std::vector<std::string> base_;
    std::vector<std::string> params_;
    std::vector<Polynomial> coords_;
};

/// Weight height used for random alpha and lemma trial coefficients.
inline constexpr std::int64_t kWeightHeight = 100;

} // namespace osc
