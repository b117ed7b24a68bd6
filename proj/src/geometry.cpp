#include "osculant/geometry.hpp"

#include <algorithm>

namespace osc {

Parametrization::Parametrization(std::string name, std::vector<std::string> params, std::vector<Polynomial> coords)
    : name_(std::move(name)), params_(std::move(params)), coords_(std::move(coords)) {
    if (params_.empty()) throw std::invalid_argument("a parametrization needs at least one parameter");
    if (coords_.size() < 2) throw std::invalid_argument("a parametrization needs at least two coordinates");
    for (const auto& c : coords_)
        if (c.variables() != params_)
            throw std::invalid_argument("coordinate polynomial is not over the parameter list");
    if (std::all_of(coords_.begin(), coords_.end(), [](const Polynomial& c) { return c.is_zero(); }))
        throw std::invalid_argument("all coordinates of '" + name_ + "' are identically zero");
}

Vector Parametrization::evaluate(std::span<const Rational> t) const {
    Vector out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(eval(c, t));
    return out;
}

Parametrization Parametrization::transformed(const QMatrix& a) const {
    if (a.rows() != coords_.size() || a.cols() != coords_.size())
        throw DimensionMismatch("projective transformation has the wrong size");
    std::vector<Polynomial> out;
    out.reserve(coords_.size());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Polynomial acc(params_);
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(a(i, k)) != 0) acc += coords_[k] * a(i, k);
        out.push_back(std::move(acc));
    }
    return Parametrization(name_, params_, std::move(out));
}

Parametrization Parametrization::reparametrized(const QMatrix& c, std::span<const Rational> d) const {
    if (c.rows() != n() || c.cols() != n() || d.size() != n())
        throw DimensionMismatch("affine reparametrization has the wrong size");
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < n(); ++j) {
        Polynomial image = Polynomial::constant(params_, d[j]);
        for (std::size_t k = 0; k < n(); ++k) image += Polynomial::variable(params_, k) * c(j, k);
        images.push_back(std::move(image));
    }
    std::vector<Polynomial> out;
    out.reserve(coords_.size());
    for (const auto& f : coords_) out.push_back(substitute(f, images));
    return Parametrization(name_, params_, std::move(out));
}

DerivativeJet::DerivativeJet(const Parametrization& p, unsigned max_order)
    : max_order_(max_order), width_(p.coords().size()), indices_(enumerate(p.n(), max_order)) {
    derivatives_.reserve(indices_.size());
    derivatives_.push_back(p.coords());
    for (std::size_t k = 1; k < indices_.size(); ++k) {
        const MultiIndex& index = indices_[k];
        std::size_t j = 0;
        while (index[j] == 0) ++j;
        const auto& parent = derivatives_[graded_position(*index.minus_unit(j))];
        std::vector<Polynomial> next;
        next.reserve(width_);
        for (const auto& f : parent) next.push_back(diff(f, j));
        derivatives_.push_back(std::move(next));
    }
}

std::size_t DerivativeJet::rows_for_order(unsigned m) const {
    if (m > max_order_) throw std::out_of_range("order exceeds the jet's maximum order");
    return count(indices_.front().size(), m);
}

std::size_t DerivativeJet::position(const MultiIndex& index) const {
    if (index.order() > max_order_) throw std::out_of_range("multi-index exceeds the jet's maximum order");
    return graded_position(index);
}

Vector DerivativeJet::row(std::size_t position, std::span<const Rational> t0) const {
    Vector out;
    out.reserve(width_);
    for (const auto& f : derivatives_.at(position)) out.push_back(eval(f, t0));
    return out;
}

QMatrix DerivativeJet::matrix(unsigned m, std::span<const Rational> t0) const {
    const std::size_t rows = rows_for_order(m);
    QMatrix out(0, width_);
    for (std::size_t k = 0; k < rows; ++k) out.append_row(row(k, t0));
    return out;
}

std::string rejection_reason(const DerivativeJet& jet, const Parametrization& p, std::span<const Rational> t0) {
    if (is_zero(p.evaluate(t0))) return "lifting vanishes";
    const std::size_t r1 = rank(jet.matrix(1, t0));
    if (r1 < p.n() + 1)
        return "not immersive: order-1 rank " + std::to_string(r1) + " < " + std::to_string(p.n() + 1);
    return {};
}

PointSampler::PointSampler(const Parametrization& p, const SamplePlan& plan, Stream stream)
    : p_(p), plan_(plan), stream_(stream), jet_(p, 1) {
    if (plan.samples == 0) throw std::invalid_argument("sample plan needs at least one sample");
    if (plan.height_bound < 1) throw std::invalid_argument("sample plan needs a positive height bound");
}

Vector PointSampler::next() {
    const std::size_t limit = 100 * plan_.samples;
    for (;;) {
        RandomSource rng(plan_.seed, stream_, attempt_++);
        Vector t = rng.integer_point(p_.n(), plan_.height_bound);
        std::string reason = rejection_reason(jet_, p_, t);
        if (reason.empty()) {
            ++accepted_;
            return t;
        }
        rejections_.push_back({std::move(t), std::move(reason)});
        if (rejections_.size() > limit)
            throw RetryLimitExceeded("'" + p_.name() + "': " + std::to_string(rejections_.size()) +
                                     " sample points rejected (limit " + std::to_string(limit) + ")");
    }
}

QMatrix osculating_matrix(const Parametrization& p, unsigned m, std::span<const Rational> t0) {
    if (t0.size() != p.n()) throw DimensionMismatch("point has the wrong number of parameters");
    if (is_zero(p.evaluate(t0))) throw VanishingLift("lifting of '" + p.name() + "' vanishes at the requested point");
    return DerivativeJet(p, m).matrix(m, t0);
}

long osculating_dim(const Parametrization& p, unsigned m, std::span<const Rational> t0) {
    return static_cast<long>(rank(osculating_matrix(p, m, t0))) - 1;
}

GenericDim generic_osculating_dim(const Parametrization& p, unsigned m, const SamplePlan& plan) {
    const DerivativeJet jet(p, m);
    PointSampler sampler(p, plan);
    GenericDim best;
    for (std::size_t i = 0; i < plan.samples; ++i) {
        Vector t = sampler.next();
        const long dim = static_cast<long>(rank(jet.matrix(m, t))) - 1;
        if (dim > best.dim) {
            best.dim = dim;
            best.witness = std::move(t);
        }
    }
    best.rejected = sampler.rejections();
    return best;
}

namespace {

std::vector<long> profile_at(const DerivativeJet& jet, std::size_t width, std::span<const Rational> t) {
    std::vector<long> dims;
    Subspace span(width);
    std::size_t k = 0;
    for (unsigned m = 0; m <= jet.max_order(); ++m) {
        const std::size_t end = jet.rows_for_order(m);
        for (; k < end; ++k) span.insert(jet.row(k, t));
        dims.push_back(span.projective_dim());
    }
    return dims;
}

SpanDim stabilized_span(const Parametrization& p, unsigned m, const SamplePlan& plan) {
    const DerivativeJet jet(p, m);
    PointSampler sampler(p, plan);
    Subspace span(p.r() + 1);
    SpanDim out;
    std::size_t streak = 0;
    for (;;) {
        const Vector t = sampler.next();
        ++out.points_used;
        bool grew = false;
        for (std::size_t k = 0; k < jet.rows_for_order(m); ++k) grew = span.insert(jet.row(k, t)) || grew;
        streak = grew ? 0 : streak + 1;
        if (span.is_full()) break;
        if (out.points_used >= plan.samples && streak >= p.r() + 1) break;
    }
    out.dim = span.projective_dim();
    out.rejected = sampler.rejections();
    return out;
}

} // namespace

OsculatingProfile profile(const Parametrization& p, unsigned m_max, const SamplePlan& plan) {
    if (m_max < 1) throw std::invalid_argument("profile needs a maximum order of at least 1");
    const DerivativeJet jet(p, m_max);
    PointSampler sampler(p, plan);
    OsculatingProfile best;
    for (std::size_t i = 0; i < plan.samples; ++i) {
        Vector t = sampler.next();
        auto dims = profile_at(jet, p.r() + 1, t);
        if (best.dims.empty() || dims > best.dims) {
            best.dims = std::move(dims);
            best.witness = std::move(t);
        }
    }
    best.rejected = sampler.rejections();
    return best;
}

SpanDim variety_span_dim(const Parametrization& p, const SamplePlan& plan) { return stabilized_span(p, 0, plan); }

SpanDim joint_osculating_span_dim(const Parametrization& p, unsigned m, const SamplePlan& plan) {
    return stabilized_span(p, m, plan);
}

OsculatingVarietyDim osculating_variety_dim(const Parametrization& p, unsigned m, const SamplePlan& plan) {
    const DerivativeJet jet(p, m + 1);
    PointSampler sampler(p, plan);
    const std::size_t terms = jet.rows_for_order(m);
    OsculatingVarietyDim best;
    for (std::size_t i = 0; i < plan.samples; ++i) {
        Vector t = sampler.next();
        Vector alpha = RandomSource(plan.seed, Stream::weights, i).rational_vector(terms, kWeightHeight);

        QMatrix tangent = jet.matrix(m, t);
        for (std::size_t j = 0; j < p.n(); ++j) {
            Vector motion(p.r() + 1);
            for (std::size_t k = 0; k < terms; ++k) {
                if (sgn(alpha[k]) == 0) continue;
                const Vector d = jet.row(jet.position(jet.indices()[k].plus_unit(j)), t);
                for (std::size_t c = 0; c < motion.size(); ++c) motion[c] += alpha[k] * d[c];
            }
            tangent.append_row(motion);
        }
        const long dim = static_cast<long>(rank(tangent)) - 1;
        if (dim > best.dim) {
            best.dim = dim;
            best.witness = std::move(t);
            best.weights = std::move(alpha);
        }
    }
    best.rejected = sampler.rejections();
    return best;
}

} // namespace osc

namespace osc {

namespace {

std::vector<std::string> concat(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

FiberMap::FiberMap(std::vector<std::string> base_binding, std::vector<std::string> params,
                   std::vector<Polynomial> coords)
    : base_(std::move(base_binding)), params_(std::move(params)), coords_(std::move(coords)) {
    if (params_.empty()) throw std::invalid_argument("a fiber needs at least one parameter");
    if (coords_.size() != base_.size())
        throw std::invalid_argument("a fiber needs one coordinate per base parameter");
    const auto vars = concat(base_, params_);
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("fiber variable '" + vars[i] + "' is bound twice");
    for (const auto& c : coords_)
        if (c.variables() != vars) throw std::invalid_argument("fiber coordinate is not over base ++ params");

    // phi(t0, 0) must be t0 identically.
    std::vector<Polynomial> at_zero;
    for (std::size_t i = 0; i < base_.size(); ++i) at_zero.push_back(Polynomial::variable(base_, i));
    for (std::size_t i = 0; i < params_.size(); ++i) at_zero.push_back(Polynomial(base_));
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (substitute(coords_[i], at_zero) != Polynomial::variable(base_, i))
            throw std::invalid_argument("fiber does not pass through its base point at parameter 0 (coordinate " +
                                        std::to_string(i + 1) + ")");
}

Vector FiberMap::point(std::span<const Rational> base, std::span<const Rational> s) const {
    if (base.size() != base_.size() || s.size() != params_.size())
        throw DimensionMismatch("fiber point arguments have the wrong length");
    Vector args(base.begin(), base.end());
    args.insert(args.end(), s.begin(), s.end());
    Vector out;
    for (const auto& c : coords_) out.push_back(eval(c, args));
    return out;
}

Parametrization FiberMap::restrict(const Parametrization& x, std::span<const Rational> base) const {
    if (x.n() != base_.size()) throw DimensionMismatch("fiber base does not match the variety's parameters");
    if (base.size() != base_.size()) throw DimensionMismatch("base point has the wrong length");
    std::vector<Polynomial> bind;
    for (const auto& b : base) bind.push_back(Polynomial::constant(params_, b));
    for (std::size_t i = 0; i < params_.size(); ++i) bind.push_back(Polynomial::variable(params_, i));
    std::vector<Polynomial> images;
    for (const auto& c : coords_) images.push_back(substitute(c, bind));
    std::vector<Polynomial> coords;
    for (const auto& f : x.coords()) coords.push_back(substitute(f, images));
    return Parametrization(x.name() + "/fiber", params_, std::move(coords));
}

} // namespace osc
