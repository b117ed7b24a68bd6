#include "osculant/verify.hpp"

#include <algorithm>

namespace osc {

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::not_applicable: return "not-applicable";
    }
    return "unknown";
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::branch_a: return "pass-branch-a";
    case Verdict::branch_b: return "pass-branch-b";
    case Verdict::first_order: return "pass-first-order";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
    }
    return "unknown";
}

PropositionReport proposition_check(const Parametrization& p, unsigned m, const SamplePlan& plan) {
    const auto prof = profile(p, m + 1, plan);
    PropositionReport report;
    report.order = m;
    report.h_m = prof.dims[m];
    report.h_next = prof.dims[m + 1];
    report.witness = prof.witness;
    if (report.h_m != report.h_next) {
        report.outcome = Outcome::not_applicable;
        return report;
    }
    report.span_dim = variety_span_dim(p, plan).dim;
    report.outcome = *report.span_dim == report.h_m ? Outcome::pass : Outcome::fail;
    return report;
}

unsigned stabilization_order(const Parametrization& p, const SamplePlan& plan) {
    // Past the coordinate degree every derivative vanishes, and h_m < h_{m+1}
    // forces h_m < r, so the profile is stable by min(r, degree).
    unsigned degree = 0;
    for (const auto& c : p.coords()) degree = std::max(degree, c.degree());
    const unsigned bound = std::min<unsigned>(static_cast<unsigned>(p.r()), degree);
    const auto prof = profile(p, bound + 1, plan);
    for (unsigned m = 0; m <= bound; ++m)
        if (prof.dims[m] == prof.dims[m + 1]) return m;
    return bound;
}

LemmaTrial lemma_trial(const Parametrization& p, unsigned m, Vector t0, Vector a, Vector b, Vector w,
                       unsigned target_order) {
    const DerivativeJet jet(p, std::max(m + 1, target_order));
    const std::size_t terms = jet.rows_for_order(m);
    if (a.size() != terms || b.size() != terms) throw DimensionMismatch("lemma weights have the wrong length");
    if (w.size() != p.n() || t0.size() != p.n()) throw DimensionMismatch("lemma direction has the wrong length");

    const std::size_t width = p.r() + 1;
    LemmaTrial trial;

    // Velocity of gamma straight from the chain rule: alpha_I'(0) p_I(t0) +
    // alpha_I(0) sum_j w_j d_j p_I(t0), differentiating p_I afresh.
    trial.derivative.assign(width, Rational(0));
    for (std::size_t k = 0; k < terms; ++k) {
        const auto& p_index = jet.polynomials(k);
        for (std::size_t c = 0; c < width; ++c) {
            Rational value = b[k] * eval(p_index[c], t0);
            for (std::size_t j = 0; j < p.n(); ++j)
                if (sgn(a[k]) != 0 && sgn(w[j]) != 0) value += a[k] * w[j] * eval(diff(p_index[c], j), t0);
            trial.derivative[c] += value;
        }
    }

    // Regrouped: beta_I = b_I + sum_j a_{I - e_j} w_j over |I| <= m + 1.
    const std::size_t extended = jet.rows_for_order(m + 1);
    trial.beta.assign(extended, Rational(0));
    for (std::size_t k = 0; k < extended; ++k) {
        const MultiIndex& index = jet.indices()[k];
        if (k < terms) trial.beta[k] += b[k];
        for (std::size_t j = 0; j < p.n(); ++j) {
            const auto lower = index.minus_unit(j);
            if (!lower || lower->order() > m) continue;
            trial.beta[k] += a[graded_position(*lower)] * w[j];
        }
    }
    Vector regrouped(width);
    for (std::size_t k = 0; k < extended; ++k) {
        if (sgn(trial.beta[k]) == 0) continue;
        const Vector row = jet.row(k, t0);
        for (std::size_t c = 0; c < width; ++c) regrouped[c] += trial.beta[k] * row[c];
    }
    trial.regrouping_consistent = regrouped == trial.derivative;

    const Subspace target = Subspace::span_of(jet.matrix(target_order, t0));
    trial.member = span_contains(target, trial.derivative);

    trial.t0 = std::move(t0);
    trial.a = std::move(a);
    trial.b = std::move(b);
    trial.w = std::move(w);
    return trial;
}

LemmaReport lemma_inclusion_check(const Parametrization& p, unsigned m, std::size_t trials, const SamplePlan& plan,
                                  std::optional<unsigned> target_order) {
    if (trials == 0) throw std::invalid_argument("lemma check needs at least one trial");
    LemmaReport report;
    report.order = m;
    report.target_order = target_order.value_or(m + 1);
    const std::size_t terms = count(p.n(), m);

    SamplePlan trial_plan = plan;
    trial_plan.samples = std::max(plan.samples, trials);
    PointSampler sampler(p, trial_plan, Stream::lemma_trials);
    for (std::size_t i = 0; i < trials; ++i) {
        Vector t0 = sampler.next();
        RandomSource rng(plan.seed, Stream::lemma_weights, i);
        Vector a = rng.rational_vector(terms, kWeightHeight);
        Vector b = rng.rational_vector(terms, kWeightHeight);
        Vector w = rng.rational_vector(p.n(), kWeightHeight);
        report.trials.push_back(
            lemma_trial(p, m, std::move(t0), std::move(a), std::move(b), std::move(w), report.target_order));
        if (!report.trials.back().holds()) ++report.failures;
    }
    report.rejected = sampler.rejections();
    return report;
}

namespace {

ConstancyReport constancy_with_jet(const DerivativeJet& jet, const Parametrization& p, unsigned m,
                                   std::span<const Rational> t0) {
    const Subspace span = Subspace::span_of(jet.matrix(m, t0));
    const std::size_t terms = jet.rows_for_order(m);
    ConstancyReport report;
    report.order = m;
    report.t0.assign(t0.begin(), t0.end());
    report.motion = QMatrix(0, terms * (p.r() + 1));
    for (std::size_t j = 0; j < p.n(); ++j) {
        Vector row;
        row.reserve(report.motion.cols());
        for (std::size_t k = 0; k < terms; ++k) {
            const Vector moved = jet.row(jet.position(jet.indices()[k].plus_unit(j)), t0);
            const Vector residual = quotient_residual(span, moved);
            row.insert(row.end(), residual.begin(), residual.end());
        }
        report.motion.append_row(row);
    }
    report.corank = rank(report.motion);
    report.fiber_dim_lb = p.n() - report.corank;
    return report;
}

} // namespace

ConstancyReport first_order_constancy_corank(const Parametrization& p, unsigned m, std::span<const Rational> t0) {
    if (t0.size() != p.n()) throw DimensionMismatch("point has the wrong number of parameters");
    const DerivativeJet jet(p, std::max(m + 1, 1u));
    if (const auto reason = rejection_reason(jet, p, t0); !reason.empty())
        throw GeometryError("constancy corank needs an accepted point: " + reason);
    return constancy_with_jet(jet, p, m, t0);
}

namespace {

FiberCheck check_fiber(const Parametrization& p, const FiberMap& fiber, unsigned m, std::span<const Rational> t0,
                       long h, long k, const SamplePlan& plan) {
    FiberCheck check;
    check.span_bound = h - static_cast<long>(m);
    check.dim_bound = static_cast<long>(p.n()) - k;

    const DerivativeJet jet(p, std::max(m, 1u));
    const Subspace base_span = Subspace::span_of(jet.matrix(m, t0));
    const Parametrization y = fiber.restrict(p, t0);
    const DerivativeJet y_jet(y, 1);

    const std::size_t wanted = std::max<std::size_t>(5, plan.samples);
    const std::size_t limit = 100 * wanted;
    std::size_t rejected = 0;
    check.constancy = true;
    for (std::uint64_t attempt = 0; check.points.size() < wanted; ++attempt) {
        const Vector s = RandomSource(plan.seed, Stream::fiber_points, attempt).integer_point(fiber.dim(), plan.height_bound);
        Vector q = fiber.point(t0, s);
        if (is_zero(s) || !rejection_reason(jet, p, q).empty()) {
            if (++rejected > limit) throw RetryLimitExceeded("fiber of '" + p.name() + "': too many rejected points");
            continue;
        }
        if (!span_equal(Subspace::span_of(jet.matrix(m, q)), base_span)) check.constancy = false;
        // Rank of the fiber's own differential bounds dim Y from below.
        check.dim = std::max(check.dim, static_cast<long>(rank(y_jet.matrix(1, s))) - 1);
        check.points.push_back(std::move(q));
    }
    check.span_dim = variety_span_dim(y, plan).dim;
    return check;
}

} // namespace

DichotomyReport dichotomy_check(const Parametrization& p, unsigned m, const SamplePlan& plan, const FiberMap* fiber) {
    const auto prof = profile(p, m + 1, plan);
    DichotomyReport report;
    report.order = m;
    report.n = p.n();
    report.h = prof.dims[m];
    report.k = prof.dims[m + 1] - prof.dims[m];
    report.witness = prof.witness;
    report.applicable = report.k >= 1 && report.k <= static_cast<long>(p.n()) - 1;
    report.variety_span = variety_span_dim(p, plan).dim;
    report.branch_a = report.variety_span <= report.h + report.k;

    const auto constancy = first_order_constancy_corank(p, m, report.witness);
    report.corank = constancy.corank;
    report.fiber_dim_lb = constancy.fiber_dim_lb;

    if (!report.applicable) {
        report.verdict = Verdict::not_applicable;
        return report;
    }
    if (fiber) report.fiber = check_fiber(p, *fiber, m, report.witness, report.h, report.k, plan);

    if (report.branch_a)
        report.verdict = Verdict::branch_a;
    else if (report.fiber)
        report.verdict = report.fiber->passed() ? Verdict::branch_b : Verdict::fail;
    else
        report.verdict = static_cast<long>(report.fiber_dim_lb) >= static_cast<long>(p.n()) - report.k
                             ? Verdict::first_order
                             : Verdict::fail;
    return report;
}

BoundReport osculating_bound_check(const Parametrization& p, unsigned m, const SamplePlan& plan) {
    const auto prof = profile(p, m + 1, plan);
    BoundReport report;
    report.order = m;
    report.h_m = prof.dims[m];
    report.k = prof.dims[m + 1] - prof.dims[m];
    report.osculating_variety_dim = osculating_variety_dim(p, m, plan).dim;
    report.passed = report.osculating_variety_dim <= report.h_m + report.k;
    return report;
}

} // namespace osc
