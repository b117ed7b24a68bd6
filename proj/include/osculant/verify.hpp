#pragma once

#include "osculant/geometry.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace osc {

/// Not-applicable is a distinct state: a check whose hypothesis fails never
/// reports a pass.
enum class Outcome { pass, fail, not_applicable };
std::string_view to_string(Outcome outcome);

// ---------------------------------------------------------------------------
// If h_m = h_{m+1} = h at a general point, then X spans at most a P^h.

struct PropositionReport {
    unsigned order = 0;
    long h_m = -1;
    long h_next = -1;
    std::optional<long> span_dim;
    Outcome outcome = Outcome::not_applicable;
    Vector witness;
};

PropositionReport proposition_check(const Parametrization& p, unsigned m, const SamplePlan& plan);

/// First m with h_m = h_{m+1}.
unsigned stabilization_order(const Parametrization& p, const SamplePlan& plan);

// ---------------------------------------------------------------------------
// Tangent vectors to T(m, X) lie in T(m + 1, p, X).

/// One curve gamma(s) = sum_I (a_I + b_I s) p_I(t0 + w s) through a point of
/// T(m, p, X) and its velocity at s = 0.
struct LemmaTrial {
    Vector t0;
    Vector a;  ///< indexed like enumerate(n, m)
    Vector b;
    Vector w;
    Vector derivative;  ///< sum b_I p_I(t0) + sum a_I sum_j w_j d_j p_I(t0)
    Vector beta;        ///< the same vector regrouped over |I| <= m + 1
    bool regrouping_consistent = false;
    bool member = false;

    [[nodiscard]] bool holds() const { return regrouping_consistent && member; }
};

LemmaTrial lemma_trial(const Parametrization& p, unsigned m, Vector t0, Vector a, Vector b, Vector w,
                       unsigned target_order);

struct LemmaReport {
    unsigned order = 0;
    unsigned target_order = 0;
    std::vector<LemmaTrial> trials;
    std::size_t failures = 0;
    std::vector<Rejection> rejected;

    [[nodiscard]] bool passed() const { return failures == 0; }
};

/// Runs `trials` random trials with weights of height <= 100 and tests
/// membership in T(target_order, t0, X); target_order defaults to m + 1.
LemmaReport lemma_inclusion_check(const Parametrization& p, unsigned m, std::size_t trials, const SamplePlan& plan,
                                  std::optional<unsigned> target_order = std::nullopt);

// ---------------------------------------------------------------------------
// First-order motion of q -> T(m, q, X).

struct ConstancyReport {
    unsigned order = 0;
    Vector t0;
    std::size_t corank = 0;        ///< k'
    std::size_t fiber_dim_lb = 0;  ///< n - k'
    QMatrix motion;                ///< n rows, one per parameter direction
};

/// Row j of the motion matrix concatenates, over |I| <= m, the residual of
/// d_j p_I(t0) modulo T(m, t0, X). Its rank k' is the first-order rank of
/// the moving osculating space; n - k' directions leave it fixed.
ConstancyReport first_order_constancy_corank(const Parametrization& p, unsigned m, std::span<const Rational> t0);

// ---------------------------------------------------------------------------
// Jump k = h_{m+1} - h_m with 1 <= k <= n - 1: either X lies in a P^{h+k}, or
// X is covered by subvarieties of dimension >= n - k spanning at most a
// P^{h-m}.

struct FiberCheck {
    std::vector<Vector> points;  ///< parameter points q on the fiber through the witness
    bool constancy = false;      ///< T(m, q, X) = T(m, t0, X) at every q
    long span_dim = -1;          ///< dim <Y>
    long span_bound = -1;        ///< h - m
    long dim = -1;               ///< dim Y
    long dim_bound = -1;         ///< n - k

    [[nodiscard]] bool passed() const { return constancy && span_dim <= span_bound && dim >= dim_bound; }
};

enum class Verdict { branch_a, branch_b, first_order, fail, not_applicable };
std::string_view to_string(Verdict verdict);

struct DichotomyReport {
    unsigned order = 0;
    std::size_t n = 0;
    long h = -1;
    long k = -1;
    bool applicable = false;
    long variety_span = -1;
    bool branch_a = false;  ///< dim <X> <= h + k
    std::size_t corank = 0;
    std::size_t fiber_dim_lb = 0;
    std::optional<FiberCheck> fiber;
    Verdict verdict = Verdict::not_applicable;
    Vector witness;

    [[nodiscard]] bool failed() const { return verdict == Verdict::fail; }
};

/// Without a fiber, a non-branch-A pass is reported as first_order: the
/// constancy distribution has the required rank, but no subvariety was
/// exhibited.
DichotomyReport dichotomy_check(const Parametrization& p, unsigned m, const SamplePlan& plan,
                                const FiberMap* fiber = nullptr);

// ---------------------------------------------------------------------------

struct BoundReport {
    unsigned order = 0;
    long h_m = -1;
    long k = -1;
    long osculating_variety_dim = -1;
    bool passed = false;
};

/// dim T(m, X) <= dim T(m, p, X) + k.
BoundReport osculating_bound_check(const Parametrization& p, unsigned m, const SamplePlan& plan);

} // namespace osc
