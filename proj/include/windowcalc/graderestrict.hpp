#ifndef WINDOWCALC_GRADERESTRICT_HPP
#define WINDOWCALC_GRADERESTRICT_HPP

// γ_i = diag(1, ..., 1, t, ..., t) with k-i ones acts on V' only, so the
// γ_i-weight of a torus weight ν of S^λ V' is ν_{k-i+1} + ... + ν_k.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <windowcalc/characters.hpp>
#include <windowcalc/errors.hpp>
#include <windowcalc/weights.hpp>

namespace windowcalc
{

struct GammaSpec
{
    std::size_t k = 0;
    std::size_t i = 0;

    GammaSpec(std::size_t rank, std::size_t index) : k(rank), i(index)
    {
        if (i < 1 || i > k) {
            throw PreconditionError("γ_i needs 1 <= i <= k, got i=" + std::to_string(i) + " k=" + std::to_string(k));
        }
    }
};

struct WeightRange
{
    long long min = 0;
    long long max = 0;

    friend bool operator==(const WeightRange &, const WeightRange &) = default;
};

/// γ_i-weight of a single torus weight.
inline long long gamma_weight(const GammaSpec &g, const std::vector<int> &nu)
{
    long long s = 0;
    for (std::size_t j = g.k - g.i; j < g.k; ++j) {
        s += nu[j];
    }
    return s;
}

/// Extreme γ_i-weights of S^μ V^∨ ⊗ S^λ V'. The torus weights of S^λ are
/// dominated by λ, so the extremes are the sums of the i smallest and the i
/// largest entries. μ does not contribute.
inline WeightRange gamma_weight_range(const GammaSpec &g, const DominantWeight &mu, const DominantWeight &lambda)
{
    if (mu.rank() != g.k || lambda.rank() != g.k) {
        throw LengthMismatchError("gamma_weight_range: weights must have length " + std::to_string(g.k));
    }
    WeightRange r;
    for (std::size_t j = 0; j < g.i; ++j) {
        r.max += lambda[j];
        r.min += lambda[g.k - 1 - j];
    }
    return r;
}

/// Same range by scanning the weight multiset of S^λ.
inline WeightRange gamma_weight_range_brute(const GammaSpec &g, const DominantWeight &lambda)
{
    std::optional<WeightRange> r;
    for (const auto &[nu, m] : weight_multiset(lambda, g.k)) {
        const long long w = gamma_weight(g, nu);
        if (!r) {
            r = WeightRange{w, w};
        } else {
            r->min = std::min(r->min, w);
            r->max = std::max(r->max, w);
        }
    }
    if (!r) {
        throw ConsistencyError("empty weight multiset");
    }
    return *r;
}

/// η_i = ik.
inline long long eta(const GammaSpec &g)
{
    return static_cast<long long>(g.i) * static_cast<long long>(g.k);
}

struct GradeTerm
{
    DominantWeight mu;
    DominantWeight lambda;
    Integer multiplicity = 1;
};

struct GradeRestrictionEntry
{
    std::size_t i = 0;
    std::optional<WeightRange> range; ///< empty when there are no terms
    long long lo = 0;                 ///< κ_i
    long long hi = 0;                 ///< κ_i + η_i
    bool half_open = true;            ///< range ⊆ [κ_i, κ_i + η_i)
    bool closed = true;               ///< range ⊆ [κ_i, κ_i + η_i]
};

struct GradeRestrictionReport
{
    std::vector<GradeRestrictionEntry> entries;

    bool pass() const
    {
        return std::all_of(entries.begin(), entries.end(), [](const auto &e) { return e.half_open; });
    }
    bool pass_closed() const
    {
        return std::all_of(entries.begin(), entries.end(), [](const auto &e) { return e.closed; });
    }
};

inline GradeRestrictionReport grade_restriction_check(const std::vector<GradeTerm> &terms, std::size_t k,
                                                      const std::vector<long long> &kappa)
{
    if (kappa.size() != k) {
        throw LengthMismatchError("κ must have length k = " + std::to_string(k));
    }
    GradeRestrictionReport rep;
    for (std::size_t i = 1; i <= k; ++i) {
        const GammaSpec g(k, i);
        GradeRestrictionEntry e;
        e.i = i;
        e.lo = kappa[i - 1];
        e.hi = e.lo + eta(g);
        for (const auto &t : terms) {
            if (t.multiplicity == 0) {
                continue;
            }
            const WeightRange w = gamma_weight_range(g, t.mu, t.lambda);
            if (!e.range) {
                e.range = w;
            } else {
                e.range->min = std::min(e.range->min, w.min);
                e.range->max = std::max(e.range->max, w.max);
            }
        }
        if (e.range) {
            e.half_open = e.range->min >= e.lo && e.range->max < e.hi;
            e.closed = e.range->min >= e.lo && e.range->max <= e.hi;
        }
        rep.entries.push_back(e);
    }
    return rep;
}

} // namespace windowcalc

#endif
