#ifndef WINDOWCALC_VERIFY_HPP
#define WINDOWCALC_VERIFY_HPP

// Exhaustive sweeps of the weight-box and window properties over small ranks.
// Each sweep counts the instances it checked and names every failing one.

#include <cstddef>
#include <string>
#include <vector>

#include <windowcalc/characters.hpp>
#include <windowcalc/errors.hpp>
#include <windowcalc/graderestrict.hpp>
#include <windowcalc/lascoux.hpp>
#include <windowcalc/parallel.hpp>
#include <windowcalc/tensorcalc.hpp>
#include <windowcalc/weights.hpp>
#include <windowcalc/windows.hpp>

namespace windowcalc
{

struct Verdict
{
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool pass() const noexcept
    {
        return failures.empty();
    }
    void merge(Verdict other)
    {
        checked += other.checked;
        for (auto &f : other.failures) {
            failures.push_back(std::move(f));
        }
    }
};

/// Every ν in S^λ ⊗ Λ^r gl_k, for dominant λ with -1 ≤ λ_i ≤ N-2k and
/// 0 ≤ r ≤ max_r, lies entrywise in [-k, N-k).
inline Verdict verify_cor_inv(std::size_t k, std::size_t N, int max_r)
{
    if (k == 0 || 2 * k > N) {
        throw PreconditionError("verify-cor-inv needs 1 <= k and 2k <= N");
    }
    if (max_r < 0 || static_cast<std::size_t>(max_r) > k * k) {
        throw PreconditionError("verify-cor-inv needs 0 <= max_r <= k^2");
    }
    const int ki = static_cast<int>(k);
    const int Ni = static_cast<int>(N);
    std::vector<Decomposition> wedges;
    for (int r = 0; r <= max_r; ++r) {
        wedges.push_back(decompose_wedge_gl(r, k));
    }
    const auto lambdas = enumerate_dominant_in_interval(k, -1, Ni - 2 * ki + 1);
    const auto parts = parallel_map(lambdas, [&](const DominantWeight &lambda) {
        Verdict v;
        for (int r = 0; r <= max_r; ++r) {
            const Decomposition d = tensor(Decomposition::single(lambda), wedges[static_cast<std::size_t>(r)], k);
            for (const auto &[nu, m] : d.terms()) {
                ++v.checked;
                if (!nu.entries_within(-ki, Ni - ki)) {
                    v.failures.push_back("lambda=" + lambda.to_string() + " r=" + std::to_string(r)
                                         + " nu=" + nu.to_string() + " leaves [" + std::to_string(-ki) + ", "
                                         + std::to_string(Ni - ki) + ")");
                }
            }
        }
        return v;
    });
    Verdict out;
    for (const auto &p : parts) {
        out.merge(p);
    }
    return out;
}

/// Λ^r gl_k: μ_1 ≤ k-1 and μ_k ≥ 1-k for 1 ≤ r ≤ k²-1, and {0: 1} for r ∈ {0, k²}.
inline Verdict verify_wedge_bounds(std::size_t k)
{
    if (k == 0) {
        throw PreconditionError("verify_wedge_bounds needs k >= 1");
    }
    const int ki = static_cast<int>(k);
    std::vector<int> rs;
    for (int r = 0; r <= ki * ki; ++r) {
        rs.push_back(r);
    }
    const auto parts = parallel_map(rs, [&](int r) {
        Verdict v;
        const Decomposition d = decompose_wedge_gl(r, k);
        if (r == 0 || r == ki * ki) {
            ++v.checked;
            if (!(d == Decomposition::single(DominantWeight::zero(k)))) {
                v.failures.push_back("k=" + std::to_string(k) + " r=" + std::to_string(r) + " is " + d.to_string()
                                     + ", expected the trivial representation");
            }
            return v;
        }
        for (const auto &[mu, m] : d.terms()) {
            ++v.checked;
            if (mu.first() > ki - 1 || mu.last() < 1 - ki) {
                v.failures.push_back("k=" + std::to_string(k) + " r=" + std::to_string(r) + " mu=" + mu.to_string());
            }
        }
        return v;
    });
    Verdict out;
    for (const auto &p : parts) {
        out.merge(p);
    }
    return out;
}

/// For every 0 ≤ i ≤ k, the V' weights λ in the resolution terms satisfy
/// k ≥ λ_1 ≥ ... ≥ λ_k ≥ 0.
inline Verdict verify_lem_resolni(std::size_t k)
{
    std::vector<std::size_t> is;
    for (std::size_t i = 0; i <= k; ++i) {
        is.push_back(i);
    }
    const int ki = static_cast<int>(k);
    const auto parts = parallel_map(is, [&](std::size_t i) {
        Verdict v;
        for (const auto &t : resolution_I(k, i)) {
            for (const auto &c : t.contributions) {
                ++v.checked;
                const auto it = c.external.find(labels::v_prime);
                const DominantWeight lambda = it == c.external.end() ? DominantWeight::zero(k) : it->second;
                if (!lambda.entries_within(0, ki + 1)) {
                    v.failures.push_back("k=" + std::to_string(k) + " i=" + std::to_string(i) + " index "
                                         + std::to_string(t.homological_index) + " lambda=" + lambda.to_string());
                }
            }
        }
        return v;
    });
    Verdict out;
    for (const auto &p : parts) {
        out.merge(p);
    }
    return out;
}

/// For every μ in the k × k box and λ with entries in [0, k), every ξ on V' in
/// the Lascoux terms of the main pushforward lies in [0, N).
inline Verdict verify_eq_las(std::size_t k, std::size_t N)
{
    if (2 * k > N) {
        throw PreconditionError("verify-eq-las needs 2k <= N");
    }
    const int ki = static_cast<int>(k);
    const int Ni = static_cast<int>(N);
    std::vector<std::pair<DominantWeight, DominantWeight>> cases;
    for (const auto &mu : enumerate_dominant_in_interval(k, 0, ki + 1)) {
        for (const auto &lambda : enumerate_dominant_in_interval(k, 0, ki)) {
            cases.emplace_back(mu, lambda);
        }
    }
    const auto parts = parallel_map(cases, [&](const std::pair<DominantWeight, DominantWeight> &c) {
        Verdict v;
        const auto &[mu, lambda] = c;
        for (const auto &t : main_theorem_terms(k, N, mu, lambda)) {
            for (const auto &contrib : t.contributions) {
                ++v.checked;
                const auto it = contrib.external.find(labels::v_prime);
                const DominantWeight xi = it == contrib.external.end() ? DominantWeight::zero(k) : it->second;
                if (!xi.entries_within(0, Ni)) {
                    v.failures.push_back("mu=" + mu.to_string() + " lambda=" + lambda.to_string() + " index "
                                         + std::to_string(t.homological_index) + " xi=" + xi.to_string());
                }
            }
        }
        return v;
    });
    Verdict out;
    for (const auto &p : parts) {
        out.merge(p);
    }
    return out;
}

/// Two checks at κ = 0:
///  - each S^μ V^∨ ⊗ S^λ V' with λ in the [0, k] box has γ_i-range inside [0, ik];
///  - the generators of the window [0, k) pass the half-open grade restriction rule.
inline Verdict verify_grade_restriction(std::size_t k)
{
    if (k == 0) {
        throw PreconditionError("verify-grade-restriction needs k >= 1");
    }
    Verdict v;
    const int ki = static_cast<int>(k);
    const DominantWeight zero = DominantWeight::zero(k);
    for (const auto &lambda : enumerate_dominant_in_interval(k, 0, ki + 1)) {
        for (std::size_t i = 1; i <= k; ++i) {
            const GammaSpec g(k, i);
            const WeightRange r = gamma_weight_range(g, zero, lambda);
            ++v.checked;
            if (r.min < 0 || r.max > eta(g)) {
                v.failures.push_back("lambda=" + lambda.to_string() + " i=" + std::to_string(i) + " range ["
                                     + std::to_string(r.min) + ", " + std::to_string(r.max) + "] not in [0, "
                                     + std::to_string(eta(g)) + "]");
            }
        }
    }
    std::vector<GradeTerm> gens;
    for (const auto &lambda : magic_generators(k, WindowSpec(ki, 0))) {
        gens.push_back(GradeTerm{zero, lambda, 1});
    }
    const auto rep = grade_restriction_check(gens, k, std::vector<long long>(k, 0));
    for (const auto &e : rep.entries) {
        ++v.checked;
        if (!e.half_open) {
            v.failures.push_back("generators of [0, k) fail at i=" + std::to_string(e.i));
        }
    }
    return v;
}

} // namespace windowcalc

#endif
