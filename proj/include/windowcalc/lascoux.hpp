#ifndef WINDOWCALC_LASCOUX_HPP
#define WINDOWCALC_LASCOUX_HPP

// Term builder for Lascoux-type resolutions. Given a Grassmannian base Gr(a, b),
// a homogeneous bundle V (a formal sum of products of Schur functors) and the
// conormal datum (T/U)^∨ written as a sum of Hom-type slot pairs, the terms are
//
//     F^{-n} = ⊕_{r ≥ n} H^{r-n}(Gr(a, b), V ⊗ Λ^r (T/U)^∨).
//
// Λ^r is expanded by the Cauchy formula, Schur functors on the same space are
// contracted by Littlewood-Richardson, and each resulting homogeneous bundle is
// evaluated by Borel-Weil-Bott. Slots that are neither the tautological sub-
// nor quotient bundle are constant ("external") and ride along as coefficients.
//
// Whether the pushforward is concentrated in one degree is a geometric input;
// the engine does not check it. Contributions with cohomological degree > r
// would signal that it fails; see all_concentrated().

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <windowcalc/bwb.hpp>
#include <windowcalc/characters.hpp>
#include <windowcalc/errors.hpp>
#include <windowcalc/tensorcalc.hpp>
#include <windowcalc/weights.hpp>

namespace windowcalc
{

/// S^weight applied to the slot's space (to its dual when slot.dual is set).
struct SchurFactor
{
    SlotSpace slot;
    DominantWeight weight;
};

struct BundleSummand
{
    std::vector<SchurFactor> factors;
    int internal_degree = 0;
    int index_offset = 0; ///< homological index of this summand before resolving
    Integer multiplicity = 1;
};

struct LascouxSetup
{
    std::size_t sub_rank = 0;     ///< a
    std::size_t ambient_rank = 0; ///< b
    std::string sub_label = "S";
    std::string quotient_label = "Q";
    std::string ambient_label = "C^b";
    std::vector<BundleSummand> bundle;
    std::vector<SlotPair> cotangent;
};

/// One irreducible piece of a term: S^ambient(C^b) ⊗ ⊗_label S^{weight}(label).
struct LascouxContribution
{
    DominantWeight ambient;
    std::map<std::string, DominantWeight> external;
    int internal_degree = 0;
    int r = 0;                    ///< exterior degree it came from
    int cohomological_degree = 0; ///< BWB degree, equals r - n for a term at index -n
    Integer multiplicity = 0;

    auto key() const
    {
        return std::tie(ambient, external, internal_degree, r, cohomological_degree);
    }
};

struct LascouxTerm
{
    int homological_index = 0;
    std::vector<LascouxContribution> contributions;
};

namespace detail
{

inline DominantWeight weight_on_space(const SchurFactor &f)
{
    if (f.weight.rank() != f.slot.rank) {
        throw LengthMismatchError("Schur factor on " + f.slot.name() + " has weight " + f.weight.to_string()
                                  + " but the slot has rank " + std::to_string(f.slot.rank));
    }
    return f.slot.dual ? f.weight.dual() : f.weight;
}

// Product of Schur functors grouped by underlying space, each group contracted
// into irreducibles.
using Grouped = std::map<std::string, Decomposition>;

inline void absorb(Grouped &groups, std::map<std::string, std::size_t> &ranks, const SchurFactor &f)
{
    const auto [rit, fresh] = ranks.try_emplace(f.slot.label, f.slot.rank);
    if (!fresh && rit->second != f.slot.rank) {
        throw PreconditionError("inconsistent ranks for slot " + f.slot.label);
    }
    const DominantWeight w = weight_on_space(f);
    auto it = groups.find(f.slot.label);
    if (it == groups.end()) {
        groups.emplace(f.slot.label, Decomposition::single(w));
    } else {
        it->second = tensor(it->second, Decomposition::single(w), f.slot.rank);
    }
}

// Cartesian product over the external groups.
template <typename Visit>
void for_each_choice(const std::vector<std::pair<std::string, const Decomposition *>> &groups, std::size_t j,
                     std::map<std::string, DominantWeight> &chosen, const Integer &mult, const Visit &visit)
{
    if (j == groups.size()) {
        visit(chosen, mult);
        return;
    }
    for (const auto &[w, m] : groups[j].second->terms()) {
        chosen.insert_or_assign(groups[j].first, w);
        for_each_choice(groups, j + 1, chosen, mult * m.at_one(), visit);
    }
    chosen.erase(groups[j].first);
}

} // namespace detail

inline std::vector<LascouxTerm> lascoux_terms(const LascouxSetup &s)
{
    const std::size_t a = s.sub_rank;
    const std::size_t b = s.ambient_rank;
    if (a > b) {
        throw PreconditionError("Lascoux base Gr(a, b) needs a <= b");
    }
    auto check_slot = [&](const SlotSpace &slot) {
        if (slot.label == s.sub_label && slot.rank != a) {
            throw PreconditionError("slot " + slot.label + " must have the sub rank " + std::to_string(a));
        }
        if (slot.label == s.quotient_label && slot.rank != b - a) {
            throw PreconditionError("slot " + slot.label + " must have the quotient rank " + std::to_string(b - a));
        }
    };
    int max_r = 0;
    for (const auto &pair : s.cotangent) {
        check_slot(pair.left);
        check_slot(pair.right);
        max_r += static_cast<int>(pair.rank());
    }
    for (const auto &summand : s.bundle) {
        for (const auto &f : summand.factors) {
            check_slot(f.slot);
        }
    }

    using Key = std::tuple<DominantWeight, std::map<std::string, DominantWeight>, int, int, int>;
    std::map<int, std::map<Key, Integer>> by_index;

    for (const auto &summand : s.bundle) {
        for (int r = 0; r <= max_r; ++r) {
            for (const auto &wedge : exterior_power_sum(r, s.cotangent)) {
                detail::Grouped groups;
                std::map<std::string, std::size_t> ranks;
                for (const auto &f : summand.factors) {
                    detail::absorb(groups, ranks, f);
                }
                for (const auto &[slot, alpha] : wedge.factors) {
                    detail::absorb(groups, ranks, SchurFactor{slot, alpha.as_weight(slot.rank)});
                }
                auto take = [&](const std::string &label, std::size_t rank) {
                    auto it = groups.find(label);
                    if (it == groups.end()) {
                        return Decomposition::single(DominantWeight::zero(rank));
                    }
                    Decomposition d = std::move(it->second);
                    groups.erase(it);
                    return d;
                };
                const Decomposition on_quotient = take(s.quotient_label, b - a);
                const Decomposition on_sub = take(s.sub_label, a);
                std::vector<std::pair<std::string, const Decomposition *>> externals;
                for (const auto &[label, d] : groups) {
                    externals.emplace_back(label, &d);
                }
                const int degree = summand.internal_degree + wedge.internal_degree;
                for (const auto &[mq, cq] : on_quotient.terms()) {
                    for (const auto &[ms, cs] : on_sub.terms()) {
                        const BwbResult h = bwb(GrWeight(a, b, mq, ms));
                        if (!h) {
                            continue;
                        }
                        const int index = summand.index_offset - (r - h->degree);
                        const Integer base = summand.multiplicity * cq.at_one() * cs.at_one();
                        std::map<std::string, DominantWeight> chosen;
                        detail::for_each_choice(externals, 0, chosen, base,
                                                [&](const auto &ext, const Integer &m) {
                                                    by_index[index][Key{h->weight, ext, degree, r, h->degree}] += m;
                                                });
                    }
                }
            }
        }
    }

    std::vector<LascouxTerm> out;
    for (auto it = by_index.rbegin(); it != by_index.rend(); ++it) {
        LascouxTerm term{it->first, {}};
        for (const auto &[key, m] : it->second) {
            if (m == 0) {
                continue;
            }
            const auto &[amb, ext, deg, r, cdeg] = key;
            term.contributions.push_back(LascouxContribution{amb, ext, deg, r, cdeg, m});
        }
        if (!term.contributions.empty()) {
            out.push_back(std::move(term));
        }
    }
    return out;
}

/// True when every contribution has cohomological degree ≤ r.
inline bool all_concentrated(const std::vector<LascouxTerm> &terms)
{
    for (const auto &t : terms) {
        for (const auto &c : t.contributions) {
            if (c.cohomological_degree > c.r) {
                return false;
            }
        }
    }
    return true;
}

/// Koszul-type bundle Λ^•(left ⊗ right) as summands at index -s with internal
/// degree s·(left.degree + right.degree).
inline std::vector<BundleSummand> koszul_bundle(const SlotPair &pair)
{
    std::vector<BundleSummand> out;
    for (int s = 0; s <= static_cast<int>(pair.rank()); ++s) {
        for (const auto &term : exterior_power_sum(s, {pair})) {
            BundleSummand b;
            for (const auto &[slot, p] : term.factors) {
                b.factors.push_back(SchurFactor{slot, p.as_weight(slot.rank)});
            }
            b.internal_degree = term.internal_degree;
            b.index_offset = -s;
            out.push_back(std::move(b));
        }
    }
    return out;
}

/// Slot labels used by the built-in setups.
namespace labels
{
inline const std::string v_prime = "V'";
} // namespace labels

/// Setup resolving p_*O over the quasi-symmetric model: Koszul complex
/// Λ^•(V' ⊗ V_{k-i}^∨) of the intertwining condition, pushed forward from
/// Gr(V_{k-i}, V_k) with conormal datum V' ⊗ (V_k/V_{k-i})^∨ ⊕ V_{k-i} ⊗ (V_k/V_{k-i})^∨.
/// Boxes coming from gl-factors carry internal degree -2; β-directions carry 0.
inline LascouxSetup resolution_setup(std::size_t k, std::size_t i)
{
    if (i > k) {
        throw PreconditionError("resolution_I needs 0 <= i <= k");
    }
    LascouxSetup s;
    s.sub_rank = k - i;
    s.ambient_rank = k;
    s.sub_label = "V_{k-i}";
    s.quotient_label = "V_k/V_{k-i}";
    s.ambient_label = "V_k";
    const SlotSpace vp{labels::v_prime, k, false, 0};
    const SlotSpace sub_dual{s.sub_label, k - i, true, -2};
    const SlotSpace sub{s.sub_label, k - i, false, -2};
    const SlotSpace quot_dual{s.quotient_label, i, true, 0};
    s.bundle = koszul_bundle(SlotPair{vp, sub_dual});
    s.cotangent = {SlotPair{vp, quot_dual}, SlotPair{sub, quot_dual}};
    return s;
}

inline std::vector<LascouxTerm> resolution_I(std::size_t k, std::size_t i)
{
    return lascoux_terms(resolution_setup(k, i));
}

/// Setup for the pushforward along Gr(V_k, C^N) of S^μ V_k^∨ ⊗ S^λ V_k', with
/// conormal datum V_k' ⊗ (C^N/V_k)^∨.
inline LascouxSetup main_theorem_setup(std::size_t k, std::size_t N, const DominantWeight &mu,
                                       const DominantWeight &lambda)
{
    if (2 * k > N) {
        throw PreconditionError("main_theorem_terms needs 2k <= N");
    }
    if (mu.rank() != k || lambda.rank() != k) {
        throw LengthMismatchError("main_theorem_terms: weights must have length k");
    }
    if (!lambda.entries_within(0, static_cast<int>(k))) {
        throw PreconditionError("main_theorem_terms: λ entries must lie in [0, k), got " + lambda.to_string());
    }
    LascouxSetup s;
    s.sub_rank = k;
    s.ambient_rank = N;
    s.sub_label = "V_k";
    s.quotient_label = "C^N/V_k";
    s.ambient_label = "C^N";
    const SlotSpace vp{labels::v_prime, k, false, 0};
    BundleSummand b;
    b.factors = {SchurFactor{SlotSpace{s.sub_label, k, true, 0}, mu}, SchurFactor{vp, lambda}};
    s.bundle = {b};
    s.cotangent = {SlotPair{vp, SlotSpace{s.quotient_label, N - k, true, 0}}};
    return s;
}

inline std::vector<LascouxTerm> main_theorem_terms(std::size_t k, std::size_t N, const DominantWeight &mu,
                                                   const DominantWeight &lambda)
{
    return lascoux_terms(main_theorem_setup(k, N, mu, lambda));
}

/// Pushforward of O along the Gr(i-l, i)-fibration with conormal datum
/// S ⊗ Q^∨⟨-2⟩, i.e. the de Rham cohomology of Gr(i-l, i).
inline LascouxSetup de_rham_setup(std::size_t i, std::size_t l)
{
    if (l > i) {
        throw PreconditionError("de Rham setup needs l <= i");
    }
    LascouxSetup s;
    s.sub_rank = i - l;
    s.ambient_rank = i;
    s.sub_label = "S";
    s.quotient_label = "Q";
    s.ambient_label = "C^i";
    s.bundle = {BundleSummand{}};
    s.cotangent = {SlotPair{SlotSpace{"S", i - l, false, -2}, SlotSpace{"Q", l, true, 0}}};
    return s;
}

inline std::vector<LascouxTerm> de_rham_terms(std::size_t i, std::size_t l)
{
    return lascoux_terms(de_rham_setup(i, l));
}

/// Contributions whose V' weight reaches k in its first entry: these are the
/// terms that still have to be resolved by window generators.
inline std::vector<std::pair<int, LascouxContribution>> boundary_contributions(const std::vector<LascouxTerm> &terms,
                                                                              std::size_t k)
{
    std::vector<std::pair<int, LascouxContribution>> out;
    for (const auto &t : terms) {
        for (const auto &c : t.contributions) {
            auto it = c.external.find(labels::v_prime);
            if (it != c.external.end() && it->second.first() >= static_cast<int>(k)) {
                out.emplace_back(t.homological_index, c);
            }
        }
    }
    return out;
}

} // namespace windowcalc

#endif
