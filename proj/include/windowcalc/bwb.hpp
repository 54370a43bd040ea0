#ifndef WINDOWCALC_BWB_HPP
#define WINDOWCALC_BWB_HPP

// Borel-Weil-Bott on the Grassmannian Gr(a, b) of a-dimensional subspaces S of
// C^b, with tautological sequence S -> C^b -> Q. A homogeneous bundle
// S^μ Q ⊗ S^λ S is encoded by the concatenated weight (μ | λ) of length b:
// quotient entries first, then sub entries.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <windowcalc/errors.hpp>
#include <windowcalc/qpolynomial.hpp>
#include <windowcalc/weights.hpp>

namespace windowcalc
{

struct GrWeight
{
    std::size_t a = 0; ///< rank of the tautological subbundle
    std::size_t b = 0; ///< dimension of the ambient space
    DominantWeight quotient_part; ///< length b - a
    DominantWeight sub_part;      ///< length a

    GrWeight() = default;
    GrWeight(std::size_t sub_rank, std::size_t ambient, DominantWeight quotient, DominantWeight sub)
        : a(sub_rank), b(ambient), quotient_part(std::move(quotient)), sub_part(std::move(sub))
    {
        if (a > b) {
            throw PreconditionError("Gr(a, b) needs a <= b");
        }
        if (quotient_part.rank() != b - a || sub_part.rank() != a) {
            throw LengthMismatchError("GrWeight: quotient part needs length " + std::to_string(b - a)
                                      + " and sub part length " + std::to_string(a));
        }
    }

    std::vector<int> concatenated() const
    {
        std::vector<int> v = quotient_part.entries();
        v.insert(v.end(), sub_part.begin(), sub_part.end());
        return v;
    }

    std::size_t dimension() const noexcept
    {
        return a * (b - a);
    }

    // Homogeneous bundle of the dual representation.
    GrWeight dual() const
    {
        return GrWeight(a, b, quotient_part.dual(), sub_part.dual());
    }

    // Tensor with the canonical bundle det(S)^{b-a} ⊗ det(Q)^{-a}.
    GrWeight canonical_twist() const
    {
        return GrWeight(a, b, quotient_part.twisted(-static_cast<int>(a)), sub_part.twisted(static_cast<int>(b - a)));
    }
};

/// Nonzero cohomology of a homogeneous bundle: the representation of GL(b)
/// sitting in a single degree.
struct CohomologyClass
{
    int degree = 0;
    DominantWeight weight;

    friend bool operator==(const CohomologyClass &, const CohomologyClass &) = default;
};

/// std::nullopt means all cohomology vanishes.
using BwbResult = std::optional<CohomologyClass>;

/// Add ρ = (b-1, ..., 0); a repeated entry kills all cohomology. Otherwise the
/// sorting permutation w has length ℓ(w) = number of inversions, and the only
/// nonzero group is H^{ℓ(w)} with highest weight sort(v + ρ) - ρ.
inline BwbResult bwb(const GrWeight &w)
{
    std::vector<int> v = w.concatenated();
    const std::size_t b = v.size();
    for (std::size_t j = 0; j < b; ++j) {
        v[j] += static_cast<int>(b - 1 - j);
    }
    int inversions = 0;
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = i + 1; j < b; ++j) {
            if (v[i] == v[j]) {
                return std::nullopt;
            }
            inversions += v[i] < v[j] ? 1 : 0;
        }
    }
    std::sort(v.begin(), v.end(), std::greater<>{});
    for (std::size_t j = 0; j < b; ++j) {
        v[j] -= static_cast<int>(b - 1 - j);
    }
    return CohomologyClass{inversions, DominantWeight(std::move(v))};
}

/// Σ_i (-1)^i [H^i] as a signed multiplicity map.
inline std::map<DominantWeight, Integer> euler_characteristic(const GrWeight &w)
{
    std::map<DominantWeight, Integer> out;
    if (auto h = bwb(w)) {
        out.emplace(h->weight, h->degree % 2 == 0 ? Integer(1) : Integer(-1));
    }
    return out;
}

} // namespace windowcalc

#endif
