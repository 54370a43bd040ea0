#ifndef WINDOWCALC_TENSORCALC_HPP
#define WINDOWCALC_TENSORCALC_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <windowcalc/characters.hpp>
#include <windowcalc/errors.hpp>
#include <windowcalc/qpolynomial.hpp>
#include <windowcalc/weights.hpp>

namespace windowcalc
{

namespace detail
{

// Enumerates Littlewood-Richardson tableaux of shape ν/λ and content μ row by
// row. In row j, letter t occupies a contiguous block starting at column
// start[j][t]; a filling is admissible when
//  - rows stay a partition (ν_j ≤ ν_{j-1}),
//  - columns strictly increase: block t of row j ends at or before start[j-1][t],
//  - the reverse row reading word is a lattice word. Reading row j right to left
//    visits every t before any t-1, so it suffices that
//    above[t] + cnt_j(t) ≤ above[t-1], where `above` counts letters in rows < j.
class LrEnumerator
{
public:
    LrEnumerator(const Partition &lambda, const Partition &mu, std::size_t max_rows)
        : m_lambda(lambda), m_mu(mu), m_rows(max_rows), m_letters(mu.length()), m_used(mu.length() + 2, 0),
          m_above(max_rows, std::vector<int>(mu.length() + 2, 0)),
          m_start(max_rows, std::vector<int>(mu.length() + 2, 0)), m_nu(max_rows, 0)
    {
    }

    std::map<Partition, Integer> run()
    {
        if (m_lambda.length() > m_rows || m_mu.length() > m_rows) {
            return {};
        }
        fill_row(0);
        return std::move(m_result);
    }

private:
    void fill_row(std::size_t j)
    {
        if (j == m_rows) {
            for (std::size_t t = 1; t <= m_letters; ++t) {
                if (m_used[t] != m_mu[t - 1]) {
                    return;
                }
            }
            ++m_result[Partition(m_nu)];
            return;
        }
        m_above[j] = m_used;
        m_start[j][1] = m_lambda[j];
        place_letter(j, 1);
    }

    void place_letter(std::size_t j, std::size_t t)
    {
        const int pos = m_start[j][t];
        // Letter t can only occur in rows j >= t-1.
        if (t > m_letters || t > j + 1) {
            m_nu[j] = pos;
            fill_row(j + 1);
            m_nu[j] = 0;
            return;
        }
        int max_cnt = m_mu[t - 1] - m_used[t];
        if (t >= 2) {
            max_cnt = std::min(max_cnt, m_above[j][t - 1] - m_above[j][t]);
        }
        if (j > 0) {
            max_cnt = std::min(max_cnt, m_start[j - 1][t] - pos);
            max_cnt = std::min(max_cnt, m_nu[j - 1] - pos);
        }
        for (int cnt = 0; cnt <= max_cnt; ++cnt) {
            m_used[t] += cnt;
            m_start[j][t + 1] = pos + cnt;
            place_letter(j, t + 1);
            m_used[t] -= cnt;
        }
    }

    const Partition &m_lambda;
    const Partition &m_mu;
    std::size_t m_rows;
    std::size_t m_letters;
    std::vector<int> m_used;
    std::vector<std::vector<int>> m_above;
    std::vector<std::vector<int>> m_start;
    std::vector<int> m_nu;
    std::map<Partition, Integer> m_result;
};

} // namespace detail

/// Littlewood-Richardson coefficients c^ν_{λμ} for partitions, restricted to ν
/// with at most `max_rows` rows.
inline std::map<Partition, Integer> lr_partitions(const Partition &lambda, const Partition &mu, std::size_t max_rows)
{
    return detail::LrEnumerator(lambda, mu, max_rows).run();
}

/// Decomposition of S^λ V_k ⊗ S^μ V_k by the tableau rule. Weights with negative
/// entries are first twisted into partitions by powers of the determinant.
inline Decomposition lr_coefficients(const DominantWeight &lambda, const DominantWeight &mu, std::size_t k)
{
    if (lambda.rank() != k || mu.rank() != k) {
        throw LengthMismatchError("lr_coefficients: weights " + lambda.to_string() + " and " + mu.to_string()
                                  + " must both have length " + std::to_string(k));
    }
    const int a = std::max(0, -lambda.last());
    const int b = std::max(0, -mu.last());
    const Partition pl = Partition::from_weight(lambda.twisted(a));
    const Partition pm = Partition::from_weight(mu.twisted(b));
    Decomposition out;
    for (const auto &[nu, c] : lr_partitions(pl, pm, k)) {
        out.add(nu.as_weight(k).twisted(-(a + b)), QPolynomial(c));
    }
    return out;
}

/// Tensor product of two (graded) decompositions, summand by summand.
inline Decomposition tensor(const Decomposition &x, const Decomposition &y, std::size_t k)
{
    Decomposition out;
    for (const auto &[wx, mx] : x.terms()) {
        for (const auto &[wy, my] : y.terms()) {
            out += lr_coefficients(wx, wy, k).scaled(mx * my);
        }
    }
    return out;
}

/// Cauchy decomposition Λ^r(A ⊗ B) = ⊕_{|α|=r} S^α A ⊗ S^{α'} B: the pairs
/// (α, α') with α inside the rankA × rankB box, α in descending lex order.
inline std::vector<std::pair<Partition, Partition>> exterior_power_hom(int r, std::size_t rank_a, std::size_t rank_b)
{
    std::vector<std::pair<Partition, Partition>> out;
    if (r < 0) {
        return out;
    }
    auto box = enumerate_in_box(rank_a, static_cast<int>(rank_b));
    for (auto it = box.rbegin(); it != box.rend(); ++it) {
        if (it->size() == r) {
            out.emplace_back(*it, conjugate(*it));
        }
    }
    return out;
}

/// A formal tensor factor: one of the tautological or constant spaces of a
/// construction, possibly dualized. `degree` is the internal degree carried by
/// each box placed in this slot.
struct SlotSpace
{
    std::string label;
    std::size_t rank = 0;
    bool dual = false;
    int degree = 0;

    std::string name() const
    {
        return dual ? label + "^v" : label;
    }
    auto operator<=>(const SlotSpace &) const = default;
};

/// The Hom-type bundle left ⊗ right.
struct SlotPair
{
    SlotSpace left;
    SlotSpace right;

    std::size_t rank() const noexcept
    {
        return left.rank * right.rank;
    }
};

/// One summand of an exterior power: a product of Schur functors applied to slots.
struct SlotTerm
{
    std::vector<std::pair<SlotSpace, Partition>> factors;
    int internal_degree = 0;

    int boxes() const
    {
        int n = 0;
        for (const auto &[s, p] : factors) {
            n += p.size();
        }
        return n;
    }
};

/// Λ^r(⊕_j left_j ⊗ right_j) = ⊕_{p_1+...=r} ⊗_j Λ^{p_j}(left_j ⊗ right_j), each
/// factor expanded by the Cauchy formula. Only Schur functors that do not vanish
/// for the slot ranks are produced. Each summand's internal degree is the sum
/// over pairs of p_j times the pair's per-box degree (left.degree + right.degree).
inline std::vector<SlotTerm> exterior_power_sum(int r, const std::vector<SlotPair> &slots)
{
    std::vector<SlotTerm> out;
    if (r < 0) {
        return out;
    }
    SlotTerm current;
    auto rec = [&](auto &&self, std::size_t j, int remaining) -> void {
        if (j == slots.size()) {
            if (remaining == 0) {
                out.push_back(current);
            }
            return;
        }
        const auto &pair = slots[j];
        const int cap = std::min(remaining, static_cast<int>(pair.rank()));
        for (int p = 0; p <= cap; ++p) {
            for (const auto &[alpha, alpha_t] : exterior_power_hom(p, pair.left.rank, pair.right.rank)) {
                current.factors.emplace_back(pair.left, alpha);
                current.factors.emplace_back(pair.right, alpha_t);
                const int deg = p * (pair.left.degree + pair.right.degree);
                current.internal_degree += deg;
                self(self, j + 1, remaining - p);
                current.internal_degree -= deg;
                current.factors.pop_back();
                current.factors.pop_back();
            }
        }
    };
    rec(rec, 0, r);
    return out;
}

/// Λ^r gl_k decomposed into irreducible GL(k)-representations, via
/// gl_k = V^∨ ⊗ V, the Cauchy formula and LR contraction of S^α V^∨ ⊗ S^{α'} V.
inline Decomposition decompose_wedge_gl(int r, std::size_t k)
{
    if (r < 0 || static_cast<std::size_t>(r) > k * k) {
        throw PreconditionError("wedge degree " + std::to_string(r) + " outside [0, k^2] for k = "
                                + std::to_string(k));
    }
    Decomposition out;
    for (const auto &[alpha, alpha_t] : exterior_power_hom(r, k, k)) {
        out += lr_coefficients(alpha.as_weight(k).dual(), alpha_t.as_weight(k), k);
    }
    return out;
}

} // namespace windowcalc

#endif
