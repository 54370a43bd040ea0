#ifndef WINDOWCALC_RICKARD_HPP
#define WINDOWCALC_RICKARD_HPP

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

/// Number of partitions with at most i-l rows, at most l columns and r boxes,
/// i.e. dim H^{2r}(Gr(i-l, i)).
inline Integer betti(int i, int l, int r)
{
    if (l < 0 || l > i) {
        throw PreconditionError("betti needs 0 <= l <= i");
    }
    Integer count = 0;
    for (const auto &p : enumerate_in_box(static_cast<std::size_t>(i - l), l)) {
        if (p.size() == r) {
            ++count;
        }
    }
    return count;
}

/// Gaussian binomial [n choose m]_q by the q-Pascal rule
/// [n, m] = [n-1, m-1] + q^m [n-1, m].
inline QPolynomial gaussian_binomial(int n, int m)
{
    if (m < 0 || m > n) {
        return {};
    }
    std::vector<std::vector<QPolynomial>> t(static_cast<std::size_t>(n) + 1);
    for (int a = 0; a <= n; ++a) {
        auto &row = t[static_cast<std::size_t>(a)];
        row.resize(static_cast<std::size_t>(a) + 1);
        row[0] = 1;
        row[static_cast<std::size_t>(a)] = 1;
        for (int c = 1; c < a; ++c) {
            const auto &prev = t[static_cast<std::size_t>(a) - 1];
            row[static_cast<std::size_t>(c)] =
                prev[static_cast<std::size_t>(c) - 1] + prev[static_cast<std::size_t>(c)].shifted(c);
        }
    }
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

/// Poincaré polynomial of Gr(m, n) in the cohomological grading, recentred so that
/// P(q) = P(q^{-1}): H^{2j} sits in degree 2j - m(n-m).
inline QPolynomial poincare_centered(int m, int n)
{
    if (m < 0 || m > n) {
        throw PreconditionError("poincare_centered needs 0 <= m <= n");
    }
    QPolynomial out;
    const QPolynomial g = gaussian_binomial(n, m);
    for (const auto &[j, c] : g.terms()) {
        out.add_term(2 * j - m * (n - m), c);
    }
    return out;
}

enum class Sl2Kind
{
    E,
    F
};

/// Graded multiplicity space in E^{m,l} E^{n,m} = E^{n,l} ⊗ H*(Gr(n-m, n-l)) and
/// F^{m,n} F^{l,m} = F^{l,n} ⊗ H*(Gr(m-l, n-l)).
inline QPolynomial sl2_composition(Sl2Kind kind, int l, int m, int n)
{
    if (l < 0 || l > m || m > n) {
        throw PreconditionError("sl2_composition needs 0 <= l <= m <= n");
    }
    return kind == Sl2Kind::E ? poincare_centered(n - m, n - l) : poincare_centered(m - l, n - l);
}

/// The term p_*O_{I_{k-i}}⟨-i²-i⟩ of the complex of kernels, supported on the
/// rank stratum rk ≤ k-i.
struct RickardTerm
{
    int i = 0;
    int internal_shift = 0;
    int support_rank_bound = 0;
};

inline std::vector<RickardTerm> term_catalog(int k)
{
    if (k < 0) {
        throw PreconditionError("term_catalog needs k >= 0");
    }
    std::vector<RickardTerm> out;
    for (int i = k; i >= 0; --i) {
        out.push_back(RickardTerm{i, -i * i - i, k - i});
    }
    return out;
}

/// Total degree of the copy of p_*O_{I_{k-i}} indexed by (l, r).
constexpr int copy_degree(int i, int l, int r)
{
    return -l * l - l - 2 * i * (i - l) - 2 * r;
}

/// A copy of p_*O_{I_{k-i}} produced by the l-th term, indexed by a Schubert
/// cycle λ ⊆ (i-l) × l of Gr(i-l, i).
struct Copy
{
    int l = 0;
    Partition lambda;
    int r = 0;
    int total_degree = 0;

    friend bool operator==(const Copy &, const Copy &) = default;
    auto operator<=>(const Copy &o) const
    {
        if (auto c = l <=> o.l; c != 0) {
            return c;
        }
        return lambda <=> o.lambda;
    }
};

inline std::vector<Copy> copies_of_term(int i, int l)
{
    if (l < 0 || l >= i) {
        throw PreconditionError("copies_of_term needs 0 <= l < i, got i=" + std::to_string(i)
                                + " l=" + std::to_string(l));
    }
    std::vector<Copy> out;
    for (auto &p : enumerate_in_box(static_cast<std::size_t>(i - l), l)) {
        const int r = p.size();
        out.push_back(Copy{l, std::move(p), r, copy_degree(i, l, r)});
    }
    return out;
}

struct Matching
{
    int i = 0;
    std::vector<std::pair<Copy, Copy>> pairs; ///< lower l first
    Copy leftover;
    /// Degree of the leftover under the ⟨-i²-1⟩ normalization, reported next to
    /// leftover.total_degree (= -i²-i) without choosing between them.
    int alternate_leftover_degree = 0;
};

/// Partner of a copy under the column move: delete the first column when it is
/// full (λ_{i-l} > 0, partner at l-1), otherwise add a full first column of
/// height i-l-1 (partner at l+1). nullopt when the partner index leaves [0, i).
inline std::optional<Copy> partner(int i, const Copy &c)
{
    const int rows = i - c.l;
    if (c.lambda[static_cast<std::size_t>(rows) - 1] > 0) {
        std::vector<int> parts;
        for (int j = 0; j < rows; ++j) {
            parts.push_back(c.lambda[static_cast<std::size_t>(j)] - 1);
        }
        Partition p(parts);
        const int r = p.size();
        return Copy{c.l - 1, std::move(p), r, copy_degree(i, c.l - 1, r)};
    }
    if (c.l + 1 >= i) {
        return std::nullopt;
    }
    std::vector<int> parts;
    for (int j = 0; j < rows - 1; ++j) {
        parts.push_back(c.lambda[static_cast<std::size_t>(j)] + 1);
    }
    Partition p(parts);
    const int r = p.size();
    return Copy{c.l + 1, std::move(p), r, copy_degree(i, c.l + 1, r)};
}

/// Pair every copy over l = 0..i-1 with its partner and check that this is a
/// fixed-point-free, degree-preserving involution away from a single leftover,
/// which must be (l = i-1, ∅). Throws ConsistencyError otherwise.
inline Matching cancellation_matching(int i)
{
    if (i < 1) {
        throw PreconditionError("cancellation_matching needs i >= 1");
    }
    std::map<Copy, bool> seen;
    std::vector<Copy> all;
    for (int l = 0; l < i; ++l) {
        for (auto &c : copies_of_term(i, l)) {
            seen.emplace(c, false);
            all.push_back(std::move(c));
        }
    }
    Matching m;
    m.i = i;
    std::vector<Copy> leftovers;
    for (const auto &c : all) {
        if (seen.at(c)) {
            continue;
        }
        const auto q = partner(i, c);
        if (!q) {
            leftovers.push_back(c);
            seen[c] = true;
            continue;
        }
        auto it = seen.find(*q);
        if (it == seen.end()) {
            throw ConsistencyError("partner of a copy is not among the copies");
        }
        if (it->second) {
            throw ConsistencyError("copy matched twice");
        }
        const auto back = partner(i, *q);
        if (!back || !(*back == c)) {
            throw ConsistencyError("column move is not an involution");
        }
        if (q->total_degree != c.total_degree) {
            throw ConsistencyError("paired copies have different degrees");
        }
        seen[c] = true;
        it->second = true;
        if (c.l < q->l) {
            m.pairs.emplace_back(c, *q);
        } else {
            m.pairs.emplace_back(*q, c);
        }
    }
    if (leftovers.size() != 1 || leftovers.front().l != i - 1 || !leftovers.front().lambda.empty()) {
        throw ConsistencyError("cancellation does not leave exactly the copy (l = i-1, ∅)");
    }
    m.leftover = leftovers.front();
    if (m.leftover.total_degree != -i * i - i) {
        throw ConsistencyError("leftover degree differs from -i^2-i");
    }
    m.alternate_leftover_degree = -i * i - 1;
    return m;
}

} // namespace windowcalc

#endif
