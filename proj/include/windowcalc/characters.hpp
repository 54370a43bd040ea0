#ifndef WINDOWCALC_CHARACTERS_HPP
#define WINDOWCALC_CHARACTERS_HPP

// Character ring of GL(k) as symmetric Laurent polynomials in x_1..x_k. This is
// the brute-force route: every combinatorial decomposition elsewhere in the
// library is checked against it.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <windowcalc/errors.hpp>
#include <windowcalc/laurent.hpp>
#include <windowcalc/qpolynomial.hpp>
#include <windowcalc/weights.hpp>

namespace windowcalc
{

/// Graded multiplicities of irreducible summands, keyed by highest weight.
/// Ungraded decompositions use constant polynomials. Zero multiplicities are
/// never stored, so two decompositions compare equal iff they agree.
class Decomposition
{
public:
    using Terms = std::map<DominantWeight, QPolynomial>;

    Decomposition() = default;

    static Decomposition single(DominantWeight w, QPolynomial mult = 1)
    {
        Decomposition d;
        d.add(std::move(w), mult);
        return d;
    }

    const Terms &terms() const noexcept
    {
        return m_terms;
    }
    bool empty() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }

    void add(const DominantWeight &w, const QPolynomial &mult)
    {
        if (mult.is_zero()) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(w, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    QPolynomial multiplicity(const DominantWeight &w) const
    {
        auto it = m_terms.find(w);
        return it == m_terms.end() ? QPolynomial{} : it->second;
    }

    Decomposition &operator+=(const Decomposition &o)
    {
        for (const auto &[w, m] : o.m_terms) {
            add(w, m);
        }
        return *this;
    }

    // Multiply every multiplicity by p (e.g. an internal-degree shift q^d).
    Decomposition scaled(const QPolynomial &p) const
    {
        Decomposition out;
        for (const auto &[w, m] : m_terms) {
            out.add(w, m * p);
        }
        return out;
    }

    // Forget the grading: evaluate every multiplicity at q = 1.
    Decomposition ungraded() const
    {
        Decomposition out;
        for (const auto &[w, m] : m_terms) {
            out.add(w, m.at_one());
        }
        return out;
    }

    bool all_nonnegative() const
    {
        return std::all_of(m_terms.begin(), m_terms.end(),
                           [](const auto &t) { return t.second.all_coefficients_nonnegative(); });
    }

    friend bool operator==(const Decomposition &, const Decomposition &) = default;

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (const auto &[w, m] : m_terms) {
            if (!first) {
                s += ", ";
            }
            first = false;
            s += w.to_string() + ": " + m.to_string();
        }
        return s + "}";
    }

private:
    Terms m_terms;
};

inline std::ostream &operator<<(std::ostream &os, const Decomposition &d)
{
    return os << d.to_string();
}

/// Torus weights of an irreducible representation with their multiplicities.
using WeightMultiset = std::map<Exponent, Integer>;

/// Σ_σ sgn(σ) x^{σ(e)} over all permutations of the coordinates of e.
inline LaurentPolynomial alternant(const Exponent &e)
{
    const std::size_t k = e.size();
    LaurentPolynomial out(k);
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Exponent f(k);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) {
                inversions += perm[a] > perm[b] ? 1 : 0;
            }
        }
        for (std::size_t j = 0; j < k; ++j) {
            f[perm[j]] = e[j];
        }
        out.add_term(f, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// ρ = (k-1, k-2, ..., 0).
inline Exponent rho(std::size_t k)
{
    Exponent r(k);
    for (std::size_t j = 0; j < k; ++j) {
        r[j] = static_cast<int>(k - 1 - j);
    }
    return r;
}

/// f / ∏_{i<j} (x_i - x_j), exact. The quotient is taken one linear factor at a
/// time, which keeps every intermediate remainder small.
inline LaurentPolynomial divide_by_vandermonde(LaurentPolynomial f)
{
    const std::size_t k = f.nvars();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            Exponent xi(k, 0), xj(k, 0);
            xi[i] = 1;
            xj[j] = 1;
            LaurentPolynomial factor = LaurentPolynomial::monomial(xi) - LaurentPolynomial::monomial(xj);
            f = divide_exact(f, factor);
        }
    }
    return f;
}

/// Weyl-symmetrized character a_{e+ρ}/a_ρ of an arbitrary integral weight e.
/// It vanishes when e+ρ has a repeated entry and is otherwise ± a Schur polynomial.
inline LaurentPolynomial weyl_character(const Exponent &e)
{
    Exponent shifted = e;
    const Exponent r = rho(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) {
        shifted[j] += r[j];
    }
    return divide_by_vandermonde(alternant(shifted));
}

/// Character of S^λ V_k via the bialternant formula. Negative entries are handled
/// by twisting with a power of the determinant first.
inline LaurentPolynomial schur_polynomial(const DominantWeight &lambda, std::size_t k)
{
    if (lambda.rank() != k) {
        throw LengthMismatchError("weight " + lambda.to_string() + " does not have length " + std::to_string(k));
    }
    const int twist = std::max(0, -lambda.last());
    const DominantWeight nonneg = lambda.twisted(twist);
    LaurentPolynomial s = weyl_character(nonneg.entries());
    return s.shifted(Exponent(k, -twist));
}

/// Weights of S^λ V_k with multiplicity (the monomial support of the Schur polynomial).
inline WeightMultiset weight_multiset(const DominantWeight &lambda, std::size_t k)
{
    WeightMultiset out;
    const LaurentPolynomial s = schur_polynomial(lambda, k);
    for (const auto &[e, c] : s.terms()) {
        out.emplace(e, c);
    }
    return out;
}

inline Integer cardinality(const WeightMultiset &m)
{
    Integer n = 0;
    for (const auto &[e, c] : m) {
        n += c;
    }
    return n;
}

/// dim S^λ V_k = ∏_{i<j} (λ_i - λ_j + j - i) / (j - i).
inline Integer weyl_dimension(const DominantWeight &lambda)
{
    Integer num = 1;
    Integer den = 1;
    const std::size_t k = lambda.rank();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            num *= lambda[i] - lambda[j] + static_cast<int>(j - i);
            den *= static_cast<int>(j - i);
        }
    }
    return num / den;
}

/// Expand a symmetric Laurent polynomial in the Schur basis by repeatedly
/// subtracting the Schur polynomial of the lex-leading monomial. Coefficients
/// may be negative for virtual characters.
inline Decomposition decompose_into_schur(const LaurentPolynomial &f, std::size_t k)
{
    if (f.nvars() != k) {
        throw LengthMismatchError("polynomial has " + std::to_string(f.nvars()) + " variables, expected "
                                  + std::to_string(k));
    }
    if (!f.is_symmetric()) {
        throw SymmetryError("polynomial is not symmetric under permutations of the variables");
    }
    Decomposition out;
    LaurentPolynomial rem = f;
    while (!rem.is_zero()) {
        const auto [e, c] = rem.lead();
        // For symmetric input the lex-leading exponent is weakly decreasing.
        DominantWeight lambda(e);
        out.add(lambda, QPolynomial(c));
        rem -= schur_polynomial(lambda, k) * c;
    }
    return out;
}

/// Σ m_λ s_λ for a decomposition with constant multiplicities (graded ones are
/// evaluated at q = 1).
inline LaurentPolynomial character_of(const Decomposition &d, std::size_t k)
{
    LaurentPolynomial out(k);
    for (const auto &[w, m] : d.terms()) {
        out += schur_polynomial(w, k) * m.at_one();
    }
    return out;
}

} // namespace windowcalc

#endif
