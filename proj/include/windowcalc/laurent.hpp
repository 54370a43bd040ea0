#ifndef WINDOWCALC_LAURENT_HPP
#define WINDOWCALC_LAURENT_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <windowcalc/errors.hpp>
#include <windowcalc/qpolynomial.hpp>

namespace windowcalc
{

using Exponent = std::vector<int>;

/// Sparse Laurent polynomial in a fixed number of variables with exact integer
/// coefficients. Terms are kept in lexicographic order of exponent vectors, so
/// the last entry is the lex-leading term.
class LaurentPolynomial
{
public:
    using Terms = std::map<Exponent, Integer>;

    explicit LaurentPolynomial(std::size_t nvars = 0) : m_nvars(nvars) {}

    static LaurentPolynomial monomial(Exponent e, Integer coeff = 1)
    {
        LaurentPolynomial p(e.size());
        p.add_term(std::move(e), coeff);
        return p;
    }

    static LaurentPolynomial one(std::size_t nvars)
    {
        return monomial(Exponent(nvars, 0));
    }

    std::size_t nvars() const noexcept
    {
        return m_nvars;
    }
    const Terms &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t term_count() const noexcept
    {
        return m_terms.size();
    }

    Integer coefficient(const Exponent &e) const
    {
        auto it = m_terms.find(e);
        return it == m_terms.end() ? Integer(0) : it->second;
    }

    // Lex-leading term. Precondition: nonzero.
    const Terms::value_type &lead() const
    {
        return *m_terms.rbegin();
    }

    void add_term(const Exponent &e, const Integer &coeff)
    {
        if (e.size() != m_nvars) {
            throw LengthMismatchError("exponent length " + std::to_string(e.size()) + " != "
                                      + std::to_string(m_nvars) + " variables");
        }
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(e, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    LaurentPolynomial &operator+=(const LaurentPolynomial &o)
    {
        check_same_ring(o);
        for (const auto &[e, c] : o.m_terms) {
            add_term(e, c);
        }
        return *this;
    }
    LaurentPolynomial &operator-=(const LaurentPolynomial &o)
    {
        check_same_ring(o);
        for (const auto &[e, c] : o.m_terms) {
            add_term(e, -c);
        }
        return *this;
    }
    LaurentPolynomial &operator*=(const Integer &s)
    {
        if (s == 0) {
            m_terms.clear();
            return *this;
        }
        for (auto &[e, c] : m_terms) {
            c *= s;
        }
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b)
    {
        return a += b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b)
    {
        return a -= b;
    }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Integer &s)
    {
        return a *= s;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b)
    {
        a.check_same_ring(b);
        LaurentPolynomial out(a.m_nvars);
        Exponent e(a.m_nvars);
        for (const auto &[ea, ca] : a.m_terms) {
            for (const auto &[eb, cb] : b.m_terms) {
                for (std::size_t j = 0; j < e.size(); ++j) {
                    e[j] = ea[j] + eb[j];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    // Multiply by the monomial x^shift.
    LaurentPolynomial shifted(const Exponent &shift) const
    {
        LaurentPolynomial out(m_nvars);
        for (const auto &[e, c] : m_terms) {
            Exponent f = e;
            for (std::size_t j = 0; j < f.size(); ++j) {
                f[j] += shift[j];
            }
            out.m_terms.emplace(std::move(f), c);
        }
        return out;
    }

    // Componentwise minimum exponent over all terms (zeros for the zero polynomial).
    Exponent min_exponents() const
    {
        if (m_terms.empty()) {
            return Exponent(m_nvars, 0);
        }
        Exponent m(m_nvars, std::numeric_limits<int>::max());
        for (const auto &[e, c] : m_terms) {
            for (std::size_t j = 0; j < m_nvars; ++j) {
                m[j] = std::min(m[j], e[j]);
            }
        }
        return m;
    }

    // Invariance under every permutation of the variables with index in [first, last).
    bool is_symmetric_in(std::size_t first, std::size_t last) const
    {
        for (std::size_t j = first; j + 1 < last; ++j) {
            for (const auto &[e, c] : m_terms) {
                Exponent f = e;
                std::swap(f[j], f[j + 1]);
                if (coefficient(f) != c) {
                    return false;
                }
            }
        }
        return true;
    }
    bool is_symmetric() const
    {
        return is_symmetric_in(0, m_nvars);
    }

    // Exact quotient a / b. Throws ConsistencyError if b does not divide a.
    friend LaurentPolynomial divide_exact(const LaurentPolynomial &a, const LaurentPolynomial &b)
    {
        a.check_same_ring(b);
        if (b.is_zero()) {
            throw PreconditionError("division by the zero polynomial");
        }
        const std::size_t n = a.m_nvars;
        // Reduce to a division of honest polynomials: the lowest x_j-degree of the
        // quotient is min_j(a) - min_j(b), so after clearing denominators the
        // polynomial division is exact whenever the Laurent one is.
        const Exponent ma = a.min_exponents();
        const Exponent mb = b.min_exponents();
        Exponent neg_ma(n), neg_mb(n), back(n);
        for (std::size_t j = 0; j < n; ++j) {
            neg_ma[j] = -ma[j];
            neg_mb[j] = -mb[j];
            back[j] = ma[j] - mb[j];
        }
        LaurentPolynomial rem = a.shifted(neg_ma);
        const LaurentPolynomial div = b.shifted(neg_mb);
        const auto &[lead_exp, lead_coeff] = div.lead();

        LaurentPolynomial quot(n);
        Exponent step(n);
        while (!rem.is_zero()) {
            const auto [e, c] = rem.lead();
            for (std::size_t j = 0; j < n; ++j) {
                step[j] = e[j] - lead_exp[j];
                if (step[j] < 0) {
                    throw ConsistencyError("inexact polynomial division");
                }
            }
            Integer q;
            Integer r;
            boost::multiprecision::divide_qr(c, lead_coeff, q, r);
            if (r != 0) {
                throw ConsistencyError("inexact polynomial division (coefficient)");
            }
            quot.add_term(step, q);
            for (const auto &[de, dc] : div.m_terms) {
                Exponent f = de;
                for (std::size_t j = 0; j < n; ++j) {
                    f[j] += step[j];
                }
                rem.add_term(f, -q * dc);
            }
        }
        return quot.shifted(back);
    }

    friend bool operator==(const LaurentPolynomial &, const LaurentPolynomial &) = default;

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
            if (!s.empty()) {
                s += " + ";
            }
            s += it->second.str();
            for (std::size_t j = 0; j < m_nvars; ++j) {
                if (it->first[j] != 0) {
                    s += "*x" + std::to_string(j + 1) + "^" + std::to_string(it->first[j]);
                }
            }
        }
        return s;
    }

private:
    void check_same_ring(const LaurentPolynomial &o) const
    {
        if (o.m_nvars != m_nvars) {
            throw LengthMismatchError("polynomials in different numbers of variables");
        }
    }

    std::size_t m_nvars;
    Terms m_terms;
};

} // namespace windowcalc

#endif
