#ifndef WINDOWCALC_QPOLYNOMIAL_HPP
#define WINDOWCALC_QPOLYNOMIAL_HPP

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace windowcalc
{

using Integer = boost::multiprecision::cpp_int;

/// Laurent polynomial in one variable q with integer coefficients. Used for
/// internal-degree bookkeeping and Poincaré polynomials. Zero coefficients are
/// never stored.
class QPolynomial
{
public:
    using Terms = std::map<int, Integer>;

    QPolynomial() = default;
    QPolynomial(Integer constant) // NOLINT: implicit from integers is intended
    {
        add_term(0, std::move(constant));
    }
    QPolynomial(int constant) : QPolynomial(Integer(constant)) {}

    static QPolynomial monomial(int degree, Integer coeff = 1)
    {
        QPolynomial p;
        p.add_term(degree, std::move(coeff));
        return p;
    }

    const Terms &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    bool is_constant() const noexcept
    {
        return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first == 0);
    }

    Integer coefficient(int degree) const
    {
        auto it = m_terms.find(degree);
        return it == m_terms.end() ? Integer(0) : it->second;
    }

    void add_term(int degree, const Integer &coeff)
    {
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(degree, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    // Value at q = 1.
    Integer at_one() const
    {
        Integer s = 0;
        for (const auto &[d, c] : m_terms) {
            s += c;
        }
        return s;
    }

    // Multiply by q^d.
    QPolynomial shifted(int d) const
    {
        QPolynomial out;
        for (const auto &[deg, c] : m_terms) {
            out.m_terms.emplace(deg + d, c);
        }
        return out;
    }

    // q -> q^{-1}
    QPolynomial bar() const
    {
        QPolynomial out;
        for (const auto &[deg, c] : m_terms) {
            out.m_terms.emplace(-deg, c);
        }
        return out;
    }

    bool all_coefficients_nonnegative() const
    {
        for (const auto &[d, c] : m_terms) {
            if (c < 0) {
                return false;
            }
        }
        return true;
    }

    QPolynomial &operator+=(const QPolynomial &o)
    {
        for (const auto &[d, c] : o.m_terms) {
            add_term(d, c);
        }
        return *this;
    }
    QPolynomial &operator-=(const QPolynomial &o)
    {
        for (const auto &[d, c] : o.m_terms) {
            add_term(d, -c);
        }
        return *this;
    }
    friend QPolynomial operator+(QPolynomial a, const QPolynomial &b)
    {
        return a += b;
    }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial &b)
    {
        return a -= b;
    }
    friend QPolynomial operator*(const QPolynomial &a, const QPolynomial &b)
    {
        QPolynomial out;
        for (const auto &[da, ca] : a.m_terms) {
            for (const auto &[db, cb] : b.m_terms) {
                out.add_term(da + db, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const QPolynomial &, const QPolynomial &) = default;

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        for (const auto &[d, c] : m_terms) {
            if (!s.empty()) {
                s += c < 0 ? " - " : " + ";
            } else if (c < 0) {
                s += "-";
            }
            const Integer a = c < 0 ? Integer(-c) : c;
            if (d == 0 || a != 1) {
                s += a.str();
            }
            if (d != 0) {
                s += "q^" + std::to_string(d);
            }
        }
        return s;
    }

private:
    Terms m_terms;
};

inline std::ostream &operator<<(std::ostream &os, const QPolynomial &p)
{
    return os << p.to_string();
}

} // namespace windowcalc

#endif
