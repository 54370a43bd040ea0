#ifndef WINDOWCALC_WINDOWS_HPP
#define WINDOWCALC_WINDOWS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include <windowcalc/errors.hpp>
#include <windowcalc/weights.hpp>

namespace windowcalc
{

using Rational = boost::rational<long long>;

/// Parse "p/q", an integer, or a terminating decimal such as "0.4".
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&]() -> Rational { throw PreconditionError("not a rational number: '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s) -> long long {
        if (s.empty()) {
            fail();
        }
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(std::string(s), &used);
        } catch (const std::exception &) {
            fail();
        }
        if (used != s.size()) {
            fail();
        }
        return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const long long den = parse_int(text.substr(slash + 1));
        if (den == 0) {
            throw PreconditionError("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string_view::npos) {
            fail();
        }
        std::string_view whole = text.substr(0, dot);
        const bool negative = !whole.empty() && whole.front() == '-';
        long long w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
        long long scale = 1;
        for (std::size_t j = 0; j < frac.size(); ++j) {
            scale *= 10;
        }
        const Rational f(parse_int(frac), scale);
        return negative ? Rational(w) - f : Rational(w) + f;
    }
    return Rational(parse_int(text));
}

inline std::string to_string(const Rational &r)
{
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline long long ceil_rational(const Rational &r)
{
    const long long n = r.numerator();
    const long long d = r.denominator(); // always positive
    long long q = n / d;
    if (n % d != 0 && n > 0) {
        ++q;
    }
    return q;
}

/// Half-open weight interval [lo, hi) of width N, optionally remembering the
/// window parameter δ it came from.
struct WindowSpec
{
    int N = 0;
    int lo = 0;
    int hi = 0;
    std::optional<Rational> delta;

    WindowSpec() = default;
    WindowSpec(int width, int low, std::optional<Rational> d = std::nullopt)
        : N(width), lo(low), hi(low + width), delta(d)
    {
        if (width <= 0) {
            throw EmptyIntervalError("window width must be positive");
        }
    }

    bool contains(int x) const noexcept
    {
        return lo <= x && x < hi;
    }
    std::string to_string() const
    {
        return "[" + std::to_string(lo) + ", " + std::to_string(hi) + ")";
    }
    friend bool operator==(const WindowSpec &, const WindowSpec &) = default;
};

/// λ_i ∈ [⌈δ - N/2⌉, ⌈δ + N/2⌉). δ is generic when δ ± N/2 is not an integer.
inline WindowSpec window_interval(int N, const Rational &delta)
{
    if (N <= 0) {
        throw EmptyIntervalError("window width N must be positive");
    }
    const Rational half(N, 2);
    const Rational left = delta - half;
    if (left.denominator() == 1) {
        throw GenericityError("delta = " + to_string(delta) + " is not generic for N = " + std::to_string(N)
                              + ": delta - N/2 is an integer");
    }
    const long long lo = ceil_rational(left);
    const long long hi = ceil_rational(delta + half);
    if (hi - lo != N) {
        throw ConsistencyError("window width differs from N");
    }
    return WindowSpec(N, static_cast<int>(lo), delta);
}

/// The fixed window [-k, N-k), realized by δ = N/2 - k - 1/2.
inline WindowSpec main_window(int k, int N)
{
    return window_interval(N, Rational(N, 2) - k - Rational(1, 2));
}

inline bool in_window(const DominantWeight &lambda, const WindowSpec &w)
{
    return lambda.entries_within(w.lo, w.hi);
}

/// Highest weights of the Schur functors generating the window subcategory.
inline std::vector<DominantWeight> magic_generators(std::size_t k, const WindowSpec &w)
{
    return enumerate_dominant_in_interval(k, w.lo, w.hi);
}

/// Tensoring with det^d moves the window to [lo + d, hi + d) (and δ to δ + d).
inline WindowSpec shift_window_by_det(const WindowSpec &w, int d)
{
    std::optional<Rational> delta;
    if (w.delta) {
        delta = *w.delta + d;
    }
    return WindowSpec(w.N, w.lo + d, delta);
}

/// After the common twist det(V_k)^k ⊗ det(V_k')^{-k} the window [-k, N-k)
/// becomes [0, N).
inline WindowSpec twisted_main_window(int k, int N)
{
    return shift_window_by_det(main_window(k, N), k);
}

enum class KernelKind
{
    E,
    F,
    Fprime
};

inline std::string to_string(KernelKind kind)
{
    switch (kind) {
    case KernelKind::E:
        return "E";
    case KernelKind::F:
        return "F";
    case KernelKind::Fprime:
        return "Fprime";
    }
    return "?";
}

/// Determinant line bundles and internal degree shift twisting the structure
/// sheaf of a correspondence. Keys: "V_m", "V_n", "V_n'" (primed copy of the
/// larger space) and "C^N".
struct KernelDescriptor
{
    std::map<std::string, int> det_exponents;
    int internal_shift = 0;

    friend bool operator==(const KernelDescriptor &, const KernelDescriptor &) = default;
};

/// Kernels of E^{n,m}, F^{m,n} and of the transported F' (with m = k - i, n = k).
inline KernelDescriptor kernel_descriptor(KernelKind kind, int m, int n, int N)
{
    if (m < 0 || m > n || n > N) {
        throw PreconditionError("kernel_descriptor needs 0 <= m <= n <= N, got m=" + std::to_string(m)
                                + " n=" + std::to_string(n) + " N=" + std::to_string(N));
    }
    KernelDescriptor d;
    switch (kind) {
    case KernelKind::E:
        d.det_exponents = {{"V_m", -m}, {"V_n", n}, {"C^N", m - n}};
        d.internal_shift = m * n - n * n;
        break;
    case KernelKind::F:
        d.det_exponents = {{"V_m", m - N}, {"V_n", N - n}};
        d.internal_shift = m * n - m * m;
        break;
    case KernelKind::Fprime: {
        const int i = n - m;
        const int k = n;
        d.det_exponents = {{"V_m", k - i}, {"V_n'", -k}, {"C^N", i}};
        d.internal_shift = i * k - i * i;
        break;
    }
    }
    return d;
}

/// E and F are adjoint to each other up to the shift [(n-m)(N-n-m)].
inline int adjunction_shift(int m, int n, int N)
{
    if (m < 0 || m > n || n > N) {
        throw PreconditionError("adjunction_shift needs 0 <= m <= n <= N");
    }
    return (n - m) * (N - n - m);
}

} // namespace windowcalc

#endif
