#ifndef WINDOWCALC_WEIGHTS_HPP
#define WINDOWCALC_WEIGHTS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <windowcalc/errors.hpp>

namespace windowcalc
{

/// Highest weight of an irreducible GL(k)-representation: a weakly decreasing
/// integer vector of fixed length k. Entries may be negative.
class DominantWeight
{
public:
    DominantWeight() = default;

    explicit DominantWeight(std::vector<int> entries) : m_entries(std::move(entries))
    {
        if (!std::is_sorted(m_entries.begin(), m_entries.end(), std::greater<>{})) {
            throw PreconditionError("dominant weight must be weakly decreasing: " + to_string());
        }
    }

    static DominantWeight zero(std::size_t rank)
    {
        return DominantWeight(std::vector<int>(rank, 0));
    }

    std::size_t rank() const noexcept
    {
        return m_entries.size();
    }
    const std::vector<int> &entries() const noexcept
    {
        return m_entries;
    }
    int operator[](std::size_t j) const
    {
        return m_entries[j];
    }
    auto begin() const noexcept
    {
        return m_entries.begin();
    }
    auto end() const noexcept
    {
        return m_entries.end();
    }

    // First and last entries; 0 for the rank-zero weight.
    int first() const noexcept
    {
        return m_entries.empty() ? 0 : m_entries.front();
    }
    int last() const noexcept
    {
        return m_entries.empty() ? 0 : m_entries.back();
    }

    // Sum of entries, i.e. the degree of the representation's determinant character.
    long long total() const noexcept
    {
        return std::accumulate(m_entries.begin(), m_entries.end(), 0LL);
    }

    bool is_partition() const noexcept
    {
        return last() >= 0;
    }

    // Tensor with det^d.
    DominantWeight twisted(int d) const
    {
        auto e = m_entries;
        for (auto &x : e) {
            x += d;
        }
        return DominantWeight(std::move(e));
    }

    // Highest weight of the dual representation: (-λ_k, ..., -λ_1).
    DominantWeight dual() const
    {
        std::vector<int> e(m_entries.rbegin(), m_entries.rend());
        for (auto &x : e) {
            x = -x;
        }
        return DominantWeight(std::move(e));
    }

    bool entries_within(int lo, int hi_exclusive) const noexcept
    {
        return std::all_of(m_entries.begin(), m_entries.end(),
                           [&](int x) { return lo <= x && x < hi_exclusive; });
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t j = 0; j < m_entries.size(); ++j) {
            if (j) {
                s += ",";
            }
            s += std::to_string(m_entries[j]);
        }
        return s + ")";
    }

    auto operator<=>(const DominantWeight &) const = default;

private:
    std::vector<int> m_entries;
};

inline std::ostream &operator<<(std::ostream &os, const DominantWeight &w)
{
    return os << w.to_string();
}

/// Young diagram: strictly positive, weakly decreasing parts. Trailing zeros
/// passed to the constructor are stripped.
class Partition
{
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : m_parts(std::move(parts))
    {
        while (!m_parts.empty() && m_parts.back() == 0) {
            m_parts.pop_back();
        }
        if (!std::is_sorted(m_parts.begin(), m_parts.end(), std::greater<>{})
            || (!m_parts.empty() && m_parts.back() < 0)) {
            throw PreconditionError("partition must be nonnegative and weakly decreasing");
        }
    }

    static Partition from_weight(const DominantWeight &w)
    {
        if (!w.is_partition()) {
            throw PreconditionError("weight " + w.to_string() + " has negative entries");
        }
        return Partition(w.entries());
    }

    const std::vector<int> &parts() const noexcept
    {
        return m_parts;
    }
    std::size_t length() const noexcept
    {
        return m_parts.size();
    }
    bool empty() const noexcept
    {
        return m_parts.empty();
    }
    // Part j, or 0 past the last row.
    int operator[](std::size_t j) const noexcept
    {
        return j < m_parts.size() ? m_parts[j] : 0;
    }
    int size() const noexcept
    {
        return std::accumulate(m_parts.begin(), m_parts.end(), 0);
    }

    // Pad with zeros to a rank-k dominant weight.
    DominantWeight as_weight(std::size_t k) const
    {
        if (m_parts.size() > k) {
            throw LengthMismatchError("partition " + to_string() + " has more than "
                                      + std::to_string(k) + " rows");
        }
        auto e = m_parts;
        e.resize(k, 0);
        return DominantWeight(std::move(e));
    }

    bool fits_in_box(std::size_t rows, int cols) const noexcept
    {
        return m_parts.size() <= rows && (m_parts.empty() || m_parts.front() <= cols);
    }

    std::string to_string() const
    {
        return DominantWeight(m_parts).to_string();
    }

    auto operator<=>(const Partition &) const = default;

private:
    std::vector<int> m_parts;
};

inline std::ostream &operator<<(std::ostream &os, const Partition &p)
{
    return os << p.to_string();
}

/// Column lengths of the diagram.
inline Partition conjugate(const Partition &p)
{
    std::vector<int> cols(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
    for (int row : p.parts()) {
        for (int c = 0; c < row; ++c) {
            ++cols[static_cast<std::size_t>(c)];
        }
    }
    return Partition(std::move(cols));
}

namespace detail
{

template <typename Visit>
void weakly_decreasing_vectors(std::vector<int> &prefix, std::size_t length, int lo, int hi_inclusive,
                               const Visit &visit)
{
    if (prefix.size() == length) {
        visit(prefix);
        return;
    }
    const int top = prefix.empty() ? hi_inclusive : std::min(prefix.back(), hi_inclusive);
    for (int x = lo; x <= top; ++x) {
        prefix.push_back(x);
        weakly_decreasing_vectors(prefix, length, lo, hi_inclusive, visit);
        prefix.pop_back();
    }
}

} // namespace detail

/// Partitions with at most `rows` parts, each at most `cols`, in ascending
/// lexicographic order of the zero-padded part vectors (so ∅ comes first).
inline std::vector<Partition> enumerate_in_box(std::size_t rows, int cols)
{
    std::vector<Partition> out;
    if (cols < 0) {
        return out;
    }
    std::vector<int> prefix;
    detail::weakly_decreasing_vectors(prefix, rows, 0, cols,
                                      [&](const std::vector<int> &v) { out.emplace_back(v); });
    return out;
}

/// All rank-k dominant weights with every entry in the half-open [lo, hi),
/// ascending lexicographic order.
inline std::vector<DominantWeight> enumerate_dominant_in_interval(std::size_t k, int lo, int hi)
{
    if (lo >= hi) {
        throw EmptyIntervalError("empty interval [" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
    }
    std::vector<DominantWeight> out;
    std::vector<int> prefix;
    detail::weakly_decreasing_vectors(prefix, k, lo, hi - 1,
                                      [&](const std::vector<int> &v) { out.emplace_back(v); });
    return out;
}

} // namespace windowcalc

#endif
