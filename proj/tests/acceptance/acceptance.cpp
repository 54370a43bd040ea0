// Acceptance suite: one PASS/FAIL line per criterion. Exact arithmetic
// throughout, so every comparison is equality; the only tolerances are the
// wall-clock limits printed next to each line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <windowcalc/cli.hpp>

#include "oracles.hpp"

using namespace windowcalc;

namespace
{

struct Outcome
{
    bool ok = true;
    std::string detail;
};

struct Criterion
{
    int id;
    std::string name;
    std::optional<double> limit_ms;
    std::function<Outcome()> body;
};

std::string fmt_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, ms < 10 ? "%.3f" : "%.0f", ms);
    return buf;
}

Outcome from_verdict(const Verdict &v)
{
    Outcome o;
    o.ok = v.pass();
    o.detail = std::to_string(v.checked) + " instances";
    if (!v.failures.empty()) {
        o.detail += ", first failure: " + v.failures.front();
    }
    return o;
}

Outcome poincare_gr24()
{
    const QPolynomial want = [] {
        QPolynomial p;
        for (auto [d, c] : {std::pair{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}}) {
            p.add_term(d, c);
        }
        return p;
    }();
    // Warm the allocator and CLI11 once; the timed run is the one below.
    std::ostringstream sink, err;
    cli::run({"poincare", "2", "4", "--json"}, sink, err);

    std::ostringstream out;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli::run({"poincare", "2", "4", "--json"}, out, err);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    const auto j = nlohmann::json::parse(out.str());
    const nlohmann::json coeffs{{"-4", 1}, {"-2", 1}, {"0", 2}, {"2", 1}, {"4", 1}};
    Outcome o;
    o.ok = code == 0 && j["results"]["coefficients"] == coeffs && poincare_centered(2, 4) == want && ms < 1.0;
    o.detail = j["results"]["polynomial"].get<std::string>() + ", CLI run " + fmt_ms(ms) + " ms";
    return o;
}

Outcome lr_oracle()
{
    std::size_t pairs = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<std::vector<Partition>> by_size(9);
        for (int n = 0; n <= 8; ++n) {
            by_size[static_cast<std::size_t>(n)] = oracle::partitions_of(n, k);
        }
        for (int a = 0; a <= 8; ++a) {
            for (int b = 0; a + b <= 8; ++b) {
                for (const auto &p : by_size[static_cast<std::size_t>(a)]) {
                    for (const auto &q : by_size[static_cast<std::size_t>(b)]) {
                        const auto l = p.as_weight(k);
                        const auto m = q.as_weight(k);
                        ++pairs;
                        if (lr_coefficients(l, m, k) != oracle::lr_by_characters(l, m, k)) {
                            return {false, "mismatch at k=" + std::to_string(k) + " " + l.to_string() + " * "
                                               + m.to_string()};
                        }
                    }
                }
            }
        }
    }
    return {true, std::to_string(pairs) + " pairs"};
}

Outcome cor_inv()
{
    Verdict v = verify_cor_inv(2, 5, 4);
    v.merge(verify_cor_inv(2, 6, 4));
    return from_verdict(v);
}

Outcome wedge_bounds()
{
    Verdict v;
    for (std::size_t k = 1; k <= 4; ++k) {
        v.merge(verify_wedge_bounds(k));
    }
    return from_verdict(v);
}

Outcome cancellation()
{
    std::size_t copies = 0;
    for (int i = 1; i <= 8; ++i) {
        const Matching m = cancellation_matching(i); // throws on any defect
        copies += 2 * m.pairs.size() + 1;
        if (m.leftover.l != i - 1 || !m.leftover.lambda.empty() || m.leftover.total_degree != -i * i - i) {
            return {false, "leftover wrong at i=" + std::to_string(i)};
        }
    }
    std::size_t identities = 0;
    for (int i = 2; i <= 8; ++i) {
        for (int l = 1; l <= i - 1; ++l) {
            for (int r = 0; r <= l * (i - l); ++r) {
                ++identities;
                const int d = copy_degree(i, l, r);
                if (d != copy_degree(i, l - 1, r - (i - l)) || d != copy_degree(i, l + 1, r + (i - l - 1))) {
                    return {false, "degree identity fails at (" + std::to_string(i) + "," + std::to_string(l) + ","
                                       + std::to_string(r) + ")"};
                }
            }
        }
    }
    // Both differences are polynomials of degree ≤ 2 in (i, l, r); vanishing on
    // a 3 × 3 × 3 grid makes them identically zero.
    for (int i = -1; i <= 1; ++i) {
        for (int l = -1; l <= 1; ++l) {
            for (int r = -1; r <= 1; ++r) {
                const int d = copy_degree(i, l, r);
                if (d != copy_degree(i, l - 1, r - (i - l)) || d != copy_degree(i, l + 1, r + (i - l - 1))) {
                    return {false, "degree identity is not a polynomial identity"};
                }
            }
        }
    }
    return {true, std::to_string(copies) + " copies matched, " + std::to_string(identities) + " identities"};
}

Outcome betti_consistency()
{
    std::size_t checked = 0;
    for (int i = 0; i <= 10; ++i) {
        for (int l = 0; l <= i; ++l) {
            const QPolynomial g = gaussian_binomial(i, l);
            Integer total = 0;
            for (int r = 0; r <= l * (i - l); ++r) {
                const Integer b = betti(i, l, r);
                ++checked;
                if (b != g.coefficient(r)) {
                    return {false, "betti(" + std::to_string(i) + "," + std::to_string(l) + "," + std::to_string(r)
                                       + ") differs from the Gaussian binomial"};
                }
                total += b;
            }
            if (total != oracle::binomial(i, l)) {
                return {false, "sum over r differs from C(i,l) at i=" + std::to_string(i)};
            }
        }
    }
    return {true, std::to_string(checked) + " coefficients"};
}

Outcome bwb_checks()
{
    auto p1 = [](int s) { return GrWeight(1, 2, DominantWeight({0}), DominantWeight({s})); };
    const auto h0 = bwb(p1(0));
    const auto h1 = bwb(p1(1));
    const auto h2 = bwb(p1(2));
    if (!h0 || *h0 != CohomologyClass{0, DominantWeight({0, 0})} || h1 || !h2
        || *h2 != CohomologyClass{1, DominantWeight({1, 1})}) {
        return {false, "projective line triple"};
    }
    std::size_t checked = 0;
    for (std::size_t b = 1; b <= 4; ++b) {
        for (std::size_t a = 0; a <= b; ++a) {
            for (const auto &q : enumerate_dominant_in_interval(b - a, -3, 4)) {
                for (const auto &s : enumerate_dominant_in_interval(a, -3, 4)) {
                    const GrWeight w(a, b, q, s);
                    ++checked;
                    const auto h = bwb(w);
                    const auto hd = bwb(w.dual().canonical_twist());
                    const bool dual_ok = h.has_value() == hd.has_value()
                                         && (!h
                                             || (hd->degree == static_cast<int>(w.dimension()) - h->degree
                                                 && hd->weight == h->weight.dual()));
                    if (!dual_ok) {
                        return {false, "Serre duality fails on Gr(" + std::to_string(a) + "," + std::to_string(b)
                                           + ") for " + q.to_string() + "|" + s.to_string()};
                    }
                    if (euler_characteristic(w) != oracle::euler_by_characters(w)) {
                        return {false, "Euler characteristic differs from the oracle for " + q.to_string() + "|"
                                           + s.to_string()};
                    }
                }
            }
        }
    }
    return {true, std::to_string(checked) + " bundles"};
}

Outcome resolution_box()
{
    Verdict v;
    for (std::size_t k = 1; k <= 3; ++k) {
        v.merge(verify_lem_resolni(k));
    }
    return from_verdict(v);
}

Outcome las_window()
{
    Verdict v = verify_eq_las(2, 4);
    v.merge(verify_eq_las(2, 5));
    return from_verdict(v);
}

Outcome grade_restriction()
{
    Verdict v;
    for (std::size_t k = 1; k <= 4; ++k) {
        v.merge(verify_grade_restriction(k));
        for (const auto &lambda : enumerate_dominant_in_interval(k, 0, static_cast<int>(k) + 1)) {
            for (std::size_t i = 1; i <= k; ++i) {
                const GammaSpec g(k, i);
                ++v.checked;
                if (gamma_weight_range(g, DominantWeight::zero(k), lambda) != gamma_weight_range_brute(g, lambda)) {
                    v.failures.push_back("gamma range differs from the weight multiset for " + lambda.to_string()
                                         + " i=" + std::to_string(i));
                }
            }
        }
    }
    return from_verdict(v);
}

Outcome window_bookkeeping()
{
    std::size_t checked = 0;
    for (int N = 1; N <= 8; ++N) {
        for (int n = 0; n <= N; ++n) {
            for (int m = 0; m <= n; ++m) {
                ++checked;
                const int i = n - m;
                if (kernel_descriptor(KernelKind::E, m, n, N).internal_shift != m * n - n * n
                    || kernel_descriptor(KernelKind::F, m, n, N).internal_shift != m * n - m * m
                    || kernel_descriptor(KernelKind::Fprime, m, n, N).internal_shift != i * n - i * i) {
                    return {false, "kernel shift at m=" + std::to_string(m) + " n=" + std::to_string(n)};
                }
            }
        }
    }
    for (int N = 1; N <= 10; ++N) {
        ++checked;
        if (magic_generators(1, main_window(1, N)).size() != static_cast<std::size_t>(N)) {
            return {false, "rank one generator count at N=" + std::to_string(N)};
        }
    }
    for (int k = 1; k <= 4; ++k) {
        for (int N = 2 * k; N <= 2 * k + 3; ++N) {
            ++checked;
            const WindowSpec w = main_window(k, N);
            const WindowSpec s = shift_window_by_det(w, 1);
            if (s.lo != -k + 1 || s.hi != N - k + 1) {
                return {false, "shifted interval at k=" + std::to_string(k)};
            }
            std::set<DominantWeight> image;
            for (const auto &g : magic_generators(static_cast<std::size_t>(k), w)) {
                image.insert(g.twisted(1));
            }
            const auto target = magic_generators(static_cast<std::size_t>(k), s);
            if (image != std::set<DominantWeight>(target.begin(), target.end()) || image.size() != target.size()) {
                return {false, "det shift is not a bijection at k=" + std::to_string(k) + " N=" + std::to_string(N)};
            }
        }
    }
    return {true, std::to_string(checked) + " checks"};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Poincaré polynomial of Gr(2,4) via the CLI", 1.0, poincare_gr24},
        {2, "tableau LR equals character oracle, k<=4, |lambda|+|mu|<=8", 60000.0, lr_oracle},
        {3, "S^lambda x wedge gl_k stays in [-k,N-k), (k,N)=(2,5),(2,6)", 30000.0, cor_inv},
        {4, "wedge^r gl_k weights within [1-k,k-1], k<=4", 60000.0, wedge_bounds},
        {5, "cancellation matching i<=8 and degree identity", 1000.0, cancellation},
        {6, "Betti numbers equal Gaussian binomial coefficients, i<=10", std::nullopt, betti_consistency},
        {7, "BWB: P^1 triple, Serre duality, Euler characteristic oracle, b<=4", 120000.0, bwb_checks},
        {8, "resolution weights in the [0,k] box, k<=3", std::nullopt, resolution_box},
        {9, "Lascoux terms in [0,N) for k=2, N in {4,5}", 120000.0, las_window},
        {10, "grade restriction at kappa=0 and gamma ranges, k<=4", std::nullopt, grade_restriction},
        {11, "kernel shifts, rank-one generator count, det-shift bijection", std::nullopt, window_bookkeeping},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = !c.limit_ms || ms < *c.limit_ms;
        const bool ok = o.ok && in_time;
        failed += ok ? 0 : 1;
        std::string timing = fmt_ms(ms) + " ms";
        if (c.limit_ms) {
            timing += " / limit " + fmt_ms(*c.limit_ms) + " ms";
        }
        if (!in_time) {
            timing += " (over limit)";
        }
        std::printf("%s  %2d  %-64s  %s  [%s]\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(),
                    timing.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
