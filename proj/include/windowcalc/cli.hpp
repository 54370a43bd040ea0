#ifndef WINDOWCALC_CLI_HPP
#define WINDOWCALC_CLI_HPP

// Command-line front end. Every subcommand fills a Report; with --json the
// report is printed as JSON with sorted keys (so identical arguments give
// identical bytes), otherwise as a two-column table.
//
// Exit codes: 0 success or pass, 1 a verification failed, 2 usage error.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <windowcalc/bwb.hpp>
#include <windowcalc/characters.hpp>
#include <windowcalc/errors.hpp>
#include <windowcalc/graderestrict.hpp>
#include <windowcalc/lascoux.hpp>
#include <windowcalc/rickard.hpp>
#include <windowcalc/tensorcalc.hpp>
#include <windowcalc/verify.hpp>
#include <windowcalc/weights.hpp>
#include <windowcalc/windows.hpp>

namespace windowcalc::cli
{

using json = nlohmann::json;

constexpr int schema_version = 1;
constexpr std::size_t max_reported_failures = 50;

enum class Status
{
    pass,
    fail,
    not_applicable
};

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::not_applicable:
        return "n/a";
    }
    return "n/a";
}

struct Report
{
    std::string command;
    json parameters = json::object();
    json results = json::object();
    Status status = Status::not_applicable;
    std::optional<long long> elapsed_ms;

    json to_json() const
    {
        json j;
        j["schemaVersion"] = schema_version;
        j["command"] = command;
        j["parameters"] = parameters;
        j["results"] = results;
        j["pass"] = to_string(status);
        if (elapsed_ms) {
            j["elapsedMs"] = *elapsed_ms;
        }
        return j;
    }
};

// Usage errors detected after CLI11 parsing.
struct UsageError : Error
{
    using Error::Error;
};

inline json to_json(const Integer &n)
{
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
        return n.convert_to<long long>();
    }
    return n.str();
}

inline json to_json(const DominantWeight &w)
{
    return w.entries();
}

inline json to_json(const Partition &p)
{
    return p.parts();
}

inline json to_json(const QPolynomial &p)
{
    json j = json::object();
    for (const auto &[d, c] : p.terms()) {
        j[std::to_string(d)] = to_json(c);
    }
    return j;
}

inline json to_json(const Decomposition &d)
{
    json arr = json::array();
    for (const auto &[w, m] : d.terms()) {
        json e;
        e["weight"] = to_json(w);
        if (m.is_constant()) {
            e["multiplicity"] = to_json(m.coefficient(0));
        } else {
            e["multiplicity"] = to_json(m);
        }
        arr.push_back(e);
    }
    return arr;
}

inline json to_json(const WindowSpec &w)
{
    json j;
    j["N"] = w.N;
    j["lo"] = w.lo;
    j["hi"] = w.hi;
    j["interval"] = w.to_string();
    if (w.delta) {
        j["delta"] = windowcalc::to_string(*w.delta);
    }
    return j;
}

inline json to_json(const std::vector<LascouxTerm> &terms, const LascouxSetup &s)
{
    json arr = json::array();
    for (const auto &t : terms) {
        json jt;
        jt["index"] = t.homological_index;
        json cs = json::array();
        for (const auto &c : t.contributions) {
            json jc;
            jc["ambient"] = {{"space", s.ambient_label}, {"weight", to_json(c.ambient)}};
            json ext = json::object();
            for (const auto &[label, w] : c.external) {
                ext[label] = to_json(w);
            }
            jc["external"] = ext;
            jc["internalDegree"] = c.internal_degree;
            jc["r"] = c.r;
            jc["cohomologicalDegree"] = c.cohomological_degree;
            jc["multiplicity"] = to_json(c.multiplicity);
            cs.push_back(jc);
        }
        jt["contributions"] = cs;
        arr.push_back(jt);
    }
    return arr;
}

inline json to_json(const Copy &c)
{
    return json{{"l", c.l}, {"lambda", to_json(c.lambda)}, {"r", c.r}, {"degree", c.total_degree}};
}

/// "3,1,0" -> {3,1,0}; "" -> {} (rank 0).
inline std::vector<int> parse_int_list(const std::string &text)
{
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw UsageError("not a comma-separated integer list: '" + text + "'");
        }
        out.push_back(v);
    }
    return out;
}

inline DominantWeight parse_weight(const std::string &text, std::optional<std::size_t> rank = std::nullopt)
{
    std::vector<int> v = parse_int_list(text);
    if (rank && v.size() != *rank) {
        throw LengthMismatchError("weight '" + text + "' must have " + std::to_string(*rank) + " entries");
    }
    return DominantWeight(std::move(v));
}

inline void add_verdict(Report &rep, const Verdict &v)
{
    rep.results["checked"] = v.checked;
    rep.results["failureCount"] = v.failures.size();
    json fs = json::array();
    for (std::size_t j = 0; j < v.failures.size() && j < max_reported_failures; ++j) {
        fs.push_back(v.failures[j]);
    }
    rep.results["failures"] = fs;
    rep.status = v.pass() ? Status::pass : Status::fail;
}

inline void print_table(std::ostream &out, const Report &rep)
{
    out << rep.command << "  [" << to_string(rep.status) << "]\n";
    auto rows = [&](const json &obj, const std::string &title) {
        if (obj.empty()) {
            return;
        }
        out << title << ":\n";
        std::size_t width = 0;
        for (const auto &[key, value] : obj.items()) {
            width = std::max(width, key.size());
        }
        for (const auto &[key, value] : obj.items()) {
            out << "  " << key << std::string(width - key.size() + 2, ' ')
                << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    };
    rows(rep.parameters, "parameters");
    rows(rep.results, "results");
    if (rep.elapsed_ms) {
        out << "elapsed: " << *rep.elapsed_ms << " ms\n";
    }
}

inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact weight combinatorics for window categories, Schur functors and the Rickard complex",
                 "windowcalc"};
    app.require_subcommand(1);
    bool as_json = false;
    bool timing = false;
    app.add_flag("--json", as_json, "Emit a JSON report on stdout");
    app.add_flag("--timing", timing, "Add elapsedMs to the report");

    Report rep;
    std::function<void()> action;
    auto sub = [&](const std::string &name, const std::string &help) {
        CLI::App *s = app.add_subcommand(name, help);
        s->add_flag("--json", as_json, "Emit a JSON report on stdout");
        s->add_flag("--timing", timing, "Add elapsedMs to the report");
        return s;
    };

    // window
    int w_N = 0;
    std::optional<std::string> w_delta;
    std::optional<int> w_k;
    {
        auto *s = sub("window", "Window interval [ceil(delta - N/2), ceil(delta + N/2)) or the fixed window of rank k");
        s->add_option("--N", w_N, "Window width")->required();
        s->add_option("--delta", w_delta, "Window parameter p/q, integer or decimal");
        s->add_option("--k", w_k, "Rank; gives [-k, N-k) and the twisted [0, N)");
        s->callback([&] {
            action = [&] {
                rep.command = "window";
                rep.parameters["N"] = w_N;
                if (!w_delta && !w_k) {
                    throw UsageError("window needs --delta or --k");
                }
                if (w_delta) {
                    const Rational delta = parse_rational(*w_delta);
                    rep.parameters["delta"] = windowcalc::to_string(delta);
                    rep.results["window"] = to_json(window_interval(w_N, delta));
                }
                if (w_k) {
                    rep.parameters["k"] = *w_k;
                    rep.results["main"] = to_json(main_window(*w_k, w_N));
                    rep.results["twisted"] = to_json(twisted_main_window(*w_k, w_N));
                }
            };
        });
    }

    // generators
    std::size_t g_k = 0;
    std::optional<int> g_lo, g_hi, g_N;
    {
        auto *s = sub("generators", "Dominant weights of rank k with entries in [lo, hi)");
        s->add_option("--k", g_k, "Rank")->required();
        s->add_option("--lo", g_lo, "Lower end (inclusive)");
        s->add_option("--hi", g_hi, "Upper end (exclusive)");
        s->add_option("--N", g_N, "Use the fixed window [-k, N-k) instead of --lo/--hi");
        s->callback([&] {
            action = [&] {
                rep.command = "generators";
                rep.parameters["k"] = g_k;
                WindowSpec w;
                if (g_N) {
                    rep.parameters["N"] = *g_N;
                    w = main_window(static_cast<int>(g_k), *g_N);
                } else if (g_lo && g_hi) {
                    rep.parameters["lo"] = *g_lo;
                    rep.parameters["hi"] = *g_hi;
                    if (*g_lo >= *g_hi) {
                        throw EmptyIntervalError("empty interval [" + std::to_string(*g_lo) + ", "
                                                 + std::to_string(*g_hi) + ")");
                    }
                    w = WindowSpec(*g_hi - *g_lo, *g_lo);
                } else {
                    throw UsageError("generators needs --N or both --lo and --hi");
                }
                json ws = json::array();
                const auto gens = magic_generators(g_k, w);
                for (const auto &g : gens) {
                    ws.push_back(to_json(g));
                }
                rep.results["window"] = w.to_string();
                rep.results["count"] = gens.size();
                rep.results["weights"] = ws;
            };
        });
    }

    // lr
    std::string l_lambda, l_mu;
    std::optional<std::size_t> l_k;
    {
        auto *s = sub("lr", "Littlewood-Richardson decomposition of S^lambda ⊗ S^mu, checked against characters");
        s->add_option("--lambda", l_lambda, "Weight, comma-separated")->required();
        s->add_option("--mu", l_mu, "Weight, comma-separated")->required();
        s->add_option("--k", l_k, "Rank (defaults to the weight length)");
        s->callback([&] {
            action = [&] {
                rep.command = "lr";
                const DominantWeight lambda = parse_weight(l_lambda, l_k);
                const std::size_t k = l_k.value_or(lambda.rank());
                const DominantWeight mu = parse_weight(l_mu, k);
                rep.parameters["lambda"] = to_json(lambda);
                rep.parameters["mu"] = to_json(mu);
                rep.parameters["k"] = k;
                const Decomposition d = lr_coefficients(lambda, mu, k);
                const Decomposition oracle =
                    decompose_into_schur(schur_polynomial(lambda, k) * schur_polynomial(mu, k), k);
                rep.results["decomposition"] = to_json(d);
                rep.results["characterCheck"] = d == oracle;
                rep.status = d == oracle ? Status::pass : Status::fail;
            };
        });
    }

    // wedge-gl
    int wg_r = 0;
    std::size_t wg_k = 0;
    {
        auto *s = sub("wedge-gl", "Decompose the r-th exterior power of gl_k");
        s->add_option("--r", wg_r, "Exterior degree")->required();
        s->add_option("--k", wg_k, "Rank")->required();
        s->callback([&] {
            action = [&] {
                rep.command = "wedge-gl";
                rep.parameters["r"] = wg_r;
                rep.parameters["k"] = wg_k;
                const Decomposition d = decompose_wedge_gl(wg_r, wg_k);
                rep.results["decomposition"] = to_json(d);
                bool bounded = true;
                const int ki = static_cast<int>(wg_k);
                for (const auto &[mu, m] : d.terms()) {
                    bounded = bounded && mu.first() <= ki - 1 && mu.last() >= 1 - ki;
                }
                rep.results["withinBounds"] = bounded;
            };
        });
    }

    // bwb
    std::size_t b_a = 0, b_b = 0;
    std::string b_q, b_s;
    {
        auto *s = sub("bwb", "Cohomology of S^quotient Q ⊗ S^sub S on Gr(a, b)");
        s->add_option("--a", b_a, "Rank of the tautological subbundle")->required();
        s->add_option("--b", b_b, "Ambient dimension")->required();
        s->add_option("--quotient", b_q, "Weight on Q (length b-a)");
        s->add_option("--sub", b_s, "Weight on S (length a)");
        s->callback([&] {
            action = [&] {
                rep.command = "bwb";
                if (b_a > b_b) {
                    throw PreconditionError("Gr(a, b) needs a <= b");
                }
                const DominantWeight q = b_q.empty() ? DominantWeight::zero(b_b - b_a) : parse_weight(b_q, b_b - b_a);
                const DominantWeight sw = b_s.empty() ? DominantWeight::zero(b_a) : parse_weight(b_s, b_a);
                rep.parameters["a"] = b_a;
                rep.parameters["b"] = b_b;
                rep.parameters["quotient"] = to_json(q);
                rep.parameters["sub"] = to_json(sw);
                const BwbResult h = bwb(GrWeight(b_a, b_b, q, sw));
                if (h) {
                    rep.results["vanishes"] = false;
                    rep.results["degree"] = h->degree;
                    rep.results["weight"] = to_json(h->weight);
                    rep.results["dimension"] = to_json(weyl_dimension(h->weight));
                } else {
                    rep.results["vanishes"] = true;
                }
            };
        });
    }

    // poincare
    std::optional<int> p_m, p_n;
    std::vector<int> p_pos;
    {
        auto *s = sub("poincare", "Centred Poincaré polynomial of Gr(m, n)");
        s->add_option("--m", p_m, "Subspace dimension");
        s->add_option("--n", p_n, "Ambient dimension");
        s->add_option("mn", p_pos, "m n")->expected(0, 2);
        s->callback([&] {
            action = [&] {
                rep.command = "poincare";
                if (!p_pos.empty()) {
                    if (p_pos.size() != 2 || p_m || p_n) {
                        throw UsageError("poincare takes either 'm n' or --m/--n");
                    }
                    p_m = p_pos[0];
                    p_n = p_pos[1];
                }
                if (!p_m || !p_n) {
                    throw UsageError("poincare needs m and n");
                }
                rep.parameters["m"] = *p_m;
                rep.parameters["n"] = *p_n;
                const QPolynomial p = poincare_centered(*p_m, *p_n);
                rep.results["coefficients"] = to_json(p);
                rep.results["polynomial"] = p.to_string();
                rep.results["total"] = to_json(p.at_one());
                rep.results["palindromic"] = p == p.bar();
            };
        });
    }

    // betti
    int bt_i = 0, bt_l = 0;
    std::optional<int> bt_r;
    {
        auto *s = sub("betti", "Partitions in the (i-l) × l box with r boxes");
        s->add_option("--i", bt_i, "i")->required();
        s->add_option("--l", bt_l, "l")->required();
        s->add_option("--r", bt_r, "Box count (all r when omitted)");
        s->callback([&] {
            action = [&] {
                rep.command = "betti";
                rep.parameters["i"] = bt_i;
                rep.parameters["l"] = bt_l;
                if (bt_r) {
                    rep.parameters["r"] = *bt_r;
                    rep.results["betti"] = to_json(betti(bt_i, bt_l, *bt_r));
                } else {
                    json all = json::array();
                    for (int r = 0; r <= bt_l * (bt_i - bt_l); ++r) {
                        all.push_back(to_json(betti(bt_i, bt_l, r)));
                    }
                    rep.results["betti"] = all;
                }
                rep.results["gaussianBinomial"] = gaussian_binomial(bt_i, bt_l).to_string();
            };
        });
    }

    // rickard-catalog
    int rc_k = 0;
    {
        auto *s = sub("rickard-catalog", "Terms of the complex of kernels with their internal shifts");
        s->add_option("--k", rc_k, "Rank")->required();
        s->callback([&] {
            action = [&] {
                rep.command = "rickard-catalog";
                rep.parameters["k"] = rc_k;
                json arr = json::array();
                for (const auto &t : term_catalog(rc_k)) {
                    arr.push_back({{"i", t.i}, {"shift", t.internal_shift}, {"supportRankAtMost", t.support_rank_bound}});
                }
                rep.results["terms"] = arr;
            };
        });
    }

    // rickard-cancel
    int rx_i = 0;
    {
        auto *s = sub("rickard-cancel", "Cancellation matching of the Betti copies for term i");
        s->add_option("--i", rx_i, "Term index i >= 1")->required();
        s->callback([&] {
            action = [&] {
                rep.command = "rickard-cancel";
                rep.parameters["i"] = rx_i;
                const Matching m = cancellation_matching(rx_i);
                json pairs = json::array();
                for (const auto &[a, b] : m.pairs) {
                    pairs.push_back(json::array({to_json(a), to_json(b)}));
                }
                rep.results["pairs"] = m.pairs.size();
                rep.results["matching"] = pairs;
                rep.results["leftover"] = to_json(m.leftover);
                rep.results["leftoverDegreeAlternate"] = m.alternate_leftover_degree;
                rep.status = Status::pass;
            };
        });
    }

    // lascoux
    std::string ls_kind;
    std::size_t ls_k = 0, ls_i = 0, ls_N = 0, ls_l = 0;
    std::string ls_mu, ls_lambda;
    {
        auto *s = sub("lascoux", "Lascoux resolution terms");
        s->add_option("--kind", ls_kind, "resolution | main | de-rham")
            ->required()
            ->check(CLI::IsMember({"resolution", "main", "de-rham"}));
        s->add_option("--k", ls_k, "Rank (resolution, main)");
        s->add_option("--i", ls_i, "i (resolution, de-rham)");
        s->add_option("--l", ls_l, "l (de-rham)");
        s->add_option("--N", ls_N, "Ambient dimension (main)");
        s->add_option("--mu", ls_mu, "Weight on V^v (main)");
        s->add_option("--lambda", ls_lambda, "Weight on V' (main)");
        s->callback([&] {
            action = [&] {
                rep.command = "lascoux";
                rep.parameters["kind"] = ls_kind;
                LascouxSetup setup;
                if (ls_kind == "resolution") {
                    rep.parameters["k"] = ls_k;
                    rep.parameters["i"] = ls_i;
                    setup = resolution_setup(ls_k, ls_i);
                } else if (ls_kind == "main") {
                    const DominantWeight mu = ls_mu.empty() ? DominantWeight::zero(ls_k) : parse_weight(ls_mu, ls_k);
                    const DominantWeight lambda =
                        ls_lambda.empty() ? DominantWeight::zero(ls_k) : parse_weight(ls_lambda, ls_k);
                    rep.parameters["k"] = ls_k;
                    rep.parameters["N"] = ls_N;
                    rep.parameters["mu"] = to_json(mu);
                    rep.parameters["lambda"] = to_json(lambda);
                    setup = main_theorem_setup(ls_k, ls_N, mu, lambda);
                } else {
                    rep.parameters["i"] = ls_i;
                    rep.parameters["l"] = ls_l;
                    setup = de_rham_setup(ls_i, ls_l);
                }
                const auto terms = lascoux_terms(setup);
                rep.results["terms"] = to_json(terms, setup);
                rep.results["concentrated"] = all_concentrated(terms);
                if (ls_kind == "resolution") {
                    json needs = json::array();
                    for (const auto &[index, c] : boundary_contributions(terms, ls_k)) {
                        needs.push_back({{"index", index}, {"lambda", to_json(c.external.at(labels::v_prime))}});
                    }
                    rep.results["needsWindowResolution"] = needs;
                }
            };
        });
    }

    // verify-*
    std::size_t vc_k = 2, vc_N = 5;
    int vc_r = 4;
    {
        auto *s = sub("verify-cor-inv", "S^lambda ⊗ Λ^r gl_k stays in [-k, N-k) for -1 <= lambda_i <= N-2k");
        s->add_option("--k", vc_k, "Rank")->capture_default_str();
        s->add_option("--N", vc_N, "Ambient dimension")->capture_default_str();
        s->add_option("--max-r", vc_r, "Largest exterior degree")->capture_default_str();
        s->callback([&] {
            action = [&] {
                rep.command = "verify-cor-inv";
                rep.parameters["k"] = vc_k;
                rep.parameters["N"] = vc_N;
                rep.parameters["maxR"] = vc_r;
                Verdict v = verify_cor_inv(vc_k, vc_N, vc_r);
                v.merge(verify_wedge_bounds(vc_k));
                add_verdict(rep, v);
            };
        });
    }
    std::size_t vr_k = 3;
    {
        auto *s = sub("verify-lem-resolni", "Resolution terms have V' weights in the [0, k] box, for every i <= k");
        s->add_option("--k", vr_k, "Largest rank (all ranks 1..k are checked)")->capture_default_str();
        s->callback([&] {
            action = [&] {
                rep.command = "verify-lem-resolni";
                rep.parameters["k"] = vr_k;
                Verdict v;
                for (std::size_t k = 1; k <= vr_k; ++k) {
                    v.merge(verify_lem_resolni(k));
                }
                add_verdict(rep, v);
            };
        });
    }
    std::size_t vg_k = 4;
    {
        auto *s = sub("verify-grade-restriction", "γ_i-weight ranges and the grade restriction rule at κ = 0");
        s->add_option("--k", vg_k, "Largest rank (all ranks 1..k are checked)")->capture_default_str();
        s->callback([&] {
            action = [&] {
                rep.command = "verify-grade-restriction";
                rep.parameters["k"] = vg_k;
                Verdict v;
                for (std::size_t k = 1; k <= vg_k; ++k) {
                    v.merge(verify_grade_restriction(k));
                }
                add_verdict(rep, v);
            };
        });
    }
    std::size_t ve_k = 2, ve_N = 4;
    {
        auto *s = sub("verify-eq-las", "Lascoux terms of the main pushforward have V' weights in [0, N)");
        s->add_option("--k", ve_k, "Rank")->capture_default_str();
        s->add_option("--N", ve_N, "Ambient dimension")->capture_default_str();
        s->callback([&] {
            action = [&] {
                rep.command = "verify-eq-las";
                rep.parameters["k"] = ve_k;
                rep.parameters["N"] = ve_N;
                add_verdict(rep, verify_eq_las(ve_k, ve_N));
            };
        });
    }

    auto emit_error = [&](const std::string &command, const std::string &message) {
        err << "windowcalc: " << message << "\n";
        if (as_json) {
            json j;
            j["schemaVersion"] = schema_version;
            j["command"] = command;
            j["error"] = message;
            j["pass"] = to_string(Status::not_applicable);
            out << j.dump(2) << "\n";
        }
    };

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        as_json = as_json || std::find(args.begin(), args.end(), "--json") != args.end();
        emit_error("", e.what());
        err << app.help();
        return 2;
    }
    if (!action) {
        emit_error("", "no subcommand");
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const PreconditionError &e) {
        emit_error(rep.command, e.what());
        return 2;
    } catch (const UsageError &e) {
        emit_error(rep.command, e.what());
        return 2;
    } catch (const ConsistencyError &e) {
        rep.status = Status::fail;
        rep.results["error"] = e.what();
        err << "windowcalc: internal consistency check failed: " << e.what() << "\n";
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (timing) {
        rep.elapsed_ms = elapsed;
        err << "elapsed " << elapsed << " ms\n";
    }
    if (as_json) {
        out << rep.to_json().dump(2) << "\n";
    } else {
        print_table(out, rep);
    }
    return rep.status == Status::fail ? 1 : 0;
}

inline int run(int argc, char **argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace windowcalc::cli

#endif
