#include <satforge/analysis.hh>
#include <satforge/canonical.hh>
#include <satforge/constructions.hh>
#include <satforge/errors.hh>
#include <satforge/graph_io.hh>
#include <satforge/reproduce.hh>
#include <satforge/search.hh>
#include <satforge/support.hh>

#include <claims_registry.hh>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <string>

using nlohmann::json;
using std::map;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace satforge
{
    using std::to_string;

    namespace
    {
        // Fills actual and detail; passed is the return value.
        using Check = std::function<bool (const json & expected, json & actual, string & detail)>;

        auto triangle_names(const LabeledGraph & g) -> vector<vector<string>>
        {
            vector<vector<string>> result;
            auto & graph = g.graph;
            for (Vertex a = 0; a < graph.order(); ++a)
                for (auto b : graph.neighbors(a))
                    if (b > a)
                        for (auto c : graph.neighbors(a) & graph.neighbors(b))
                            if (c > b) {
                                vector<string> names{ vertex_name(g, a), vertex_name(g, b), vertex_name(g, c) };
                                std::sort(names.begin(), names.end());
                                result.push_back(names);
                            }
            std::sort(result.begin(), result.end());
            return result;
        }

        auto note(string & detail, const string & line) -> void
        {
            if (! detail.empty())
                detail += "; ";
            detail += line;
        }

        auto check_family_member(const LabeledGraph & g, unsigned s, unsigned t, const string & what, string & detail) -> bool
        {
            bool ok = true;
            if (! is_saturated(g.graph, s)) {
                note(detail, what + " not K" + to_string(s) + "-saturated");
                ok = false;
            }
            if (min_degree(g.graph) != t) {
                note(detail, what + " has minimum degree " + to_string(min_degree(g.graph)));
                ok = false;
            }
            return ok;
        }

        auto gadget_triangles(const json & expected, json & actual, string & detail) -> bool
        {
            bool ok = true;
            for (auto & id : appendix_ids()) {
                auto g = appendix_graph(id);
                auto found = triangle_names(g);
                auto want = expected.at(id).at("triangles").get<vector<vector<string>>>();
                std::sort(want.begin(), want.end());
                actual[id] = found.size();
                if (found != want || found.size() != expected.at(id).at("count").get<size_t>()) {
                    note(detail, id + " inventory differs");
                    ok = false;
                }
            }
            return ok;
        }

        auto h_family_grid(const json & expected, json & actual, string & detail) -> bool
        {
            auto t_range = expected.at("t").get<vector<unsigned>>();
            auto offsets = expected.at("n_offset").get<vector<size_t>>();
            size_t checked = 0;
            bool ok = true;
            for (auto t = t_range[0]; t <= t_range[1]; ++t)
                for (auto n = 2 * size_t(t) + offsets[0]; n <= 2 * size_t(t) + offsets[1]; ++n) {
                    auto g = h_graph(t, n);
                    auto what = "H_" + to_string(t) + "(" + to_string(n) + ")";
                    ok = check_family_member(g, 4, t, what, detail) && ok;
                    auto k3 = count_cliques(g.graph, 3).count;
                    if (long(k3) != long(2 * n + 2 * t) - 12) {
                        note(detail, what + " has " + to_string(k3) + " triangles");
                        ok = false;
                    }
                    ++checked;
                }
            actual["checked"] = checked;
            return ok;
        }

        auto f_family_slope(const json & expected, json & actual, string & detail) -> bool
        {
            auto steps = expected.at("steps").get<size_t>();
            bool ok = true;
            for (auto & tuple : expected.at("tuples")) {
                auto s = tuple.at("s").get<unsigned>(), r = tuple.at("r").get<unsigned>(), t = tuple.at("t").get<unsigned>();
                auto first = 2 * size_t(s - 2) + 2 * size_t(t);
                vector<long> slopes;
                uint64_t previous = 0;
                for (auto n = first; n <= first + steps; ++n) {
                    auto g = f_graph(s, t, n);
                    ok = check_family_member(g, s, t, "F_{" + to_string(s) + "," + to_string(t) + "}(" + to_string(n) + ")", detail) && ok;
                    auto k = count_cliques(g.graph, r).count;
                    if (n > first)
                        slopes.push_back(long(k) - long(previous));
                    previous = k;
                }
                auto want = tuple.at("slope").get<long>();
                if (std::any_of(slopes.begin(), slopes.end(), [&] (long d) { return d != want; })) {
                    note(detail, "slope differs for s=" + to_string(s) + " r=" + to_string(r) + " t=" + to_string(t));
                    ok = false;
                }
                actual.push_back({ { "s", s }, { "r", r }, { "t", t }, { "first_n", first }, { "slopes", slopes } });
            }
            return ok;
        }

        auto first_feasible_r(unsigned t) -> size_t
        {
            for (auto n = 2 * size_t(t) + 13; n < 2 * size_t(t) + 200; ++n) {
                try {
                    padding_plan(complete_to_support(r_core()), t, n);
                    return n;
                }
                catch (const PreconditionError &) {
                }
            }
            throw VerificationError{ "no feasible order for the r family" };
        }

        auto r_family_slope(const json & expected, json & actual, string & detail) -> bool
        {
            auto t_values = expected.at("t").get<vector<unsigned>>();
            auto want = expected.at("slope").get<long>();
            auto steps = expected.at("steps").get<size_t>();
            bool ok = true;
            for (auto t : t_values) {
                auto first = first_feasible_r(t);
                vector<long> slopes;
                uint64_t previous = 0;
                for (auto n = first; n <= first + steps; ++n) {
                    auto g = r_graph(t, n);
                    ok = check_family_member(g, 5, t, "R_" + to_string(t) + "(" + to_string(n) + ")", detail) && ok;
                    auto k = count_cliques(g.graph, 3).count;
                    if (n > first)
                        slopes.push_back(long(k) - long(previous));
                    previous = k;
                }
                if (std::any_of(slopes.begin(), slopes.end(), [&] (long d) { return d != want; })) {
                    note(detail, "slope differs for t=" + to_string(t));
                    ok = false;
                }
                actual.push_back({ { "t", t }, { "first_n", first }, { "slopes", slopes } });
            }
            return ok;
        }

        auto construction_goldens(const json & expected, json & actual, string & detail) -> bool
        {
            bool ok = true;
            auto compare = [&] (const string & what, uint64_t found, uint64_t want) {
                actual[what] = found;
                if (found != want) {
                    note(detail, what + " = " + to_string(found) + ", expected " + to_string(want));
                    ok = false;
                }
            };
            compare("h_core_triangles", count_cliques(h_core().graph, 3).count, expected.at("h_core_triangles").get<uint64_t>());
            for (auto & e : expected.at("h_graph")) {
                auto t = e.at("t").get<unsigned>();
                auto n = e.at("n").get<size_t>();
                compare("H_" + to_string(t) + "(" + to_string(n) + ").k3", count_cliques(h_graph(t, n).graph, 3).count, e.at("k3").get<uint64_t>());
            }
            for (auto & e : expected.at("f_graph")) {
                auto s = e.at("s").get<unsigned>(), t = e.at("t").get<unsigned>();
                auto n = e.at("n").get<size_t>();
                auto g = f_graph(s, t, n);
                auto name = "F_{" + to_string(s) + "," + to_string(t) + "}(" + to_string(n) + ")";
                compare(name + ".k3", count_cliques(g.graph, 3).count, e.at("k3").get<uint64_t>());
                if (e.contains("k4"))
                    compare(name + ".k4", count_cliques(g.graph, 4).count, e.at("k4").get<uint64_t>());
            }
            for (auto & e : expected.at("r_graph")) {
                auto t = e.at("t").get<unsigned>();
                auto n = e.at("n").get<size_t>();
                compare("R_" + to_string(t) + "(" + to_string(n) + ").k3", count_cliques(r_graph(t, n).graph, 3).count, e.at("k3").get<uint64_t>());
            }
            return ok;
        }

        auto n_range(const json & expected) -> vector<size_t>
        {
            auto bounds = expected.at("n").get<vector<size_t>>();
            vector<size_t> result;
            for (auto n = bounds[0]; n <= bounds[1]; ++n)
                result.push_back(n);
            return result;
        }

        // Searched minimum equals the formula and, when unique_ehm is set, the only
        // extremal graph is K_{s-2} + empty.
        auto check_table(unsigned r, unsigned s, std::optional<unsigned> t, const vector<size_t> & orders,
            const std::function<long (size_t)> & formula, bool unique_ehm, json & actual, string & detail) -> bool
        {
            bool ok = true;
            for (auto n : orders) {
                SearchQuery q;
                q.n = n;
                q.r = r;
                q.s = s;
                q.t = t;
                auto report = sat_value(q);
                json row = { { "n", n }, { "r", r }, { "s", s }, { "extremal", report.extremal.size() } };
                row["minimum"] = report.minimum ? json(*report.minimum) : json("infeasible");
                if (t)
                    row["t"] = *t;
                actual.push_back(row);

                auto what = "n=" + to_string(n) + " r=" + to_string(r) + " s=" + to_string(s);
                if (! report.exhaustive || ! report.minimum || long(*report.minimum) != formula(n)) {
                    note(detail, what + ": minimum differs");
                    ok = false;
                }
                if (unique_ehm && report.extremal != vector<string>{ canonical_form(ehm(s, n).graph) }) {
                    note(detail, what + ": extremal graphs differ");
                    ok = false;
                }
            }
            return ok;
        }

        auto ehm_small(const json & expected, json & actual, string & detail) -> bool
        {
            auto orders = n_range(expected);
            bool ok = check_table(2, 3, std::nullopt, orders, [] (size_t n) { return long(n) - 1; }, true, actual, detail);
            return check_table(2, 4, std::nullopt, orders, [] (size_t n) { return 2 * long(n) - 3; }, true, actual, detail) && ok;
        }

        auto k3_degree2_small(const json & expected, json & actual, string & detail) -> bool
        {
            return check_table(2, 3, 2u, n_range(expected), [] (size_t n) { return 2 * long(n) - 5; }, false, actual, detail);
        }

        auto k3_k4_small(const json & expected, json & actual, string & detail) -> bool
        {
            return check_table(3, 4, std::nullopt, n_range(expected), [] (size_t n) { return long(n) - 2; }, true, actual, detail);
        }

        auto low_degree_classification(const json & expected, json & actual, string & detail) -> bool
        {
            bool ok = true;
            for (auto n : n_range(expected)) {
                auto ehm_form = canonical_form(ehm(4, n).graph);
                auto near_form = canonical_form(near_clique_graph(4, n).graph);
                size_t degree2 = 0, degree3 = 0;
                enumerate_saturated(n, 4, std::nullopt, DegreeFilter::exact, [&] (const Graph & g) {
                    auto delta = min_degree(g);
                    if (delta > 3)
                        return;
                    auto form = canonical_form(g);
                    auto found = classify_low_degree(g, 4);
                    bool matches = false;
                    if (delta == 2) {
                        ++degree2;
                        matches = form == ehm_form && found.kind == LowDegreeKind::ehm;
                    }
                    else {
                        ++degree3;
                        if (found.kind == LowDegreeKind::near_clique)
                            matches = form == near_form;
                        else if (found.kind == LowDegreeKind::w)
                            matches = form == canonical_form(w_graph(4, found.m1, found.m3, found.m4).graph);
                    }
                    if (! matches) {
                        note(detail, "n=" + to_string(n) + ": unclassified graph " + to_graph6(g));
                        ok = false;
                    }
                });

                bool counts_ok = degree2 == 1 && degree3 == expected.at("degree3_classes").at(to_string(n)).get<size_t>();
                bool w_ok = true;
                for (size_t m1 = 1; m1 + 5 <= n; ++m1) {
                    auto k3 = count_cliques(w_graph(4, m1, n - 4 - m1, 1).graph, 3).count;
                    w_ok = w_ok && long(k3) == 2 * long(n) - 7;
                }
                if (! counts_ok || ! w_ok) {
                    note(detail, "n=" + to_string(n) + ": class counts or W triangle counts differ");
                    ok = false;
                }
                actual.push_back({ { "n", n }, { "degree2_classes", degree2 }, { "degree3_classes", degree3 }, { "w_counts_ok", w_ok } });
            }
            return ok;
        }

        auto rules_lemma(const json & expected, json & actual, string & detail) -> bool
        {
            size_t searched_vertices = 0, grid_vertices = 0, violations = 0;
            for (size_t n = 5; n <= expected.at("max_n").get<size_t>(); ++n)
                enumerate_saturated(n, 4, std::nullopt, DegreeFilter::exact, [&] (const Graph & g) {
                    for (Vertex x = 0; x < g.order(); ++x)
                        if (g.degree(x) == 4) {
                            auto p = partition_neighborhood(g, x);
                            violations += check_rules_lemma(g, p, TargetFamily::lemma).size();
                            violations += check_rules_lemma(g, p, TargetFamily::refined).size();
                            ++searched_vertices;
                        }
                });
            for (unsigned t = 4; t <= 8; ++t)
                for (auto n = 2 * size_t(t) + 1; n <= 2 * size_t(t) + 40; ++n) {
                    auto h = h_graph(t, n);
                    for (auto x : h.label("X")) {
                        auto p = partition_neighborhood(h.graph, x, true);
                        violations += check_rules_lemma(h.graph, p, TargetFamily::lemma).size();
                        violations += check_rules_lemma(h.graph, p, TargetFamily::refined).size();
                        ++grid_vertices;
                    }
                }
            actual = { { "searched_vertices", searched_vertices }, { "grid_vertices", grid_vertices }, { "violations", violations } };
            if (violations != expected.at("violations").get<size_t>())
                note(detail, to_string(violations) + " violations");
            return violations == expected.at("violations").get<size_t>() && searched_vertices > 0 && grid_vertices > 0;
        }

        auto lower_bound_certificates(const json & expected, json & actual, string & detail) -> bool
        {
            bool ok = true;
            auto bound = expected.at("bound").get<uint64_t>();
            auto run = [&] (const string & name, const Graph & g) {
                auto cert = verify_lb3(g, 5, 18);
                bool valid = revalidate(g, cert) && cert.bound == bound && cert.triangles >= bound;
                actual[name] = { { "case", to_string(cert.kind) }, { "triangles", cert.triangles }, { "certified", cert.certified },
                    { "bound", cert.bound }, { "valid", valid } };
                if (! valid) {
                    note(detail, name + " certificate invalid");
                    ok = false;
                }
            };
            run("R_18(50)", r_graph(18, 50).graph);
            run("F_{5,18}(50)", f_graph(5, 18, 50).graph);
            return ok;
        }

        auto support_properties(const json &, json & actual, string & detail) -> bool
        {
            struct Family
            {
                string name;
                SupportStructure core;
                vector<std::pair<unsigned, size_t>> paddings;
            };
            vector<Family> families = {
                { "h", h_core(), { { 4, 14 }, { 5, 12 }, { 7, 20 } } },
                { "f4", f_core(4), { { 5, 20 }, { 6, 24 } } },
                { "f5", f_core(5), { { 7, 26 }, { 9, 30 } } },
                { "r", r_core(), { { 10, 40 }, { 12, 44 } } },
            };

            bool ok = true;
            for (auto & family : families) {
                size_t added = 0;
                bool safe = true;
                auto completed = complete_to_support(family.core, [&] (const SupportStructure & now, Edge) {
                    ++added;
                    safe = safe && check_pre_support(now).holds();
                });
                size_t again = 0;
                auto twice = complete_to_support(completed, [&] (const SupportStructure &, Edge) { ++again; });
                auto m = completed.graph.order();
                bool idempotent = again == 0 && twice.graph == completed.graph;
                bool supported = check_support(completed).holds();
                bool bounded = added <= m * (m - 1) / 2;

                bool census = true, sound = true;
                for (auto [t, n] : family.paddings) {
                    auto plan = padding_plan(completed, t, n);
                    auto g = assemble(completed, plan);
                    sound = sound && is_saturated(g.graph, completed.s) && min_degree(g.graph) == t;
                    auto without_x = g.graph.vertices() - g.label("X");
                    for (unsigned r : { 3u, 4u }) {
                        auto through_x = count_cliques(g.graph, r).count - count_cliques_within(g.graph, without_x, r);
                        census = census && through_x == plan.x_count * count_cliques_within(g.graph, completed.A, r - 1);
                    }
                }
                actual[family.name] = { { "added", added }, { "per_step_safe", safe }, { "idempotent", idempotent },
                    { "support", supported }, { "x_census", census }, { "sound", sound } };
                if (! (safe && idempotent && supported && bounded && census && sound)) {
                    note(detail, family.name + " family fails a support property");
                    ok = false;
                }
            }
            return ok;
        }

        auto degree4_substitute(const json & expected, json & actual, string & detail) -> bool
        {
            bool ok = true;
            for (auto & row : expected.at("table")) {
                auto n = row.at("n").get<size_t>();
                SearchQuery q;
                q.n = n;
                q.r = 3;
                q.s = 4;
                q.t = 4;
                auto report = sat_value(q);
                vector<Edge> edges;
                for (auto & e : row.at("extremal_edges"))
                    edges.push_back(make_edge(e[0].get<Vertex>(), e[1].get<Vertex>()));
                auto frozen = canonical_form(Graph::from_edges(n, edges));
                bool match = report.exhaustive && report.minimum == row.at("min_k3").get<uint64_t>() &&
                    report.extremal.size() == row.at("extremal_classes").get<size_t>() &&
                    std::find(report.extremal.begin(), report.extremal.end(), frozen) != report.extremal.end();
                actual["table"].push_back({ { "n", n }, { "min_k3", report.minimum ? json(*report.minimum) : json("infeasible") },
                    { "extremal_classes", report.extremal.size() } });
                if (! match) {
                    note(detail, "n=" + to_string(n) + " table row differs");
                    ok = false;
                }
            }

            auto & random = expected.at("random");
            auto n = random.at("n").get<size_t>();
            auto samples = random.at("samples").get<size_t>();
            auto floor = random.at("floor").get<uint64_t>();
            std::mt19937_64 rng(random.at("seed").get<uint64_t>());
            vector<Edge> pairs;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    pairs.emplace_back(u, v);
            size_t kept = 0;
            uint64_t smallest = 0;
            for (size_t i = 0; i < samples; ++i) {
                std::shuffle(pairs.begin(), pairs.end(), rng);
                Graph g(n);
                for (auto [u, v] : pairs)
                    if (! addition_creates_clique(g, u, v, 4))
                        g.add_edge(u, v);
                if (min_degree(g) < 4)
                    continue;
                auto k3 = count_cliques(g, 3).count;
                smallest = kept == 0 ? k3 : std::min(smallest, k3);
                ++kept;
            }
            actual["random"] = { { "kept", kept }, { "smallest_k3", smallest } };
            if (kept == 0 || smallest < floor) {
                note(detail, "randomized saturations fell below " + to_string(floor));
                ok = false;
            }
            return ok;
        }

        auto graph_census(const json & expected, json & actual, string & detail) -> bool
        {
            auto want = expected.at("counts").get<vector<uint64_t>>();
            vector<uint64_t> found;
            for (size_t n = 1; n <= want.size(); ++n) {
                SearchCounters counters;
                enumerate_graphs(n, 0, [] (const Graph &) {}, {}, &counters);
                found.push_back(counters.graphs);
            }
            actual["counts"] = found;
            if (found != want)
                note(detail, "census differs");
            return found == want;
        }

        auto saturated_census(const json & expected, json & actual, string & detail) -> bool
        {
            bool ok = true;
            for (auto & row : expected) {
                auto s = row.at("s").get<unsigned>();
                auto n = row.at("n").get<size_t>();
                map<string, size_t> by_degree;
                size_t classes = 0;
                enumerate_saturated(n, s, std::nullopt, DegreeFilter::exact, [&] (const Graph & g) {
                    ++classes;
                    ++by_degree[to_string(min_degree(g))];
                });
                json found = { { "s", s }, { "n", n }, { "classes", classes }, { "by_min_degree", by_degree } };
                actual.push_back(found);
                if (found != row) {
                    note(detail, "s=" + to_string(s) + " n=" + to_string(n) + " differs");
                    ok = false;
                }
            }
            return ok;
        }

        auto checks() -> const map<string, Check> &
        {
            static const map<string, Check> table = {
                { "gadget-triangles", gadget_triangles },
                { "h-family-grid", h_family_grid },
                { "f-family-slope", f_family_slope },
                { "r-family-slope", r_family_slope },
                { "construction-goldens", construction_goldens },
                { "ehm-small", ehm_small },
                { "k3-degree2-small", k3_degree2_small },
                { "k3-k4-small", k3_k4_small },
                { "low-degree-classification", low_degree_classification },
                { "rules-lemma", rules_lemma },
                { "triangle-lower-bound-certificates", lower_bound_certificates },
                { "support-properties", support_properties },
                { "degree4-substitute", degree4_substitute },
                { "graph-census", graph_census },
                { "saturated-census", saturated_census },
            };
            return table;
        }
    }

    auto claims_registry() -> const json &
    {
        static const json registry = json::parse(detail::claims_registry_json);
        return registry;
    }

    auto claim_ids() -> vector<string>
    {
        vector<string> result;
        for (auto & claim : claims_registry().at("claims"))
            result.push_back(claim.at("id").get<string>());
        return result;
    }

    auto reproduce(const string & id) -> ClaimResult
    {
        auto & claims = claims_registry().at("claims");
        auto entry = std::find_if(claims.begin(), claims.end(), [&] (const json & c) { return c.at("id") == id; });
        auto check = checks().find(id);
        if (entry == claims.end() || check == checks().end())
            throw PreconditionError{ "unknown claim '" + id + "'" };

        ClaimResult result;
        result.id = id;
        result.expected = entry->at("expected");
        auto start = std::chrono::steady_clock::now();
        result.passed = check->second(result.expected, result.actual, result.detail);
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    auto to_json(const ClaimResult & result) -> json
    {
        return {
            { "id", result.id },
            { "status", result.passed ? "pass" : "fail" },
            { "actual", result.actual },
            { "detail", result.detail },
            { "seconds", result.seconds }
        };
    }
}
