#include <cli.hh>

#include <satforge/analysis.hh>
#include <satforge/bounds.hh>
#include <satforge/constructions.hh>
#include <satforge/errors.hh>
#include <satforge/graph_io.hh>
#include <satforge/reproduce.hh>
#include <satforge/search.hh>
#include <satforge/support.hh>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

using nlohmann::json;
using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace satforge::cli
{
    namespace
    {
        // Every flag any subcommand reads; each subcommand binds the ones it uses.
        struct Options
        {
            string family;
            string graph;
            optional<size_t> n;
            optional<unsigned> r, s, t;
            optional<size_t> m1, m3, m4;
            optional<Vertex> x;
            string id;
            string format = "graph6";
            string out;
            string manifest;
            string target_family = "lemma";
            size_t shards = 1;
            optional<size_t> shard_id;
            size_t threads = 0;
            uint64_t budget = 0;
            double seconds = 0;
            bool at_least = false;
            bool allow_large = false;
            bool any_degree = false;
            bool all = false;
            bool core = false;
            vector<string> merge;
        };

        auto read_text(const string & path) -> string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw PreconditionError{ "cannot read '" + path + "'" };
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        // A path to a graph6 file (first graph used) or a graph6 string.
        auto read_graph(const string & source) -> Graph
        {
            if (std::filesystem::is_regular_file(source)) {
                auto graphs = read_graph6_lines(read_text(source));
                if (graphs.empty())
                    throw PreconditionError{ "no graph in '" + source + "'" };
                return graphs.front();
            }
            return from_graph6(source);
        }

        auto set_to_json(const VertexSet & set) -> json
        {
            return set.to_vector();
        }

        auto set_from_json(const json & j) -> VertexSet
        {
            VertexSet result;
            for (auto & v : j)
                result.set(v.get<Vertex>());
            return result;
        }

        auto labels_json(const LabeledGraph & g) -> json
        {
            json labels = json::object();
            for (auto & [name, set] : g.labels)
                labels[name] = set_to_json(set);
            vector<string> names;
            for (Vertex v = 0; v < g.graph.order(); ++v)
                names.push_back(vertex_name(g, v));
            return { { "order", g.graph.order() }, { "labels", labels }, { "names", names } };
        }

        auto edges_json(const Graph & g) -> json
        {
            json result = json::array();
            for (auto [u, v] : g.edges())
                result.push_back({ u, v });
            return result;
        }

        auto render(const LabeledGraph & g, const string & format, const string & name) -> string
        {
            if (format == "graph6")
                return to_graph6(g.graph) + "\n";
            if (format == "dot") {
                DotOptions options;
                options.name = name;
                for (Vertex v = 0; v < g.graph.order(); ++v)
                    options.vertex_labels[v] = vertex_name(g, v);
                return to_dot(g.graph, options);
            }
            auto j = labels_json(g);
            j["graph6"] = to_graph6(g.graph);
            j["edges"] = edges_json(g.graph);
            return j.dump(2) + "\n";
        }

        auto write_file(const string & path, const string & content) -> void
        {
            std::ofstream file(path, std::ios::binary);
            if (! file)
                throw PreconditionError{ "cannot write '" + path + "'" };
            file << content;
        }

        // Records what a run read and wrote, with digests, next to its main output.
        class Manifest
        {
        public:
            Manifest(string subcommand, vector<string> args) :
                _subcommand(std::move(subcommand)),
                _args(std::move(args)),
                _start(std::chrono::steady_clock::now())
            {
            }

            auto input(const string & source) -> void
            {
                auto bytes = std::filesystem::is_regular_file(source) ? read_text(source) : source;
                _inputs.push_back({ { "source", source }, { "fnv1a64", fnv1a_hex(bytes) } });
            }

            auto output(const string & path, const string & content) -> void
            {
                write_file(path, content);
                _outputs.push_back({ { "path", path }, { "fnv1a64", fnv1a_hex(content) } });
            }

            auto write(const string & path) const -> void
            {
                json j = {
                    { "subcommand", _subcommand },
                    { "arguments", _args },
                    { "inputs", _inputs },
                    { "outputs", _outputs },
                    { "version", SATFORGE_VERSION },
                    { "wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count() }
                };
                write_file(path, j.dump(2) + "\n");
            }

        private:
            string _subcommand;
            vector<string> _args;
            json _inputs = json::array(), _outputs = json::array();
            std::chrono::steady_clock::time_point _start;
        };

        template <typename T>
        auto need(const optional<T> & value, const string & flag, const string & what) -> T
        {
            if (! value)
                throw CLI::ValidationError{ what + " needs " + flag };
            return *value;
        }

        auto construct(const Options & o, std::ostream & out, const vector<string> & args) -> int
        {
            auto what = "construct " + o.family;
            LabeledGraph g;
            optional<unsigned> saturation;
            json parameters = json::object();
            if (o.family == "ehm") {
                auto s = need(o.s, "--s", what);
                auto n = need(o.n, "--n", what);
                g = ehm(s, n);
                saturation = s;
                parameters = { { "s", s }, { "n", n } };
            }
            else if (o.family == "w") {
                auto s = need(o.s, "--s", what);
                auto m1 = need(o.m1, "--m1", what), m3 = need(o.m3, "--m3", what), m4 = need(o.m4, "--m4", what);
                g = w_graph(s, m1, m3, m4);
                saturation = s;
                parameters = { { "s", s }, { "m1", m1 }, { "m3", m3 }, { "m4", m4 } };
            }
            else if (o.core) {
                if (o.family != "h" && o.family != "f" && o.family != "r")
                    throw CLI::ValidationError{ "--core applies to the h, f and r families" };
                auto structure = o.family == "h" ? h_core() : o.family == "r" ? r_core() : f_core(need(o.s, "--s", what));
                structure = complete_to_support(structure);
                g.graph = structure.graph;
                g.labels = structure.labels;
                g.labels["A"] = structure.A;
                g.labels["B"] = structure.B;
                saturation = structure.s;
                parameters = { { "core", true }, { "s", structure.s } };
            }
            else if (o.family == "h") {
                auto t = need(o.t, "--t", what);
                auto n = need(o.n, "--n", what);
                g = h_graph(t, n);
                saturation = 4;
                parameters = { { "t", t }, { "n", n } };
            }
            else if (o.family == "f") {
                auto s = need(o.s, "--s", what);
                auto t = need(o.t, "--t", what);
                auto n = need(o.n, "--n", what);
                g = f_graph(s, t, n);
                saturation = s;
                parameters = { { "s", s }, { "t", t }, { "n", n } };
            }
            else if (o.family == "r") {
                auto t = need(o.t, "--t", what);
                auto n = need(o.n, "--n", what);
                g = r_graph(t, n);
                saturation = 5;
                parameters = { { "t", t }, { "n", n } };
            }
            else {
                if (o.id.empty())
                    throw CLI::ValidationError{ what + " needs --id" };
                g = appendix_graph(o.id);
                parameters = { { "id", o.id } };
            }

            auto rendered = render(g, o.format, o.family);
            if (o.out.empty())
                out << rendered;
            else {
                Manifest manifest("construct", args);
                manifest.output(o.out, rendered);
                auto labels = labels_json(g);
                labels["family"] = o.family;
                labels["parameters"] = parameters;
                if (saturation)
                    labels["s"] = *saturation;
                manifest.output(o.out + ".labels.json", labels.dump(2) + "\n");
                manifest.write(o.out + ".manifest.json");
            }

            out << "triangles=" << count_cliques(g.graph, 3).count << " delta=" << min_degree(g.graph) << " saturated=";
            if (saturation && is_saturated(g.graph, *saturation))
                out << "K" << *saturation;
            else
                out << "no";
            out << "\nk4=" << count_cliques(g.graph, 4).count << "\n";
            return exit_success;
        }

        auto verify(const Options & o, std::ostream & out) -> int
        {
            auto g = read_graph(o.graph);
            auto s = need(o.s, "--s", "verify");
            auto saturated = is_saturated(g, s);
            auto delta = g.order() ? min_degree(g) : 0;
            bool degree_ok = ! o.t || delta == *o.t;
            json j = {
                { "order", g.order() },
                { "edges", g.edge_count() },
                { "triangles", count_cliques(g, 3).count },
                { "k4", count_cliques(g, 4).count },
                { "min_degree", delta },
                { "clique_free", is_clique_free(g, s) },
                { "saturated", saturated },
                { "s", s }
            };
            if (o.t)
                j["min_degree_matches"] = degree_ok;
            out << j.dump(2) << "\n";
            return saturated && degree_ok ? exit_success : exit_claim_failed;
        }

        auto count(const Options & o, std::ostream & out) -> int
        {
            auto g = read_graph(o.graph);
            auto r = need(o.r, "--r", "count");
            out << json{ { "r", r }, { "count", count_cliques(g, r).count } }.dump() << "\n";
            return exit_success;
        }

        auto partition_json(const NeighborhoodPartition & p) -> json
        {
            json cells = json::object();
            for (auto & [s, members] : p.cells)
                cells[index_set_name(s)] = set_to_json(members);
            json nx = json::array();
            for (auto [a, b] : p.nx_edges)
                nx.push_back(index_set_name((1u << (a - 1)) | (1u << (b - 1))));
            return { { "x", p.x }, { "neighbors", p.neighbors }, { "nx_edges", nx }, { "cells", cells } };
        }

        auto partition(const Options & o, std::ostream & out) -> int
        {
            auto g = read_graph(o.graph);
            auto x = need(o.x, "--x", "partition");
            out << partition_json(partition_neighborhood(g, x, o.any_degree)).dump(2) << "\n";
            return exit_success;
        }

        auto rules_check(const Options & o, std::ostream & out) -> int
        {
            auto g = read_graph(o.graph);
            auto family = o.target_family == "refined" ? TargetFamily::refined : TargetFamily::lemma;
            vector<Vertex> centres;
            if (o.x)
                centres.push_back(*o.x);
            else
                for (Vertex v = 0; v < g.order(); ++v)
                    if (g.degree(v) == 4)
                        centres.push_back(v);

            json violations = json::array();
            for (auto x : centres) {
                auto p = partition_neighborhood(g, x, o.any_degree);
                for (auto & v : check_rules_lemma(g, p, family))
                    violations.push_back({ { "x", x }, { "y", v.y }, { "S", index_set_name(v.s) }, { "i", v.i } });
            }
            out << json{ { "centres", centres }, { "family", o.target_family }, { "violations", violations } }.dump(2) << "\n";
            return violations.empty() ? exit_success : exit_claim_failed;
        }

        auto classify(const Options & o, std::ostream & out) -> int
        {
            auto g = read_graph(o.graph);
            auto s = need(o.s, "--s", "classify");
            try {
                auto c = classify_low_degree(g, s);
                json j = { { "class", to_string(c.kind) }, { "min_degree", c.min_degree } };
                if (c.kind == LowDegreeKind::w)
                    j["parts"] = { c.m1, 1, c.m3, c.m4, 1 };
                out << j.dump(2) << "\n";
                return exit_success;
            }
            catch (const VerificationError & e) {
                out << json{ { "class", "unmatched" }, { "detail", e.what() } }.dump(2) << "\n";
                return exit_claim_failed;
            }
        }

        auto certificate_json(const Lb3Certificate & c) -> json
        {
            json j = {
                { "s", c.s }, { "t", c.t }, { "n", c.n }, { "edges", c.edge_count },
                { "triangles", c.triangles }, { "bound", c.bound }, { "case", to_string(c.kind) }, { "certified", c.certified }
            };
            if (c.kind == Lb3Case::every_edge_in_triangle)
                j["min_edge"] = { { "edge", { c.min_edge.first, c.min_edge.second } }, { "triangles", c.min_edge_triangles } };
            else {
                j["split_edge"] = { c.split.first, c.split.second };
                j["A"] = set_to_json(c.A);
                j["B"] = set_to_json(c.B);
                j["C"] = set_to_json(c.C);
                json witnesses = json::array();
                for (auto & [v, clique] : c.witnesses)
                    witnesses.push_back({ { "vertex", v }, { "clique", clique } });
                j["witnesses"] = witnesses;
            }
            return j;
        }

        auto lower_bound(const Options & o, std::ostream & out) -> int
        {
            auto g = read_graph(o.graph);
            auto certificate = verify_lb3(g, need(o.s, "--s", "lower-bound"), need(o.t, "--t", "lower-bound"));
            auto j = certificate_json(certificate);
            j["revalidated"] = revalidate(g, certificate);
            out << j.dump(2) << "\n";
            return j["revalidated"].get<bool>() ? exit_success : exit_claim_failed;
        }

        auto bound(const Options & o, std::ostream & out) -> int
        {
            if (o.id.empty()) {
                json list = json::array();
                for (auto & spec : bound_specs())
                    list.push_back({ { "name", spec.name }, { "formula", spec.formula }, { "hypotheses", spec.hypotheses } });
                out << list.dump(2) << "\n";
                return exit_success;
            }
            BoundParams params;
            if (o.n)
                params.n = long(*o.n);
            if (o.r)
                params.r = long(*o.r);
            if (o.s)
                params.s = long(*o.s);
            if (o.t)
                params.t = long(*o.t);
            auto value = evaluate_bound(o.id, params);
            auto spec = std::find_if(bound_specs().begin(), bound_specs().end(), [&] (const BoundSpec & b) { return b.name == o.id; });
            out << json{ { "name", o.id }, { "formula", spec->formula }, { "value", value } }.dump() << "\n";
            return exit_success;
        }

        auto search(const Options & o, std::ostream & out, const vector<string> & args) -> int
        {
            SearchReport report;
            Manifest manifest("search", args);
            if (! o.merge.empty()) {
                vector<SearchReport> parts;
                for (auto & path : o.merge) {
                    manifest.input(path);
                    parts.push_back(report_from_json(json::parse(read_text(path))));
                }
                report = merge_reports(parts);
            }
            else {
                SearchQuery q;
                q.n = need(o.n, "--n", "search");
                q.r = o.r.value_or(2);
                q.s = need(o.s, "--s", "search");
                q.t = o.t;
                q.filter = o.at_least ? DegreeFilter::at_least : DegreeFilter::exact;
                q.budget = { o.budget, o.seconds };
                q.allow_large = o.allow_large;
                validate(q);
                if (o.shard_id) {
                    auto shards = split_work(q, o.shards);
                    if (*o.shard_id >= shards.size())
                        throw CLI::ValidationError{ "--shard-id must be below --shards" };
                    report = run_shard(shards[*o.shard_id]);
                }
                else if (o.shards > 1)
                    report = run_sharded(q, o.shards, o.threads);
                else
                    report = sat_value(q);
            }

            auto j = report_to_json(report);
            if (o.shard_id)
                j["shard"] = { { "index", *o.shard_id }, { "count", o.shards } };
            auto text = j.dump(2) + "\n";
            if (o.out.empty())
                out << text;
            else {
                manifest.output(o.out, text);
                manifest.write(o.out + ".manifest.json");
                out << "minimum=" << (report.minimum ? std::to_string(*report.minimum) : "infeasible")
                    << " extremal=" << report.extremal.size() << " exhaustive=" << (report.exhaustive ? "yes" : "no") << "\n";
            }
            return exit_success;
        }

        auto verify_support(const Options & o, std::ostream & out) -> int
        {
            if (o.manifest.empty())
                throw CLI::ValidationError{ "verify-support needs --manifest" };
            auto m = json::parse(read_text(o.manifest));
            auto & sides = m.contains("A") ? m : m.at("labels");
            SupportStructure ss;
            ss.graph = read_graph(o.graph);
            ss.A = set_from_json(sides.at("A"));
            ss.B = set_from_json(sides.at("B"));
            if (o.s)
                ss.s = *o.s;
            else if (m.contains("s"))
                ss.s = m.at("s").get<unsigned>();
            else
                throw CLI::ValidationError{ "verify-support needs --s or an \"s\" entry in the manifest" };

            auto report = check_support(ss);
            json open = json::array();
            for (auto [u, v] : report.open_pairs)
                open.push_back({ u, v });
            json j = {
                { "sides_clique_free", report.pre.sides_clique_free },
                { "a_side_supported", report.pre.a_side_supported },
                { "b_side_supported", report.pre.b_side_supported },
                { "clique_free", report.pre.clique_free },
                { "pre_support", report.pre.holds() },
                { "sides_blocked", report.sides_blocked },
                { "cross_saturated", report.cross_saturated },
                { "a_side_saturated", report.a_side_saturated },
                { "b_side_saturated", report.b_side_saturated },
                { "support", report.holds() },
                { "unsupported_a", report.pre.unsupported_a },
                { "unsupported_b", report.pre.unsupported_b },
                { "open_pairs", open }
            };
            out << j.dump(2) << "\n";
            return report.holds() ? exit_success : exit_claim_failed;
        }

        auto reproduce_claims(const Options & o, std::ostream & out) -> int
        {
            auto ids = o.id.empty() ? claim_ids() : vector<string>{ o.id };
            bool all_passed = true;
            for (auto & id : ids) {
                auto result = reproduce(id);
                all_passed = all_passed && result.passed;
                out << to_json(result).dump() << "\n";
            }
            return all_passed ? exit_success : exit_claim_failed;
        }

        // Re-runs the arguments recorded in a manifest and compares output digests.
        auto replay(const Options & o, std::ostream & out, std::ostream & err) -> int
        {
            auto m = json::parse(read_text(o.manifest));
            std::ostringstream sink;
            auto code = run(m.at("arguments").get<vector<string>>(), sink, err);
            if (code != exit_success)
                return code;
            bool identical = true;
            for (auto & output : m.at("outputs")) {
                auto path = output.at("path").get<string>();
                auto digest = fnv1a_hex(read_text(path));
                bool same = digest == output.at("fnv1a64").get<string>();
                identical = identical && same;
                out << path << " " << (same ? "identical" : "differs") << "\n";
            }
            return identical ? exit_success : exit_claim_failed;
        }
    }

    auto fnv1a_hex(std::string_view bytes) -> string
    {
        uint64_t hash = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            hash ^= c;
            hash *= 0x100000001b3ULL;
        }
        char text[17];
        std::snprintf(text, sizeof(text), "%016llx", static_cast<unsigned long long>(hash));
        return text;
    }

    auto report_to_json(const SearchReport & report) -> json
    {
        auto & q = report.query;
        json query = { { "n", q.n }, { "r", q.r }, { "s", q.s }, { "filter", q.filter == DegreeFilter::exact ? "exact" : "at-least" } };
        query["t"] = q.t ? json(*q.t) : json(nullptr);
        return {
            { "query", query },
            { "minimum", report.minimum ? json(*report.minimum) : json(nullptr) },
            { "extremal", report.extremal },
            { "explored", { { "nodes", report.explored.nodes }, { "graphs", report.explored.graphs },
                              { "saturated", report.explored.saturated }, { "matching", report.explored.matching } } },
            { "exhaustive", report.exhaustive }
        };
    }

    auto report_from_json(const json & j) -> SearchReport
    {
        SearchReport report;
        auto & q = j.at("query");
        report.query.n = q.at("n").get<size_t>();
        report.query.r = q.at("r").get<unsigned>();
        report.query.s = q.at("s").get<unsigned>();
        if (! q.at("t").is_null())
            report.query.t = q.at("t").get<unsigned>();
        report.query.filter = q.at("filter") == "exact" ? DegreeFilter::exact : DegreeFilter::at_least;
        if (! j.at("minimum").is_null())
            report.minimum = j.at("minimum").get<uint64_t>();
        report.extremal = j.at("extremal").get<vector<string>>();
        auto & e = j.at("explored");
        report.explored = { e.at("nodes").get<uint64_t>(), e.at("graphs").get<uint64_t>(), e.at("saturated").get<uint64_t>(),
            e.at("matching").get<uint64_t>() };
        report.exhaustive = j.at("exhaustive").get<bool>();
        return report;
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        Options o;
        CLI::App app{ "Constructs, verifies and searches K_s-saturated graphs.", "satforge" };
        app.set_version_flag("--version", SATFORGE_VERSION);
        app.require_subcommand(1);

        auto graph_input = [&] (CLI::App * sub) {
            sub->add_option("graph", o.graph, "graph6 string or a file of graph6 lines")->required();
        };

        auto construct_cmd = app.add_subcommand("construct", "build a named construction");
        construct_cmd->add_option("family", o.family, "ehm, w, h, f, r or appendix")
            ->required()
            ->check(CLI::IsMember({ "ehm", "w", "h", "f", "r", "appendix" }));
        construct_cmd->add_option("--n", o.n, "order");
        construct_cmd->add_option("--s", o.s, "forbidden clique order");
        construct_cmd->add_option("--t", o.t, "minimum degree");
        construct_cmd->add_option("--m1", o.m1, "w: size of the first part");
        construct_cmd->add_option("--m3", o.m3, "w: size of the third part");
        construct_cmd->add_option("--m4", o.m4, "w: size of the fourth part");
        construct_cmd->add_option("--id", o.id, "appendix gadget, G1..G12");
        construct_cmd->add_flag("--core", o.core, "h, f, r: emit the completed support structure instead");
        construct_cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({ "graph6", "dot", "json" }));
        construct_cmd->add_option("--out", o.out, "write the graph here, with .labels.json and .manifest.json beside it");

        auto verify_cmd = app.add_subcommand("verify", "check K_s-saturation and minimum degree");
        graph_input(verify_cmd);
        verify_cmd->add_option("--s", o.s, "forbidden clique order")->required();
        verify_cmd->add_option("--t", o.t, "expected minimum degree");

        auto count_cmd = app.add_subcommand("count", "count K_r subgraphs");
        graph_input(count_cmd);
        count_cmd->add_option("--r", o.r, "clique order")->required();

        auto partition_cmd = app.add_subcommand("partition", "split the non-neighbours of x by neighbour trace");
        graph_input(partition_cmd);
        partition_cmd->add_option("--x", o.x, "centre vertex")->required();
        partition_cmd->add_flag("--any-degree", o.any_degree, "allow a centre of degree other than 4");

        auto rules_cmd = app.add_subcommand("rules-check", "check the forced-neighbour rules around degree-4 vertices");
        graph_input(rules_cmd);
        rules_cmd->add_option("--x", o.x, "single centre vertex (default: every degree-4 vertex)");
        rules_cmd->add_option("--family", o.target_family, "target family")->check(CLI::IsMember({ "lemma", "refined" }));
        rules_cmd->add_flag("--any-degree", o.any_degree, "allow a centre of degree other than 4");

        auto classify_cmd = app.add_subcommand("classify", "name the shape of a low-degree K_s-saturated graph");
        graph_input(classify_cmd);
        classify_cmd->add_option("--s", o.s, "forbidden clique order")->required();

        auto lower_cmd = app.add_subcommand("lower-bound", "certify the triangle lower bound for a saturated graph");
        graph_input(lower_cmd);
        lower_cmd->add_option("--s", o.s, "forbidden clique order")->required();
        lower_cmd->add_option("--t", o.t, "minimum degree")->required();

        auto bound_cmd = app.add_subcommand("bound", "evaluate a closed-form count (no --id lists them)");
        bound_cmd->add_option("--id", o.id, "formula name");
        bound_cmd->add_option("--n", o.n);
        bound_cmd->add_option("--r", o.r);
        bound_cmd->add_option("--s", o.s);
        bound_cmd->add_option("--t", o.t);

        auto search_cmd = app.add_subcommand("search", "exhaustive minimum of k_r over K_s-saturated graphs");
        search_cmd->add_option("--n", o.n, "order");
        search_cmd->add_option("--r", o.r, "counted clique order (default 2)");
        search_cmd->add_option("--s", o.s, "forbidden clique order");
        search_cmd->add_option("--t", o.t, "minimum degree constraint");
        search_cmd->add_flag("--at-least", o.at_least, "minimum degree at least t instead of exactly t");
        search_cmd->add_option("--shards", o.shards, "number of work shards")->check(CLI::PositiveNumber);
        search_cmd->add_option("--shard-id", o.shard_id, "run only this shard");
        search_cmd->add_option("--threads", o.threads, "worker threads (default: SATFORGE_THREADS or all cores)");
        search_cmd->add_option("--budget", o.budget, "node budget (0 = unlimited)");
        search_cmd->add_option("--seconds", o.seconds, "time budget (0 = unlimited)");
        search_cmd->add_flag("--allow-large", o.allow_large, "permit orders above the exhaustive cap");
        search_cmd->add_option("--merge", o.merge, "merge shard reports instead of searching");
        search_cmd->add_option("--out", o.out, "write the report here, with a .manifest.json beside it");

        auto support_cmd = app.add_subcommand("verify-support", "check the support-structure conditions");
        graph_input(support_cmd);
        support_cmd->add_option("--manifest", o.manifest, "JSON with vertex lists A and B (top level or under labels)")->required();
        support_cmd->add_option("--s", o.s, "forbidden clique order (default: the manifest's s)");

        auto reproduce_cmd = app.add_subcommand("reproduce", "run registered claims (all when no --id)");
        reproduce_cmd->add_option("--id", o.id, "claim id");
        reproduce_cmd->add_flag("--all", o.all, "run every claim");

        auto replay_cmd = app.add_subcommand("replay", "re-run a manifest and compare output digests");
        replay_cmd->add_option("manifest", o.manifest, "manifest written by an earlier run")->required();

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);

            if (*construct_cmd)
                return construct(o, out, args);
            if (*verify_cmd)
                return verify(o, out);
            if (*count_cmd)
                return count(o, out);
            if (*partition_cmd)
                return partition(o, out);
            if (*rules_cmd)
                return rules_check(o, out);
            if (*classify_cmd)
                return classify(o, out);
            if (*lower_cmd)
                return lower_bound(o, out);
            if (*bound_cmd)
                return bound(o, out);
            if (*search_cmd)
                return search(o, out, args);
            if (*support_cmd)
                return verify_support(o, out);
            if (*reproduce_cmd)
                return reproduce_claims(o, out);
            return replay(o, out, err);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_success : exit_usage;
        }
        catch (const PreconditionError & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const VerificationError & e) {
            err << "verification failed: " << e.what() << "\n";
            return exit_claim_failed;
        }
        catch (const json::exception & e) {
            err << "error: malformed JSON: " << e.what() << "\n";
            return exit_usage;
        }
    }
}
