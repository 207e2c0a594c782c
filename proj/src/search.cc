#include <satforge/canonical.hh>
#include <satforge/errors.hh>
#include <satforge/graph_io.hh>
#include <satforge/search.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

using std::optional;
using std::set;
using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace satforge
{
    namespace
    {
        constexpr size_t split_depth = 5;

        auto passes_degree(const Graph & g, optional<unsigned> t, DegreeFilter filter) -> bool
        {
            if (! t)
                return true;
            auto delta = min_degree(g);
            return filter == DegreeFilter::exact ? delta == *t : delta >= *t;
        }

        struct Walker
        {
            size_t n;
            unsigned s;
            SearchBudget budget;
            CanonicalOptions canonical_options;
            size_t cut;
            size_t shard_index;
            size_t shard_count;
            GraphVisitor on_leaf;

            SearchCounters counters{};
            bool out_of_budget = false;
            size_t prefixes_seen = 0;
            uint64_t steps = 0;
            std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

            auto check_budget() -> bool
            {
                ++steps;
                if (budget.max_nodes && steps > budget.max_nodes)
                    out_of_budget = true;
                if (budget.max_seconds > 0 && steps % 256 == 0) {
                    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
                    if (elapsed.count() > budget.max_seconds)
                        out_of_budget = true;
                }
                return ! out_of_budget;
            }

            // The new vertex must lie in the automorphism orbit of the vertex placed last
            // by the canonical ordering; that makes the parent of each class unique.
            auto accept(const Graph & child, Vertex added, const vector<Vertex> & ordering) const -> bool
            {
                auto last = ordering.back();
                if (last == added)
                    return true;
                if (child.degree(last) != child.degree(added))
                    return false;
                vector<int> mark_last(child.order(), 0), mark_added(child.order(), 0);
                mark_last[last] = 1;
                mark_added[added] = 1;
                return canonical_form(child, mark_last, canonical_options) == canonical_form(child, mark_added, canonical_options);
            }

            auto visit(const Graph & g) -> void
            {
                auto k = g.order();
                if (k == cut && prefixes_seen++ % shard_count != shard_index)
                    return;
                if (! check_budget())
                    return;
                if (k >= cut || shard_index == 0)
                    ++counters.nodes;

                if (k == n) {
                    ++counters.graphs;
                    on_leaf(g);
                    return;
                }

                set<string> seen;
                auto new_vertex = Vertex(k);
                for (uint64_t mask = 0; mask < (uint64_t{ 1 } << k); ++mask) {
                    VertexSet attach;
                    for (Vertex v = 0; v < k; ++v)
                        if ((mask >> v) & 1)
                            attach.set(v);
                    if (s > 0 && contains_clique(g, attach, s - 1))
                        continue;

                    Graph child(k + 1);
                    for (auto [u, v] : g.edges())
                        child.add_edge(u, v);
                    for (auto v : attach)
                        child.add_edge(v, new_vertex);

                    auto ordering = canonical_ordering(child, {}, canonical_options);
                    if (! accept(child, new_vertex, ordering))
                        continue;

                    vector<Vertex> image(k + 1);
                    for (size_t i = 0; i <= k; ++i)
                        image[ordering[i]] = Vertex(i);
                    if (! seen.insert(to_graph6(child.permuted(image))).second)
                        continue;

                    visit(child);
                    if (out_of_budget)
                        return;
                }
            }

            auto run() -> bool
            {
                visit(Graph(0));
                return ! out_of_budget;
            }
        };

        auto make_walker(size_t n, unsigned s, const SearchBudget & budget, bool allow_large, size_t cut, size_t index,
            size_t count, GraphVisitor on_leaf) -> Walker
        {
            return Walker{ n, s, budget, CanonicalOptions{ allow_large }, cut, index, count, std::move(on_leaf) };
        }
    }

    auto validate(const SearchQuery & q) -> void
    {
        if (q.r < 2 || q.r >= q.s)
            throw PreconditionError{ "search needs 2 <= r < s" };
        if (q.n < q.s)
            throw PreconditionError{ "search needs n >= s" };
        if (q.t && *q.t + 2 < q.s)
            throw PreconditionError{ "search needs t >= s-2" };
        if (q.n > exhaustive_order_cap && ! q.allow_large)
            throw PreconditionError{ "exhaustive search is capped at n = " + to_string(exhaustive_order_cap) +
                "; larger orders must be requested as non-exhaustive" };
    }

    auto same_outcome(const SearchReport & a, const SearchReport & b) -> bool
    {
        return a.minimum == b.minimum && a.extremal == b.extremal && a.explored == b.explored && a.exhaustive == b.exhaustive;
    }

    auto enumerate_graphs(size_t n, unsigned s, const GraphVisitor & visit, const SearchBudget & budget, SearchCounters * counters) -> bool
    {
        if (n > exhaustive_order_cap)
            throw PreconditionError{ "enumeration is capped at n = " + to_string(exhaustive_order_cap) };
        auto walker = make_walker(n, s, budget, false, n, 0, 1, visit);
        auto complete = walker.run();
        if (counters)
            *counters = walker.counters;
        return complete;
    }

    auto enumerate_saturated(size_t n, unsigned s, optional<unsigned> t, DegreeFilter filter, const GraphVisitor & visit,
        const SearchBudget & budget, SearchCounters * counters) -> bool
    {
        if (s < 3)
            throw PreconditionError{ "saturation enumeration needs s >= 3" };
        SearchCounters local;
        auto complete = enumerate_graphs(n, s, [&] (const Graph & g) {
            if (! is_saturated(g, s))
                return;
            ++local.saturated;
            if (! passes_degree(g, t, filter))
                return;
            ++local.matching;
            visit(g);
        }, budget, counters);
        if (counters) {
            counters->saturated = local.saturated;
            counters->matching = local.matching;
        }
        return complete;
    }

    auto split_work(const SearchQuery & q, size_t shards) -> vector<SearchShard>
    {
        validate(q);
        if (shards < 1)
            throw PreconditionError{ "need at least one shard" };
        vector<SearchShard> result;
        for (size_t i = 0; i < shards; ++i)
            result.push_back(SearchShard{ q, i, shards, std::min(q.n, split_depth) });
        return result;
    }

    auto run_shard(const SearchShard & shard) -> SearchReport
    {
        auto & q = shard.query;
        validate(q);
        if (shard.count < 1 || shard.index >= shard.count)
            throw PreconditionError{ "shard index out of range" };

        SearchReport report;
        report.query = q;
        SearchCounters filtered;
        CanonicalOptions canonical_options{ q.allow_large };

        auto walker = make_walker(q.n, q.s, q.budget, q.allow_large, shard.depth, shard.index, shard.count, [&] (const Graph & g) {
            if (! is_saturated(g, q.s))
                return;
            ++filtered.saturated;
            if (! passes_degree(g, q.t, q.filter))
                return;
            ++filtered.matching;

            auto k = count_cliques(g, q.r).count;
            if (! report.minimum || k < *report.minimum) {
                report.minimum = k;
                report.extremal.clear();
            }
            if (k == *report.minimum)
                report.extremal.push_back(canonical_form(g, canonical_options));
        });

        report.exhaustive = walker.run();
        report.explored = walker.counters;
        report.explored.saturated = filtered.saturated;
        report.explored.matching = filtered.matching;
        std::sort(report.extremal.begin(), report.extremal.end());
        report.extremal.erase(std::unique(report.extremal.begin(), report.extremal.end()), report.extremal.end());
        return report;
    }

    auto sat_value(const SearchQuery & q) -> SearchReport
    {
        return run_shard(split_work(q, 1).front());
    }

    auto merge_reports(span<const SearchReport> reports) -> SearchReport
    {
        if (reports.empty())
            throw PreconditionError{ "nothing to merge" };

        SearchReport merged;
        merged.query = reports.front().query;
        merged.exhaustive = true;
        for (auto & r : reports)
            if (r.minimum && (! merged.minimum || *r.minimum < *merged.minimum))
                merged.minimum = r.minimum;

        for (auto & r : reports) {
            merged.explored.nodes += r.explored.nodes;
            merged.explored.graphs += r.explored.graphs;
            merged.explored.saturated += r.explored.saturated;
            merged.explored.matching += r.explored.matching;
            merged.exhaustive = merged.exhaustive && r.exhaustive;
            if (r.minimum && r.minimum == merged.minimum)
                merged.extremal.insert(merged.extremal.end(), r.extremal.begin(), r.extremal.end());
        }
        std::sort(merged.extremal.begin(), merged.extremal.end());
        merged.extremal.erase(std::unique(merged.extremal.begin(), merged.extremal.end()), merged.extremal.end());
        return merged;
    }

    auto thread_limit() -> size_t
    {
        if (auto text = std::getenv("SATFORGE_THREADS")) {
            char * end = nullptr;
            auto value = std::strtol(text, &end, 10);
            if (end != text && *end == '\0' && value > 0)
                return size_t(value);
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto run_sharded(const SearchQuery & q, size_t shards, size_t threads) -> SearchReport
    {
        auto parts = split_work(q, shards);
        vector<SearchReport> reports(parts.size());

        auto workers = std::min(parts.size(), threads ? std::min(threads, thread_limit()) : thread_limit());
        if (workers <= 1) {
            for (size_t i = 0; i < parts.size(); ++i)
                reports[i] = run_shard(parts[i]);
            return merge_reports(reports);
        }

        std::atomic<size_t> next{ 0 };
        vector<std::thread> pool;
        for (size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (auto i = next++; i < parts.size(); i = next++)
                    reports[i] = run_shard(parts[i]);
            });
        for (auto & thread : pool)
            thread.join();
        return merge_reports(reports);
    }
}
