#pragma once

#include <satforge/graph.hh>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace satforge
{
    /// Largest order searched without explicitly opting out of the exhaustive regime.
    inline constexpr std::size_t exhaustive_order_cap = 10;

    enum class DegreeFilter
    {
        exact,
        at_least
    };

    struct SearchBudget
    {
        /// Zero means unlimited.
        std::uint64_t max_nodes = 0;
        double max_seconds = 0;
    };

    struct SearchQuery
    {
        std::size_t n = 0;
        unsigned r = 2;
        unsigned s = 3;
        std::optional<unsigned> t = std::nullopt;
        DegreeFilter filter = DegreeFilter::exact;
        SearchBudget budget = {};
        /// Permit n above exhaustive_order_cap; such runs are expected to hit the budget.
        bool allow_large = false;
    };

    /// Throws PreconditionError unless 2 <= r < s, n >= s, t >= s-2 when given, and n is
    /// within the exhaustive cap or allow_large is set.
    auto validate(const SearchQuery & q) -> void;

    struct SearchCounters
    {
        /// Augmentation nodes visited (each is one isomorphism class of K_s-free graph).
        std::uint64_t nodes = 0;
        /// Isomorphism classes of K_s-free graphs of the full order.
        std::uint64_t graphs = 0;
        std::uint64_t saturated = 0;
        /// Saturated and passing the degree filter.
        std::uint64_t matching = 0;

        auto operator== (const SearchCounters &) const -> bool = default;
    };

    struct SearchReport
    {
        SearchQuery query;
        /// Minimum k_r over the family; empty when the family is empty (infeasible).
        std::optional<std::uint64_t> minimum;
        /// Canonical forms of every extremal graph, sorted.
        std::vector<std::string> extremal;
        SearchCounters explored;
        bool exhaustive = true;
    };

    /// Equal outcome: minimum, extremal list, counters and exhaustiveness.
    auto same_outcome(const SearchReport & a, const SearchReport & b) -> bool;

    /// One part of a search: the augmentation tree is cut at depth (a vertex count), and
    /// the nodes found there, numbered in depth-first order, go to shard index mod count.
    struct SearchShard
    {
        SearchQuery query;
        std::size_t index = 0;
        std::size_t count = 1;
        std::size_t depth = 0;
    };

    using GraphVisitor = std::function<void (const Graph &)>;

    /// Visits one representative of every isomorphism class of n-vertex graphs, K_s-free
    /// when s > 0, by canonical augmentation one vertex at a time. Returns false if
    /// the budget ran out first.
    auto enumerate_graphs(std::size_t n, unsigned s, const GraphVisitor & visit, const SearchBudget & budget = {},
        SearchCounters * counters = nullptr) -> bool;

    /// As enumerate_graphs, restricted to K_s-saturated graphs whose minimum degree is t
    /// (exact) or at least t; no degree constraint when t is empty.
    auto enumerate_saturated(std::size_t n, unsigned s, std::optional<unsigned> t, DegreeFilter filter,
        const GraphVisitor & visit, const SearchBudget & budget = {}, SearchCounters * counters = nullptr) -> bool;

    auto sat_value(const SearchQuery & q) -> SearchReport;

    auto split_work(const SearchQuery & q, std::size_t shards) -> std::vector<SearchShard>;
    auto run_shard(const SearchShard & shard) -> SearchReport;

    /// Minimum of minima, union of extremal lists without duplicates, summed counters,
    /// exhaustive only if every part was. The query of the first report is kept.
    auto merge_reports(std::span<const SearchReport> reports) -> SearchReport;

    /// Runs every shard, several at once, and merges. Parallelism is capped by threads
    /// when non-zero, then by the SATFORGE_THREADS environment variable.
    auto run_sharded(const SearchQuery & q, std::size_t shards, std::size_t threads = 0) -> SearchReport;

    /// Worker threads allowed by SATFORGE_THREADS, or the hardware concurrency.
    auto thread_limit() -> std::size_t;
}
