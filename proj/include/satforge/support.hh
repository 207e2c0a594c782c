#pragma once

#include <satforge/graph.hh>
#include <satforge/labeled_graph.hh>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace satforge
{
    /// A graph whose vertex set is split into two classes A and B, tested against
    /// clique order s. Optional labels name sub-classes of A and B and are carried
    /// through completion and assembly.
    struct SupportStructure
    {
        Graph graph;
        VertexSet A;
        VertexSet B;
        unsigned s = 0;
        std::map<std::string, VertexSet> labels = {};
    };

    struct PreSupportReport
    {
        bool sides_clique_free = false;    ///< neither A nor B holds a K_{s-1}
        bool a_side_supported = false;     ///< every a has a K_{s-2} in N(a) & B
        bool b_side_supported = false;     ///< every b has a K_{s-2} in N(b) & A
        bool clique_free = false;          ///< the whole graph holds no K_s
        std::vector<Vertex> unsupported_a;
        std::vector<Vertex> unsupported_b;

        auto holds() const -> bool { return sides_clique_free && a_side_supported && b_side_supported && clique_free; }
    };

    struct SupportReport
    {
        PreSupportReport pre;

        /// Every missing pair inside A or inside B would, once added, create a K_{s-1}
        /// on its own side or a K_s in the whole graph.
        bool sides_blocked = false;

        /// Every missing A-B pair would create a K_s.
        bool cross_saturated = false;

        /// The stricter reading: the subgraphs induced by A and by B are themselves
        /// K_{s-1}-saturated. Reported for information, not required by holds().
        bool a_side_saturated = false;
        bool b_side_saturated = false;

        std::vector<Edge> open_pairs;

        auto holds() const -> bool { return pre.holds() && sides_blocked && cross_saturated; }
    };

    /// Validates the shape of a structure (A and B disjoint, covering the vertex set,
    /// s >= 3). Throws PreconditionError otherwise.
    auto check_structure_shape(const SupportStructure & ss) -> void;

    auto check_pre_support(const SupportStructure & ss) -> PreSupportReport;
    auto check_support(const SupportStructure & ss) -> SupportReport;

    /// Would adding the missing pair uv be refused by completion?
    auto completion_blocks(const SupportStructure & ss, Vertex u, Vertex v) -> bool;

    /// Called after each edge completion adds, with the structure as it stands.
    using CompletionObserver = std::function<void (const SupportStructure &, Edge)>;

    /// Adds missing pairs in repeated lexicographic sweeps until a sweep adds nothing,
    /// skipping pairs that would create a K_{s-1} inside A, a K_{s-1} inside B, or a
    /// K_s overall. Throws PreconditionError if the input is not a pre-support
    /// structure.
    auto complete_to_support(const SupportStructure & ss, const CompletionObserver & observer = {}) -> SupportStructure;

    /// Smallest degree, within the whole structure, of a vertex of side.
    auto side_min_degree(const SupportStructure & ss, const VertexSet & side) -> std::size_t;

    struct PaddingPlan
    {
        long N = 0;
        long M = 0;
        std::size_t x_count = 0;
        std::size_t y_count = 0;
        unsigned t = 0;
        std::size_t n = 0;
        /// Which quantity attained the minimum in N and in M: "|B|" or "deg(A)" for N,
        /// "|A|" or "deg(B)" for M.
        std::string n_active;
        std::string m_active;
    };

    /// N = t - min{|B|, deg(A)}, M = t - min{|A|, deg(B)}, read from ss itself (which
    /// should already be completed). |Y| = max(M, 0) and X takes the rest. Throws
    /// PreconditionError when n <= |A| + |B| + N + M, when X would be empty, or when
    /// the padded graph could not have minimum degree exactly t.
    auto padding_plan(const SupportStructure & ss, unsigned t, std::size_t n) -> PaddingPlan;

    /// Appends Y then X after the structure's vertices, joins X to A and Y, and joins
    /// Y to B and X. Labels "A", "B", "X", "Y" plus the structure's own. Throws
    /// VerificationError unless the result is K_s-saturated with minimum degree t.
    auto assemble(const SupportStructure & ss, const PaddingPlan & plan) -> LabeledGraph;
}
