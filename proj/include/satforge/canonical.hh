#pragma once

#include <satforge/graph.hh>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace satforge
{
    /// Largest order for which canonical forms are offered without asking.
    inline constexpr std::size_t canonical_exact_cap = 12;

    struct CanonicalOptions
    {
        /// Permit orders above canonical_exact_cap. The result is still an exact
        /// canonical form, but the search tree is no longer guaranteed to be small.
        bool allow_large = false;
    };

    /// Canonical vertex ordering: result[i] is the vertex placed at position i.
    /// colours, when given, must have one entry per vertex; only colour-preserving
    /// relabellings are considered and smaller colours come first.
    auto canonical_ordering(const Graph & g, std::span<const int> colours = {}, const CanonicalOptions & options = {})
        -> std::vector<Vertex>;

    /// Byte string that is equal for two graphs iff they are isomorphic: the graph6
    /// encoding of the canonically relabelled graph.
    auto canonical_form(const Graph & g, const CanonicalOptions & options = {}) -> std::string;

    /// As canonical_form, but only colour-preserving isomorphisms identify graphs.
    auto canonical_form(const Graph & g, std::span<const int> colours, const CanonicalOptions & options = {}) -> std::string;

    auto are_isomorphic(const Graph & g, const Graph & h, const CanonicalOptions & options = {}) -> bool;
}
