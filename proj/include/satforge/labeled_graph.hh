#pragma once

#include <satforge/graph.hh>

#include <map>
#include <string>

namespace satforge
{
    /// A graph together with named vertex classes ("A", "X", "b123", ...).
    struct LabeledGraph
    {
        Graph graph;
        std::map<std::string, VertexSet> labels;

        /// Throws PreconditionError for an unknown name.
        auto label(const std::string & name) const -> const VertexSet &;
    };
}
