#pragma once

#include <satforge/graph.hh>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace satforge
{
    /// graph6 encoding, without the optional ">>graph6<<" header.
    auto to_graph6(const Graph & g) -> std::string;

    /// Accepts an optional ">>graph6<<" header and trailing whitespace. Throws
    /// PreconditionError on malformed input (including sparse6/digraph6 strings).
    auto from_graph6(std::string_view text) -> Graph;

    /// Reads every non-blank line of a graph6 stream.
    auto read_graph6_lines(std::string_view text) -> std::vector<Graph>;

    struct DotOptions
    {
        std::string name = "G";
        /// Optional display name per vertex; vertices without one print their index.
        std::map<Vertex, std::string> vertex_labels;
    };

    auto to_dot(const Graph & g, const DotOptions & options = {}) -> std::string;
}
