#include <satforge/errors.hh>
#include <satforge/graph_io.hh>

#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace satforge
{
    namespace
    {
        constexpr string_view graph6_header = ">>graph6<<";

        auto trim(string_view text) -> string_view
        {
            while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
                text.remove_suffix(1);
            while (! text.empty() && (text.front() == ' ' || text.front() == '\t'))
                text.remove_prefix(1);
            return text;
        }
    }

    auto to_graph6(const Graph & g) -> string
    {
        string result;
        auto n = g.order();
        if (n <= 62)
            result.push_back(char(n + 63));
        else {
            result.push_back(char(126));
            for (int shift = 12; shift >= 0; shift -= 6)
                result.push_back(char(((n >> shift) & 63) + 63));
        }

        // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
        int bits = 0, filled = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) {
                bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    result.push_back(char(bits + 63));
                    bits = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            result.push_back(char((bits << (6 - filled)) + 63));
        return result;
    }

    auto from_graph6(string_view text) -> Graph
    {
        text = trim(text);
        if (text.starts_with(graph6_header))
            text.remove_prefix(graph6_header.size());
        if (text.empty())
            throw PreconditionError{ "empty graph6 string" };
        if (text.front() == ':' || text.front() == ';' || text.front() == '&')
            throw PreconditionError{ "sparse6, incremental sparse6 and digraph6 are not graph6" };
        for (auto c : text)
            if (c < 63 || c > 126)
                throw PreconditionError{ "graph6 byte out of range" };

        size_t n = 0, pos = 0;
        if (text[0] != 126) {
            n = size_t(text[0] - 63);
            pos = 1;
        }
        else {
            if (text.size() >= 2 && text[1] == 126)
                throw PreconditionError{ "graph6 orders above 258047 are not supported" };
            if (text.size() < 4)
                throw PreconditionError{ "truncated graph6 order field" };
            for (size_t k = 1; k <= 3; ++k)
                n = (n << 6) | size_t(text[k] - 63);
            pos = 4;
        }
        if (n > Graph::max_order)
            throw PreconditionError{ "graph6 order exceeds the vertex cap" };

        auto pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
        auto expected = (pairs + 5) / 6;
        if (text.size() - pos != expected)
            throw PreconditionError{ "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " + std::to_string(expected) };

        Graph g(n);
        size_t bit_index = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i, ++bit_index) {
                auto byte = text[pos + bit_index / 6] - 63;
                if ((byte >> (5 - bit_index % 6)) & 1)
                    g.add_edge(i, j);
            }
        return g;
    }

    auto read_graph6_lines(string_view text) -> vector<Graph>
    {
        vector<Graph> result;
        while (! text.empty()) {
            auto end = text.find('\n');
            auto line = trim(text.substr(0, end));
            if (! line.empty())
                result.push_back(from_graph6(line));
            if (end == string_view::npos)
                break;
            text.remove_prefix(end + 1);
        }
        return result;
    }

    auto to_dot(const Graph & g, const DotOptions & options) -> string
    {
        std::ostringstream out;
        out << "graph " << options.name << " {\n";
        for (Vertex v = 0; v < g.order(); ++v) {
            out << "    " << v;
            if (auto l = options.vertex_labels.find(v) ; l != options.vertex_labels.end())
                out << " [label=\"" << l->second << "\"]";
            out << ";\n";
        }
        for (auto [u, v] : g.edges())
            out << "    " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }
}
