#ifndef SNC_GUARD_SNC_GRAPH_IO_HH
#define SNC_GUARD_SNC_GRAPH_IO_HH 1

#include <snc/digraph.hh>

#include <iosfwd>
#include <string>
#include <string_view>

namespace snc
{
    /**
     * Graph text documents:
     *
     *     # optional comments and blank lines anywhere
     *     n m
     *     u v        (m lines, tail then head, 0-indexed)
     *
     * Lines end with a single line feed. Every diagnostic is a ParseError
     * carrying the 1-based line number where the problem was detected.
     */
    auto parse_digraph(std::string_view text) -> Digraph;
    auto read_digraph(std::istream & in) -> Digraph;
    auto read_digraph_file(const std::string & path) -> Digraph;

    /// Canonical document: header, then edges in sorted (tail, head) order.
    auto write_digraph(const Digraph & g) -> std::string;
    auto write_digraph_file(const Digraph & g, const std::string & path) -> void;
}

#endif
