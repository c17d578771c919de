#include <snc/errors.hh>
#include <snc/graph_io.hh>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace snc
{
    using std::to_string;

    namespace
    {
        auto is_blank(char c) -> bool { return c == ' ' || c == '\t' || c == '\r'; }

        /// Exactly two non-negative decimal fields, or nothing.
        auto two_numbers(string_view line, size_t & a, size_t & b) -> bool
        {
            size_t values[2];
            auto p = line.data(), end = line.data() + line.size();
            for (auto & value : values) {
                while (p != end && is_blank(*p))
                    ++p;
                if (p == end || *p < '0' || *p > '9')
                    return false;
                auto [next, ec] = std::from_chars(p, end, value);
                if (ec != std::errc{} || (next != end && ! is_blank(*next)))
                    return false;
                p = next;
            }
            while (p != end && is_blank(*p))
                ++p;
            if (p != end)
                return false;
            a = values[0];
            b = values[1];
            return true;
        }

        auto ignorable(string_view line) -> bool
        {
            auto first = line.find_first_not_of(" \t\r");
            return first == string_view::npos || line[first] == '#';
        }
    }

    auto parse_digraph(string_view text) -> Digraph
    {
        size_t line_number = 0;
        bool have_header = false;
        size_t n = 0, declared = 0;
        vector<Edge> edges;
        std::set<Edge> seen;

        while (! text.empty()) {
            auto newline = text.find('\n');
            auto line = text.substr(0, newline);
            text = newline == string_view::npos ? string_view{} : text.substr(newline + 1);
            ++line_number;

            if (ignorable(line))
                continue;

            size_t a, b;
            if (! two_numbers(line, a, b))
                throw ParseError{ErrorKind::syntax_error, line_number,
                    have_header ? "expected 'tail head'" : "expected header 'n m'"};

            if (! have_header) {
                if (a == 0)
                    throw ParseError{ErrorKind::empty_vertex_set, line_number, "a digraph needs at least one vertex"};
                n = a;
                declared = b;
                have_header = true;
                continue;
            }

            if (edges.size() == declared)
                throw ParseError{line_number, declared, edges.size() + 1};
            if (a >= n || b >= n)
                throw ParseError{ErrorKind::vertex_out_of_range, line_number,
                    "vertex " + to_string(a >= n ? a : b) + " is not below " + to_string(n)};
            if (a == b)
                throw ParseError{ErrorKind::loop_edge, line_number, "loop at vertex " + to_string(a)};
            if (seen.contains(Edge{a, b}))
                throw ParseError{ErrorKind::duplicate_edge, line_number, "repeated edge " + to_string(a) + " " + to_string(b)};
            if (seen.contains(Edge{b, a}))
                throw ParseError{ErrorKind::digon_pair, line_number,
                    "edge " + to_string(a) + " " + to_string(b) + " reverses an earlier edge"};
            seen.insert(Edge{a, b});
            edges.push_back(Edge{a, b});
        }

        if (! have_header)
            throw ParseError{ErrorKind::syntax_error, line_number + 1, "missing header 'n m'"};
        if (edges.size() != declared)
            throw ParseError{line_number, declared, edges.size()};

        return Digraph::from_edges(n, edges);
    }

    auto read_digraph(std::istream & in) -> Digraph
    {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_digraph(buffer.str());
    }

    auto read_digraph_file(const string & path) -> Digraph
    {
        std::ifstream in{path, std::ios::binary};
        if (! in)
            throw std::runtime_error{"cannot open '" + path + "' for reading"};
        return read_digraph(in);
    }

    auto write_digraph(const Digraph & g) -> string
    {
        string result = to_string(g.vertex_count()) + " " + to_string(g.edge_count()) + "\n";
        for (auto [u, v] : g.edges())
            result += to_string(u) + " " + to_string(v) + "\n";
        return result;
    }

    auto write_digraph_file(const Digraph & g, const string & path) -> void
    {
        std::ofstream out{path, std::ios::binary};
        if (! out)
            throw std::runtime_error{"cannot open '" + path + "' for writing"};
        out << write_digraph(g);
        if (! out.flush())
            throw std::runtime_error{"failed writing '" + path + "'"};
    }
}
