#include <snc/digraph.hh>
#include <snc/errors.hh>

#include <algorithm>
#include <string>

using std::size_t;
using std::span;
using std::string;
using std::vector;

namespace snc
{
    using std::to_string;

    namespace
    {
        auto edge_text(VertexId u, VertexId v) -> string
        {
            return "(" + to_string(u) + "," + to_string(v) + ")";
        }

        /// Union of the rows of every member of from.
        auto expand(const Digraph & g, const VertexSet & from, Direction direction) -> VertexSet
        {
            VertexSet result{g.vertex_count()};
            auto words = result.mutable_words();
            for (auto x : from) {
                auto row = g.row(x, direction);
                for (size_t i = 0; i < words.size(); ++i)
                    words[i] |= row[i];
            }
            return result;
        }
    }

    Digraph::Digraph(size_t n, vector<Edge> sorted_edges) :
        _n(n),
        _stride(VertexSet::words_for(n)),
        _out_rows(n * _stride, 0),
        _in_rows(n * _stride, 0),
        _edges(std::move(sorted_edges))
    {
        constexpr auto bits = VertexSet::word_bits;
        for (auto [u, v] : _edges) {
            _out_rows[u * _stride + v / bits] |= VertexSet::Word{1} << (v % bits);
            _in_rows[v * _stride + u / bits] |= VertexSet::Word{1} << (u % bits);
        }
    }

    auto Digraph::from_edges(size_t n, span<const Edge> edges) -> Digraph
    {
        if (n == 0)
            throw GraphError{ErrorKind::empty_vertex_set, "a digraph needs at least one vertex"};

        vector<Edge> sorted(edges.begin(), edges.end());
        std::sort(sorted.begin(), sorted.end());

        for (size_t i = 0; i < sorted.size(); ++i) {
            auto [u, v] = sorted[i];
            if (u >= n || v >= n) {
                auto bad = u >= n ? u : v;
                throw GraphError{ErrorKind::vertex_out_of_range,
                    "vertex " + to_string(bad) + " in edge " + edge_text(u, v) + " is not below " + to_string(n), bad, n};
            }
            if (u == v)
                throw GraphError{ErrorKind::loop_edge, "loop at vertex " + to_string(u), u, u};
            if (i > 0 && sorted[i - 1] == sorted[i])
                throw GraphError{ErrorKind::duplicate_edge, "edge " + edge_text(u, v) + " appears twice", u, v};
            if (std::binary_search(sorted.begin(), sorted.end(), Edge{v, u}))
                throw GraphError{ErrorKind::digon_pair, "edges " + edge_text(u, v) + " and " + edge_text(v, u) + " form a digon", u, v};
        }

        return Digraph{n, std::move(sorted)};
    }

    auto Digraph::from_edges(size_t n, std::initializer_list<Edge> edges) -> Digraph
    {
        return from_edges(n, span<const Edge>{edges.begin(), edges.size()});
    }

    auto Digraph::from_small_rows(size_t n, span<const std::uint64_t> rows) -> Digraph
    {
        vector<Edge> edges;
        for (VertexId u = 0; u < n; ++u)
            for (auto bits = rows[u]; bits; bits &= bits - 1)
                edges.push_back(Edge{u, static_cast<VertexId>(std::countr_zero(bits))});
        return Digraph{n, std::move(edges)};
    }

    auto Digraph::check_vertex(VertexId u) const -> void
    {
        if (u >= _n)
            throw GraphError{ErrorKind::vertex_out_of_range, "vertex " + to_string(u) + " is not below " + to_string(_n), u, _n};
    }

    auto Digraph::has_edge(VertexId tail, VertexId head) const -> bool
    {
        if (tail >= _n || head >= _n)
            return false;
        return (_out_rows[tail * _stride + head / VertexSet::word_bits] >> (head % VertexSet::word_bits)) & 1u;
    }

    auto Digraph::out_degree(VertexId u) const -> size_t
    {
        check_vertex(u);
        size_t result = 0;
        for (auto w : row(u, Direction::out))
            result += static_cast<size_t>(std::popcount(w));
        return result;
    }

    auto Digraph::in_degree(VertexId u) const -> size_t
    {
        check_vertex(u);
        size_t result = 0;
        for (auto w : row(u, Direction::in))
            result += static_cast<size_t>(std::popcount(w));
        return result;
    }

    auto Digraph::out_neighbors(VertexId u) const -> VertexSet
    {
        check_vertex(u);
        return VertexSet::from_words(_n, row(u, Direction::out));
    }

    auto Digraph::in_neighbors(VertexId u) const -> VertexSet
    {
        check_vertex(u);
        return VertexSet::from_words(_n, row(u, Direction::in));
    }

    auto kth_neighborhood(const Digraph & g, VertexId u, size_t k, Direction direction) -> VertexSet
    {
        g.check_vertex(u);
        if (k == 0)
            throw GraphError{ErrorKind::non_positive_k, "neighbourhood layers start at k = 1"};

        auto visited = VertexSet::of(g.vertex_count(), {u});
        auto frontier = visited;
        for (size_t layer = 1; layer <= k && ! frontier.empty(); ++layer) {
            frontier = expand(g, frontier, direction) - visited;
            visited |= frontier;
        }
        return frontier;
    }

    auto distances_from(const Digraph & g, VertexId u, Direction direction) -> vector<Distance>
    {
        g.check_vertex(u);
        vector<Distance> result(g.vertex_count(), Distance::infinity());
        result[u] = Distance::finite(0);

        auto visited = VertexSet::of(g.vertex_count(), {u});
        auto frontier = visited;
        for (size_t layer = 1; ! frontier.empty(); ++layer) {
            frontier = expand(g, frontier, direction) - visited;
            visited |= frontier;
            for (auto v : frontier)
                result[v] = Distance::finite(layer);
        }
        return result;
    }

    auto walkable_neighborhood(const Digraph & g, VertexId u) -> VertexSet
    {
        g.check_vertex(u);
        auto visited = VertexSet::of(g.vertex_count(), {u});
        auto frontier = visited;
        while (! frontier.empty()) {
            frontier = expand(g, frontier, Direction::out) - visited;
            visited |= frontier;
        }
        return visited;
    }

    auto second_neighborhood(const Digraph & g, VertexId u) -> VertexSet
    {
        auto first = g.out_neighbors(u);
        auto result = expand(g, first, Direction::out) - first;
        result.erase(u);
        return result;
    }

    auto profile(const Digraph & g, VertexId u) -> NeighborhoodProfile
    {
        auto n1 = g.out_degree(u);
        auto n2 = second_neighborhood(g, u).size();
        auto anti = static_cast<long>(n1) - static_cast<long>(n2);
        return NeighborhoodProfile{u, n1, n2, anti, anti <= 0};
    }

    auto profiles(const Digraph & g) -> vector<NeighborhoodProfile>
    {
        vector<NeighborhoodProfile> result;
        result.reserve(g.vertex_count());
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            result.push_back(profile(g, u));
        return result;
    }

    auto satisfactory_vertices(const Digraph & g) -> VertexSet
    {
        VertexSet result{g.vertex_count()};
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            if (profile(g, u).satisfactory)
                result.insert(u);
        return result;
    }

    auto induced_subgraph(const Digraph & g, const VertexSet & keep) -> RelabeledDigraph
    {
        for (auto v : keep)
            g.check_vertex(v);
        if (keep.empty())
            throw GraphError{ErrorKind::empty_subset, "cannot induce on an empty vertex set"};

        auto original = keep.to_vector();
        vector<VertexId> relabel(g.vertex_count(), g.vertex_count());
        for (size_t i = 0; i < original.size(); ++i)
            relabel[original[i]] = i;

        vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (keep.contains(u) && keep.contains(v))
                edges.push_back(Edge{relabel[u], relabel[v]});

        return RelabeledDigraph{Digraph::from_edges(original.size(), edges), std::move(original)};
    }

    auto delete_edge(const Digraph & g, Edge e) -> Digraph
    {
        if (! g.has_edge(e))
            throw GraphError{ErrorKind::no_such_edge, "edge " + edge_text(e.tail, e.head) + " is not present", e.tail, e.head};

        vector<Edge> edges;
        edges.reserve(g.edge_count() - 1);
        for (auto f : g.edges())
            if (f != e)
                edges.push_back(f);
        return Digraph::from_edges(g.vertex_count(), edges);
    }

    auto delete_vertex(const Digraph & g, VertexId u) -> RelabeledDigraph
    {
        g.check_vertex(u);
        if (g.vertex_count() == 1)
            throw GraphError{ErrorKind::would_be_empty, "deleting the only vertex leaves an empty graph", u};

        auto keep = VertexSet::full(g.vertex_count());
        keep.erase(u);
        return induced_subgraph(g, keep);
    }
}
