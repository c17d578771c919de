#ifndef SNC_GUARD_TESTS_FIXTURES_HH
#define SNC_GUARD_TESTS_FIXTURES_HH 1

#include <snc/digraph.hh>

#include <vector>

namespace snc::fixtures
{
    inline auto cycle(std::size_t n) -> Digraph
    {
        std::vector<Edge> edges;
        for (VertexId i = 0; i < n; ++i)
            edges.push_back(Edge{i, (i + 1) % n});
        return Digraph::from_edges(n, edges);
    }

    inline auto path(std::size_t n) -> Digraph
    {
        std::vector<Edge> edges;
        for (VertexId i = 0; i + 1 < n; ++i)
            edges.push_back(Edge{i, i + 1});
        return Digraph::from_edges(n, edges);
    }

    inline auto c3() -> Digraph { return cycle(3); }

    // a = 0, b = 1, c = 2
    inline auto transitive_triangle() -> Digraph { return Digraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }

    // t = 0, u = 1, v = 2, w = 3
    inline auto diamond() -> Digraph { return Digraph::from_edges(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}); }

    inline auto single_vertex() -> Digraph { return Digraph::from_edges(1, {}); }

    inline auto set(std::size_t universe, std::initializer_list<VertexId> members) -> VertexSet
    {
        return VertexSet::of(universe, members);
    }
}

#endif
