#ifndef SNC_GUARD_SNC_DIGRAPH_HH
#define SNC_GUARD_SNC_DIGRAPH_HH 1

#include <snc/vertex_set.hh>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace snc
{
    struct Edge
    {
        VertexId tail;
        VertexId head;

        auto operator<=>(const Edge &) const = default;
    };

    enum class Direction
    {
        out,
        in
    };

    /// Shortest-path length; unreachable is a distinct state, never a large number.
    class Distance
    {
    private:
        std::size_t _value;
        static constexpr std::size_t _infinite = std::numeric_limits<std::size_t>::max();

        explicit constexpr Distance(std::size_t value) : _value(value) {}

    public:
        static constexpr auto finite(std::size_t value) -> Distance { return Distance{value}; }
        static constexpr auto infinity() -> Distance { return Distance{_infinite}; }

        constexpr auto is_infinite() const noexcept -> bool { return _value == _infinite; }
        /// Only meaningful when finite.
        constexpr auto value() const noexcept -> std::size_t { return _value; }

        constexpr auto operator<=>(const Distance &) const = default;
    };

    /**
     * A loop-free, digon-free directed graph on vertices [0, n), n >= 1.
     *
     * Adjacency is held as bitset rows in both directions, so neighbourhood
     * queries are word operations. Values are immutable once built; every
     * derivation returns a fresh graph. The edge list is kept in sorted
     * (tail, head) order.
     */
    class Digraph
    {
    private:
        std::size_t _n = 0;
        std::size_t _stride = 0;
        std::vector<VertexSet::Word> _out_rows, _in_rows;
        std::vector<Edge> _edges;

        Digraph(std::size_t n, std::vector<Edge> sorted_edges);

    public:
        /// Validates and builds. Throws GraphError naming the first offending
        /// datum in sorted (tail, head) order.
        static auto from_edges(std::size_t n, std::span<const Edge> edges) -> Digraph;
        static auto from_edges(std::size_t n, std::initializer_list<Edge> edges) -> Digraph;

        /// Builds from out-adjacency bit rows, one word per vertex; requires n <= 64.
        /// The rows must already describe a digon-free, loop-free graph.
        static auto from_small_rows(std::size_t n, std::span<const std::uint64_t> rows) -> Digraph;

        auto vertex_count() const noexcept -> std::size_t { return _n; }
        auto edge_count() const noexcept -> std::size_t { return _edges.size(); }
        auto edges() const noexcept -> std::span<const Edge> { return _edges; }

        auto has_edge(VertexId tail, VertexId head) const -> bool;
        auto has_edge(Edge e) const -> bool { return has_edge(e.tail, e.head); }

        auto out_degree(VertexId u) const -> std::size_t;
        auto in_degree(VertexId u) const -> std::size_t;

        auto out_neighbors(VertexId u) const -> VertexSet;
        auto in_neighbors(VertexId u) const -> VertexSet;

        /// Raw bitset row without bounds checking; for inner loops.
        auto row(VertexId u, Direction direction) const noexcept -> std::span<const VertexSet::Word>
        {
            auto & rows = direction == Direction::out ? _out_rows : _in_rows;
            return {rows.data() + u * _stride, _stride};
        }

        /// Throws GraphError(vertex_out_of_range) unless u < n.
        auto check_vertex(VertexId u) const -> void;

        auto operator==(const Digraph & other) const -> bool { return _n == other._n && _edges == other._edges; }
    };

    struct NeighborhoodProfile
    {
        VertexId vertex;
        std::size_t n1;
        std::size_t n2;
        long anti_satisfaction;
        bool satisfactory;

        auto operator==(const NeighborhoodProfile &) const -> bool = default;
    };

    /// A derived graph together with, for each new vertex id, the id it had in
    /// the source graph.
    struct RelabeledDigraph
    {
        Digraph graph;
        std::vector<VertexId> original;
    };

    /// Vertices at directed distance exactly k from u (k >= 1).
    auto kth_neighborhood(const Digraph & g, VertexId u, std::size_t k, Direction direction = Direction::out) -> VertexSet;

    /// All shortest-path distances from u, following edges in the given direction.
    auto distances_from(const Digraph & g, VertexId u, Direction direction = Direction::out) -> std::vector<Distance>;

    /// Every vertex at finite distance from u, including u.
    auto walkable_neighborhood(const Digraph & g, VertexId u) -> VertexSet;

    /// The second out-neighbourhood, computed directly from the first.
    auto second_neighborhood(const Digraph & g, VertexId u) -> VertexSet;

    auto profile(const Digraph & g, VertexId u) -> NeighborhoodProfile;
    auto profiles(const Digraph & g) -> std::vector<NeighborhoodProfile>;

    /// Empty exactly when g is a counterexample.
    auto satisfactory_vertices(const Digraph & g) -> VertexSet;

    auto induced_subgraph(const Digraph & g, const VertexSet & keep) -> RelabeledDigraph;
    auto delete_edge(const Digraph & g, Edge e) -> Digraph;
    auto delete_vertex(const Digraph & g, VertexId u) -> RelabeledDigraph;
}

#endif
