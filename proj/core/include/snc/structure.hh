#ifndef SNC_GUARD_SNC_STRUCTURE_HH
#define SNC_GUARD_SNC_STRUCTURE_HH 1

#include <snc/digraph.hh>

#include <cstddef>
#include <optional>

namespace snc
{
    /// Four distinct vertices with (t,u), (u,w), (t,v), (v,w) all present. The
    /// edges out of t are the bases; w is the apex.
    struct DiamondWitness
    {
        VertexId t, u, v, w;

        auto operator==(const DiamondWitness &) const -> bool = default;
    };

    /// Length of the shortest cycle of the undirected shadow, or infinity.
    using GirthValue = Distance;

    auto is_strongly_connected(const Digraph & g) -> bool;

    /// A directed cycle, if any, as its vertex sequence (first vertex not repeated).
    auto find_directed_cycle(const Digraph & g) -> std::optional<std::vector<VertexId>>;
    auto has_directed_cycle(const Digraph & g) -> bool;

    auto underlying_girth(const Digraph & g) -> GirthValue;

    auto has_transitive_triangle(const Digraph & g) -> bool;

    /// |N1(u) ∩ N1(v)| for e = (u,v): the number of transitive triangles based on e.
    auto triangle_base_count(const Digraph & g, Edge e) -> std::size_t;

    /// Apexes w of 2-directed diamonds having e = (t,u) as a base. The size of
    /// this set is the diamond count used throughout; distinct (v, w) pairs are
    /// not counted separately.
    auto diamond_base_targets(const Digraph & g, Edge e) -> VertexSet;

    /// One diamond per apex in diamond_base_targets, choosing the smallest v.
    auto diamond_witnesses(const Digraph & g, Edge e) -> std::vector<DiamondWitness>;

    /// Smallest-id vertex among those of least out-degree.
    auto min_outdegree_vertex(const Digraph & g) -> VertexId;
}

#endif
