#ifndef SNC_GUARD_SNC_CRIMINAL_FILTER_HH
#define SNC_GUARD_SNC_CRIMINAL_FILTER_HH 1

#include <snc/digraph.hh>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace snc
{
    /**
     * The necessary conditions a minimal counterexample must satisfy, numbered
     * as in the literature, plus condition 0 ("no satisfactory vertex"):
     *
     *   0  no vertex is satisfactory
     *   1  strongly connected
     *   2  every anti-satisfaction is 1 or 2
     *   3  every edge (u,v): u reaches all but at most one of {v} ∪ N1(v) by a
     *      walk of length 1 or 2 that avoids (u,v)
     *   4  every edge is the base of a transitive triangle or a 2-directed diamond
     *   5  every edge (u,v) with |N1(u)| <= |N1(v)| is the base of at least
     *      |N1(v)| - |N1(u)| + 1 triangles and as many diamonds
     *   6  every vertex has an in-neighbour of anti-satisfaction exactly 1
     *   7  the vertices of anti-satisfaction 1 carry a directed cycle
     */
    inline constexpr int condition_count = 8;

    /// Cheapest per-vertex checks first; the path-counting edge checks last.
    inline constexpr std::array<int, condition_count> evaluation_order{0, 2, 1, 6, 7, 4, 3, 5};

    enum class VerdictStatus
    {
        pass,
        fail,
        not_applicable
    };

    auto to_string(VerdictStatus status) -> std::string;

    /// Conditions 0, 2 and 6: the offending vertex and its anti-satisfaction.
    struct VertexWitness
    {
        VertexId vertex;
        long anti_satisfaction;

        auto operator==(const VertexWitness &) const -> bool = default;
    };

    /// Condition 1: no directed path from `from` to `to`.
    struct UnreachableWitness
    {
        VertexId from, to;

        auto operator==(const UnreachableWitness &) const -> bool = default;
    };

    /// Condition 3: the targets not reached while avoiding the edge.
    struct AvoidingReachWitness
    {
        Edge edge;
        std::vector<VertexId> missing;

        auto operator==(const AvoidingReachWitness &) const -> bool = default;
    };

    /// Condition 4: an edge based on neither structure.
    struct EdgeWitness
    {
        Edge edge;

        auto operator==(const EdgeWitness &) const -> bool = default;
    };

    /// Condition 5: an applicable edge whose counts fall short of the bound.
    struct BaseCountWitness
    {
        Edge edge;
        std::size_t required, triangles, diamonds;

        auto operator==(const BaseCountWitness &) const -> bool = default;
    };

    /// Condition 7: the anti-satisfaction-1 vertices, which induce no cycle.
    struct VertexSetWitness
    {
        std::vector<VertexId> vertices;

        auto operator==(const VertexSetWitness &) const -> bool = default;
    };

    using Witness = std::variant<VertexWitness, UnreachableWitness, AvoidingReachWitness, EdgeWitness,
        BaseCountWitness, VertexSetWitness>;

    struct ConditionVerdict
    {
        int condition;
        VerdictStatus status;
        std::optional<Witness> witness;

        auto passed() const -> bool { return status != VerdictStatus::fail; }
    };

    struct FilterReport
    {
        std::vector<ConditionVerdict> verdicts;
        std::vector<int> evaluation_order;
        bool survived;
        bool short_circuited;

        auto first_failure() const -> std::optional<int>;
    };

    struct AvoidingReach
    {
        VertexSet covered;
        VertexSet missing;
    };

    /// Splits {v} ∪ N1(v) for e = (u,v) by whether u reaches the target with a
    /// walk of length 1 or 2 that never uses e.
    auto avoiding_reach(const Digraph & g, Edge e) -> AvoidingReach;

    /// Throws Error(condition_out_of_range) unless 0 <= condition <= 7.
    auto check_condition(const Digraph & g, int condition) -> ConditionVerdict;

    auto run_filter(const Digraph & g, bool short_circuit = true) -> FilterReport;
}

#endif
