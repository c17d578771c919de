#ifndef SNC_GUARD_SNC_SEARCH_HH
#define SNC_GUARD_SNC_SEARCH_HH 1

#include <snc/criminal_filter.hh>
#include <snc/digraph.hh>

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace snc
{
    inline constexpr std::size_t default_enumeration_ceiling = 6;

    /// 3^C(n,2) must fit in 64 bits.
    inline constexpr std::size_t max_enumerable_vertices = 9;

    /// Number of labelled digon-free digraphs on n vertices, 3^(n(n-1)/2).
    auto digon_free_count(std::size_t n) -> std::uint64_t;

    /// The graph at a position of the enumeration order: each unordered pair
    /// (0,1), (0,2), ..., (n-2,n-1) is a base-3 digit (0 absent, 1 low -> high,
    /// 2 high -> low), the first pair most significant.
    auto digon_free_graph_at(std::size_t n, std::uint64_t index) -> Digraph;

    /**
     * Walks a range of the enumeration order, keeping the current graph as one
     * adjacency word per vertex and updating it in place as an odometer.
     */
    class DigonFreeEnumerator
    {
    private:
        std::size_t _n;
        std::uint64_t _index, _end;
        std::vector<std::pair<VertexId, VertexId>> _pairs;
        std::vector<std::uint8_t> _digits;
        std::array<std::uint64_t, 64> _rows{};

        auto apply(std::size_t pair, std::uint8_t digit) -> void;

    public:
        /// Throws Error(ceiling_exceeded) if n > ceiling or n > max_enumerable_vertices.
        DigonFreeEnumerator(std::size_t n, std::size_t ceiling = default_enumeration_ceiling);
        DigonFreeEnumerator(std::size_t n, std::uint64_t begin, std::uint64_t end,
            std::size_t ceiling = default_enumeration_ceiling);

        auto done() const noexcept -> bool { return _index >= _end; }
        auto index() const noexcept -> std::uint64_t { return _index; }
        auto vertex_count() const noexcept -> std::size_t { return _n; }
        auto rows() const noexcept -> std::span<const std::uint64_t> { return {_rows.data(), _n}; }
        auto graph() const -> Digraph { return Digraph::from_small_rows(_n, rows()); }

        auto advance() -> void;
    };

    /// All graphs of the enumeration, materialised in order. Only sensible for small n.
    auto enumerate_digon_free(std::size_t n, std::size_t ceiling = default_enumeration_ceiling) -> std::vector<Digraph>;

    /// Condition 0 on a graph given as out-adjacency words (n <= 64): does any
    /// vertex have |N1| <= |N2|? Stops at the first one found.
    auto has_satisfactory_vertex(std::span<const std::uint64_t> rows) -> bool;

    enum class SearchMode
    {
        exhaustive,
        random
    };

    enum class RandomModel
    {
        tournament,
        digon_free,
        acyclic,
        triangle_free
    };

    auto to_string(SearchMode mode) -> std::string;
    auto to_string(RandomModel model) -> std::string;
    auto parse_random_model(const std::string & name) -> RandomModel;

    struct SearchSpec
    {
        SearchMode mode = SearchMode::exhaustive;
        std::size_t n = 1;
        RandomModel model = RandomModel::tournament;
        double p = 0.5;
        std::uint64_t count = 1;
        std::uint64_t seed = 0;
        std::size_t workers = 1;
        bool filter_enabled = true;
        std::size_t ceiling = default_enumeration_ceiling;
        std::uint64_t max_retries = 10000;
    };

    /// One graph generated with the given spec's model; sample i of a random
    /// search uses derive_seed(spec.seed, i).
    auto generate(const SearchSpec & spec, std::uint64_t seed) -> Digraph;

    /// A graph that passed every condition the search applied; a candidate,
    /// nothing more.
    struct Survivor
    {
        std::uint64_t index;
        Digraph graph;
        FilterReport report;
    };

    struct SearchReport
    {
        SearchSpec spec;
        std::uint64_t graphs_examined = 0;
        std::uint64_t counterexamples_found = 0;
        /// First failing condition per rejected graph.
        std::array<std::uint64_t, condition_count> rejections{};
        /// Ordered by fewest edges, then fewest vertices, then stream index.
        std::vector<Survivor> survivors;
        std::chrono::duration<double, std::milli> elapsed{0};
    };

    /// Throws Error(invalid_spec) or Error(ceiling_exceeded) on a bad spec.
    auto validate(const SearchSpec & spec) -> void;

    /**
     * Generates every graph the spec describes, checks it for a satisfactory
     * vertex and, when the filter is on, runs the remaining conditions with
     * short-circuiting. With the filter off the pipeline is condition 0 alone.
     * Work is cut into fixed chunks independent of the worker count and merged
     * in chunk order, so the report does not depend on how many workers ran.
     */
    auto run_search(const SearchSpec & spec) -> SearchReport;
}

#endif
