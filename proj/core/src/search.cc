#include <snc/errors.hh>
#include <snc/generators.hh>
#include <snc/search.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <optional>
#include <thread>
#include <tuple>

using std::size_t;
using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace snc
{
    using std::to_string;

    namespace
    {
        constexpr uint64_t exhaustive_chunk = uint64_t{1} << 15;
        constexpr uint64_t random_chunk = 16;

        auto pair_count(size_t n) -> size_t { return n * (n - 1) / 2; }

        auto check_ceiling(size_t n, size_t ceiling) -> void
        {
            if (n == 0)
                throw Error{ErrorKind::invalid_spec, "enumeration needs n >= 1"};
            if (n > ceiling || n > max_enumerable_vertices)
                throw Error{ErrorKind::ceiling_exceeded,
                    "n = " + to_string(n) + " is above the enumeration ceiling of " +
                        to_string(std::min(ceiling, max_enumerable_vertices))};
        }

        struct ChunkResult
        {
            uint64_t examined = 0;
            uint64_t counterexamples = 0;
            std::array<uint64_t, condition_count> rejections{};
            vector<Survivor> survivors;
            std::exception_ptr error;
        };

        /// The graph has already been found to lack a satisfactory vertex.
        auto record_counterexample(const SearchSpec & spec, uint64_t index, Digraph g, ChunkResult & result) -> void
        {
            ++result.counterexamples;
            if (spec.filter_enabled) {
                auto report = run_filter(g, true);
                if (auto failed = report.first_failure()) {
                    ++result.rejections[*failed];
                    return;
                }
                result.survivors.push_back(Survivor{index, std::move(g), std::move(report)});
            }
            else {
                FilterReport report{{check_condition(g, 0)}, {0}, true, false};
                result.survivors.push_back(Survivor{index, std::move(g), std::move(report)});
            }
        }

        auto run_exhaustive_chunk(const SearchSpec & spec, uint64_t begin, uint64_t end, ChunkResult & result) -> void
        {
            for (DigonFreeEnumerator e{spec.n, begin, end, spec.ceiling}; ! e.done(); e.advance()) {
                ++result.examined;
                if (has_satisfactory_vertex(e.rows()))
                    ++result.rejections[0];
                else
                    record_counterexample(spec, e.index(), e.graph(), result);
            }
        }

        auto run_random_chunk(const SearchSpec & spec, uint64_t begin, uint64_t end, ChunkResult & result) -> void
        {
            for (auto i = begin; i < end; ++i) {
                auto g = generate(spec, derive_seed(spec.seed, i));
                ++result.examined;
                if (! satisfactory_vertices(g).empty())
                    ++result.rejections[0];
                else
                    record_counterexample(spec, i, std::move(g), result);
            }
        }
    }

    auto digon_free_count(size_t n) -> uint64_t
    {
        if (n > max_enumerable_vertices)
            throw Error{ErrorKind::ceiling_exceeded, "3^C(n,2) overflows for n = " + to_string(n)};
        uint64_t result = 1;
        for (size_t i = 0; i < pair_count(n); ++i)
            result *= 3;
        return result;
    }

    auto digon_free_graph_at(size_t n, uint64_t index) -> Digraph
    {
        DigonFreeEnumerator e{n, index, index + 1, max_enumerable_vertices};
        return e.graph();
    }

    DigonFreeEnumerator::DigonFreeEnumerator(size_t n, size_t ceiling) :
        DigonFreeEnumerator(n, 0, (check_ceiling(n, ceiling), digon_free_count(n)), ceiling)
    {
    }

    DigonFreeEnumerator::DigonFreeEnumerator(size_t n, uint64_t begin, uint64_t end, size_t ceiling) :
        _n(n),
        _index(begin),
        _end(end)
    {
        check_ceiling(n, ceiling);
        auto total = digon_free_count(n);
        if (begin > end || end > total)
            throw Error{ErrorKind::invalid_spec, "enumeration range [" + to_string(begin) + ", " + to_string(end) +
                    ") is outside [0, " + to_string(total) + ")"};

        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                _pairs.emplace_back(u, v);
        _digits.assign(_pairs.size(), 0);

        if (done())
            return;
        auto rest = begin;
        for (size_t i = _pairs.size(); i-- > 0;) {
            apply(i, static_cast<std::uint8_t>(rest % 3));
            rest /= 3;
        }
    }

    auto DigonFreeEnumerator::apply(size_t pair, std::uint8_t digit) -> void
    {
        auto [u, v] = _pairs[pair];
        _rows[u] &= ~(uint64_t{1} << v);
        _rows[v] &= ~(uint64_t{1} << u);
        if (digit == 1)
            _rows[u] |= uint64_t{1} << v;
        else if (digit == 2)
            _rows[v] |= uint64_t{1} << u;
        _digits[pair] = digit;
    }

    auto DigonFreeEnumerator::advance() -> void
    {
        ++_index;
        if (done())
            return;
        for (size_t i = _pairs.size(); i-- > 0;) {
            auto digit = static_cast<std::uint8_t>((_digits[i] + 1) % 3);
            apply(i, digit);
            if (digit != 0)
                break;
        }
    }

    auto enumerate_digon_free(size_t n, size_t ceiling) -> vector<Digraph>
    {
        vector<Digraph> result;
        for (DigonFreeEnumerator e{n, ceiling}; ! e.done(); e.advance())
            result.push_back(e.graph());
        return result;
    }

    auto has_satisfactory_vertex(span<const uint64_t> rows) -> bool
    {
        for (size_t u = 0; u < rows.size(); ++u) {
            auto first = rows[u];
            uint64_t second = 0;
            for (auto bits = first; bits; bits &= bits - 1)
                second |= rows[static_cast<size_t>(std::countr_zero(bits))];
            second &= ~first & ~(uint64_t{1} << u);
            if (std::popcount(first) <= std::popcount(second))
                return true;
        }
        return false;
    }

    auto to_string(SearchMode mode) -> string
    {
        return mode == SearchMode::exhaustive ? "exhaustive" : "random";
    }

    auto to_string(RandomModel model) -> string
    {
        switch (model) {
        case RandomModel::tournament: return "tournament";
        case RandomModel::digon_free: return "digon_free";
        case RandomModel::acyclic: return "acyclic";
        case RandomModel::triangle_free: return "triangle_free";
        }
        return "unknown";
    }

    auto parse_random_model(const string & name) -> RandomModel
    {
        for (auto m : {RandomModel::tournament, RandomModel::digon_free, RandomModel::acyclic, RandomModel::triangle_free})
            if (name == to_string(m))
                return m;
        throw Error{ErrorKind::invalid_spec, "unknown model '" + name + "'"};
    }

    auto generate(const SearchSpec & spec, uint64_t seed) -> Digraph
    {
        switch (spec.model) {
        case RandomModel::tournament: return random_tournament(spec.n, seed);
        case RandomModel::digon_free: return random_digon_free(spec.n, spec.p, seed);
        case RandomModel::acyclic: return random_acyclic(spec.n, spec.p, seed);
        case RandomModel::triangle_free: return random_triangle_free(spec.n, spec.p, seed, spec.max_retries);
        }
        throw Error{ErrorKind::invalid_spec, "unknown model"};
    }

    auto validate(const SearchSpec & spec) -> void
    {
        if (spec.n == 0)
            throw Error{ErrorKind::invalid_spec, "n must be at least 1"};
        if (spec.workers == 0)
            throw Error{ErrorKind::invalid_spec, "workers must be at least 1"};
        if (spec.mode == SearchMode::exhaustive)
            check_ceiling(spec.n, spec.ceiling);
        else {
            if (spec.count == 0)
                throw Error{ErrorKind::invalid_spec, "random searches need count >= 1"};
            if (! (spec.p >= 0.0 && spec.p <= 1.0))
                throw Error{ErrorKind::invalid_probability, "probability " + to_string(spec.p) + " is not in [0, 1]"};
            if (spec.max_retries == 0)
                throw Error{ErrorKind::invalid_spec, "max_retries must be at least 1"};
        }
    }

    auto run_search(const SearchSpec & spec) -> SearchReport
    {
        validate(spec);
        auto start = std::chrono::steady_clock::now();

        auto total = spec.mode == SearchMode::exhaustive ? digon_free_count(spec.n) : spec.count;
        auto chunk_size = spec.mode == SearchMode::exhaustive ? exhaustive_chunk : random_chunk;
        auto chunk_count = static_cast<size_t>((total + chunk_size - 1) / chunk_size);

        vector<ChunkResult> chunks(chunk_count);
        std::atomic<size_t> next_chunk{0};
        auto work = [&] {
            for (size_t c; (c = next_chunk.fetch_add(1)) < chunk_count;) {
                auto begin = c * chunk_size, end = std::min<uint64_t>(total, begin + chunk_size);
                try {
                    if (spec.mode == SearchMode::exhaustive)
                        run_exhaustive_chunk(spec, begin, end, chunks[c]);
                    else
                        run_random_chunk(spec, begin, end, chunks[c]);
                }
                catch (...) {
                    chunks[c].error = std::current_exception();
                }
            }
        };

        auto threads = std::min(spec.workers, std::max<size_t>(chunk_count, 1));
        if (threads <= 1)
            work();
        else {
            vector<std::jthread> pool;
            for (size_t t = 0; t < threads; ++t)
                pool.emplace_back(work);
        }

        SearchReport report;
        report.spec = spec;
        for (auto & chunk : chunks) {
            if (chunk.error)
                std::rethrow_exception(chunk.error);
            report.graphs_examined += chunk.examined;
            report.counterexamples_found += chunk.counterexamples;
            for (int k = 0; k < condition_count; ++k)
                report.rejections[k] += chunk.rejections[k];
            for (auto & s : chunk.survivors)
                report.survivors.push_back(std::move(s));
        }
        std::stable_sort(report.survivors.begin(), report.survivors.end(), [](const Survivor & a, const Survivor & b) {
            return std::tuple{a.graph.edge_count(), a.graph.vertex_count(), a.index} <
                std::tuple{b.graph.edge_count(), b.graph.vertex_count(), b.index};
        });

        report.elapsed = std::chrono::steady_clock::now() - start;
        return report;
    }
}
