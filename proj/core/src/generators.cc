#include <snc/errors.hh>
#include <snc/generators.hh>
#include <snc/structure.hh>

#include <numeric>
#include <string>
#include <vector>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace snc
{
    using std::to_string;

    namespace
    {
        auto check_probability(double p) -> void
        {
            if (! (p >= 0.0 && p <= 1.0))
                throw Error{ErrorKind::invalid_probability, "probability " + std::to_string(p) + " is not in [0, 1]"};
        }

        auto check_vertices(size_t n) -> void
        {
            if (n == 0)
                throw GraphError{ErrorKind::empty_vertex_set, "a digraph needs at least one vertex"};
        }

        auto sample_digon_free(size_t n, double p, Rng & rng) -> Digraph
        {
            vector<Edge> edges;
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = u + 1; v < n; ++v)
                    if (rng.bernoulli(p))
                        edges.push_back(rng.coin() ? Edge{u, v} : Edge{v, u});
            return Digraph::from_edges(n, edges);
        }
    }

    auto Rng::below(uint64_t bound) -> uint64_t
    {
        // Largest multiple of bound that fits, so the remainder is unbiased.
        auto limit = ~uint64_t{0} - (~uint64_t{0} % bound + 1) % bound;
        uint64_t x;
        do
            x = next();
        while (x > limit);
        return x % bound;
    }

    auto derive_seed(uint64_t master, uint64_t index) -> uint64_t
    {
        auto z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    auto random_tournament(size_t n, uint64_t seed) -> Digraph
    {
        check_vertices(n);
        Rng rng{seed};
        vector<Edge> edges;
        edges.reserve(n * (n - 1) / 2);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                edges.push_back(rng.coin() ? Edge{u, v} : Edge{v, u});
        return Digraph::from_edges(n, edges);
    }

    auto random_digon_free(size_t n, double p, uint64_t seed) -> Digraph
    {
        check_probability(p);
        check_vertices(n);
        Rng rng{seed};
        return sample_digon_free(n, p, rng);
    }

    auto random_acyclic(size_t n, double p, uint64_t seed) -> Digraph
    {
        check_probability(p);
        check_vertices(n);
        Rng rng{seed};

        vector<VertexId> order(n);
        std::iota(order.begin(), order.end(), VertexId{0});
        for (size_t i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng.below(i + 1)]);

        vector<Edge> edges;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (rng.bernoulli(p))
                    edges.push_back(Edge{order[i], order[j]});
        return Digraph::from_edges(n, edges);
    }

    auto random_triangle_free(size_t n, double p, uint64_t seed, uint64_t max_retries) -> Digraph
    {
        check_probability(p);
        check_vertices(n);
        if (max_retries == 0)
            throw Error{ErrorKind::invalid_spec, "max_retries must be at least 1"};

        Rng rng{seed};
        for (uint64_t attempt = 0; attempt < max_retries; ++attempt) {
            auto g = sample_digon_free(n, p, rng);
            if (! has_transitive_triangle(g))
                return g;
        }
        throw RetriesExhausted{max_retries};
    }
}
