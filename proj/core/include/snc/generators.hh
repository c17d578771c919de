#ifndef SNC_GUARD_SNC_GENERATORS_HH
#define SNC_GUARD_SNC_GENERATORS_HH 1

#include <snc/digraph.hh>

#include <cstddef>
#include <cstdint>
#include <random>

namespace snc
{
    /**
     * Seeded bit source whose output is pinned across platforms: the engine is
     * std::mt19937_64 (fully specified by the standard) and every conversion to
     * doubles, coins and bounded integers is done here rather than through the
     * implementation-defined std distributions.
     */
    class Rng
    {
    private:
        std::mt19937_64 _engine;

    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) {}

        auto next() -> std::uint64_t { return _engine(); }

        /// Uniform on [0, 1) with 53 bits of resolution.
        auto uniform01() -> double { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

        auto bernoulli(double p) -> bool { return uniform01() < p; }

        auto coin() -> bool { return next() >> 63; }

        /// Uniform on [0, bound), bound >= 1, by rejection.
        auto below(std::uint64_t bound) -> std::uint64_t;
    };

    /// Mixes a master seed and a stream index into an independent seed (splitmix64).
    auto derive_seed(std::uint64_t master, std::uint64_t index) -> std::uint64_t;

    /// Every unordered pair oriented by a fair coin.
    auto random_tournament(std::size_t n, std::uint64_t seed) -> Digraph;

    /// Each unordered pair present with probability p, then oriented by a fair coin.
    auto random_digon_free(std::size_t n, double p, std::uint64_t seed) -> Digraph;

    /// Forward pairs of a uniformly random vertex order, each kept with probability p.
    auto random_acyclic(std::size_t n, double p, std::uint64_t seed) -> Digraph;

    /// Rejection-samples random_digon_free until no transitive triangle remains.
    /// Throws RetriesExhausted after max_retries failed attempts.
    auto random_triangle_free(std::size_t n, double p, std::uint64_t seed, std::uint64_t max_retries) -> Digraph;
}

#endif
