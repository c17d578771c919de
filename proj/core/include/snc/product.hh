#ifndef SNC_GUARD_SNC_PRODUCT_HH
#define SNC_GUARD_SNC_PRODUCT_HH 1

#include <snc/digraph.hh>

#include <cstddef>
#include <utility>

namespace snc
{
    /// Row-major pairing of factor vertices: (d, h) <-> d * h_count + h.
    class ProductLabeling
    {
    private:
        std::size_t _d_count, _h_count;

    public:
        ProductLabeling(std::size_t d_count, std::size_t h_count) : _d_count(d_count), _h_count(h_count) {}

        auto d_count() const noexcept -> std::size_t { return _d_count; }
        auto h_count() const noexcept -> std::size_t { return _h_count; }
        auto size() const noexcept -> std::size_t { return _d_count * _h_count; }

        auto encode(VertexId d, VertexId h) const -> VertexId;
        auto decode(VertexId v) const -> std::pair<VertexId, VertexId>;
    };

    struct ProductGraph
    {
        Digraph graph;
        ProductLabeling labeling;
    };

    struct PredictedProfile
    {
        std::size_t n1;
        std::size_t n2;
        long anti_satisfaction;

        auto operator==(const PredictedProfile &) const -> bool = default;
    };

    /// Every vertex has non-negative anti-satisfaction.
    auto is_valid_second_factor(const Digraph & h) -> bool;

    /**
     * Replaces each vertex of d by a copy of h. Inside a copy the edges of h
     * are reproduced; for an edge (d1, d2) of d every vertex of copy d1 points
     * at every vertex of copy d2. Factors are accepted whatever their
     * anti-satisfaction.
     */
    auto build_product(const Digraph & d, const Digraph & h) -> ProductGraph;

    /// Closed form for the neighbourhood sizes of (dv, hv) in the product,
    /// computed from the factors alone:
    ///   n1 = |N1_H(hv)| + |V(H)| |N1_D(dv)|,  n2 = |N2_H(hv)| + |V(H)| |N2_D(dv)|.
    auto predicted_profile(const Digraph & d, const Digraph & h, VertexId dv, VertexId hv) -> PredictedProfile;
}

#endif
