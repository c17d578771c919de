#include <snc/errors.hh>
#include <snc/product.hh>

#include <algorithm>
#include <string>

using std::pair;
using std::size_t;
using std::vector;

namespace snc
{
    using std::to_string;

    auto ProductLabeling::encode(VertexId d, VertexId h) const -> VertexId
    {
        if (d >= _d_count || h >= _h_count)
            throw GraphError{ErrorKind::vertex_out_of_range,
                "pair (" + std::to_string(d) + "," + std::to_string(h) + ") is outside the factors", d, h};
        return d * _h_count + h;
    }

    auto ProductLabeling::decode(VertexId v) const -> pair<VertexId, VertexId>
    {
        if (v >= size())
            throw GraphError{ErrorKind::vertex_out_of_range,
                "vertex " + std::to_string(v) + " is not below " + std::to_string(size()), v, size()};
        return {v / _h_count, v % _h_count};
    }

    auto is_valid_second_factor(const Digraph & h) -> bool
    {
        auto ps = profiles(h);
        return std::all_of(ps.begin(), ps.end(), [](const NeighborhoodProfile & p) { return p.anti_satisfaction >= 0; });
    }

    auto build_product(const Digraph & d, const Digraph & h) -> ProductGraph
    {
        ProductLabeling labeling{d.vertex_count(), h.vertex_count()};
        auto copy = h.vertex_count();

        vector<Edge> edges;
        edges.reserve(d.vertex_count() * h.edge_count() + d.edge_count() * copy * copy);
        for (VertexId dv = 0; dv < d.vertex_count(); ++dv)
            for (auto [a, b] : h.edges())
                edges.push_back(Edge{labeling.encode(dv, a), labeling.encode(dv, b)});
        for (auto [d1, d2] : d.edges())
            for (VertexId a = 0; a < copy; ++a)
                for (VertexId b = 0; b < copy; ++b)
                    edges.push_back(Edge{labeling.encode(d1, a), labeling.encode(d2, b)});

        return ProductGraph{Digraph::from_edges(labeling.size(), edges), labeling};
    }

    auto predicted_profile(const Digraph & d, const Digraph & h, VertexId dv, VertexId hv) -> PredictedProfile
    {
        auto pd = profile(d, dv);
        auto ph = profile(h, hv);
        auto copy = h.vertex_count();
        auto n1 = ph.n1 + copy * pd.n1;
        auto n2 = ph.n2 + copy * pd.n2;
        return PredictedProfile{n1, n2, static_cast<long>(n1) - static_cast<long>(n2)};
    }
}
