#include <snc/errors.hh>
#include <snc/structure.hh>

#include <algorithm>
#include <deque>
#include <string>

using std::nullopt;
using std::optional;
using std::size_t;
using std::vector;

namespace snc
{
    using std::to_string;

    namespace
    {
        auto require_edge(const Digraph & g, Edge e) -> void
        {
            if (! g.has_edge(e))
                throw GraphError{ErrorKind::no_such_edge,
                    "edge (" + to_string(e.tail) + "," + to_string(e.head) + ") is not present", e.tail, e.head};
        }

        auto reaches_everything(const Digraph & g, VertexId from, Direction direction) -> bool
        {
            auto d = distances_from(g, from, direction);
            return std::none_of(d.begin(), d.end(), [](Distance x) { return x.is_infinite(); });
        }
    }

    auto is_strongly_connected(const Digraph & g) -> bool
    {
        return reaches_everything(g, 0, Direction::out) && reaches_everything(g, 0, Direction::in);
    }

    auto find_directed_cycle(const Digraph & g) -> optional<vector<VertexId>>
    {
        enum class Colour { white, grey, black };
        auto n = g.vertex_count();
        vector<Colour> colour(n, Colour::white);
        vector<VertexId> parent(n, n);

        // Iterative DFS; each stack entry remembers the next candidate successor.
        vector<std::pair<VertexId, VertexId>> stack;
        for (VertexId root = 0; root < n; ++root) {
            if (colour[root] != Colour::white)
                continue;
            colour[root] = Colour::grey;
            stack.emplace_back(root, 0);
            while (! stack.empty()) {
                auto & [x, next] = stack.back();
                auto advanced = false;
                for (; next < n; ++next) {
                    if (! g.has_edge(x, next))
                        continue;
                    auto y = next;
                    if (colour[y] == Colour::grey) {
                        vector<VertexId> cycle{y};
                        for (auto z = x; z != y; z = parent[z])
                            cycle.push_back(z);
                        std::reverse(cycle.begin() + 1, cycle.end());
                        return cycle;
                    }
                    if (colour[y] == Colour::white) {
                        ++next;
                        colour[y] = Colour::grey;
                        parent[y] = x;
                        stack.emplace_back(y, 0);
                        advanced = true;
                        break;
                    }
                }
                if (! advanced) {
                    colour[stack.back().first] = Colour::black;
                    stack.pop_back();
                }
            }
        }
        return nullopt;
    }

    auto has_directed_cycle(const Digraph & g) -> bool
    {
        return find_directed_cycle(g).has_value();
    }

    auto underlying_girth(const Digraph & g) -> GirthValue
    {
        auto n = g.vertex_count();
        vector<vector<VertexId>> adjacent(n);
        for (auto [u, v] : g.edges()) {
            adjacent[u].push_back(v);
            adjacent[v].push_back(u);
        }

        auto best = GirthValue::infinity();
        for (VertexId root = 0; root < n; ++root) {
            vector<size_t> depth(n, n);
            vector<VertexId> parent(n, n);
            std::deque<VertexId> queue{root};
            depth[root] = 0;
            while (! queue.empty()) {
                auto x = queue.front();
                queue.pop_front();
                for (auto y : adjacent[x]) {
                    if (depth[y] == n) {
                        depth[y] = depth[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                    else if (parent[x] != y)
                        best = std::min(best, GirthValue::finite(depth[x] + depth[y] + 1));
                }
            }
        }
        return best;
    }

    auto has_transitive_triangle(const Digraph & g) -> bool
    {
        return std::any_of(g.edges().begin(), g.edges().end(),
            [&](Edge e) { return triangle_base_count(g, e) > 0; });
    }

    auto triangle_base_count(const Digraph & g, Edge e) -> size_t
    {
        require_edge(g, e);
        return g.out_neighbors(e.tail).intersection_size(g.out_neighbors(e.head));
    }

    auto diamond_base_targets(const Digraph & g, Edge e) -> VertexSet
    {
        require_edge(g, e);
        auto [t, u] = e;

        // w needs a second route t -> v -> w with v outside {t, u, w}; loops
        // and digons already rule out v == t, v == w and w == t.
        VertexSet via_other_side{g.vertex_count()};
        auto others = g.out_neighbors(t);
        others.erase(u);
        for (auto v : others)
            via_other_side |= g.out_neighbors(v);

        return g.out_neighbors(u) & via_other_side;
    }

    auto diamond_witnesses(const Digraph & g, Edge e) -> vector<DiamondWitness>
    {
        vector<DiamondWitness> result;
        auto [t, u] = e;
        for (auto w : diamond_base_targets(g, e))
            for (auto v : g.out_neighbors(t))
                if (v != u && g.has_edge(v, w)) {
                    result.push_back(DiamondWitness{t, u, v, w});
                    break;
                }
        return result;
    }

    auto min_outdegree_vertex(const Digraph & g) -> VertexId
    {
        VertexId best = 0;
        auto best_degree = g.out_degree(0);
        for (VertexId u = 1; u < g.vertex_count(); ++u)
            if (auto d = g.out_degree(u); d < best_degree) {
                best = u;
                best_degree = d;
            }
        return best;
    }
}
