#include <snc/criminal_filter.hh>
#include <snc/errors.hh>
#include <snc/structure.hh>

#include <string>

using std::nullopt;
using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace snc
{
    using std::to_string;

    namespace
    {
        /// Per-graph data shared by the individual checks, computed on demand.
        class FilterContext
        {
        private:
            const Digraph & _graph;
            optional<vector<NeighborhoodProfile>> _profiles;

        public:
            explicit FilterContext(const Digraph & g) : _graph(g) {}

            auto graph() const -> const Digraph & { return _graph; }

            auto profiles() -> const vector<NeighborhoodProfile> &
            {
                if (! _profiles)
                    _profiles = snc::profiles(_graph);
                return *_profiles;
            }

            auto anti(VertexId v) -> long { return profiles()[v].anti_satisfaction; }
        };

        auto pass(int condition) -> ConditionVerdict
        {
            return ConditionVerdict{condition, VerdictStatus::pass, nullopt};
        }

        auto fail(int condition, Witness witness) -> ConditionVerdict
        {
            return ConditionVerdict{condition, VerdictStatus::fail, std::move(witness)};
        }

        auto no_satisfactory_vertex(FilterContext & ctx) -> ConditionVerdict
        {
            for (auto & p : ctx.profiles())
                if (p.satisfactory)
                    return fail(0, VertexWitness{p.vertex, p.anti_satisfaction});
            return pass(0);
        }

        auto strongly_connected(FilterContext & ctx) -> ConditionVerdict
        {
            auto & g = ctx.graph();
            for (VertexId u = 0; u < g.vertex_count(); ++u) {
                auto reach = walkable_neighborhood(g, u);
                if (reach.size() != g.vertex_count())
                    for (VertexId v = 0; v < g.vertex_count(); ++v)
                        if (! reach.contains(v))
                            return fail(1, UnreachableWitness{u, v});
            }
            return pass(1);
        }

        auto anti_satisfaction_one_or_two(FilterContext & ctx) -> ConditionVerdict
        {
            for (auto & p : ctx.profiles())
                if (p.anti_satisfaction != 1 && p.anti_satisfaction != 2)
                    return fail(2, VertexWitness{p.vertex, p.anti_satisfaction});
            return pass(2);
        }

        auto avoiding_paths(FilterContext & ctx) -> ConditionVerdict
        {
            for (auto e : ctx.graph().edges()) {
                auto reach = avoiding_reach(ctx.graph(), e);
                if (reach.missing.size() > 1)
                    return fail(3, AvoidingReachWitness{e, reach.missing.to_vector()});
            }
            return pass(3);
        }

        auto every_edge_is_a_base(FilterContext & ctx) -> ConditionVerdict
        {
            auto & g = ctx.graph();
            for (auto e : g.edges())
                if (triangle_base_count(g, e) == 0 && diamond_base_targets(g, e).empty())
                    return fail(4, EdgeWitness{e});
            return pass(4);
        }

        auto enough_bases(FilterContext & ctx) -> ConditionVerdict
        {
            auto & g = ctx.graph();
            auto applicable = false;
            for (auto e : g.edges()) {
                auto out_u = ctx.profiles()[e.tail].n1, out_v = ctx.profiles()[e.head].n1;
                if (out_u > out_v)
                    continue;
                applicable = true;
                auto required = out_v - out_u + 1;
                auto triangles = triangle_base_count(g, e);
                auto diamonds = diamond_base_targets(g, e).size();
                if (triangles < required || diamonds < required)
                    return fail(5, BaseCountWitness{e, required, triangles, diamonds});
            }
            return applicable ? pass(5) : ConditionVerdict{5, VerdictStatus::not_applicable, nullopt};
        }

        auto in_neighbour_with_anti_one(FilterContext & ctx) -> ConditionVerdict
        {
            auto & g = ctx.graph();
            for (VertexId u = 0; u < g.vertex_count(); ++u) {
                auto found = false;
                for (auto w : g.in_neighbors(u))
                    if (ctx.anti(w) == 1) {
                        found = true;
                        break;
                    }
                if (! found)
                    return fail(6, VertexWitness{u, ctx.anti(u)});
            }
            return pass(6);
        }

        auto cycle_of_anti_one(FilterContext & ctx) -> ConditionVerdict
        {
            auto & g = ctx.graph();
            VertexSet ones{g.vertex_count()};
            for (auto & p : ctx.profiles())
                if (p.anti_satisfaction == 1)
                    ones.insert(p.vertex);

            if (! ones.empty() && has_directed_cycle(induced_subgraph(g, ones).graph))
                return pass(7);
            return fail(7, VertexSetWitness{ones.to_vector()});
        }

        auto evaluate(FilterContext & ctx, int condition) -> ConditionVerdict
        {
            switch (condition) {
            case 0: return no_satisfactory_vertex(ctx);
            case 1: return strongly_connected(ctx);
            case 2: return anti_satisfaction_one_or_two(ctx);
            case 3: return avoiding_paths(ctx);
            case 4: return every_edge_is_a_base(ctx);
            case 5: return enough_bases(ctx);
            case 6: return in_neighbour_with_anti_one(ctx);
            case 7: return cycle_of_anti_one(ctx);
            }
            throw Error{ErrorKind::condition_out_of_range, "condition " + std::to_string(condition) + " is not in 0..7"};
        }
    }

    auto to_string(VerdictStatus status) -> string
    {
        switch (status) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::not_applicable: return "not-applicable";
        }
        return "unknown";
    }

    auto FilterReport::first_failure() const -> optional<int>
    {
        for (auto & v : verdicts)
            if (! v.passed())
                return v.condition;
        return nullopt;
    }

    auto avoiding_reach(const Digraph & g, Edge e) -> AvoidingReach
    {
        if (! g.has_edge(e))
            throw GraphError{ErrorKind::no_such_edge,
                "edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) + ") is not present", e.tail, e.head};

        auto [u, v] = e;
        auto targets = g.out_neighbors(v);
        targets.insert(v);

        // Walks starting with any edge out of u other than e; the second step is
        // unrestricted since e only leaves u and no walk revisits u.
        auto first_step = g.out_neighbors(u);
        first_step.erase(v);
        auto reached = first_step;
        for (auto x : first_step)
            reached |= g.out_neighbors(x);

        return AvoidingReach{targets & reached, targets - reached};
    }

    auto check_condition(const Digraph & g, int condition) -> ConditionVerdict
    {
        FilterContext ctx{g};
        return evaluate(ctx, condition);
    }

    auto run_filter(const Digraph & g, bool short_circuit) -> FilterReport
    {
        FilterContext ctx{g};
        FilterReport report{{}, {}, true, false};
        for (auto condition : evaluation_order) {
            report.evaluation_order.push_back(condition);
            report.verdicts.push_back(evaluate(ctx, condition));
            if (! report.verdicts.back().passed()) {
                report.survived = false;
                if (short_circuit) {
                    report.short_circuited = condition != evaluation_order.back();
                    break;
                }
            }
        }
        return report;
    }
}
