#include <snc/graph_io.hh>
#include <snc/report.hh>

#include <json.hpp>

#include <sstream>

using json = nlohmann::ordered_json;
using std::string;
using std::vector;

namespace snc
{
    using std::to_string;

    namespace
    {
        auto edge_json(Edge e) -> json { return json::array({e.tail, e.head}); }

        struct WitnessToJson
        {
            auto operator()(const VertexWitness & w) const -> json
            {
                return {{"kind", "vertex"}, {"vertex", w.vertex}, {"anti_satisfaction", w.anti_satisfaction}};
            }

            auto operator()(const UnreachableWitness & w) const -> json
            {
                return {{"kind", "unreachable"}, {"from", w.from}, {"to", w.to}};
            }

            auto operator()(const AvoidingReachWitness & w) const -> json
            {
                return {{"kind", "avoiding_reach"}, {"edge", edge_json(w.edge)}, {"missing", w.missing}};
            }

            auto operator()(const EdgeWitness & w) const -> json
            {
                return {{"kind", "edge"}, {"edge", edge_json(w.edge)}};
            }

            auto operator()(const BaseCountWitness & w) const -> json
            {
                return {{"kind", "base_count"}, {"edge", edge_json(w.edge)}, {"required", w.required},
                    {"triangles", w.triangles}, {"diamonds", w.diamonds}};
            }

            auto operator()(const VertexSetWitness & w) const -> json
            {
                return {{"kind", "vertex_set"}, {"vertices", w.vertices}};
            }
        };

        auto filter_json(const FilterReport & report) -> json
        {
            json verdicts = json::array();
            for (auto & v : report.verdicts) {
                json entry{{"condition", v.condition}, {"status", to_string(v.status)}};
                if (v.witness)
                    entry["witness"] = std::visit(WitnessToJson{}, *v.witness);
                verdicts.push_back(std::move(entry));
            }
            return {{"survived", report.survived}, {"short_circuited", report.short_circuited},
                {"evaluation_order", report.evaluation_order}, {"verdicts", std::move(verdicts)}};
        }

        auto spec_json(const SearchSpec & spec) -> json
        {
            json result{{"mode", to_string(spec.mode)}, {"n", spec.n}, {"filter_enabled", spec.filter_enabled}};
            if (spec.mode == SearchMode::exhaustive)
                result["ceiling"] = spec.ceiling;
            else {
                result["model"] = to_string(spec.model);
                if (spec.model != RandomModel::tournament)
                    result["p"] = spec.p;
                if (spec.model == RandomModel::triangle_free)
                    result["max_retries"] = spec.max_retries;
                result["count"] = spec.count;
                result["seed"] = spec.seed;
            }
            return result;
        }
    }

    auto tool_version() -> string
    {
        return SNC_VERSION;
    }

    auto render_profile_table(const Digraph & g) -> string
    {
        std::ostringstream out;
        out << "vertex n1 n2 anti_satisfaction satisfactory\n";
        size_t satisfactory = 0;
        for (auto & p : profiles(g)) {
            out << p.vertex << ' ' << p.n1 << ' ' << p.n2 << ' ' << p.anti_satisfaction << ' '
                << (p.satisfactory ? "yes" : "no") << '\n';
            satisfactory += p.satisfactory;
        }
        out << "satisfactory " << satisfactory << " of " << g.vertex_count() << '\n';
        return out.str();
    }

    auto render_profile_json(const Digraph & g) -> string
    {
        json rows = json::array();
        size_t satisfactory = 0;
        for (auto & p : profiles(g)) {
            rows.push_back({{"vertex", p.vertex}, {"n1", p.n1}, {"n2", p.n2},
                {"anti_satisfaction", p.anti_satisfaction}, {"satisfactory", p.satisfactory}});
            satisfactory += p.satisfactory;
        }
        json doc{{"tool", "snc"}, {"version", tool_version()}, {"vertices", g.vertex_count()},
            {"edges", g.edge_count()}, {"profiles", std::move(rows)}, {"satisfactory_count", satisfactory}};
        return doc.dump(2) + "\n";
    }

    auto render_filter_report(const FilterReport & report) -> string
    {
        json doc{{"tool", "snc"}, {"version", tool_version()}};
        doc.update(filter_json(report));
        return doc.dump(2) + "\n";
    }

    auto render_search_report(const SearchReport & report, bool include_runtime) -> string
    {
        json rejections = json::object();
        for (int k = 0; k < condition_count; ++k)
            rejections[std::to_string(k)] = report.rejections[k];

        json survivors = json::array();
        for (auto & s : report.survivors)
            survivors.push_back({{"index", s.index}, {"vertices", s.graph.vertex_count()},
                {"edges", s.graph.edge_count()}, {"graph", write_digraph(s.graph)}, {"filter", filter_json(s.report)}});

        json doc{{"tool", "snc"}, {"version", tool_version()}, {"spec", spec_json(report.spec)},
            {"graphs_examined", report.graphs_examined}, {"counterexamples_found", report.counterexamples_found},
            {"rejections_by_first_failed_condition", std::move(rejections)},
            {"candidate_order", "fewest edges, then fewest vertices, then stream index"},
            {"filter_survivors", std::move(survivors)}};
        if (include_runtime)
            doc["runtime"] = {{"workers", report.spec.workers}, {"elapsed_ms", report.elapsed.count()}};
        return doc.dump(2) + "\n";
    }
}
