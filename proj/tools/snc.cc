#include <snc/criminal_filter.hh>
#include <snc/errors.hh>
#include <snc/generators.hh>
#include <snc/graph_io.hh>
#include <snc/product.hh>
#include <snc/report.hh>
#include <snc/search.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using std::cerr;
using std::cout;
using std::optional;
using std::string;

namespace
{
    auto load(const string & path) -> snc::Digraph
    {
        if (path == "-")
            return snc::read_digraph(std::cin);
        return snc::read_digraph_file(path);
    }

    auto emit(const string & text, const string & path) -> void
    {
        if (path.empty() || path == "-") {
            cout << text;
            return;
        }
        std::ofstream out{path, std::ios::binary};
        if (! out || ! (out << text) || ! out.flush())
            throw std::runtime_error{"cannot write '" + path + "'"};
    }

    auto model_names() -> std::vector<string>
    {
        return {"tournament", "digon_free", "acyclic", "triangle_free"};
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Second-neighbourhood analysis and counterexample search for digon-free digraphs"};
    app.set_version_flag("--version", "snc " + snc::tool_version());
    app.require_subcommand(1);

    // analyze
    auto analyze = app.add_subcommand("analyze", "Per-vertex |N1|, |N2|, anti-satisfaction and satisfactory flag");
    string analyze_file;
    bool analyze_json = false;
    analyze->add_option("file", analyze_file, "Graph document ('-' for stdin)")->required();
    analyze->add_flag("--json", analyze_json, "Emit JSON instead of a table");

    // filter
    auto filter = app.add_subcommand("filter", "Evaluate the minimal-counterexample conditions");
    string filter_file;
    bool no_short_circuit = false;
    filter->add_option("file", filter_file, "Graph document ('-' for stdin)")->required();
    filter->add_flag("--no-short-circuit", no_short_circuit, "Evaluate every condition even after a failure");

    // product
    auto product = app.add_subcommand("product", "Replace each vertex of D by a copy of H");
    string d_file, h_file, product_out, labels_out;
    product->add_option("outer", d_file, "Outer factor D")->required();
    product->add_option("inner", h_file, "Inner factor H")->required();
    product->add_option("-o,--output", product_out, "Product graph document")->required();
    product->add_option("--labels", labels_out, "Write the 'vertex d h' labelling table here");

    // search
    auto search = app.add_subcommand("search", "Exhaustive or random search for counterexamples");
    snc::SearchSpec spec;
    string mode = "exhaustive", search_model = "tournament", search_out;
    optional<std::uint64_t> search_seed;
    bool no_filter = false, omit_runtime = false;
    search->add_option("--mode", mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--n", spec.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    search->add_option("--workers", spec.workers, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--model", search_model, "Random model")->check(CLI::IsMember(model_names()));
    search->add_option("--count", spec.count, "Random samples")->check(CLI::PositiveNumber);
    search->add_option("--seed", search_seed, "Master seed (required in random mode)");
    search->add_option("--p", spec.p, "Edge probability for digon_free, acyclic, triangle_free")->check(CLI::Range(0.0, 1.0));
    search->add_option("--max-retries", spec.max_retries, "Attempts per triangle_free sample")->check(CLI::PositiveNumber);
    search->add_option("--ceiling", spec.ceiling, "Largest n allowed in exhaustive mode");
    search->add_flag("--no-filter", no_filter, "Only test for a satisfactory vertex");
    search->add_flag("--omit-runtime", omit_runtime, "Leave out the worker count and timing block");
    search->add_option("-o,--output", search_out, "Write the report here instead of stdout");

    // generate
    auto generate = app.add_subcommand("generate", "Emit one seeded random graph");
    snc::SearchSpec gen;
    string gen_model, gen_out;
    std::uint64_t gen_seed = 0;
    generate->add_option("--model", gen_model, "Random model")->required()->check(CLI::IsMember(model_names()));
    generate->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    generate->add_option("--seed", gen_seed, "Seed")->required();
    generate->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    generate->add_option("--max-retries", gen.max_retries, "Attempts for triangle_free")->check(CLI::PositiveNumber);
    generate->add_option("-o,--output", gen_out, "Graph document (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            auto g = load(analyze_file);
            cout << (analyze_json ? snc::render_profile_json(g) : snc::render_profile_table(g));
        }
        else if (filter->parsed()) {
            cout << snc::render_filter_report(snc::run_filter(load(filter_file), ! no_short_circuit));
        }
        else if (product->parsed()) {
            auto d = load(d_file), h = load(h_file);
            if (! snc::is_valid_second_factor(h))
                cerr << "snc: warning: H has a vertex of negative anti-satisfaction; the product need not inherit "
                        "counterexample status\n";
            auto p = snc::build_product(d, h);
            snc::write_digraph_file(p.graph, product_out);
            if (! labels_out.empty()) {
                string table = "# vertex d h\n";
                for (snc::VertexId v = 0; v < p.labeling.size(); ++v) {
                    auto [dv, hv] = p.labeling.decode(v);
                    table += std::to_string(v) + " " + std::to_string(dv) + " " + std::to_string(hv) + "\n";
                }
                emit(table, labels_out);
            }
        }
        else if (search->parsed()) {
            spec.mode = mode == "random" ? snc::SearchMode::random : snc::SearchMode::exhaustive;
            spec.model = snc::parse_random_model(search_model);
            spec.filter_enabled = ! no_filter;
            if (spec.mode == snc::SearchMode::random) {
                if (! search_seed) {
                    cerr << "snc: random search needs an explicit --seed\n";
                    return 1;
                }
                spec.seed = *search_seed;
            }
            auto report = snc::run_search(spec);
            emit(snc::render_search_report(report, ! omit_runtime), search_out);
            if (! report.survivors.empty())
                return 2;
        }
        else if (generate->parsed()) {
            gen.model = snc::parse_random_model(gen_model);
            emit(snc::write_digraph(snc::generate(gen, gen_seed)), gen_out);
        }
    }
    catch (const std::exception & e) {
        cerr << "snc: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
