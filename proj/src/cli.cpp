#include "sep_facets/cli.hpp"

#include "sep_facets/closed_forms.hpp"
#include "sep_facets/conjectures.hpp"
#include "sep_facets/errors.hpp"
#include "sep_facets/facet_engine.hpp"
#include "sep_facets/sampler.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace sep {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidParameter("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path)
{
    const auto text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_graph_json(text);
    return parse_graph(text);
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InvalidParameter("cannot write " + path);
    return out;
}

using Check = std::function<ConjectureReport(std::uint32_t, const SweepOptions&)>;

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Facet counts of symmetric edge polytopes"};
    app.require_subcommand(1);

    // count
    auto* count_cmd = app.add_subcommand("count", "Count facets of one graph");
    std::string edges_file;
    std::string family_text;
    std::string method = "dfs";
    auto* edges_opt = count_cmd->add_option("--edges", edges_file, "Edge-list or JSON graph file")->check(CLI::ExistingFile);
    auto* family_opt = count_cmd->add_option("--family", family_text, "Family string, e.g. cb:4,2,2");
    edges_opt->excludes(family_opt);
    count_cmd->add_option("--method", method, "dfs or subgraphs")->check(CLI::IsMember({"dfs", "subgraphs"}));

    // formula
    auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed-form facet count");
    std::string family_name;
    std::vector<std::uint32_t> params;
    std::uint32_t tail = 0;
    formula_cmd->add_option("family", family_name, "cycle|tree|path|cnm|gnij|cb|theta|windmill|wedge-cycles|m|f")
        ->required();
    formula_cmd->add_option("params", params, "Family parameters");
    formula_cmd->add_option("--tail", tail, "Pendant edges for wedge-cycles");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a theorem or conjecture");
    std::string check_id;
    std::uint32_t n = 0;
    std::uint32_t max_n = 0;
    unsigned jobs = 1;
    bool no_guard = false;
    bool leaf_shortcut = false;
    bool deterministic = false;
    std::uint64_t samples = 200;
    std::uint64_t seed = 1;
    std::uint64_t thin = 0;
    std::string verify_out;
    verify_cmd->add_option("id", check_id, "Check id")
        ->required()
        ->check(CLI::IsMember({"nnmax", "disjoint", "fbounds", "f-leq-m", "mixed-cb", "nn1", "windmill", "identities"}));
    verify_cmd->add_option("--n", n, "n (or kmax for identities)")->required();
    verify_cmd->add_option("--max-n", max_n, "Sweep n..max-n and merge the reports");
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--no-guard", no_guard, "Disable resource guards");
    verify_cmd->add_flag("--leaf-shortcut", leaf_shortcut, "nn1: skip leaf graphs once n-1 is verified");
    verify_cmd->add_option("--samples", samples, "windmill: chain samples beyond the exhaustive range");
    verify_cmd->add_option("--seed", seed, "windmill: chain seed");
    verify_cmd->add_option("--thin", thin, "windmill: thinning interval");
    verify_cmd->add_flag("--deterministic", deterministic, "Omit timing from the report");
    verify_cmd->add_option("--out", verify_out, "Write the report here instead of stdout");

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "Run the edge-replacement chain");
    ChainConfig cfg;
    std::uint64_t burn_in = 0;
    std::uint64_t sample_thin = 0;
    std::string sample_out;
    std::string format = "csv";
    std::string mode = "scatter";
    bool sample_deterministic = false;
    sample_cmd->add_option("--n", cfg.n, "Vertices")->required();
    sample_cmd->add_option("--edges", cfg.e, "Edges")->required();
    sample_cmd->add_option("--samples", cfg.samples, "Records to emit")->required();
    auto* burn_opt = sample_cmd->add_option("--burn-in", burn_in, "Burn-in steps");
    auto* thin_opt = sample_cmd->add_option("--thin", sample_thin, "Steps between records")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", cfg.seed, "RNG seed")->required();
    sample_cmd->add_option("--out", sample_out, "Output file")->required();
    sample_cmd->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    sample_cmd->add_option("--mode", mode, "scatter or histogram")->check(CLI::IsMember({"scatter", "histogram"}));
    sample_cmd->add_flag("--deterministic", sample_deterministic, "Suppress the timestamp");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "List connected graphs up to isomorphism");
    std::uint32_t enum_n = 0;
    std::uint32_t enum_e = 0;
    std::string enum_out;
    bool enum_no_guard = false;
    enum_cmd->add_option("--n", enum_n, "Vertices")->required();
    enum_cmd->add_option("--edges", enum_e, "Edges")->required();
    enum_cmd->add_option("--out", enum_out, "Output file")->required();
    enum_cmd->add_flag("--no-guard", enum_no_guard, "Disable resource guards");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const auto code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (count_cmd->parsed()) {
            if (edges_file.empty() && family_text.empty()) {
                err << "count: one of --edges or --family is required\n";
                return exit_code::usage;
            }
            const auto g = edges_file.empty() ? realize(parse_family(family_text)) : load_graph(edges_file);
            out << to_decimal(method == "dfs" ? count_facets(g) : count_facets_via_subgraphs(g)) << '\n';
            return exit_code::ok;
        }

        if (formula_cmd->parsed()) {
            if (family_name == "m") {
                if (params.size() != 1)
                    throw InvalidParameter("formula m takes n");
                out << to_decimal(m_of_n(params[0])) << '\n';
            }
            else if (family_name == "f") {
                out << to_decimal(f_same_parity(PathVector(params))) << '\n';
            }
            else {
                auto spec = make_family(family_name, params);
                if (auto* w = std::get_if<WedgeOfCyclesSpec>(&spec))
                    w->tail = tail;
                out << to_decimal(evaluate(spec)) << '\n';
            }
            return exit_code::ok;
        }

        if (verify_cmd->parsed()) {
            SweepOptions opts;
            opts.guards = no_guard ? Guards::unlimited() : Guards::from_env();
            std::optional<std::ofstream> file;
            if (!verify_out.empty())
                file = open_output(verify_out);

            WindmillSampling sampling{samples, seed, thin > 0 ? std::optional<std::uint64_t>(thin) : std::nullopt};
            const std::map<std::string, Check> checks{
                {"nnmax", check_nn_max},
                {"disjoint", check_disjoint_cycle_bound},
                {"fbounds", check_f_bounds},
                {"f-leq-m", check_general_f_leq_m},
                {"mixed-cb", check_mixed_cb},
                {"nn1", [&](std::uint32_t x, const SweepOptions& o) { return check_nn1_exhaustive(x, o, leaf_shortcut); }},
                {"windmill", [&](std::uint32_t x, const SweepOptions& o) { return check_windmill(x, o, sampling); }},
                {"identities", check_identities},
            };
            const auto& check = checks.at(check_id);

            ConjectureReport report;
            if (check_id == "identities" || max_n <= n) {
                opts.jobs = jobs;
                report = check(check_id == "identities" ? std::max(n, max_n) : n, opts);
            }
            else {
                std::vector<std::uint32_t> values;
                for (auto x = n; x <= max_n; ++x) {
                    if (check_id != "windmill" || x % 2 == 1)
                        values.push_back(x);
                }
                std::vector<ConjectureReport> parts(values.size());
                if (jobs <= 1) {
                    // Sequential sweeps stop at the first counterexample.
                    for (std::size_t i = 0; i < values.size(); ++i) {
                        parts[i] = check(values[i], opts);
                        if (parts[i].status == Status::counterexample) {
                            parts.resize(i + 1);
                            break;
                        }
                    }
                }
                else {
                    parallel_for(values.size(), jobs, [&](std::size_t i) { parts[i] = check(values[i], opts); });
                }
                report = merge(parts);
            }
            const auto text = report.to_json(!deterministic).dump(2);
            (file ? static_cast<std::ostream&>(*file) : out) << text << '\n';
            if (report.status == Status::counterexample) {
                err << "counterexample: " << report.details.value("failure", std::string{}) << '\n';
                return exit_code::counterexample;
            }
            return exit_code::ok;
        }

        if (sample_cmd->parsed()) {
            if (burn_opt->count() > 0)
                cfg.burn_in = burn_in;
            if (thin_opt->count() > 0)
                cfg.thin = sample_thin;
            cfg.validate();
            auto file = open_output(sample_out);
            const auto records = run_chain(cfg);
            if (format == "jsonl") {
                file << emit_jsonl(records, cfg, sample_deterministic);
            }
            else {
                file << chain_metadata(cfg, sample_deterministic) << '\n';
                file << emit_figure_data(records, mode == "scatter" ? FigureMode::scatter : FigureMode::histogram);
            }
            out << records.size() << " samples written to " << sample_out << '\n';
            return exit_code::ok;
        }

        if (enum_cmd->parsed()) {
            const auto guards = enum_no_guard ? Guards::unlimited() : Guards::from_env();
            auto file = open_output(enum_out);
            const auto graphs = enumerate_connected_graphs(enum_n, enum_e, guards);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                if (i > 0)
                    file << '\n';
                file << "# class " << i;
                if (graphs[i].num_edges() > 0)
                    file << " facets=" << to_decimal(count_facets(graphs[i]));
                file << '\n' << serialize_graph(graphs[i]);
            }
            out << graphs.size() << '\n';
            return exit_code::ok;
        }
    }
    catch (const ResourceGuardError& e) {
        err << "resource guard: " << e.what() << '\n';
        return exit_code::guard;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

} // namespace sep
