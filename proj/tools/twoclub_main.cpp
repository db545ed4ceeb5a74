// Command-line front end: solve / check / gen / ilp / bench.
//
// Exit codes: 0 success (solve: optimum found; check: set is valid),
// 1 input or usage error, 2 stopped on a limit with the best incumbent
// reported, 3 no solution exists (solve) or the set is invalid (check).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twoclub/generator.hpp"
#include "twoclub/ilp.hpp"
#include "twoclub/io.hpp"
#include "twoclub/oracle.hpp"
#include "twoclub/solver.hpp"

namespace {

using nlohmann::json;
using namespace twoclub;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitLimit = 2;
constexpr int kExitNoSolution = 3;

struct RunRecord {
    std::string instance;
    ModelSpec spec;
    std::optional<int> size;
    double time_s = 0.0;
    bool timed_out = false;
    int n = 0;
    int n_star = 0; // vertices of degree at least one
    long long m = 0;
    SolveCounters counters;
    std::optional<VertexSet> solution; // original labels
};

json rules_json(const RuleStats& r) {
    return json{{"marked_incompatible_prunes", r.marked_incompatible_prunes},
                {"resolution_deletions", r.resolution_deletions},
                {"low_degree_deletions", r.low_degree_deletions},
                {"low_degree_prunes", r.low_degree_prunes},
                {"low_compat_deletions", r.low_compat_deletions},
                {"low_compat_prunes", r.low_compat_prunes},
                {"vcr_prunes", r.vcr_prunes},
                {"vcr_recomputes", r.vcr_recomputes},
                {"vcr_skips", r.vcr_skips},
                {"no_choice_marks", r.no_choice_marks}};
}

json record_json(const RunRecord& rec) {
    json j{{"instance", rec.instance},
           {"model", to_string(rec.spec.model)},
           {"t", rec.spec.t},
           {"size", rec.size ? json(*rec.size) : json(nullptr)},
           {"time_s", rec.time_s},
           {"timed_out", rec.timed_out},
           {"nodes", rec.counters.branch_nodes},
           {"n", rec.n},
           {"n_star", rec.n_star},
           {"m", rec.m},
           {"counters",
            {{"kernels_total", rec.counters.kernels_total},
             {"kernels_skipped", rec.counters.kernels_skipped},
             {"kernels_built", rec.counters.kernels_built},
             {"kernels_pruned", rec.counters.kernels_pruned},
             {"branch_nodes", rec.counters.branch_nodes},
             {"flow_calls", rec.counters.flow_calls},
             {"rules", rules_json(rec.counters.rules)}}}};
    j["solution"] = rec.solution ? json(*rec.solution) : json(nullptr);
    return j;
}

void print_record_text(const RunRecord& rec, std::ostream& out) {
    out << "instance: " << rec.instance << '\n'
        << "model: " << to_string(rec.spec.model) << '\n'
        << "t: " << rec.spec.t << '\n'
        << "n: " << rec.n << '\n'
        << "n_star: " << rec.n_star << '\n'
        << "m: " << rec.m << '\n'
        << "size: " << (rec.size ? std::to_string(*rec.size) : "none") << '\n'
        << "time_s: " << rec.time_s << '\n'
        << "timed_out: " << (rec.timed_out ? "true" : "false") << '\n'
        << "nodes: " << rec.counters.branch_nodes << '\n'
        << "kernels: total=" << rec.counters.kernels_total
        << " skipped=" << rec.counters.kernels_skipped
        << " built=" << rec.counters.kernels_built
        << " pruned=" << rec.counters.kernels_pruned << '\n'
        << "flow_calls: " << rec.counters.flow_calls << '\n';
    if (rec.solution) {
        out << "solution:";
        for (Vertex v : *rec.solution) out << ' ' << v;
        out << '\n';
    }
}

VertexSet to_original_labels(const VertexSet& internal, int base) {
    VertexSet out = internal;
    for (Vertex& v : out) v += base;
    return out;
}

RunRecord run_solve(const std::string& path, GraphFormat format, ModelSpec spec,
                    const Limits& limits) {
    const auto start = std::chrono::steady_clock::now();
    ParseResult parsed = parse_file(path, format);
    SolveReport report = solve(parsed.graph, spec, limits);

    RunRecord rec;
    rec.instance = path;
    rec.spec = spec;
    rec.n = parsed.graph.vertex_count();
    rec.n_star = rec.n - parsed.stats.isolated_vertices;
    rec.m = parsed.graph.edge_count();
    rec.timed_out = report.timed_out;
    rec.counters = report.counters;
    if (report.best) {
        rec.size = report.best->size();
        rec.solution = to_original_labels(report.best->vertices, parsed.label_base);
    }
    // Reported time includes reading the input; a run stopped by the time
    // limit is accounted exactly at the limit.
    rec.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (rec.timed_out && limits.time_limit_s) rec.time_s = *limits.time_limit_s;
    return rec;
}

int cmd_solve(const std::string& input, const std::string& format_name, const std::string& model_name,
              int t, std::optional<double> time_limit, std::optional<std::uint64_t> node_limit,
              const std::string& output_mode, const std::string& solution_out) {
    ModelSpec spec{model_from_string(model_name), t};
    spec.validate();
    Limits limits;
    limits.time_limit_s = time_limit;
    limits.node_limit = node_limit;

    RunRecord rec = run_solve(input, format_from_string(format_name), spec, limits);

    if (output_mode == "json")
        std::cout << record_json(rec).dump(2) << '\n';
    else
        print_record_text(rec, std::cout);

    if (!solution_out.empty() && rec.solution) {
        std::ofstream out(solution_out);
        if (!out) throw std::runtime_error("cannot write '" + solution_out + "'");
        for (Vertex v : *rec.solution) out << v << '\n';
    }

    if (rec.timed_out) return kExitLimit;
    return rec.size ? kExitOk : kExitNoSolution;
}

int cmd_check(const std::string& input, const std::string& format_name,
              const std::string& solution_path, const std::string& model_name, int t) {
    ModelSpec spec{model_from_string(model_name), t};
    spec.validate();
    ParseResult parsed = parse_file(input, format_from_string(format_name));

    std::ifstream in(solution_path);
    if (!in) throw std::runtime_error("cannot open '" + solution_path + "'");
    VertexSet vertices;
    long long label;
    while (in >> label) {
        long long internal = label - parsed.label_base;
        if (internal < 0 || internal >= parsed.graph.vertex_count())
            throw std::runtime_error("vertex label " + std::to_string(label) +
                                     " not in graph '" + input + "'");
        vertices.push_back(static_cast<Vertex>(internal));
    }
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::runtime_error("duplicate vertex label in solution file");

    const bool ok = oracle::check_solution(parsed.graph, vertices, spec);
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? kExitOk : kExitNoSolution;
}

int cmd_gen(int n, double a, double b, std::uint64_t seed, const std::string& format_name,
            const std::string& out_path) {
    GenParams params{n, a, b, seed};
    params.validate();
    GraphFormat format = format_from_string(format_name);
    if (format == GraphFormat::auto_detect) format = GraphFormat::metis;
    const std::string text = emit(generate(params), format);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
    }
    return kExitOk;
}

int cmd_ilp(const std::string& input, const std::string& format_name, int t,
            const std::string& out_path) {
    ParseResult parsed = parse_file(input, format_from_string(format_name));
    const std::string text = emit_hereditary_lp(parsed.graph, t);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
    }
    return kExitOk;
}

int cmd_bench(const std::string& suite_path, std::optional<double> time_limit,
              const std::string& out_path) {
    std::ifstream in(suite_path);
    if (!in) throw std::runtime_error("cannot open '" + suite_path + "'");
    const auto suite_dir = std::filesystem::path(suite_path).parent_path();

    std::ostringstream csv;
    csv << "instance,model,t,size,time_s,timed_out,nodes\n";

    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string instance, model_name;
        int t;
        if (line.empty() || line[0] == '#') continue;
        if (!(row >> instance >> model_name >> t)) {
            std::cerr << "bench: skipping malformed suite line: " << line << '\n';
            continue;
        }
        std::filesystem::path path(instance);
        if (path.is_relative()) path = suite_dir / path;

        Limits limits;
        limits.time_limit_s = time_limit;
        try {
            ModelSpec spec{model_from_string(model_name), t};
            spec.validate();
            RunRecord rec = run_solve(path.string(), GraphFormat::auto_detect, spec, limits);
            csv << instance << ',' << model_name << ',' << t << ','
                << (rec.size ? std::to_string(*rec.size) : "none") << ',' << rec.time_s << ','
                << (rec.timed_out ? "true" : "false") << ',' << rec.counters.branch_nodes << '\n';
        } catch (const std::exception& e) {
            std::cerr << "bench: " << instance << ": " << e.what() << '\n';
            csv << instance << ',' << model_name << ',' << t << ",error,0,false,0\n";
        }
    }

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << csv.str();
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact maximum robust / hereditary / connected 2-club solver"};
    app.require_subcommand(1);

    std::string input, format_name = "auto", model_name, output_mode = "text";
    std::string solution_path, solution_out, out_path, suite_path;
    int t = 1, gen_n = 100;
    double gen_a = 0.0, gen_b = 0.3;
    std::uint64_t gen_seed = 1;
    std::optional<double> time_limit;
    std::optional<std::uint64_t> node_limit;

    auto* solve_cmd = app.add_subcommand("solve", "Find a maximum well-connected 2-club");
    solve_cmd->add_option("--input", input, "Graph file")->required();
    solve_cmd->add_option("--format", format_name, "metis|dimacs|edges|auto");
    solve_cmd->add_option("--model", model_name, "robust|hereditary|connected")->required();
    solve_cmd->add_option("--t", t, "Connectivity strength")->required();
    solve_cmd->add_option("--time-limit", time_limit, "Seconds");
    solve_cmd->add_option("--node-limit", node_limit, "Branch node budget");
    solve_cmd->add_option("--output", output_mode, "text|json");
    solve_cmd->add_option("--solution-out", solution_out, "Write the vertex set here");

    auto* check_cmd = app.add_subcommand("check", "Verify a vertex set");
    check_cmd->add_option("--input", input, "Graph file")->required();
    check_cmd->add_option("--format", format_name, "metis|dimacs|edges|auto");
    check_cmd->add_option("--solution", solution_path, "Vertex set file, one label per line")
        ->required();
    check_cmd->add_option("--model", model_name, "robust|hereditary|connected")->required();
    check_cmd->add_option("--t", t, "Connectivity strength")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--n", gen_n, "Vertex count")->required();
    gen_cmd->add_option("--a", gen_a, "Lower density parameter")->required();
    gen_cmd->add_option("--b", gen_b, "Upper density parameter")->required();
    gen_cmd->add_option("--seed", gen_seed, "64-bit seed");
    gen_cmd->add_option("--format", format_name, "metis|dimacs|edges");
    gen_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");

    auto* ilp_cmd = app.add_subcommand("ilp", "Export the hereditary model in LP format");
    ilp_cmd->add_option("--input", input, "Graph file")->required();
    ilp_cmd->add_option("--format", format_name, "metis|dimacs|edges|auto");
    ilp_cmd->add_option("--t", t, "Connectivity strength")->required();
    ilp_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");

    auto* bench_cmd = app.add_subcommand("bench", "Run a suite of (instance, model, t) rows");
    bench_cmd->add_option("--suite", suite_path, "Suite file: '<instance> <model> <t>' per line")
        ->required();
    bench_cmd->add_option("--time-limit", time_limit, "Seconds per instance");
    bench_cmd->add_option("--out", out_path, "CSV output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(solve_cmd))
            return cmd_solve(input, format_name, model_name, t, time_limit, node_limit,
                             output_mode, solution_out);
        if (app.got_subcommand(check_cmd))
            return cmd_check(input, format_name, solution_path, model_name, t);
        if (app.got_subcommand(gen_cmd)) {
            if (format_name == "auto") format_name = "metis";
            return cmd_gen(gen_n, gen_a, gen_b, gen_seed, format_name, out_path);
        }
        if (app.got_subcommand(ilp_cmd))
            return cmd_ilp(input, format_name, t, out_path);
        if (app.got_subcommand(bench_cmd))
            return cmd_bench(suite_path, time_limit, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
