#include "chromspec/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "chromspec/bounds.hpp"
#include "chromspec/formats.hpp"
#include "chromspec/harness.hpp"
#include "chromspec/serialize.hpp"

namespace chromspec::cli {

using io::json;

namespace {

constexpr const char* kSchemaVersion = "1";

struct GlobalOpts {
    std::string format = "json";
    double tol = 1e-8;
    std::uint64_t seed = 0;
    std::uint64_t budget = coloring::kDefaultNodeBudget;
    bool timing = false;
};

// ---------------------------------------------------------------------------
// input plumbing
// ---------------------------------------------------------------------------

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ValidationError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

graphs::Graph parse_graph_input(const std::string& text, const std::string& format_in) {
    if (format_in == "auto") return graphs::parse_auto(text);
    if (format_in == "graph6") return graphs::parse_graph6(text);
    if (format_in == "dimacs") return graphs::parse_dimacs(text);
    if (format_in == "edge-list") return graphs::parse_edge_list(text);
    throw ValidationError("unknown input format: " + format_in);
}

// "A..B" or a single "A"
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw ValidationError("range end below start: " + text);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw ValidationError("bad range: " + text);
    } catch (const std::out_of_range&) {
        throw ValidationError("range out of bounds: " + text);
    }
}

// ---------------------------------------------------------------------------
// output document assembly
// ---------------------------------------------------------------------------

struct CommandOutput {
    json results;
    int exit_code = 0;
    // lossy projections; JSON remains the source of truth
    std::string csv;
    std::string md;
};

void print_document(const std::string& command, const json& inputs, const CommandOutput& cmd,
                    const GlobalOpts& global, double elapsed_seconds, std::ostream& out) {
    if (global.format == "csv") {
        out << cmd.csv;
        return;
    }
    if (global.format == "md") {
        out << cmd.md;
        return;
    }
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["results"] = cmd.results;
    if (global.timing) doc["timing"] = io::real_number(elapsed_seconds);
    out << doc.dump(2) << "\n";
}

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return io::format_full(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string md_cell(const json& v) {
    if (v.is_null()) return "-";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return io::format_short(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// One-row projections for record-like payloads.
void render_flat(const std::vector<std::string>& columns, const std::vector<json>& rows,
                 CommandOutput& cmd) {
    std::ostringstream csv;
    std::ostringstream md;
    for (std::size_t i = 0; i < columns.size(); ++i)
        csv << (i ? "," : "") << columns[i];
    csv << "\n";
    md << "|";
    for (const auto& c : columns) md << " " << c << " |";
    md << "\n|";
    for (std::size_t i = 0; i < columns.size(); ++i) md << " --- |";
    md << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            csv << (i ? "," : "") << csv_cell(row.at(columns[i]));
        csv << "\n";
        md << "|";
        for (const auto& c : columns) md << " " << md_cell(row.at(c)) << " |";
        md << "\n";
    }
    cmd.csv = csv.str();
    cmd.md = md.str();
}

json chi_cell(const std::optional<coloring::ChiResult>& chi) {
    if (!chi) return nullptr;
    if (chi->status == coloring::SolveStatus::exact) return chi->chi;
    return "unknown";
}

json alpha_cell(const std::optional<coloring::AlphaResult>& alpha) {
    if (!alpha) return nullptr;
    if (alpha->status == coloring::SolveStatus::exact) return alpha->alpha;
    return "unknown";
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

CommandOutput run_bounds(const graphs::Graph& g, bool chi, bool alpha, bool equality,
                         const GlobalOpts& global) {
    bounds::ReportOptions opts;
    opts.compute_chi = chi || equality;
    opts.compute_alpha = alpha;
    opts.compute_equality = equality;
    opts.node_budget = global.budget;
    const auto report = bounds::bound_report(g, opts);

    CommandOutput cmd;
    cmd.results = io::to_json(report);
    cmd.exit_code = report.bounds_defined ? 0 : 3;

    json flat;
    flat["n"] = report.n;
    flat["m"] = report.m;
    flat["connected"] = report.connected;
    flat["bounds_defined"] = report.bounds_defined;
    flat["mu_a"] = io::real_number(report.mu_a);
    flat["mu_min_a"] = io::real_number(report.mu_min_a);
    flat["mu_l"] = io::real_number(report.mu_l);
    flat["hoffman"] = report.bounds_defined ? io::real_number(report.hoffman) : json(nullptr);
    flat["hoffman_ceil"] = report.bounds_defined ? json(report.hoffman_ceil) : json(nullptr);
    flat["nikiforov"] =
        report.bounds_defined ? io::real_number(report.nikiforov) : json(nullptr);
    flat["nikiforov_ceil"] =
        report.bounds_defined ? json(report.nikiforov_ceil) : json(nullptr);
    flat["chi"] = chi_cell(report.chi);
    flat["alpha"] = alpha_cell(report.alpha);
    flat["ratio_bound"] =
        report.ratio_bound ? io::real_number(*report.ratio_bound) : json(nullptr);
    flat["equality_holds"] =
        report.equality ? json(report.equality->characterization_holds) : json(nullptr);
    render_flat({"n", "m", "connected", "bounds_defined", "mu_a", "mu_min_a", "mu_l",
                 "hoffman", "hoffman_ceil", "nikiforov", "nikiforov_ceil", "chi", "alpha",
                 "ratio_bound", "equality_holds"},
                {flat}, cmd);
    return cmd;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

graphs::Graph family_graph(const std::string& family, int param, int part_size) {
    if (family == "complete") return graphs::complete(param);
    if (family == "complete-minus-edge") return graphs::complete_minus_edge(param);
    if (family == "cycle") return graphs::cycle(param);
    if (family == "wheel") return graphs::wheel(param);
    if (family == "complete-multipartite")
        return graphs::complete_multipartite(std::vector<int>(std::size_t(param), part_size));
    if (family == "petersen") return graphs::petersen();
    throw ValidationError("unknown family: " + family);
}

CommandOutput run_table(const std::string& family, std::pair<int, int> range, int part_size,
                        const GlobalOpts& global) {
    CommandOutput cmd;
    json rows = json::array();
    std::vector<json> flat_rows;
    for (int param = range.first; param <= range.second; ++param) {
        const auto g = family_graph(family, param, part_size);
        bounds::ReportOptions opts;
        opts.compute_chi = true;
        opts.node_budget = global.budget;
        const auto report = bounds::bound_report(g, opts);

        json row;
        row["param"] = param;
        row["n"] = report.n;
        row["m"] = report.m;
        row["hoffman"] =
            report.bounds_defined ? io::real_number(report.hoffman) : json(nullptr);
        row["hoffman_ceil"] =
            report.bounds_defined ? json(report.hoffman_ceil) : json(nullptr);
        row["nikiforov"] =
            report.bounds_defined ? io::real_number(report.nikiforov) : json(nullptr);
        row["nikiforov_ceil"] =
            report.bounds_defined ? json(report.nikiforov_ceil) : json(nullptr);
        row["chi"] = chi_cell(report.chi);
        rows.push_back(row);
        flat_rows.push_back(row);
    }
    cmd.results = json{{"family", family}, {"rows", rows}};
    render_flat({"param", "n", "m", "hoffman", "hoffman_ceil", "nikiforov", "nikiforov_ceil",
                 "chi"},
                flat_rows, cmd);
    return cmd;
}

// ---------------------------------------------------------------------------
// fuzz / explore
// ---------------------------------------------------------------------------

CommandOutput summarize_fuzz(const harness::FuzzSummary& summary) {
    CommandOutput cmd;
    cmd.results = io::to_json(summary);
    cmd.exit_code = summary.violation_count == 0 ? 0 : 1;
    json flat;
    flat["target"] = summary.target;
    flat["trials_run"] = summary.trials_run;
    flat["violation_count"] = summary.violation_count;
    flat["min_gap"] = summary.min_gap ? io::real_number(*summary.min_gap) : json(nullptr);
    flat["near_equality_count"] = summary.near_equality_count;
    render_flat({"target", "trials_run", "violation_count", "min_gap", "near_equality_count"},
                {flat}, cmd);
    return cmd;
}

CommandOutput summarize_explore(const harness::FuzzSummary& summary) {
    CommandOutput cmd;
    cmd.results = io::to_json(summary);
    cmd.exit_code = summary.violation_count == 0 ? 0 : 1;
    std::vector<json> rows;
    for (const auto& rec : summary.near_equality) {
        json row;
        row["trial"] = rec.trial;
        row["family"] = std::string(harness::family_name(rec.tags.family));
        row["gap"] = io::real_number(rec.gap);
        row["r"] = rec.tags.r;
        std::string sizes;
        for (std::size_t i = 0; i < rec.tags.block_sizes.size(); ++i)
            sizes += (i ? "|" : "") + std::to_string(rec.tags.block_sizes[i]);
        row["block_sizes"] = sizes;
        row["b_is_zero"] = rec.tags.b_is_zero;
        row["b_is_rowsum_diagonal"] = rec.tags.b_is_rowsum_diagonal;
        row["bipartite_support"] = rec.tags.bipartite_support;
        row["digest"] = rec.digest;
        rows.push_back(row);
    }
    render_flat({"trial", "family", "gap", "r", "block_sizes", "b_is_zero",
                 "b_is_rowsum_diagonal", "bipartite_support", "digest"},
                rows, cmd);
    return cmd;
}

json config_echo(const harness::FuzzConfig& cfg) {
    return json{{"trials", cfg.trials},
                {"seed", cfg.seed},
                {"n", json::array({cfg.n_range.min, cfg.n_range.max})},
                {"r", json::array({cfg.r_range.min, cfg.r_range.max})},
                {"entry_scale", io::real_number(cfg.entry_scale)},
                {"diag_scale", io::real_number(cfg.diag_scale)},
                {"tolerance", io::real_number(cfg.tolerance)}};
}

// ---------------------------------------------------------------------------
// chi / alpha / encode
// ---------------------------------------------------------------------------

CommandOutput run_chi(const graphs::Graph& g, const GlobalOpts& global) {
    const auto result = coloring::chromatic_number_exact(g, global.budget);
    CommandOutput cmd;
    cmd.results = io::to_json(result);
    json flat;
    flat["status"] = result.status == coloring::SolveStatus::exact ? "exact" : "unknown";
    flat["value"] =
        result.status == coloring::SolveStatus::exact ? json(result.chi) : json(nullptr);
    flat["lower"] = result.lower;
    flat["upper"] = result.upper;
    flat["nodes"] = result.nodes;
    render_flat({"status", "value", "lower", "upper", "nodes"}, {flat}, cmd);
    return cmd;
}

CommandOutput run_alpha(const graphs::Graph& g, const GlobalOpts& global) {
    const auto result = coloring::independence_number_exact(g, global.budget);
    CommandOutput cmd;
    cmd.results = io::to_json(result);
    json flat;
    flat["status"] = result.status == coloring::SolveStatus::exact ? "exact" : "unknown";
    flat["value"] =
        result.status == coloring::SolveStatus::exact ? json(result.alpha) : json(nullptr);
    flat["lower"] = result.lower;
    flat["upper"] = result.upper;
    flat["nodes"] = result.nodes;
    render_flat({"status", "value", "lower", "upper", "nodes"}, {flat}, cmd);
    return cmd;
}

CommandOutput run_encode(const graphs::Graph& g) {
    CommandOutput cmd;
    const std::string g6 = graphs::emit_graph6(g);
    cmd.results = json{{"graph6", g6}};
    render_flat({"graph6"}, {json{{"graph6", g6}}}, cmd);
    return cmd;
}

} // namespace

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"spectral lower bounds on the chromatic number"};
    app.name("chromspec");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
    app.add_option("--tol", global.tol, "Numeric tolerance")->capture_default_str();
    app.add_option("--seed", global.seed, "Random seed")->capture_default_str();
    app.add_option("--budget", global.budget, "Exact-solver node limit")
        ->capture_default_str();
    app.add_flag("--timing", global.timing, "Include wall-clock timing in JSON output");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "Spectral chromatic bounds for a graph");
    std::string bounds_input = "-";
    std::string bounds_inline;
    std::string bounds_format_in = "auto";
    bool opt_chi = false, opt_alpha = false, opt_equality = false;
    cmd_bounds->add_option("input", bounds_input, "Graph file, or - for stdin");
    cmd_bounds->add_option("--graph6", bounds_inline, "Inline graph6 string")
        ->excludes(cmd_bounds->get_option("input"));
    cmd_bounds->add_option("--format-in", bounds_format_in, "Input format override")
        ->check(CLI::IsMember({"auto", "graph6", "dimacs", "edge-list"}));
    cmd_bounds->add_flag("--chi", opt_chi, "Compute exact chromatic number");
    cmd_bounds->add_flag("--alpha", opt_alpha, "Compute exact independence number");
    cmd_bounds->add_flag("--equality", opt_equality, "Check the equality characterization");

    // table
    auto* cmd_table = app.add_subcommand("table", "Bound comparison table over a family");
    std::string table_family;
    std::string table_range;
    int table_part_size = 2;
    cmd_table->add_option("family", table_family, "Graph family")->required();
    cmd_table->add_option("range", table_range, "Parameter range A..B");
    cmd_table->add_option("--part-size", table_part_size,
                          "Part size for complete-multipartite");

    // fuzz
    auto* cmd_fuzz = app.add_subcommand("fuzz", "Randomized verification campaigns");
    std::string fuzz_target;
    std::uint64_t fuzz_trials = 1000;
    std::string fuzz_n, fuzz_r;
    double fuzz_scale = 1.0;
    double fuzz_diag_scale = -1.0;
    cmd_fuzz->add_option("target", fuzz_target, "Campaign")
        ->required()
        ->check(CLI::IsMember({"theorem1", "lemma1", "bounds-vs-chi", "signless"}));
    cmd_fuzz->add_option("--trials", fuzz_trials, "Trial count")->capture_default_str();
    cmd_fuzz->add_option("--n", fuzz_n, "Dimension range A..B");
    cmd_fuzz->add_option("--r", fuzz_r, "Block count range A..B");
    cmd_fuzz->add_option("--scale", fuzz_scale, "Entry magnitude bound")
        ->capture_default_str();
    cmd_fuzz->add_option("--diag-scale", fuzz_diag_scale,
                         "Diagonal magnitude bound (defaults to --scale)");

    // explore
    auto* cmd_explore =
        app.add_subcommand("explore", "Rank near-equality instances of the block inequality");
    std::uint64_t explore_trials = 1000;
    int explore_top = 10;
    std::string explore_n, explore_r;
    double explore_scale = 1.0;
    double explore_diag_scale = -1.0;
    cmd_explore->add_option("--trials", explore_trials, "Trial count")->capture_default_str();
    cmd_explore->add_option("--top", explore_top, "Records to keep")->capture_default_str();
    cmd_explore->add_option("--n", explore_n, "Dimension range A..B");
    cmd_explore->add_option("--r", explore_r, "Block count range A..B");
    cmd_explore->add_option("--scale", explore_scale, "Entry magnitude bound")
        ->capture_default_str();
    cmd_explore->add_option("--diag-scale", explore_diag_scale,
                            "Diagonal magnitude bound (defaults to --scale)");

    // chi / alpha / encode
    auto* cmd_chi = app.add_subcommand("chi", "Exact chromatic number");
    std::string chi_input = "-";
    std::string chi_format_in = "auto";
    cmd_chi->add_option("input", chi_input, "Graph file, or - for stdin");
    cmd_chi->add_option("--format-in", chi_format_in, "Input format override")
        ->check(CLI::IsMember({"auto", "graph6", "dimacs", "edge-list"}));

    auto* cmd_alpha = app.add_subcommand("alpha", "Exact independence number");
    std::string alpha_input = "-";
    std::string alpha_format_in = "auto";
    cmd_alpha->add_option("input", alpha_input, "Graph file, or - for stdin");
    cmd_alpha->add_option("--format-in", alpha_format_in, "Input format override")
        ->check(CLI::IsMember({"auto", "graph6", "dimacs", "edge-list"}));

    auto* cmd_encode = app.add_subcommand("encode", "Encode a graph as graph6");
    std::string encode_input = "-";
    std::string encode_format_in = "auto";
    cmd_encode->add_option("input", encode_input, "Graph file, or - for stdin");
    cmd_encode->add_option("--format-in", encode_format_in, "Input format override")
        ->check(CLI::IsMember({"auto", "graph6", "dimacs", "edge-list"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        std::string command;
        json inputs;
        CommandOutput cmd;

        if (cmd_bounds->parsed()) {
            command = "bounds";
            const bool use_inline = !bounds_inline.empty();
            const std::string text =
                use_inline ? bounds_inline : read_input(bounds_input, in);
            const auto g = parse_graph_input(text, bounds_format_in);
            inputs = json{{"input", use_inline ? "<inline>" : bounds_input},
                          {"format_in", bounds_format_in},
                          {"chi", opt_chi},
                          {"alpha", opt_alpha},
                          {"equality", opt_equality},
                          {"budget", global.budget}};
            cmd = run_bounds(g, opt_chi, opt_alpha, opt_equality, global);
        } else if (cmd_table->parsed()) {
            command = "table";
            if (table_range.empty() && table_family != "petersen")
                throw ValidationError("table needs a parameter range");
            const auto range =
                table_range.empty() ? std::pair<int, int>{0, 0} : parse_range(table_range);
            inputs = json{{"family", table_family},
                          {"range", json::array({range.first, range.second})},
                          {"part_size", table_part_size},
                          {"budget", global.budget}};
            cmd = run_table(table_family, range, table_part_size, global);
        } else if (cmd_fuzz->parsed()) {
            command = "fuzz";
            harness::FuzzConfig cfg;
            cfg.trials = fuzz_trials;
            cfg.seed = global.seed;
            cfg.tolerance = global.tol;
            cfg.entry_scale = fuzz_scale;
            cfg.diag_scale = fuzz_diag_scale >= 0.0 ? fuzz_diag_scale : fuzz_scale;
            if (fuzz_target == "signless") cfg.n_range = {7, 10};
            if (!fuzz_n.empty()) {
                const auto r = parse_range(fuzz_n);
                cfg.n_range = {r.first, r.second};
            }
            if (!fuzz_r.empty()) {
                const auto r = parse_range(fuzz_r);
                cfg.r_range = {r.first, r.second};
            }
            inputs = config_echo(cfg);
            inputs["target"] = fuzz_target;

            harness::FuzzSummary summary;
            if (fuzz_target == "theorem1") summary = harness::fuzz_theorem1(cfg);
            else if (fuzz_target == "lemma1") summary = harness::fuzz_lemma1(cfg);
            else if (fuzz_target == "bounds-vs-chi") summary = harness::fuzz_bounds_vs_chi(cfg);
            else summary = harness::fuzz_signless(cfg);
            cmd = summarize_fuzz(summary);
        } else if (cmd_explore->parsed()) {
            command = "explore";
            harness::FuzzConfig cfg;
            cfg.trials = explore_trials;
            cfg.seed = global.seed;
            cfg.tolerance = global.tol;
            cfg.entry_scale = explore_scale;
            cfg.diag_scale = explore_diag_scale >= 0.0 ? explore_diag_scale : explore_scale;
            cfg.n_range = {2, 16};
            if (!explore_n.empty()) {
                const auto r = parse_range(explore_n);
                cfg.n_range = {r.first, r.second};
            }
            if (!explore_r.empty()) {
                const auto r = parse_range(explore_r);
                cfg.r_range = {r.first, r.second};
            }
            inputs = config_echo(cfg);
            inputs["top"] = explore_top;
            cmd = summarize_explore(harness::explore_equality(cfg, explore_top));
        } else if (cmd_chi->parsed()) {
            command = "chi";
            const auto g = parse_graph_input(read_input(chi_input, in), chi_format_in);
            inputs = json{{"input", chi_input},
                          {"format_in", chi_format_in},
                          {"budget", global.budget}};
            cmd = run_chi(g, global);
        } else if (cmd_alpha->parsed()) {
            command = "alpha";
            const auto g = parse_graph_input(read_input(alpha_input, in), alpha_format_in);
            inputs = json{{"input", alpha_input},
                          {"format_in", alpha_format_in},
                          {"budget", global.budget}};
            cmd = run_alpha(g, global);
        } else if (cmd_encode->parsed()) {
            command = "encode";
            const auto g = parse_graph_input(read_input(encode_input, in), encode_format_in);
            inputs = json{{"input", encode_input}, {"format_in", encode_format_in}};
            cmd = run_encode(g);
        } else {
            err << "no command given\n";
            return 2;
        }

        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        print_document(command, inputs, cmd, global, elapsed, out);
        return cmd.exit_code;
    } catch (const ParseError& e) {
        err << "chromspec: parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "chromspec: " << e.what() << "\n";
        return 2;
    } catch (const UndefinedBoundError& e) {
        err << "chromspec: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "chromspec: internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace chromspec::cli
