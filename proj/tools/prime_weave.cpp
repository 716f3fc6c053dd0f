// prime-weave: command-line front door for the prime labeling library.
// Subcommands: gen, label, verify, solve, count, scan, pillai.
//
// Exit codes: 0 success; 1 verification failure, no solution found, or a
// conjecture counterexample; 2 usage or input parse errors.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "primeweave/graph.hpp"
#include "primeweave/io.hpp"
#include "primeweave/labelings.hpp"
#include "primeweave/numtheory.hpp"
#include "primeweave/solver.hpp"

namespace pw = primeweave;

namespace {

const std::map<std::string, pw::Family> kFamilies = {
    {"path", pw::Family::path},
    {"cycle", pw::Family::cycle},
    {"star", pw::Family::star},
    {"hairy", pw::Family::hairy_cycle},
    {"weed", pw::Family::bertrand_weed},
    {"cyclepath", pw::Family::cycle_path},
    {"cps", pw::Family::cycle_pendant_star},
};

struct FamilyFlags {
    std::string family;
    std::int64_t n = 0;
    std::int64_t m = 0;
    int levels = 1;

    pw::FamilySpec spec() const {
        auto it = kFamilies.find(family);
        if (it == kFamilies.end())
            throw std::domain_error("--family: unknown family \"" + family + "\"");
        return pw::FamilySpec{it->second, n, m, levels};
    }
};

void add_family_flags(CLI::App* cmd, FamilyFlags& ff, bool need_n) {
    cmd->add_option("--family", ff.family, "family: path|cycle|star|hairy|weed|cps|cyclepath")
        ->required();
    auto* n = cmd->add_option("--n", ff.n, "family size parameter n");
    if (need_n) n->required();
    cmd->add_option("--m", ff.m, "pendants per cycle vertex (hairy) / path vertices (cyclepath)");
    cmd->add_option("--levels", ff.levels, "ternary tree depth for cps (1 or 2)")
        ->default_val(1);
}

std::string read_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const pw::json& j) { std::cout << j.dump() << "\n"; }

struct GenOpts {
    FamilyFlags ff;
    bool dot = false;
};

struct LabelOpts {
    FamilyFlags ff;
    std::string graph_path;
    bool from_stdin = false;
    bool dot = false;
    bool bundle = false;
    bool labels_only = false;
};

struct VerifyOpts {
    std::string graph_path;
    std::string labels_path;
    bool from_stdin = false;
};

struct SolveOpts {
    std::string graph_path;
    bool from_stdin = false;
    std::uint64_t max_nodes = pw::kDefaultNodeBudget;
    std::int64_t time_limit_ms = 0;
    bool stats = false;
};

struct CountOpts {
    std::string graph_path;
    bool from_stdin = false;
    int guard = pw::kDefaultCountGuard;
};

struct ScanOpts {
    int max_n = 0;
    std::uint64_t budget = pw::kDefaultNodeBudget;
    std::int64_t time_limit_ms = 0;
    int jobs = 1;
    int cap = pw::kDefaultUnicyclicCap;
    std::string out_path;
    bool stats = false;
};

struct PillaiOpts {
    std::uint64_t m = 0;
    std::uint64_t limit = 100000;
};

pw::Graph load_graph(const std::string& path, bool from_stdin) {
    if (from_stdin) return pw::parse_graph(read_stdin());
    if (path.empty())
        throw std::domain_error("a graph is required: pass --graph FILE or --stdin");
    return pw::parse_graph(read_file(path));
}

int run_gen(const GenOpts& o) {
    const pw::Graph g = pw::build(o.ff.spec());
    if (o.dot)
        std::cout << pw::to_dot(g);
    else
        emit(pw::graph_to_json(g));
    return 0;
}

int run_label(const LabelOpts& o) {
    const pw::FamilySpec spec = o.ff.spec();
    const bool external = o.from_stdin || !o.graph_path.empty();
    const pw::Graph g = external ? load_graph(o.graph_path, o.from_stdin) : pw::build(spec);
    const pw::Labeling f = pw::label_family(spec, g);
    if (o.dot) {
        std::cout << pw::to_dot(g, &f);
        return 0;
    }
    // Piped graphs default to bundle output so a downstream `verify --stdin`
    // still sees the graph.
    const bool bundle = o.bundle || (o.from_stdin && !o.labels_only);
    if (bundle)
        emit(pw::bundle_to_json(g, f));
    else
        emit(pw::labeling_to_json(f));
    return 0;
}

int run_verify(const VerifyOpts& o) {
    std::optional<pw::Graph> g;
    pw::Labeling f;
    if (o.from_stdin && o.graph_path.empty()) {
        auto [bg, bf] = pw::bundle_from_json(pw::parse_json_text(read_stdin(), "bundle"));
        g = std::move(bg);
        f = std::move(bf);
    } else {
        if (o.graph_path.empty())
            throw std::domain_error("verify: pass --graph and --labels files, or --stdin");
        g = pw::parse_graph(read_file(o.graph_path));
        if (o.from_stdin)
            f = pw::labeling_from_json(pw::parse_json_text(read_stdin(), "labels"));
        else if (!o.labels_path.empty())
            f = pw::labeling_from_json(pw::parse_json_text(read_file(o.labels_path), "labels"));
        else
            throw std::domain_error("verify: labels are required: pass --labels FILE or --stdin");
    }
    const pw::VerifyReport rep = pw::verify(*g, f);
    emit(pw::verify_report_to_json(rep));
    return rep.valid() ? 0 : 1;
}

pw::SolveBudget budget_from(std::uint64_t max_nodes, std::int64_t time_limit_ms) {
    pw::SolveBudget b;
    b.max_nodes = max_nodes;
    if (time_limit_ms > 0) b.time_limit = std::chrono::milliseconds(time_limit_ms);
    return b;
}

int run_solve(const SolveOpts& o) {
    const pw::Graph g = load_graph(o.graph_path, o.from_stdin);
    const pw::SearchStats st = pw::solve(g, budget_from(o.max_nodes, o.time_limit_ms));
    emit(pw::search_stats_to_json(st, o.stats));
    return st.outcome == pw::SolveOutcome::found ? 0 : 1;
}

int run_count(const CountOpts& o) {
    const pw::Graph g = load_graph(o.graph_path, o.from_stdin);
    pw::json j;
    j["count"] = pw::count_labelings(g, o.guard);
    emit(j);
    return 0;
}

int run_scan(const ScanOpts& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const pw::ScanReport rep =
        pw::scan_conjecture(o.max_n, budget_from(o.budget, o.time_limit_ms), o.jobs, o.cap);
    pw::json j = pw::scan_report_to_json(rep);
    if (o.stats) {
        const auto dt = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - t0);
        j["elapsed_ms"] = dt.count() / 1000.0;
    }
    const std::string text = j.dump() + "\n";
    std::cout << text;
    if (!o.out_path.empty()) {
        std::ofstream out(o.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write file: " + o.out_path);
        out << text;
    }
    return rep.counterexamples.empty() ? 0 : 1;
}

int run_pillai(const PillaiOpts& o) {
    const auto run = pw::find_pillai_run(o.m, o.limit);
    pw::json j;
    j["found"] = run.has_value();
    if (run) {
        j["start"] = run->start;
        j["length"] = run->length;
    }
    emit(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime vertex labelings of unicyclic graph families"};
    app.require_subcommand(1);

    GenOpts gen;
    auto* cmd_gen = app.add_subcommand("gen", "build a family graph and print it as JSON");
    add_family_flags(cmd_gen, gen.ff, true);
    cmd_gen->add_flag("--dot", gen.dot, "emit DOT instead of JSON");

    LabelOpts label;
    auto* cmd_label =
        app.add_subcommand("label", "produce a prime labeling via the family's scheme");
    add_family_flags(cmd_label, label.ff, false);
    cmd_label->add_option("--graph", label.graph_path, "read the graph from a JSON file");
    cmd_label->add_flag("--stdin", label.from_stdin, "read the graph from standard input");
    cmd_label->add_flag("--dot", label.dot, "emit DOT with labels as node captions");
    cmd_label->add_flag("--bundle", label.bundle, "emit {\"graph\":..., \"labels\":...}");
    cmd_label->add_flag("--labels-only", label.labels_only,
                        "emit just the labels array even when reading from stdin");

    VerifyOpts verify;
    auto* cmd_verify =
        app.add_subcommand("verify", "check a labeling against the coprimality definition");
    cmd_verify->add_option("--graph", verify.graph_path, "graph JSON file");
    cmd_verify->add_option("--labels", verify.labels_path, "labels JSON file");
    cmd_verify->add_flag("--stdin", verify.from_stdin,
                         "read a {graph, labels} bundle (or labels, with --graph) from stdin");

    SolveOpts solve;
    auto* cmd_solve = app.add_subcommand("solve", "search for a prime labeling by backtracking");
    cmd_solve->add_option("--graph", solve.graph_path, "graph JSON file");
    cmd_solve->add_flag("--stdin", solve.from_stdin, "read the graph from standard input");
    cmd_solve->add_option("--max-nodes", solve.max_nodes, "node budget")
        ->default_val(pw::kDefaultNodeBudget);
    cmd_solve->add_option("--time-limit-ms", solve.time_limit_ms,
                          "optional wall-clock limit (trades determinism)");
    cmd_solve->add_flag("--stats", solve.stats, "include elapsed time in the output");

    CountOpts count;
    auto* cmd_count =
        app.add_subcommand("count", "count all prime labelings by brute force (small graphs)");
    cmd_count->add_option("--graph", count.graph_path, "graph JSON file");
    cmd_count->add_flag("--stdin", count.from_stdin, "read the graph from standard input");
    cmd_count->add_option("--guard", count.guard, "vertex-count guard for the factorial search")
        ->default_val(pw::kDefaultCountGuard);

    ScanOpts scan;
    auto* cmd_scan =
        app.add_subcommand("scan", "solve every unicyclic graph on 3..max-n vertices");
    cmd_scan->add_option("--max-n", scan.max_n, "largest vertex count to scan")->required();
    cmd_scan->add_option("--budget", scan.budget, "per-graph node budget")
        ->default_val(pw::kDefaultNodeBudget);
    cmd_scan->add_option("--time-limit-ms", scan.time_limit_ms,
                         "optional per-graph wall-clock limit (trades determinism)");
    cmd_scan->add_option("--jobs", scan.jobs, "worker threads")->default_val(1);
    cmd_scan->add_option("--cap", scan.cap, "enumeration cap on n")
        ->default_val(pw::kDefaultUnicyclicCap);
    cmd_scan->add_option("--out", scan.out_path, "also write the report to a file");
    cmd_scan->add_flag("--stats", scan.stats, "include elapsed time in the output");

    PillaiOpts pillai;
    auto* cmd_pillai = app.add_subcommand(
        "pillai", "search for a run of consecutive integers none coprime to the rest");
    cmd_pillai->add_option("--m", pillai.m, "window length")->required();
    cmd_pillai->add_option("--limit", pillai.limit, "largest window start to try")
        ->default_val(100000);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_label->parsed()) return run_label(label);
        if (cmd_verify->parsed()) return run_verify(verify);
        if (cmd_solve->parsed()) return run_solve(solve);
        if (cmd_count->parsed()) return run_count(count);
        if (cmd_scan->parsed()) return run_scan(scan);
        if (cmd_pillai->parsed()) return run_pillai(pillai);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
