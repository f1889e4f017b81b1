#include <recolor/bench.hpp>
#include <recolor/cli.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace recolor;

namespace
{
    auto read_file(const std::string & path) -> std::string
    {
        if (path == "-") {
            std::stringstream buffer;
            buffer << std::cin.rdbuf();
            return buffer.str();
        }
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_file(const std::string & path, const std::string & text) -> void
    {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write " + path);
        out << text;
    }

    auto color_list(const std::vector<unsigned> & values) -> ColorSet
    {
        ColorSet s;
        for (auto c : values)
            s.insert(c);
        return s;
    }

    auto pair_of(const std::vector<unsigned> & values, const char * flag) -> std::optional<std::pair<Color, Color>>
    {
        if (values.empty())
            return std::nullopt;
        if (values.size() != 2)
            throw DomainError(std::string(flag) + " takes two colors, e.g. 1,4");
        return std::pair<Color, Color>{values[0], values[1]};
    }

    auto emit(const cli::Generated & g, const std::string & witness_path) -> int
    {
        std::cout << io::serialize_instance(g.instance);
        if (!witness_path.empty()) {
            if (!g.witness)
                throw DomainError("no witness available; pass the certificate flag");
            write_file(witness_path, io::serialize_sequence(*g.witness));
        }
        return cli::exit_yes;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Bounded-length graph recoloring: exact solvers and reduction generators"};
    app.require_subcommand(1);

    // solve
    auto * solve_cmd = app.add_subcommand("solve", "Decide an instance (exit 0 = YES, 1 = NO, 2 = error/budget)");
    std::string solve_file, algo_name = "fpt";
    bool emit_witness = false, xp_prune = false, literal_bound = false;
    std::size_t node_cap = 0;
    double time_limit = 0;
    solve_cmd->add_option("instance", solve_file, "Instance file ('-' for stdin)")->required();
    solve_cmd->add_option("--algo", algo_name, "oracle | xp | fpt")
        ->check(CLI::IsMember({"oracle", "xp", "fpt"}));
    solve_cmd->add_flag("--witness", emit_witness, "Print the recoloring sequence on YES");
    solve_cmd->add_option("--node-cap", node_cap, "State budget for oracle/xp (0 = default)");
    solve_cmd->add_option("--time-limit", time_limit, "Seconds before giving up (0 = none)");
    solve_cmd->add_flag("--xp-prune", xp_prune, "Enable visited-set pruning in xp");
    solve_cmd->add_flag("--literal-bound", literal_bound, "fpt: cap guessed lists at ell instead of ell+1");

    // verify
    auto * verify_cmd = app.add_subcommand("verify", "Check a sequence file against an instance");
    std::string verify_instance, verify_sequence_file;
    verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
    verify_cmd->add_option("sequence", verify_sequence_file, "Sequence file")->required();

    // gen
    auto * gen_cmd = app.add_subcommand("gen", "Generate reduction instances");
    gen_cmd->require_subcommand(1);
    std::string witness_path;

    auto * gen_bk = gen_cmd->add_subcommand("bk", "B_k: row coloring to column coloring");
    std::size_t bk_k = 0;
    std::optional<unsigned> bk_colors;
    std::optional<std::size_t> bk_ell;
    gen_bk->add_option("--k", bk_k, "k >= 1")->required();
    gen_bk->add_option("--colors", bk_colors, "Palette size (default 2k-1)");
    gen_bk->add_option("--ell", bk_ell, "Length budget (default 2k^2)");
    gen_bk->add_option("--witness", witness_path, "Write the 2k-1 color sequence here");

    auto * gen_forbid = gen_cmd->add_subcommand("forbid", "(a,b)-forbidding path over {1,2,3,4}");
    std::vector<unsigned> lu, lv, from, to;
    unsigned fa = 0, fb = 0;
    std::size_t forbid_ell = gadgets::ForbiddingPath::length;
    gen_forbid->add_option("--lu", lu, "List of u, e.g. 1,2,3")->delimiter(',')->required();
    gen_forbid->add_option("--lv", lv, "List of v")->delimiter(',')->required();
    gen_forbid->add_option("--a", fa, "Forbidden color of u")->required();
    gen_forbid->add_option("--b", fb, "Forbidden color of v")->required();
    gen_forbid->add_option("--from", from, "Start endpoint pair x,y")->delimiter(',');
    gen_forbid->add_option("--to", to, "Target endpoint pair x,y")->delimiter(',');
    gen_forbid->add_option("--ell", forbid_ell, "Length budget (default 6)");

    auto * gen_np = gen_cmd->add_subcommand("np", "3-colorability reduction (list instance over {1,2,3,4})");
    std::string np_graph;
    std::vector<unsigned> three_coloring;
    bool np_plain = false;
    gen_np->add_option("graph", np_graph, "Source graph file")->required();
    gen_np->add_option("--three-coloring", three_coloring, "Proper 3-coloring, e.g. 1,2,3")->delimiter(',');
    gen_np->add_flag("--plain", np_plain, "Replace lists by K4 anchors (k = 4)");
    gen_np->add_option("--witness", witness_path, "Write the witness sequence here");

    auto * gen_w1 = gen_cmd->add_subcommand("w1", "Independent-set reduction with color guards");
    std::string w1_graph;
    std::size_t w1_t = 0;
    std::vector<unsigned> independent;
    gen_w1->add_option("graph", w1_graph, "Source graph file")->required();
    gen_w1->add_option("--t", w1_t, "t >= 1 (looks for an independent set of size t-1)")->required();
    gen_w1->add_option("--independent-set", independent, "t-1 pairwise non-adjacent vertices, 1-based")
        ->delimiter(',');
    gen_w1->add_option("--witness", witness_path, "Write the witness sequence here");

    // bench
    auto * bench_cmd = app.add_subcommand("bench", "Run solvers over a directory of instances");
    std::string bench_dir, bench_json;
    std::vector<std::string> bench_algos{"oracle", "xp", "fpt"};
    double bench_limit = 10;
    bench_cmd->add_option("directory", bench_dir, "Directory of instance files")->required();
    bench_cmd->add_option("--algos", bench_algos, "Comma-separated subset of oracle,xp,fpt")->delimiter(',')
        ->check(CLI::IsMember({"oracle", "xp", "fpt"}));
    bench_cmd->add_option("--time-limit", bench_limit, "Seconds per solver per instance");
    bench_cmd->add_option("--json", bench_json, "Also write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_error;
    }

    try {
        if (*solve_cmd) {
            SolveOptions options;
            options.algorithm = *parse_algorithm(algo_name);
            if (node_cap)
                options.limits.node_cap = node_cap;
            if (time_limit > 0)
                options.limits.deadline =
                    Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(time_limit));
            options.xp_pruning = xp_prune;
            if (literal_bound)
                options.subset_bound = SubsetBound::literal;
            return cli::run_solve(read_file(solve_file), options, emit_witness, std::cout, std::cerr);
        }
        if (*verify_cmd)
            return cli::run_verify(read_file(verify_instance), read_file(verify_sequence_file), std::cout, std::cerr);
        if (*gen_bk)
            return emit(cli::gen_bk(bk_k, bk_colors, bk_ell), witness_path);
        if (*gen_forbid)
            return emit(cli::gen_forbid(color_list(lu), color_list(lv), fa, fb, pair_of(from, "--from"),
                                        pair_of(to, "--to"), forbid_ell),
                        witness_path);
        if (*gen_np) {
            const Graph source = io::parse_graph(read_file(np_graph));
            std::optional<Coloring> c3;
            if (!three_coloring.empty())
                c3 = Coloring(std::vector<Color>(three_coloring.begin(), three_coloring.end()));
            return emit(cli::gen_np(source, c3, np_plain), witness_path);
        }
        if (*gen_w1) {
            const Graph source = io::parse_graph(read_file(w1_graph));
            std::optional<std::vector<Vertex>> set;
            if (gen_w1->count("--independent-set") || w1_t == 1) {
                set.emplace();
                for (auto v : independent) {
                    if (v == 0)
                        throw DomainError("vertices are numbered from 1");
                    set->push_back(v - 1);
                }
            }
            return emit(cli::gen_w1(source, w1_t, set), witness_path);
        }
        if (*bench_cmd) {
            std::vector<Algorithm> algos;
            for (const auto & name : bench_algos)
                algos.push_back(*parse_algorithm(name));
            const auto limit = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::duration<double>(bench_limit));
            const auto report = bench::run_bench(bench_dir, algos, limit);
            std::cout << report.text();
            if (!bench_json.empty())
                write_file(bench_json, report.json().dump(2) + "\n");
            return report.exit_code();
        }
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_error;
    }
    return cli::exit_error;
}
