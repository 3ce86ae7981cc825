// Command-line harness for SAFE benchmark runs on the ZDT suite.
//
//   safe run --problem zdt1 --replicates 50 --seed 42 --out results/
//   safe bench --replicates 50 --out results/
//   safe compare --summary results/summary.csv
//   safe plot-data --front results/front_zdt1_42.csv --problem zdt1 --out zdt1_plot.csv

#include "safe/bench.hpp"
#include "safe/metrics.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

enum Exit { kOk = 0, kValidation = 1, kIo = 2 };

// Flags that mirror RunConfig fields. Only flags given on the command line
// override the config file.
struct RunFlags {
    std::optional<std::string> config_file;
    std::optional<std::string> problem;
    std::optional<std::size_t> replicates, generations, pop_size, objfn_pop_size, tournament, elites,
        archive_capacity, novelty_k, tf_points, trace_every, jobs;
    std::optional<std::uint64_t> seed;
    std::optional<double> crossover_rate, mutation_prob;
    std::optional<std::string> out;

    void attach(CLI::App& app, bool with_problem)
    {
        app.add_option("--config", config_file, "JSON config file; flags override its fields");
        if (with_problem) app.add_option("--problem", problem, "zdt1, zdt2, zdt3 or zdt4");
        app.add_option("--replicates", replicates, "Replicate runs per problem (50)");
        app.add_option("--seed", seed, "Base seed; replicate i uses seed + i (42)");
        app.add_option("--out", out, "Output directory (results)");
        app.add_option("--generations", generations, "Generations per run (3000)");
        app.add_option("--pop-size", pop_size, "Solutions population size (500)");
        app.add_option("--objfn-pop-size", objfn_pop_size, "Objective-functions population size (150)");
        app.add_option("--tournament", tournament, "Tournament size (5)");
        app.add_option("--crossover-rate", crossover_rate, "Crossover rate (0.8)");
        app.add_option("--mutation-prob", mutation_prob, "Per-individual mutation probability (0.4)");
        app.add_option("--elites", elites, "Elite count (2)");
        app.add_option("--archive-capacity", archive_capacity, "Novelty archive capacity (1000)");
        app.add_option("--novelty-k", novelty_k, "Novelty nearest neighbours (15)");
        app.add_option("--tf-points", tf_points, "True-front sample size for igd (1000)");
        app.add_option("--trace-every", trace_every, "igd trace interval in generations (10)");
        app.add_option("--jobs", jobs, "Parallel replicates, 0 = hardware threads (0)");
    }

    safe::RunConfig resolve() const
    {
        safe::RunConfig c = config_file ? safe::load_config(*config_file) : safe::RunConfig{};
        if (problem) {
            auto p = safe::parse_problem(*problem);
            if (!p) throw safe::ConfigError({"problem"});
            c.problem = *p;
        }
        auto set = [](auto& field, const auto& flag) {
            if (flag) field = *flag;
        };
        set(c.replicates, replicates);
        set(c.base_seed, seed);
        if (out) c.output_dir = *out;
        set(c.params.generations, generations);
        set(c.params.solution_pop_size, pop_size);
        set(c.params.objfn_pop_size, objfn_pop_size);
        set(c.params.tournament_size, tournament);
        set(c.params.crossover_rate, crossover_rate);
        set(c.params.mutation_prob, mutation_prob);
        set(c.params.elite_count, elites);
        set(c.params.archive_capacity, archive_capacity);
        set(c.params.novelty_k, novelty_k);
        set(c.tf_points, tf_points);
        set(c.trace_every, trace_every);
        set(c.jobs, jobs);
        return c;
    }
};

void print_summaries(const std::vector<safe::ProblemSummary>& summaries)
{
    for (const auto& s : summaries) {
        std::printf("%s: mean igd %s (stddev %s) over %zu replicates\n", std::string(safe::to_string(s.problem)).c_str(),
                    safe::format_double(s.mean_igd).c_str(), safe::format_double(s.stddev_igd).c_str(),
                    s.replicates.size());
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"SAFE: coevolving solutions and objective functions on the ZDT suite"};
    app.require_subcommand(1);

    RunFlags run_flags;
    auto* run_cmd = app.add_subcommand("run", "Replicate runs on one problem");
    run_flags.attach(*run_cmd, true);

    RunFlags bench_flags;
    auto* bench_cmd = app.add_subcommand("bench", "Replicate runs on all four problems");
    bench_flags.attach(*bench_cmd, false);

    std::optional<std::string> summary_path;
    bool use_published = false;
    std::vector<std::string> given;
    auto* compare_cmd = app.add_subcommand("compare", "Compare mean igd against the published competitors");
    compare_cmd->add_option("--summary", summary_path, "summary.csv produced by run or bench");
    compare_cmd->add_flag("--published", use_published, "Use SAFE's published means");
    compare_cmd->add_option("--safe", given, "Explicit means, e.g. --safe zdt1=2.06e-4")->delimiter(',');

    std::string front_path, plot_problem, plot_out;
    std::size_t plot_tf_points = 1000;
    auto* plot_cmd = app.add_subcommand("plot-data", "Write produced and true fronts as one CSV");
    plot_cmd->add_option("--front", front_path, "front_<problem>_<seed>.csv of the chosen replicate")->required();
    plot_cmd->add_option("--problem", plot_problem, "zdt1, zdt2, zdt3 or zdt4")->required();
    plot_cmd->add_option("--out", plot_out, "Output CSV path")->required();
    plot_cmd->add_option("--tf-points", plot_tf_points, "True-front sample size (1000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kValidation;
    }

    try {
        if (*run_cmd || *bench_cmd) {
            const bool all = bool(*bench_cmd);
            const auto config = (all ? bench_flags : run_flags).resolve();
            std::vector<safe::ProblemId> problems;
            if (all) problems.assign(safe::kAllProblems.begin(), safe::kAllProblems.end());
            print_summaries(safe::run_benchmark(config, problems, &std::cerr));
        } else if (*compare_cmd) {
            std::map<safe::ProblemId, double> means;
            if (use_published) {
                for (auto p : safe::kAllProblems) means[p] = safe::kPublishedSafeIgd[static_cast<std::size_t>(p)];
            }
            if (summary_path) {
                std::map<safe::ProblemId, std::vector<double>> igds;
                for (const auto& r : safe::read_summary_csv(*summary_path)) igds[r.problem].push_back(r.final_igd);
                for (const auto& [p, v] : igds) means[p] = safe::summarize(v).mean;
            }
            for (const auto& item : given) {
                const auto eq = item.find('=');
                const auto p = safe::parse_problem(item.substr(0, eq));
                double value = 0.0;
                const char* first = item.data() + (eq == std::string::npos ? item.size() : eq + 1);
                const char* last = item.data() + item.size();
                const auto [ptr, ec] = std::from_chars(first, last, value);
                if (!p || eq == std::string::npos || ec != std::errc{} || ptr != last) {
                    throw safe::ConfigError({"safe (" + item + ")"});
                }
                means[*p] = value;
            }
            if (means.empty()) throw safe::ConfigError({"summary|published|safe"});
            std::cout << safe::render_compare_table(safe::compare_table(means));
        } else if (*plot_cmd) {
            auto p = safe::parse_problem(plot_problem);
            if (!p) throw safe::ConfigError({"problem"});
            if (plot_tf_points < 2) throw safe::ConfigError({"tf_points"});
            const auto front = safe::read_front_csv(front_path);
            if (front.empty()) throw safe::ConfigError({"front (empty)"});
            safe::emit_front_plot_data(plot_out, front, *p, plot_tf_points);
            std::printf("wrote %zu produced and %zu true-front rows to %s\n", front.size(), plot_tf_points,
                        plot_out.c_str());
        }
    } catch (const safe::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const safe::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
    return kOk;
}
