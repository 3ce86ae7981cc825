#include "safe/bench.hpp"

#include "safe/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#ifndef SAFE_VERSION
#define SAFE_VERSION "unknown"
#endif

namespace safe {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double x)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

namespace {

double parse_double(std::string_view s)
{
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw IoError("malformed number '" + std::string(s) + "'");
    }
    return x;
}

std::vector<std::string_view> split(std::string_view line, char sep = ',')
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::ofstream open_out(const fs::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

std::ifstream open_in(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    return in;
}

void finish(std::ofstream& out, const fs::path& path)
{
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

std::string join(const std::vector<std::string>& items)
{
    std::string s;
    for (const auto& i : items) s += (s.empty() ? "" : ", ") + i;
    return s;
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> fields)
    : std::runtime_error("invalid configuration: " + join(fields)), fields_(std::move(fields))
{
}

void validate(const RunConfig& config)
{
    static const std::map<std::string, std::string> flag_names = {
        {"solution_pop_size", "pop_size"}, {"tournament_size", "tournament"}, {"elite_count", "elites"}};
    std::vector<std::string> bad;
    for (auto& f : validate(config.params)) {
        auto it = flag_names.find(f);
        bad.push_back(it == flag_names.end() ? f : it->second);
    }
    if (config.replicates < 1) bad.emplace_back("replicates");
    if (config.tf_points < 2) bad.emplace_back("tf_points");
    if (config.trace_every < 1) bad.emplace_back("trace_every");
    if (config.output_dir.empty()) bad.emplace_back("out");
    if (!bad.empty()) throw ConfigError(std::move(bad));
}

json to_json(const RunConfig& c)
{
    const auto& p = c.params;
    return json{{"problem", std::string(to_string(c.problem))},
                {"replicates", c.replicates},
                {"seed", c.base_seed},
                {"out", c.output_dir.generic_string()},
                {"generations", p.generations},
                {"pop_size", p.solution_pop_size},
                {"objfn_pop_size", p.objfn_pop_size},
                {"tournament", p.tournament_size},
                {"crossover_rate", p.crossover_rate},
                {"mutation_prob", p.mutation_prob},
                {"elites", p.elite_count},
                {"archive_capacity", p.archive_capacity},
                {"novelty_k", p.novelty_k},
                {"tf_points", c.tf_points},
                {"trace_every", c.trace_every},
                {"jobs", c.jobs}};
}

void apply_json(RunConfig& c, const json& j)
{
    if (!j.is_object()) throw ConfigError({"<root>"});
    auto& p = c.params;
    const std::map<std::string, std::size_t*> counts = {
        {"replicates", &c.replicates},       {"generations", &p.generations},
        {"pop_size", &p.solution_pop_size},  {"objfn_pop_size", &p.objfn_pop_size},
        {"tournament", &p.tournament_size},  {"elites", &p.elite_count},
        {"archive_capacity", &p.archive_capacity}, {"novelty_k", &p.novelty_k},
        {"tf_points", &c.tf_points},         {"trace_every", &c.trace_every},
        {"jobs", &c.jobs}};
    const std::map<std::string, double*> reals = {{"crossover_rate", &p.crossover_rate},
                                                  {"mutation_prob", &p.mutation_prob}};

    auto non_negative = [](const json& v) {
        return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
    };
    std::vector<std::string> bad;
    for (const auto& [key, value] : j.items()) {
        if (auto it = counts.find(key); it != counts.end()) {
            if (non_negative(value)) *it->second = value.get<std::size_t>();
            else bad.push_back(key);
        } else if (auto rt = reals.find(key); rt != reals.end()) {
            if (value.is_number()) *rt->second = value.get<double>();
            else bad.push_back(key);
        } else if (key == "seed") {
            if (non_negative(value)) c.base_seed = value.get<std::uint64_t>();
            else bad.push_back(key);
        } else if (key == "problem") {
            auto prob = value.is_string() ? parse_problem(value.get<std::string>()) : std::nullopt;
            if (prob) c.problem = *prob;
            else bad.push_back(key);
        } else if (key == "out") {
            if (value.is_string()) c.output_dir = value.get<std::string>();
            else bad.push_back(key);
        } else {
            bad.push_back(key);
        }
    }
    if (!bad.empty()) throw ConfigError(std::move(bad));
}

RunConfig load_config(const fs::path& path)
{
    auto in = open_in(path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError({"<parse error: " + std::string(e.what()) + ">"});
    }
    RunConfig c;
    apply_json(c, j);
    return c;
}

std::string front_file_name(ProblemId problem, std::uint64_t seed)
{
    return "front_" + std::string(to_string(problem)) + "_" + std::to_string(seed) + ".csv";
}

std::string trace_file_name(ProblemId problem, std::uint64_t seed)
{
    return "trace_" + std::string(to_string(problem)) + "_" + std::to_string(seed) + ".csv";
}

void write_front_csv(const fs::path& path, const ParetoFront& front)
{
    auto out = open_out(path);
    out << "f1,f2";
    for (std::size_t i = 1; i <= kNumGenes; ++i) out << ",x" << i;
    out << '\n';
    for (const auto& e : front.entries()) {
        out << format_double(e.objectives.f1) << ',' << format_double(e.objectives.f2);
        for (double x : e.genome.genes) out << ',' << format_double(x);
        out << '\n';
    }
    finish(out, path);
}

std::vector<FrontEntry> read_front_csv(const fs::path& path)
{
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || !line.starts_with("f1,f2")) throw IoError("missing front header in " + path.string());
    std::vector<FrontEntry> entries;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != 2 + kNumGenes) throw IoError("bad front row in " + path.string());
        FrontEntry e{{parse_double(cells[0]), parse_double(cells[1])}, {}};
        for (std::size_t i = 0; i < kNumGenes; ++i) e.genome.genes[i] = parse_double(cells[2 + i]);
        entries.push_back(e);
    }
    return entries;
}

void write_trace_csv(const fs::path& path, std::span<const TracePoint> trace)
{
    auto out = open_out(path);
    out << "generation,igd,front_size\n";
    for (const auto& t : trace) out << t.generation << ',' << format_double(t.igd) << ',' << t.front_size << '\n';
    finish(out, path);
}

void write_summary_csv(const fs::path& path, std::span<const ProblemSummary> summaries)
{
    auto out = open_out(path);
    out << "problem,seed,final_igd,front_size,wall_time_s\n";
    for (const auto& s : summaries) {
        for (const auto& r : s.replicates) {
            out << to_string(r.problem) << ',' << r.seed << ',' << format_double(r.final_igd) << ','
                << r.front_size << ',' << format_double(r.wall_time_s) << '\n';
        }
    }
    finish(out, path);
}

std::vector<ReplicateRecord> read_summary_csv(const fs::path& path)
{
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line != "problem,seed,final_igd,front_size,wall_time_s") {
        throw IoError("missing summary header in " + path.string());
    }
    std::vector<ReplicateRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        const auto prob = cells.size() == 5 ? parse_problem(cells[0]) : std::nullopt;
        if (!prob) throw IoError("bad summary row in " + path.string());
        records.push_back({*prob, std::stoull(std::string(cells[1])), parse_double(cells[2]),
                           std::stoull(std::string(cells[3])), parse_double(cells[4])});
    }
    return records;
}

std::vector<ProblemSummary> run_benchmark(const RunConfig& config, std::span<const ProblemId> problems,
                                          std::ostream* log)
{
    validate(config);
    std::vector<ProblemId> todo(problems.begin(), problems.end());
    if (todo.empty()) todo.push_back(config.problem);

    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    const auto manifest_path = config.output_dir / "manifest.txt";
    if (ec || !fs::is_directory(config.output_dir)) throw IoError("cannot create " + config.output_dir.string());
    {
        std::ofstream probe(manifest_path, std::ios::trunc);
        if (!probe) throw IoError("output directory not writable: " + config.output_dir.string());
    }

    struct Task {
        ProblemId problem;
        std::size_t replicate;
    };
    std::vector<Task> tasks;
    for (auto p : todo) {
        for (std::size_t r = 0; r < config.replicates; ++r) tasks.push_back({p, r});
    }
    std::vector<ReplicateRecord> records(tasks.size());

    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                const auto& task = tasks[i];
                EvolutionParams params = config.params;
                params.seed = config.seed_for(task.replicate);
                const auto result = run(task.problem, params, {config.tf_points, config.trace_every});
                write_front_csv(config.output_dir / front_file_name(task.problem, params.seed), result.front);
                write_trace_csv(config.output_dir / trace_file_name(task.problem, params.seed), result.trace);
                records[i] = {task.problem, params.seed, result.final_igd, result.front.size(), result.wall_time_s};
                if (log) {
                    std::lock_guard lock(log_mutex);
                    *log << to_string(task.problem) << " seed " << params.seed << ": igd "
                         << format_double(result.final_igd) << ", front " << result.front.size() << ", "
                         << result.wall_time_s << " s\n";
                }
            } catch (...) {
                std::lock_guard lock(log_mutex);
                if (!failure) failure = std::current_exception();
                next = tasks.size();
            }
        }
    };

    const std::size_t hw = std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
    const std::size_t jobs = std::min(config.jobs == 0 ? hw : config.jobs, tasks.size());
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<ProblemSummary> summaries;
    for (auto p : todo) {
        ProblemSummary s{p, 0.0, 0.0, {}};
        std::vector<double> igds;
        for (const auto& r : records) {
            if (r.problem == p) {
                s.replicates.push_back(r);
                igds.push_back(r.final_igd);
            }
        }
        const auto stats = summarize(igds);
        s.mean_igd = stats.mean;
        s.stddev_igd = stats.stddev;
        summaries.push_back(std::move(s));
    }

    write_summary_csv(config.output_dir / "summary.csv", summaries);

    json manifest;
    manifest["version"] = SAFE_VERSION;
    manifest["config"] = to_json(config);
    manifest["problems"] = json::array();
    for (auto p : todo) manifest["problems"].push_back(std::string(to_string(p)));
    manifest["seeds"] = json::array();
    for (std::size_t r = 0; r < config.replicates; ++r) manifest["seeds"].push_back(config.seed_for(r));
    auto out = open_out(manifest_path);
    out << manifest.dump(2) << '\n';
    finish(out, manifest_path);

    return summaries;
}

std::vector<CompareRow> compare_table(const std::map<ProblemId, double>& safe_means)
{
    std::vector<CompareRow> rows;
    for (const auto& [problem, mean] : safe_means) {
        const auto i = static_cast<std::size_t>(problem);
        CompareRow row{problem, {mean, kChengIgd[i], kHanIgd[i]}, {}};
        const double lowest = *std::min_element(row.values.begin(), row.values.end());
        for (std::size_t c = 0; c < 3; ++c) row.is_min[c] = row.values[c] == lowest;
        rows.push_back(row);
    }
    return rows;
}

std::string render_compare_table(std::span<const CompareRow> rows)
{
    std::ostringstream out;
    out << "| Problem | SAFE | Cheng et al. | Han et al. |\n";
    out << "|---|---|---|---|\n";
    char buf[32];
    for (const auto& row : rows) {
        std::string name(to_string(row.problem));
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::toupper(ch); });
        out << "| " << name;
        for (std::size_t c = 0; c < 3; ++c) {
            std::snprintf(buf, sizeof buf, "%.2E", row.values[c]);
            out << " | " << (row.is_min[c] ? "**" : "") << buf << (row.is_min[c] ? "**" : "");
        }
        out << " |\n";
    }
    return out.str();
}

void emit_front_plot_data(const fs::path& path, std::span<const FrontEntry> front, ProblemId problem,
                          std::size_t tf_points)
{
    if (front.empty()) throw std::invalid_argument("emit_front_plot_data: empty front");
    std::vector<ObjectiveVector> produced;
    produced.reserve(front.size());
    for (const auto& e : front) produced.push_back(e.objectives);
    std::stable_sort(produced.begin(), produced.end(),
                     [](const ObjectiveVector& l, const ObjectiveVector& r) { return l.f1 < r.f1; });

    auto out = open_out(path);
    out << "series,f1,f2\n";
    for (const auto& v : produced) out << "produced," << format_double(v.f1) << ',' << format_double(v.f2) << '\n';
    for (const auto& v : true_front(problem, tf_points)) {
        out << "true," << format_double(v.f1) << ',' << format_double(v.f2) << '\n';
    }
    finish(out, path);
}

} // namespace safe
