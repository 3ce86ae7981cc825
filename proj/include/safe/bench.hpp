#pragma once

#include "safe/engine.hpp"
#include "safe/evo.hpp"
#include "safe/pareto.hpp"
#include "safe/zdt.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace safe {

// Shortest decimal text that parses back to the same double.
std::string format_double(double x);

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> fields);
    const std::vector<std::string>& fields() const { return fields_; }

private:
    std::vector<std::string> fields_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    ProblemId problem = ProblemId::ZDT1;
    EvolutionParams params;
    std::size_t replicates = 50;
    std::uint64_t base_seed = 42;
    std::filesystem::path output_dir = "results";
    std::size_t tf_points = 1000;
    std::size_t trace_every = 10;
    // 0 means one worker per hardware thread.
    std::size_t jobs = 0;

    std::uint64_t seed_for(std::size_t replicate) const { return base_seed + replicate; }
};

// Throws ConfigError naming every offending field.
void validate(const RunConfig& config);

// JSON with the same keys as the command-line flags (snake_case). Keys that
// are absent keep the value already in `config`; unknown keys are rejected.
void apply_json(RunConfig& config, const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& config);
RunConfig load_config(const std::filesystem::path& path);

struct ReplicateRecord {
    ProblemId problem;
    std::uint64_t seed;
    double final_igd;
    std::size_t front_size;
    double wall_time_s;
};

struct ProblemSummary {
    ProblemId problem;
    double mean_igd;
    double stddev_igd;
    std::vector<ReplicateRecord> replicates;
};

std::string front_file_name(ProblemId problem, std::uint64_t seed);
std::string trace_file_name(ProblemId problem, std::uint64_t seed);

void write_front_csv(const std::filesystem::path& path, const ParetoFront& front);
std::vector<FrontEntry> read_front_csv(const std::filesystem::path& path);
void write_trace_csv(const std::filesystem::path& path, std::span<const TracePoint> trace);
void write_summary_csv(const std::filesystem::path& path, std::span<const ProblemSummary> summaries);
std::vector<ReplicateRecord> read_summary_csv(const std::filesystem::path& path);

/// Runs config.replicates seeded replicates for every listed problem
/// (config.problem is ignored when `problems` is non-empty). Writes the
/// per-replicate front and trace files, summary.csv and manifest.txt into
/// config.output_dir. The directory is checked before any run starts.
std::vector<ProblemSummary> run_benchmark(const RunConfig& config, std::span<const ProblemId> problems = {},
                                          std::ostream* log = nullptr);

// Published best igd values of the two comparison studies, ZDT1..ZDT4.
inline constexpr std::array<double, 4> kChengIgd = {3.88e-03, 3.85e-03, 4.82e-03, 3.99e-03};
inline constexpr std::array<double, 4> kHanIgd = {2.81e-03, 3.92e-03, 4.45e-03, 3.77e-03};
// SAFE's published 50-run means, ZDT1..ZDT4.
inline constexpr std::array<double, 4> kPublishedSafeIgd = {2.06e-04, 2.65e-04, 3.81e-02, 1.23e-03};

struct CompareRow {
    ProblemId problem;
    std::array<double, 3> values; // SAFE, Cheng et al., Han et al.
    std::array<bool, 3> is_min;   // all tied minima are marked
};

std::vector<CompareRow> compare_table(const std::map<ProblemId, double>& safe_means);
// Markdown table; row minima in bold.
std::string render_compare_table(std::span<const CompareRow> rows);

/// Writes `series,f1,f2` rows: the produced front sorted by f1 (series
/// "produced") followed by the sampled true front (series "true").
void emit_front_plot_data(const std::filesystem::path& path, std::span<const FrontEntry> front,
                          ProblemId problem, std::size_t tf_points);

} // namespace safe
